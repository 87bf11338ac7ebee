"""Data model and text syntax tests."""

from __future__ import annotations

import pytest

import golden

from elpmend.model import (
    BodyLiteral,
    DuplicateRuleIdError,
    Literal,
    Program,
    ProgramSyntaxError,
    Rule,
    UnknownRuleError,
    natural_key,
    parse_body_token,
    parse_program,
    print_program,
    sort_body_literals,
    structurally_equal,
)


def test_literal_tokens_and_complement():
    t = Literal("t")
    nt = Literal("t", True)
    assert t.token() == "t" and nt.token() == "-t"
    assert t.complement() == nt and nt.complement() == t
    assert str(nt) == "-t"


def test_body_literal_tokens():
    bl = BodyLiteral(Literal("t", True), True)
    assert bl.token() == "~-t"
    assert bl.text() == "not -t"
    assert BodyLiteral(Literal("a")).token() == "a"
    assert BodyLiteral(Literal("a"), True).text() == "not a"


def test_canonical_body_literal_order():
    a = BodyLiteral(Literal("a"))
    not_a = BodyLiteral(Literal("a"), True)
    neg_a = BodyLiteral(Literal("a", True))
    not_neg_a = BodyLiteral(Literal("a", True), True)
    b = BodyLiteral(Literal("b"))
    assert sorted([b, not_neg_a, not_a, neg_a, a]) == [a, not_a, neg_a, not_neg_a, b]


def test_sort_body_literals_dedups():
    a = BodyLiteral(Literal("a"))
    b = BodyLiteral(Literal("b"), True)
    assert sort_body_literals([b, a, b]) == (a, b)


def test_parse_simple_program():
    p = parse_program("a :- b, not c.\n-a :- b.\n")
    assert p.rule_ids() == ("r1", "r2")
    r1 = p.rule("r1")
    assert r1.head == Literal("a")
    assert r1.body == (BodyLiteral(Literal("b")), BodyLiteral(Literal("c"), True))
    assert r1.body_pos == frozenset({Literal("b")})
    assert r1.body_neg == frozenset({Literal("c")})
    assert p.rule("r2").body == (BodyLiteral(Literal("b")),)


def test_parse_facts_and_core():
    p = parse_program("a.\nb :- a.\n")
    assert not p.is_core()
    assert p.rule("r1").body == ()
    core = parse_program("b :- a.\n")
    assert core.is_core()


def test_parse_whitespace_and_comments():
    text = "  a :- b ,  not  c .  % trailing\n\n% full-line comment\n-a:-b.\n"
    p = parse_program(text)
    assert p.rule_ids() == ("r1", "r2")
    assert p.rule("r1").body_neg == frozenset({Literal("c")})


def test_parse_id_annotation_round_trip():
    text = "a :- b. % #id mine\nc :- d.\n"
    p = parse_program(text)
    assert p.rule_ids() == ("mine", "r2")
    printed = print_program(p)
    assert "% #id mine" in printed
    again = parse_program(printed)
    assert again.rule_ids() == ("mine", "r2")
    assert structurally_equal(p, again)


def test_print_program_canonical_form():
    p = parse_program("a:-b,not c.\n")
    assert print_program(p) == "a :- b, not c.\n"
    assert print_program(Program()) == ""


def test_parse_duplicate_body_literal_dedups():
    p = parse_program("a :- b, b, not c, not c.\n")
    assert p.rule("r1").body == (BodyLiteral(Literal("b")), BodyLiteral(Literal("c"), True))


def test_parse_errors_carry_position():
    with pytest.raises(ProgramSyntaxError) as err:
        parse_program("a :- b\n")
    assert err.value.line == 1
    assert err.value.column == 7
    with pytest.raises(ProgramSyntaxError) as err:
        parse_program("a :- b.\nq :- 1x.\n")
    assert err.value.line == 2
    with pytest.raises(ProgramSyntaxError):
        parse_program("a :- b. extra\n")
    with pytest.raises(ProgramSyntaxError):
        parse_program("% #id ghost\n")


def test_parse_rejects_duplicate_ids():
    with pytest.raises(DuplicateRuleIdError):
        parse_program("a. % #id r2\nb.\n")
    with pytest.raises(DuplicateRuleIdError):
        parse_program("a. % #id same\nb. % #id same\n")


def test_not_is_reserved_but_prefixes_compose():
    p = parse_program("a :- not -b, nothing.\n")
    body = p.rule("r1").body
    assert body[0] == BodyLiteral(Literal("b", True), True)
    assert body[1] == BodyLiteral(Literal("nothing"))
    with pytest.raises(ProgramSyntaxError):
        parse_program("a :- not.\n")


def test_parse_demo_program():
    p = parse_program(golden.DEMO_PROGRAM)
    assert len(p.rules) == 16
    assert p.is_core()
    assert print_program(p) == golden.DEMO_PROGRAM


def test_program_lookup_and_replace():
    p = parse_program("a :- b.\nc :- d.\n")
    assert "r1" in p and "r9" not in p
    with pytest.raises(UnknownRuleError):
        p.rule("r9")
    swapped = p.replace(Rule("r2", Literal("c"), (BodyLiteral(Literal("e")),)))
    assert swapped.rule("r2").body == (BodyLiteral(Literal("e")),)
    assert p.rule("r2").body == (BodyLiteral(Literal("d")),)
    with pytest.raises(UnknownRuleError):
        p.replace(Rule("r9", Literal("c"), ()))


def test_natural_key_orders_numerically():
    ids = ["r10", "r2", "r1", "r14", "other"]
    assert sorted(ids, key=natural_key) == ["other", "r1", "r2", "r10", "r14"]


def test_parse_body_token_forms():
    assert parse_body_token("~-t") == BodyLiteral(Literal("t", True), True)
    assert parse_body_token("not -t") == BodyLiteral(Literal("t", True), True)
    assert parse_body_token("c") == BodyLiteral(Literal("c"))
    with pytest.raises(ValueError):
        parse_body_token("not")
    with pytest.raises(ValueError):
        parse_body_token("~a b")


def test_structurally_equal_ignores_body_order():
    p = parse_program("a :- b, not c.\n")
    q = parse_program("a :- not c, b.\n")
    assert structurally_equal(p, q)
    assert not structurally_equal(p, parse_program("a :- b.\n"))
    assert not structurally_equal(p, parse_program("a :- b, not c.\na.\n"))


def test_rule_text_and_atoms():
    r = Rule("r1", Literal("u", True), (BodyLiteral(Literal("s")), BodyLiteral(Literal("t", True), True)))
    assert r.text() == "-u :- s, not -t."
    assert r.atoms() == frozenset({"u", "s", "t"})
