"""Pure-Python fixpoint kernel.

Literals are bits in unsigned integers: atom index ``a`` owns bits ``2a``
(positive) and ``2a + 1`` (strongly negated). Rules arrive as parallel arrays:
head bit index, positive-body mask, default-negated-body mask. A set of
literals is inconsistent when both bits of some pair are set.

The compiled extension module implements the same functions with the same
contracts; this module is the always-available fallback.
"""

from __future__ import annotations

BACKEND = "python"


def even_mask(bit_count: int) -> int:
    """Mask selecting every positive-literal (even) bit below bit_count."""
    mask = 0
    for bit in range(0, bit_count, 2):
        mask |= 1 << bit
    return mask


def _closure(heads, pos_masks, neg_masks, guess, start: int) -> int:
    """Least fixpoint of the guess's surviving rules over the start mask."""
    live = [i for i in range(len(heads)) if not (neg_masks[i] & guess)]
    t = start
    changed = True
    while changed:
        changed = False
        for i in live:
            head_bit = 1 << heads[i]
            if t & head_bit:
                continue
            if (pos_masks[i] & t) == pos_masks[i]:
                t |= head_bit
                changed = True
    return t


def answer_set_scan(heads, pos_masks, neg_masks, facts_mask, neg_universe, evens):
    """All answer sets of the encoded program plus the given facts.

    Returns (sorted list of answer-set masks, contradictory flag). The flag is
    set when the closure of the default-negation-free rules is inconsistent,
    i.e. every literal follows.
    """
    results = []
    contradictory = False
    guess = 0
    while True:
        t = _closure(heads, pos_masks, neg_masks, guess, facts_mask)
        if t & (t >> 1) & evens:
            if guess == neg_universe:
                contradictory = True
        elif (t & neg_universe) == guess:
            results.append(t)
        if guess == neg_universe:
            break
        guess = (guess - neg_universe) & neg_universe
    return sorted(results), contradictory


def _has_answer_set(heads, pos_masks, neg_masks, facts_mask, neg_universe, evens, first_guess):
    """True when some guess yields a consistent answer set; tries first_guess first."""
    guesses = [first_guess & neg_universe]
    guess = 0
    while True:
        if guess != guesses[0]:
            guesses.append(guess)
        if guess == neg_universe:
            break
        guess = (guess - neg_universe) & neg_universe
    for g in guesses:
        t = _closure(heads, pos_masks, neg_masks, g, facts_mask)
        if not (t & (t >> 1) & evens) and (t & neg_universe) == g:
            return True
    return False


def facts_scan(heads, pos_masks, neg_masks, neg_universe, evens, fact_masks, max_failures):
    """Check each fact mask for having no consistent answer set.

    Returns (scanned count, failures list, truncated flag); a failure is a
    (fact_mask, kind) pair with kind 1 when the contradiction marker fires
    (inconsistent closure under the full guess) and kind 2 when the program
    is merely answer-set-free.
    """
    failures: list[tuple[int, int]] = []
    scanned = 0
    for facts in fact_masks:
        scanned += 1
        full = _closure(heads, pos_masks, neg_masks, neg_universe, facts)
        if full & (full >> 1) & evens:
            failures.append((facts, 1))
        elif not _has_answer_set(
            heads, pos_masks, neg_masks, facts, neg_universe, evens, facts & neg_universe
        ):
            failures.append((facts, 2))
        if len(failures) >= max_failures:
            return scanned, failures, True
    return scanned, failures, False


def uniform_scan(heads, pos_masks, neg_masks, neg_universe, evens, atom_options, max_failures):
    """facts_scan over the full cartesian product of per-atom fact options.

    atom_options is a list of per-atom mask tuples (each containing 0 for
    "absent" plus the literal bits to try). Enumeration order is mixed-radix
    with the last atom varying fastest.
    """

    def product():
        counters = [0] * len(atom_options)
        while True:
            mask = 0
            for slot, options in zip(counters, atom_options):
                mask |= options[slot]
            yield mask
            for i in range(len(counters) - 1, -1, -1):
                counters[i] += 1
                if counters[i] < len(atom_options[i]):
                    break
                counters[i] = 0
            else:
                return

    return facts_scan(heads, pos_masks, neg_masks, neg_universe, evens, product(), max_failures)
