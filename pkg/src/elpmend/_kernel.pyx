# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled fixpoint kernel.

Same contract as the pure-Python module: literals are bits in unsigned
integers (atom index a owns bits 2a and 2a+1), rules are parallel arrays of
head bit plus positive and default-negated body masks. Masks must fit in 62
bits, which the callers guarantee by capping atom counts.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc

BACKEND = "compiled"


def even_mask(int bit_count):
    """Mask selecting every positive-literal (even) bit below bit_count."""
    cdef uint64_t mask = 0
    cdef int bit
    for bit in range(0, bit_count, 2):
        mask |= (<uint64_t>1) << bit
    return mask


cdef uint64_t _closure(int n, int* heads, uint64_t* pos, uint64_t* neg,
                       uint64_t guess, uint64_t start) noexcept nogil:
    cdef uint64_t t = start
    cdef uint64_t head_bit
    cdef bint changed = True
    cdef int i
    while changed:
        changed = False
        for i in range(n):
            if neg[i] & guess:
                continue
            head_bit = (<uint64_t>1) << heads[i]
            if t & head_bit:
                continue
            if (pos[i] & t) == pos[i]:
                t |= head_bit
                changed = True
    return t


cdef bint _consistent(uint64_t t, uint64_t evens) noexcept nogil:
    return (t & (t >> 1) & evens) == 0


cdef bint _any_answer_set(int n, int* heads, uint64_t* pos, uint64_t* neg,
                          uint64_t facts, uint64_t neg_universe, uint64_t evens,
                          uint64_t first_guess) noexcept nogil:
    cdef uint64_t t = _closure(n, heads, pos, neg, first_guess, facts)
    if _consistent(t, evens) and (t & neg_universe) == first_guess:
        return True
    cdef uint64_t guess = 0
    while True:
        if guess != first_guess:
            t = _closure(n, heads, pos, neg, guess, facts)
            if _consistent(t, evens) and (t & neg_universe) == guess:
                return True
        if guess == neg_universe:
            return False
        guess = (guess - neg_universe) & neg_universe


cdef class _Rules:
    """Owns the C copies of the rule arrays."""

    cdef int n
    cdef int* heads
    cdef uint64_t* pos
    cdef uint64_t* neg

    def __cinit__(self, heads, pos_masks, neg_masks):
        self.n = len(heads)
        self.heads = <int*>malloc(self.n * sizeof(int))
        self.pos = <uint64_t*>malloc(self.n * sizeof(uint64_t))
        self.neg = <uint64_t*>malloc(self.n * sizeof(uint64_t))
        if self.n and (self.heads == NULL or self.pos == NULL or self.neg == NULL):
            raise MemoryError()
        cdef int i
        for i in range(self.n):
            self.heads[i] = heads[i]
            self.pos[i] = pos_masks[i]
            self.neg[i] = neg_masks[i]

    def __dealloc__(self):
        free(self.heads)
        free(self.pos)
        free(self.neg)


def answer_set_scan(heads, pos_masks, neg_masks, facts_mask, neg_universe, evens):
    """All answer sets of the encoded program plus the given facts.

    Returns (sorted list of answer-set masks, contradictory flag).
    """
    cdef _Rules rules = _Rules(heads, pos_masks, neg_masks)
    cdef uint64_t facts = facts_mask
    cdef uint64_t universe = neg_universe
    cdef uint64_t even_bits = evens
    cdef uint64_t guess = 0
    cdef uint64_t t
    cdef bint contradictory = False
    results = []
    while True:
        t = _closure(rules.n, rules.heads, rules.pos, rules.neg, guess, facts)
        if not _consistent(t, even_bits):
            if guess == universe:
                contradictory = True
        elif (t & universe) == guess:
            results.append(t)
        if guess == universe:
            break
        guess = (guess - universe) & universe
    results.sort()
    return results, contradictory


def facts_scan(heads, pos_masks, neg_masks, neg_universe, evens, fact_masks, max_failures):
    """Check each fact mask for having no consistent answer set.

    Returns (scanned count, [(fact_mask, kind)], truncated flag) with kind 1
    for the contradiction marker and kind 2 for answer-set-freedom.
    """
    cdef _Rules rules = _Rules(heads, pos_masks, neg_masks)
    cdef uint64_t universe = neg_universe
    cdef uint64_t even_bits = evens
    cdef uint64_t facts, full
    cdef long scanned = 0
    cdef int cap = max_failures
    failures = []
    for mask in fact_masks:
        facts = mask
        scanned += 1
        full = _closure(rules.n, rules.heads, rules.pos, rules.neg, universe, facts)
        if not _consistent(full, even_bits):
            failures.append((facts, 1))
        elif not _any_answer_set(rules.n, rules.heads, rules.pos, rules.neg,
                                  facts, universe, even_bits, facts & universe):
            failures.append((facts, 2))
        if len(failures) >= cap:
            return scanned, failures, True
    return scanned, failures, False


def uniform_scan(heads, pos_masks, neg_masks, neg_universe, evens, atom_options, max_failures):
    """facts_scan over the cartesian product of per-atom fact options.

    Mixed-radix enumeration with the last atom varying fastest, matching the
    pure-Python backend exactly.
    """
    cdef _Rules rules = _Rules(heads, pos_masks, neg_masks)
    cdef uint64_t universe = neg_universe
    cdef uint64_t even_bits = evens
    cdef int n_atoms = len(atom_options)
    cdef int total_options = 0
    cdef int i, j
    for i in range(n_atoms):
        total_options += len(atom_options[i])
    cdef uint64_t* values = <uint64_t*>malloc(max(total_options, 1) * sizeof(uint64_t))
    cdef int* offsets = <int*>malloc((n_atoms + 1) * sizeof(int))
    cdef int* counts = <int*>malloc(max(n_atoms, 1) * sizeof(int))
    cdef int* counters = <int*>malloc(max(n_atoms, 1) * sizeof(int))
    if values == NULL or offsets == NULL or counts == NULL or counters == NULL:
        free(values); free(offsets); free(counts); free(counters)
        raise MemoryError()
    cdef long scanned = 0
    cdef int cap = max_failures
    cdef uint64_t facts, full
    cdef bint truncated = False
    cdef bint done = False
    failures = []
    try:
        offsets[0] = 0
        for i in range(n_atoms):
            counts[i] = len(atom_options[i])
            counters[i] = 0
            for j in range(counts[i]):
                values[offsets[i] + j] = atom_options[i][j]
            offsets[i + 1] = offsets[i] + counts[i]
        while not done:
            facts = 0
            for i in range(n_atoms):
                facts |= values[offsets[i] + counters[i]]
            scanned += 1
            full = _closure(rules.n, rules.heads, rules.pos, rules.neg, universe, facts)
            if not _consistent(full, even_bits):
                failures.append((facts, 1))
            elif not _any_answer_set(rules.n, rules.heads, rules.pos, rules.neg,
                                      facts, universe, even_bits, facts & universe):
                failures.append((facts, 2))
            if len(failures) >= cap:
                truncated = True
                break
            done = True
            for i in range(n_atoms - 1, -1, -1):
                counters[i] += 1
                if counters[i] < counts[i]:
                    done = False
                    break
                counters[i] = 0
        return scanned, failures, truncated
    finally:
        free(values)
        free(offsets)
        free(counts)
        free(counters)
