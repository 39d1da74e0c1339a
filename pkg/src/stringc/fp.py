"""Finitely presented groups and plain Todd-Coxeter coset enumeration.

The enumerator is deliberately unsophisticated: systematic definition of the
first undefined entry, full relator scanning in declaration order, no
lookahead and no table compression.  Target orders here are at most 2^10,
where determinism and auditability matter more than speed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .words import Word, parse_word


class Exceeded(Exception):
    """Coset limit hit before the table closed; inconclusive, not a disproof."""

    def __init__(self, max_cosets):
        self.max_cosets = max_cosets
        super().__init__("coset enumeration exceeded %d cosets" % max_cosets)


@dataclass(frozen=True)
class FpPresentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        if not self.relators:
            raise ValueError("presentation needs at least one relator")
        declared = set(self.generators)
        for rel in self.relators:
            bad = rel.generators() - declared
            if bad:
                raise ValueError("undeclared generators in relator: %s" % sorted(bad))

    @staticmethod
    def from_text(generators, text: str) -> "FpPresentation":
        """One relator per line, in word syntax like ``(s0 s1)^4``."""
        relators = [parse_word(line) for line in text.splitlines() if line.strip()]
        return FpPresentation(tuple(generators), tuple(relators))


@dataclass
class CosetTable:
    generators: tuple[str, ...]
    table: np.ndarray  # (cosets, 2*ngens); columns alternate g, g^-1
    status: str        # "complete" | "exceeded"
    cosets_defined: int = 0
    rep_words: list = field(default_factory=list)  # letter sequences from coset 0

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def letter(self, name: str, sign: int = 1) -> int:
        i = self.generators.index(name)
        return 2 * i if sign > 0 else 2 * i + 1


def _letters_of(word: Word, gen_index: dict[str, int]) -> list[int]:
    out = []
    for g, e in word.syllables:
        base = 2 * gen_index[g]
        letter = base if e > 0 else base + 1
        out.extend([letter] * abs(e))
    return out


def coset_enumerate(pres: FpPresentation, subgroup_gens=(), max_cosets: int = 65536) -> CosetTable:
    """Enumerate cosets of ``<subgroup_gens>`` in the presented group.

    Over the trivial subgroup a complete table has one row per group element.
    Raises Exceeded when more than max_cosets cosets would be defined.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be >= 1")
    gen_index = {g: i for i, g in enumerate(pres.generators)}
    nlet = 2 * len(pres.generators)
    relators = [_letters_of(r, gen_index) for r in pres.relators]
    sub_words = [_letters_of(wd, gen_index) for wd in subgroup_gens]

    table: list[list] = [[None] * nlet]
    parent = [0]
    n_defined = 1

    def inv(x):
        return x ^ 1

    def rep(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    def get(a, x):
        v = table[a][x]
        if v is None:
            return None
        v = rep(v)
        table[a][x] = v
        return v

    def define(a, x):
        nonlocal n_defined
        if n_defined >= max_cosets:
            raise Exceeded(max_cosets)
        b = len(table)
        table.append([None] * nlet)
        parent.append(b)
        n_defined += 1
        table[a][x] = b
        table[b][inv(x)] = a
        return b

    pending: list[tuple[int, int]] = []

    def merge(a, b):
        a, b = rep(a), rep(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        parent[b] = a          # keep the smaller index: deterministic
        pending.append((a, b))

    def coincidence(a, b):
        merge(a, b)
        while pending:
            keep, dead = pending.pop()
            row = table[dead]
            for x in range(nlet):
                e = row[x]
                if e is None:
                    continue
                row[x] = None
                e = rep(e)
                m = rep(keep)
                cur = get(m, x)
                if cur is None:
                    table[m][x] = e
                elif cur != e:
                    merge(cur, e)
                m = rep(keep)
                cur2 = get(e, inv(x))
                if cur2 is None:
                    table[e][inv(x)] = m
                elif cur2 != m:
                    merge(cur2, m)

    def scan_and_fill(a, word):
        while True:
            a = rep(a)
            f, i = a, 0
            while i < len(word):
                nxt = get(f, word[i])
                if nxt is None:
                    break
                f, i = nxt, i + 1
            if i == len(word):
                if f != a:
                    coincidence(f, a)
                return
            b, j = a, len(word) - 1
            while j >= i:
                prv = get(b, inv(word[j]))
                if prv is None:
                    break
                b, j = prv, j - 1
            if j < i:
                if f != b:
                    coincidence(f, b)
                return
            if j == i:
                table[f][word[i]] = b
                cur = get(b, inv(word[i]))
                if cur is None:
                    table[b][inv(word[i])] = f
                elif cur != f:
                    coincidence(cur, f)
                return
            define(f, word[i])

    for wd in sub_words:
        scan_and_fill(0, wd)
    alpha = 0
    while alpha < len(table):
        if rep(alpha) != alpha:
            alpha += 1
            continue
        for wd in relators:
            scan_and_fill(alpha, wd)
            if rep(alpha) != alpha:
                break
        if rep(alpha) == alpha:
            for x in range(nlet):
                if get(alpha, x) is None:
                    define(alpha, x)
        alpha += 1

    live = [k for k in range(len(table)) if rep(k) == k]
    index = {k: i for i, k in enumerate(live)}
    out = np.zeros((len(live), nlet), dtype=np.int32)
    for k in live:
        for x in range(nlet):
            v = get(k, x)
            assert v is not None, "incomplete table after closure"
            out[index[k], x] = index[v]
    ct = CosetTable(pres.generators, out, "complete", cosets_defined=n_defined)
    ct.rep_words = _rep_words(out)
    return ct


def _rep_words(table: np.ndarray) -> list:
    """Letter sequence reaching each coset from coset 0 (BFS, definition order)."""
    n, nlet = table.shape
    words: list = [None] * n
    words[0] = ()
    queue = [0]
    while queue:
        a = queue.pop(0)
        for x in range(nlet):
            b = int(table[a, x])
            if words[b] is None:
                words[b] = words[a] + (x,)
                queue.append(b)
    return words


# presets ------------------------------------------------------------------

def quotient_presentation(m: int, e: int) -> FpPresentation:
    """The rank-3 presentation with string diagram [4, 2^(m-3)] and the extra
    relator (s0 s1 s2 s1)^2 (s2 s1)^(2^(m-4) e)."""
    if m < 5:
        raise ValueError("m must be >= 5")
    if e not in (0, 1):
        raise ValueError("e must be 0 or 1")
    s0, s1, s2 = Word((("s0", 1),)), Word((("s1", 1),)), Word((("s2", 1),))
    relators = (
        s0**2,
        s1**2,
        s2**2,
        (s0 * s1) ** 4,
        (s0 * s2) ** 2,
        (s1 * s2) ** (2 ** (m - 3)),
        (s0 * s1 * s2 * s1) ** 2 * (s2 * s1) ** (2 ** (m - 4) * e),
    )
    return FpPresentation(("s0", "s1", "s2"), relators)


def coxeter_string_presentation(labels) -> FpPresentation:
    """String Coxeter presentation [p01, p12, ...] on len(labels)+1 generators."""
    n = len(labels) + 1
    gens = tuple("s%d" % i for i in range(n))
    rel = [Word(((g, 1),)) ** 2 for g in gens]
    for i, lab in enumerate(labels):
        rel.append((Word(((gens[i], 1),)) * Word(((gens[i + 1], 1),))) ** lab)
    for i in range(n):
        for j in range(i + 2, n):
            rel.append((Word(((gens[i], 1),)) * Word(((gens[j], 1),))) ** 2)
    return FpPresentation(gens, tuple(rel))


# verification against concrete instances -----------------------------------

def verify_smooth_quotient(group, tuple_codes, labels):
    """Check ord(s_j s_k) matches the string Coxeter labels exactly.

    labels gives consecutive orders (p01, p12, ...); non-adjacent pairs must
    have order exactly 2.  Returns (ok, failures).
    """
    failures = []
    t = list(tuple_codes)
    for i in range(len(t) - 1):
        got = group.element_order(group.mul(t[i], t[i + 1]))
        if got != labels[i]:
            failures.append(("adjacent", i, i + 1, got, labels[i]))
    for i in range(len(t)):
        for j in range(i + 2, len(t)):
            got = group.element_order(group.mul(t[i], t[j]))
            if got != 2:
                failures.append(("apart", i, j, got, 2))
    return (not failures), failures


def verify_alternative_presentation(group, tuple_codes, pres: FpPresentation,
                                    max_cosets: int = 65536):
    """Two-sided presentation check against a concrete group.

    (a) every relator evaluates to the identity under the substitution
    generators[i] -> tuple_codes[i]; (b) coset enumeration of the
    presentation gives exactly |group|.  Together these certify isomorphism.
    Returns (ok, detail).
    """
    assign = dict(zip(pres.generators, tuple_codes))
    for idx, rel in enumerate(pres.relators):
        if group.evaluate(rel, assign) != group.identity:
            return False, ("relator_failed", idx, str(rel))
    try:
        ct = coset_enumerate(pres, max_cosets=max_cosets)
    except Exceeded:
        return False, ("inconclusive", "coset enumeration exceeded", max_cosets)
    if ct.order != group.order:
        return False, ("order_mismatch", ct.order, group.order)
    return True, ("order", ct.order)
