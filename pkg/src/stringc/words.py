"""Free words over named generators with integer exponents.

A word is a sequence of syllables (name, exponent).  Words carry no group
structure by themselves; they are the common input format for relations,
relators and collection.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


@dataclass(frozen=True)
class Word:
    """Normalized word: nonzero exponents, adjacent syllables distinct."""

    syllables: tuple[tuple[str, int], ...]

    def __init__(self, syllables=()):
        object.__setattr__(self, "syllables", _normalize(syllables))

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.syllables + other.syllables)

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        return Word(self.syllables * n)

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.syllables)))

    def generators(self) -> set[str]:
        return {g for g, _ in self.syllables}

    def exponent_sum(self, name: str) -> int:
        return sum(e for g, e in self.syllables if g == name)

    def is_identity(self) -> bool:
        return not self.syllables

    def __str__(self) -> str:
        if not self.syllables:
            return "1"
        parts = []
        for g, e in self.syllables:
            parts.append(g if e == 1 else "%s^%d" % (g, e))
        return " ".join(parts)

    def __repr__(self) -> str:
        return "Word(%s)" % str(self)


def _normalize(syllables) -> tuple[tuple[str, int], ...]:
    out: list[list] = []
    for g, e in syllables:
        e = int(e)
        if e == 0:
            continue
        if out and out[-1][0] == g:
            out[-1][1] += e
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([g, e])
    # merging can create new adjacent equal pairs only via removals; repeat
    changed = True
    while changed:
        changed = False
        i = 0
        while i + 1 < len(out):
            if out[i][0] == out[i + 1][0]:
                out[i][1] += out[i + 1][1]
                del out[i + 1]
                if out[i][1] == 0:
                    del out[i]
                changed = True
            else:
                i += 1
    return tuple((g, e) for g, e in out)


def w(*syllables) -> Word:
    """Shorthand: w(("p", 3), ("q", -1)) or w("p", "q") for single letters."""
    out = []
    for s in syllables:
        if isinstance(s, str):
            out.append((s, 1))
        else:
            out.append(s)
    return Word(tuple(out))


_TOKEN = re.compile(r"\s*(?:(\()|(\))|([A-Za-z_][A-Za-z_0-9]*)|(\^\s*(-?\d+))|(\*))")


def parse_word(text: str) -> Word:
    """Parse word syntax like ``(s0 s1)^4`` or ``p^-1 q p``.

    Juxtaposition multiplies; ``^`` takes an integer exponent and binds to
    the preceding letter or parenthesized group.
    """
    pos = 0
    n = len(text)

    def parse_seq(pos):
        factors = []
        while pos < n:
            m = _TOKEN.match(text, pos)
            if not m or m.end() == m.start() and not text[pos:].strip():
                break
            if not m.group(0).strip():
                pos = m.end()
                continue
            if m.group(2):  # closing paren: caller handles
                break
            if m.group(1):  # open paren
                inner, pos = parse_seq(m.end())
                if pos >= n or text[pos] != ")":
                    raise ValueError("unbalanced parenthesis in %r" % text)
                pos += 1
                exp, pos = parse_exp(pos)
                factors.append(inner**exp)
            elif m.group(3):
                name = m.group(3)
                pos = m.end()
                exp, pos = parse_exp(pos)
                factors.append(Word(((name, exp),)))
            elif m.group(6):
                pos = m.end()
            else:
                raise ValueError("cannot parse %r at position %d" % (text, pos))
        word = Word()
        for f in factors:
            word = word * f
        return word, pos

    def parse_exp(pos):
        m = _TOKEN.match(text, pos)
        if m and m.group(4):
            return int(m.group(5)), m.end()
        return 1, pos

    word, pos = parse_seq(0)
    if text[pos:].strip():
        raise ValueError("trailing input in word %r" % text)
    return word
