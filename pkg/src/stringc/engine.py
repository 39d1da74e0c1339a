"""Exact arithmetic in finite 2-groups given by ordered power-conjugate data.

A presentation lists generators p < q < r < s with, for each generator, its
relative order over the span of the earlier ones, a power word, and
conjugation words high^-1 low high.  Materialization builds the group as a
tower of degree-2 cyclic extensions (q contributes two rungs when its
relative order is 4), checking at every rung that the data actually defines
a group; the result is a full Cayley table on normal-form codes together
with a symbolic collector for word rewriting.

Conjugation words for (p, q) may contain q^2 (several families need it);
the tower handles this by inserting q^2 as its own rung, acting on p through
the separately supplied q^-2 p q^2 relation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import fp
from .words import Word


class EngineError(Exception):
    pass


class UnknownGenerator(EngineError):
    pass


class NonTerminatingCollection(EngineError):
    """Rewrite step bound exceeded; the presentation (or the bound) is bad."""


class OrderMismatch(EngineError):
    def __init__(self, found, expected):
        self.found = found
        self.expected = expected
        super().__init__("presented group has order %d, declared %d" % (found, expected))


class RelationViolated(EngineError):
    def __init__(self, index, relation=""):
        self.index = index
        super().__init__("defining relation %s does not hold %s" % (index, relation))


class _Inconsistent(Exception):
    """Internal: a tower rung failed its group-extension conditions."""


@dataclass(frozen=True)
class PcPresentation:
    """Ordered-generator presentation of one concrete 2-group instance.

    power_words[g] is the value of g^relative_order; conj_words[(low, high)]
    the value of high^-1 low high.  conj_q2_word, when given, is the value of
    q^-2 p q^2 and is required whenever conj_words[("p", "q")] mentions q.
    """

    label: str
    m: int
    generators: tuple[str, ...]
    relative_orders: tuple[int, ...]
    power_words: tuple[tuple[str, Word], ...]
    conj_words: tuple[tuple[tuple[str, str], Word], ...]
    conj_q2_word: Word | None = None

    def level(self, name: str) -> int:
        try:
            return self.generators.index(name)
        except ValueError:
            raise UnknownGenerator(name) from None

    def relative_order(self, name: str) -> int:
        return self.relative_orders[self.level(name)]

    def power_word(self, name: str) -> Word:
        return dict(self.power_words).get(name, Word())

    def conj_word(self, low: str, high: str) -> Word:
        return dict(self.conj_words)[(low, high)]

    def declared_order(self) -> int:
        out = 1
        for r in self.relative_orders:
            out *= r
        return out

    def relations(self) -> list[tuple[str, Word]]:
        """All defining relations as (description, relator) pairs."""
        rels = []
        for g in self.generators:
            lhs = Word(((g, self.relative_order(g)),))
            rels.append(("%s^%d" % (g, self.relative_order(g)),
                         lhs * self.power_word(g).inverse()))
        for (low, high), word in self.conj_words:
            lhs = Word(((high, -1), (low, 1), (high, 1)))
            rels.append(("%s^-1 %s %s" % (high, low, high), lhs * word.inverse()))
        if self.conj_q2_word is not None:
            lhs = Word((("q", -2), ("p", 1), ("q", 2)))
            rels.append(("q^-2 p q^2", lhs * self.conj_q2_word.inverse()))
        return rels

    def canonical_key(self) -> str:
        parts = ["m=%d" % self.m]
        for g, r in zip(self.generators, self.relative_orders):
            parts.append("%s:%d:%s" % (g, r, self.power_word(g)))
        for (low, high), word in sorted(self.conj_words):
            parts.append("%s^%s:%s" % (low, high, word))
        if self.conj_q2_word is not None:
            parts.append("pq2:%s" % self.conj_q2_word)
        return "|".join(parts)

    def to_fp(self) -> fp.FpPresentation:
        return fp.FpPresentation(self.generators,
                                 tuple(rel for _, rel in self.relations()))


def closure(table: np.ndarray, seeds, initial=None) -> np.ndarray:
    """Codes of the subgroup generated by seeds (BFS over right multiplication).

    `initial` may carry codes already known to lie in the subgroup; they seed
    the search without changing the result.
    """
    n = table.shape[0]
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    gens = np.unique(np.asarray(list(seeds), dtype=np.int64))
    if initial is not None:
        init = np.unique(np.asarray(list(initial), dtype=np.int64))
        seen[init] = True
        frontier = init
    else:
        frontier = np.array([0], dtype=np.int64)
    while frontier.size:
        new = np.unique(table[np.ix_(frontier, gens)])
        fresh = new[~seen[new]]
        seen[fresh] = True
        frontier = fresh
    return np.flatnonzero(seen)


class GroupInstance:
    """A fully materialized finite 2-group: codes 0..n-1 and a Cayley table.

    Code 0 is the identity.  For presentation-backed instances the code packs
    the normal-form exponent tuple with the p-exponent in the low bits.
    """

    def __init__(self, label, table, gens, presentation=None, radices=None,
                 collector=None, names=None):
        self.label = label
        self.table = table
        self.gens = dict(gens)
        self.presentation = presentation
        self.radices = tuple(radices) if radices else None
        self.collector = collector
        self.order = int(table.shape[0])
        self.identity = 0
        self._names = names

    def __repr__(self):
        return "GroupInstance(%s, order=%d)" % (self.label, self.order)

    # element arithmetic ----------------------------------------------------

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def inv(self, x: int) -> int:
        return int(self.inverses[x])

    def power(self, x: int, e: int) -> int:
        if e < 0:
            x, e = self.inv(x), -e
        out, base = 0, x
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def element_order(self, x: int) -> int:
        return int(self.element_orders[x])

    def conjugate(self, x: int, y: int) -> int:
        """y^-1 x y."""
        return self.mul(self.mul(self.inv(y), x), y)

    def commutes(self, x: int, y: int) -> bool:
        return self.mul(x, y) == self.mul(y, x)

    def evaluate(self, word: Word, assign=None) -> int:
        assign = self.gens if assign is None else assign
        out = 0
        for g, e in word.syllables:
            if g not in assign:
                raise UnknownGenerator(g)
            out = self.mul(out, self.power(assign[g], e))
        return out

    # cached structure -------------------------------------------------------

    @cached_property
    def inverses(self) -> np.ndarray:
        return np.argmin(self.table != 0, axis=1).astype(np.int64)

    @cached_property
    def _orders_and_half(self):
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        half = np.zeros(n, dtype=np.int64)
        orders[0] = 1
        cur = np.arange(n)
        prev = np.zeros(n, dtype=np.int64)
        val = 1
        while (orders == 0).any():
            if val > 2 * n:
                raise EngineError("element order is not a 2-power")
            mask = (orders == 0) & (cur == 0)
            orders[mask] = val
            half[mask] = prev[mask]
            prev, cur, val = cur, self.table[cur, cur], val * 2
        return orders, half

    @cached_property
    def element_orders(self) -> np.ndarray:
        return self._orders_and_half[0]

    @cached_property
    def half_power(self) -> np.ndarray:
        """half_power[x] = x^(ord(x)/2): the unique involution of <x> (0 for x=0)."""
        return self._orders_and_half[1]

    @cached_property
    def exponent(self) -> int:
        return int(self.element_orders.max())

    @cached_property
    def central_mask(self) -> np.ndarray:
        return (self.table == self.table.T).all(axis=1)

    @cached_property
    def center_codes(self) -> np.ndarray:
        return np.flatnonzero(self.central_mask)

    @cached_property
    def involution_codes(self) -> np.ndarray:
        sq = self.table[np.arange(self.order), np.arange(self.order)]
        return np.flatnonzero((sq == 0) & (np.arange(self.order) != 0))

    @cached_property
    def centralizer_orders(self) -> np.ndarray:
        return (self.table == self.table.T).sum(axis=1).astype(np.int64)

    @cached_property
    def class_sizes(self) -> np.ndarray:
        return self.order // self.centralizer_orders

    @cached_property
    def class_ids(self) -> np.ndarray:
        """Conjugacy class labels: the least code in each class."""
        n = self.order
        ids = np.full(n, -1, dtype=np.int64)
        gen_codes = list(self.gens.values())
        for x in range(n):
            if ids[x] >= 0:
                continue
            orbit = {x}
            frontier = [x]
            while frontier:
                y = frontier.pop()
                for g in gen_codes:
                    z = self.conjugate(y, g)
                    if z not in orbit:
                        orbit.add(z)
                        frontier.append(z)
            for y in orbit:
                ids[y] = x
        return ids

    def _commutators(self) -> np.ndarray:
        n = self.order
        inv = self.inverses
        idx = np.arange(n)
        a = self.table[np.ix_(inv, inv)]          # x^-1 y^-1
        b = self.table[a, idx[:, None]]           # x^-1 y^-1 x
        c = self.table[b, idx[None, :]]           # x^-1 y^-1 x y
        return np.unique(c)

    @cached_property
    def frattini_codes(self) -> np.ndarray:
        idx = np.arange(self.order)
        squares = self.table[idx, idx]
        seeds = np.unique(np.concatenate([squares, self._commutators()]))
        return closure(self.table, seeds)

    @cached_property
    def rank(self) -> int:
        quotient = self.order // len(self.frattini_codes)
        return quotient.bit_length() - 1

    @cached_property
    def derived_codes(self) -> np.ndarray:
        return closure(self.table, self._commutators())

    # normal-form helpers -----------------------------------------------------

    def unpack(self, code: int) -> tuple[int, ...]:
        if self.radices is None:
            raise EngineError("instance has no normal-form radices")
        out = []
        for r in self.radices:
            out.append(code % r)
            code //= r
        return tuple(out)

    def pack(self, exponents) -> int:
        code, mult = 0, 1
        for e, r in zip(exponents, self.radices):
            code += (e % r) * mult
            mult *= r
        return code

    def name_of(self, code: int) -> str:
        if self._names is not None:
            return self._names(code)
        if self.radices is None or self.presentation is None:
            return "g%d" % code
        if code == 0:
            return "1"
        parts = []
        for g, e in zip(self.presentation.generators, self.unpack(code)):
            if e == 1:
                parts.append(g)
            elif e:
                parts.append("%s^%d" % (g, e))
        return " ".join(parts)

    def word_of(self, code: int) -> Word:
        return Word(tuple((g, e) for g, e in
                          zip(self.presentation.generators, self.unpack(code)) if e))

    def collect(self, word: Word, max_steps: int | None = None) -> int:
        if self.collector is None:
            raise EngineError("instance has no collector")
        return self.collector.collect(word, max_steps=max_steps)


# tower construction ---------------------------------------------------------


def _perm_order_power(beta: np.ndarray, bound: int):
    """(order, beta^(order-1)) by iterated composition."""
    n = beta.shape[0]
    ident = np.arange(n)
    prev, cur, k = ident, beta, 1
    while not np.array_equal(cur, ident):
        prev, cur, k = cur, cur[beta], k + 1
        if k > bound:
            raise _Inconsistent("conjugation map order exceeds bound %d" % bound)
    return k, prev


def _extend_degree2(table: np.ndarray, w: int, beta: np.ndarray, what: str):
    """Table of U.<g> with g^2 = w and g^-1 x g = beta(x).

    Validates the cyclic-extension conditions: beta is an automorphism of U,
    beta fixes w, and beta^2 is the inner automorphism by w.  Returns the
    extended table and alpha = beta^-1 (conjugation BY g), obtained per the
    documented strategy by iterating beta to its order.
    """
    n = table.shape[0]
    if not np.array_equal(np.sort(beta), np.arange(n)):
        raise _Inconsistent("%s: conjugation images are not a bijection" % what)
    if not np.array_equal(beta[table], table[np.ix_(beta, beta)]):
        raise _Inconsistent("%s: conjugation is not a homomorphism" % what)
    if beta[w] != w:
        raise _Inconsistent("%s: conjugation moves the power-word value" % what)
    inv_w = int(np.flatnonzero(table[w] == 0)[0])
    inner = table[table[inv_w], w]
    if not np.array_equal(beta[beta], inner):
        raise _Inconsistent("%s: conjugation squared is not inner by g^2" % what)
    _, alpha = _perm_order_power(beta, bound=4 * n)

    upper = np.empty((2 * n, 2 * n), dtype=np.int32)
    upper[:n, :n] = table
    upper[:n, n:] = table + n
    ta = table[:, alpha]                     # ta[u1, u2] = u1 * alpha(u2)
    upper[n:, :n] = ta + n
    upper[n:, n:] = table[ta, w]
    return upper, alpha


def _parse_pq_word(word: Word, N: int):
    """Split a (p, q)-conjugation word valued q^(2 delta) p^a into (delta, a)."""
    delta, a = 0, 0
    for g, e in word.syllables:
        if g == "q":
            if e != 2 or delta:
                raise _Inconsistent("conj(p,q) must have shape q^2 p^a, got %s" % word)
            delta = 1
        elif g == "p":
            a = e % N
        else:
            raise _Inconsistent("unexpected generator %s in conj(p,q)" % g)
    return delta, a


def _p_exponent(word: Word, N: int, what: str) -> int:
    e = 0
    for g, k in word.syllables:
        if g != "p":
            raise _Inconsistent("%s must be a power of p, got %s" % (what, word))
        e += k
    return e % N


def _tab_pow(table: np.ndarray, x: int, e: int) -> int:
    if e < 0:
        inv = int(np.flatnonzero(table[x] == 0)[0])
        return _tab_pow(table, inv, -e)
    out, base = 0, x
    while e:
        if e & 1:
            out = int(table[out, base])
        base = int(table[base, base])
        e >>= 1
    return out


def _prod(values) -> int:
    out = 1
    for v in values:
        out *= v
    return out


class _Rung:
    """Collection tables for one public generator: conj-by-g on the span below."""

    def __init__(self, name, rel_order, alpha_powers, sub_radixes, sub_digits):
        self.name = name
        self.rel_order = rel_order
        self.alpha_powers = alpha_powers    # exponent -> permutation of sub-codes
        self.sub_radixes = sub_radixes      # mixed radices of the subgroup below
        self.sub_digits = sub_digits        # (generator name, exponent multiplier)


class Collector:
    """Leftward collection of free words into normal-form codes.

    Rewrites the leftmost violation each step: oversize or negative
    exponents are replaced through g^e = (power word)^t g^(e mod R), and
    descents x^a y^b with level(x) > level(y) through the conj-by-x tables
    (inverse conjugation maps, obtained by iterating the presented
    conjugation to its 2-power order at build time).
    """

    def __init__(self, pres: PcPresentation, rungs: dict, radices):
        self.pres = pres
        self.rungs = rungs
        self.radices = radices
        self.levels = {g: i for i, g in enumerate(pres.generators)}
        self.default_bound = 2 ** (pres.m + 6)

    def _sub_code(self, rung: _Rung, name: str, exp: int) -> int:
        """Ladder code of name^exp inside rung's subgroup."""
        has_double = any(n == name and m == 2 for n, m in rung.sub_digits)
        code, mult = 0, 1
        for (dig_name, dig_mult), radix in zip(rung.sub_digits, rung.sub_radixes):
            d = 0
            if dig_name == name:
                if dig_mult == 2:
                    d = (exp // 2) % radix
                else:
                    d = (exp % 2) if has_double else (exp % radix)
            code += d * mult
            mult *= radix
        return code

    def _sub_word(self, rung: _Rung, code: int):
        exps: dict[str, int] = {}
        for (dig_name, dig_mult), radix in zip(rung.sub_digits, rung.sub_radixes):
            digit = code % radix
            code //= radix
            exps[dig_name] = exps.get(dig_name, 0) + dig_mult * digit
        return [[g, exps[g]] for g in self.pres.generators if exps.get(g)]

    def collect(self, word: Word, max_steps: int | None = None) -> int:
        bound = self.default_bound if max_steps is None else max_steps
        for g in word.generators():
            if g not in self.levels:
                raise UnknownGenerator(g)
        syl = [list(s) for s in word.syllables]
        steps = 0

        def charge():
            nonlocal steps
            steps += 1
            if steps > bound:
                raise NonTerminatingCollection(
                    "no normal form after %d rewrite steps" % bound)

        changed = True
        while changed:
            changed = False
            i = 0
            while i < len(syl):
                g, e = syl[i]
                rel = self.pres.relative_order(g)
                if e == 0:
                    del syl[i]
                    changed = True
                    continue
                if e < 0 or e >= rel:
                    charge()
                    e_new = e % rel
                    t = (e - e_new) // rel           # g^e = (g^rel)^t g^e_new
                    repl = [list(s) for s in (self.pres.power_word(g) ** t).syllables]
                    if e_new:
                        repl.append([g, e_new])
                    syl[i:i + 1] = repl
                    changed = True
                    continue
                if i + 1 < len(syl):
                    g2, e2 = syl[i + 1]
                    if g2 == g:
                        syl[i][1] += e2
                        del syl[i + 1]
                        changed = True
                        continue
                    rel2 = self.pres.relative_order(g2)
                    if self.levels[g2] < self.levels[g] and 0 < e2 < rel2:
                        charge()
                        rung = self.rungs[g]
                        code = self._sub_code(rung, g2, e2)
                        moved = int(rung.alpha_powers[e][code])
                        repl = self._sub_word(rung, moved)
                        repl.append([g, e])
                        syl[i:i + 2] = repl
                        changed = True
                        continue
                i += 1
        exps = {g: 0 for g in self.pres.generators}
        for g, e in syl:
            exps[g] += e
        code, mult = 0, 1
        for g, radix in zip(self.pres.generators, self.radices):
            if exps[g] % radix != exps[g]:
                raise NonTerminatingCollection("exponent of %s out of range" % g)
            code += exps[g] * mult
            mult *= radix
        return code


def materialize(pres: PcPresentation, tc_max_cosets: int | None = None) -> GroupInstance:
    """Build the full Cayley table of the presented group.

    The tower is validated rung by rung; a failed rung means the relations
    present a smaller group than the normal-form count declares, in which
    case the true order is certified by coset enumeration and reported as
    OrderMismatch.
    """
    declared = pres.declared_order()
    try:
        instance = _build_tower(pres)
    except _Inconsistent as exc:
        _raise_true_order(pres, declared, tc_max_cosets, exc)

    reached = closure(instance.table, instance.gens.values())
    if len(reached) != declared:
        _raise_true_order(pres, declared, tc_max_cosets,
                          _Inconsistent("closure reached %d codes" % len(reached)))
    for index, (desc, relator) in enumerate(pres.relations()):
        if instance.collect(relator) != 0:
            _raise_true_order(pres, declared, tc_max_cosets,
                              _Inconsistent("relation %s fails" % desc))
    return instance


def _raise_true_order(pres, declared, tc_max_cosets, exc):
    limit = tc_max_cosets if tc_max_cosets is not None else 2 ** (pres.m + 4)
    ct = fp.coset_enumerate(pres.to_fp(), max_cosets=limit)
    if ct.order != declared:
        raise OrderMismatch(ct.order, declared) from exc
    raise RelationViolated(-1, str(exc)) from exc


def _build_tower(pres: PcPresentation) -> GroupInstance:
    names = pres.generators
    if names[0] != "p":
        raise EngineError("first generator must be p")
    N = pres.relative_order("p")
    if _p_exponent(pres.power_word("p"), N, "p power word") != 0:
        raise _Inconsistent("p^ord(p) must be the identity")

    idx = np.arange(N, dtype=np.int32)
    table = ((idx[:, None] + idx[None, :]) % N).astype(np.int32)
    ladder: list[tuple[str, int]] = [("p", 1)]   # (generator, exponent multiplier)
    radixes: list[int] = [N]
    gen_codes = {"p": 1 % N}
    rungs: dict[str, _Rung] = {}

    def eval_word(word: Word) -> int:
        out = 0
        for g, e in word.syllables:
            if g not in gen_codes:
                raise _Inconsistent("word %s uses %s above current rung" % (word, g))
            out = int(table[out, _tab_pow(table, gen_codes[g], e)])
        return out

    def beta_from_digit_images(digit_images) -> np.ndarray:
        size = table.shape[0]
        beta = np.zeros(size, dtype=np.int64)
        rem = np.arange(size)
        for (img, radix) in zip(digit_images, radixes):
            digits = rem % radix
            rem = rem // radix
            pow_table = np.zeros(radix, dtype=np.int64)
            acc = 0
            for d in range(radix):
                pow_table[d] = acc
                acc = int(table[acc, img])
            beta = table[beta, pow_table[digits]]
        return beta

    for level in range(1, len(names)):
        g = names[level]
        rel = pres.relative_order(g)
        if g == "q" and rel == 4:
            conj = pres.conj_word("p", "q")
            delta, a = _parse_pq_word(conj, N)
            pw = _p_exponent(pres.power_word("q"), N, "q power word")
            if delta and pres.conj_q2_word is None:
                raise _Inconsistent("conj(p,q) mentions q^2 but no q^-2 p q^2 given")
            if pres.conj_q2_word is not None:
                cc = _p_exponent(pres.conj_q2_word, N, "q^-2 p q^2")
                if not delta and cc != pow(a, 2, N):
                    raise _Inconsistent("q^2 action disagrees with conj(p,q) squared")
            else:
                cc = pow(a, 2, N)
            # rung for t = q^2 acting on <p> by p -> p^cc
            if (cc * cc) % N != 1 % N:
                raise _Inconsistent("q^2 action is not an involution on <p>")
            if (cc * pw) % N != pw % N:
                raise _Inconsistent("q^2 action moves the q^4 value")
            beta_t = (np.arange(N, dtype=np.int64) * cc) % N
            table, _ = _extend_degree2(table, pw, beta_t, "q^2 over <p>")
            t_code = N
            sub_radixes = tuple(radixes) + (2,)
            sub_digits = tuple(ladder) + (("q", 2),)
            ladder.append(("q", 2))
            radixes.append(2)
            # rung for q itself: q^2 = t, p -> q^(2 delta) p^a, t -> t
            img_p = int(table[_tab_pow(table, t_code, delta), a % N])
            beta_q = beta_from_digit_images([img_p, t_code])
            table, alpha_q = _extend_degree2(table, t_code, beta_q, "q over <p,q^2>")
            gen_codes["q"] = 2 * N
            rungs["q"] = _Rung("q", rel, _alpha_powers(alpha_q, rel),
                               sub_radixes, sub_digits)
            ladder.append(("q", 1))
            radixes.append(2)
            continue

        if rel != 2:
            raise EngineError("generator %s must have relative order 2 or 4" % g)
        sub_radixes, sub_digits = tuple(radixes), tuple(ladder)
        w_code = eval_word(pres.power_word(g))
        # a digit with multiplier 2 is a power of q; its image is image(q)^2
        images = []
        for dig_name, dig_mult in ladder:
            base = eval_word(pres.conj_word(dig_name, g))
            images.append(_tab_pow(table, base, dig_mult))
        beta = beta_from_digit_images(images)
        table, alpha = _extend_degree2(table, w_code, beta, "%s rung" % g)
        gen_codes[g] = _prod(sub_radixes)
        rungs[g] = _Rung(g, 2, _alpha_powers(alpha, 2), sub_radixes, sub_digits)
        ladder.append((g, 1))
        radixes.append(2)

    # relabel ladder codes (p, q^2, q, r, s) into packed (p, q, r, s) codes
    spec_radices = pres.relative_orders
    perm = _ladder_to_spec(ladder, radixes, names, spec_radices)
    inv_perm = np.empty_like(perm)
    inv_perm[perm] = np.arange(perm.size)
    table = perm[table[np.ix_(inv_perm, inv_perm)]].astype(np.int32)
    gen_codes = {g: int(perm[c]) for g, c in gen_codes.items()}

    collector = Collector(pres, rungs, spec_radices)
    return GroupInstance(pres.label, table, gen_codes, presentation=pres,
                         radices=spec_radices, collector=collector)


def _alpha_powers(alpha: np.ndarray, rel: int) -> list:
    powers = [np.arange(alpha.shape[0])]
    for _ in range(1, rel):
        powers.append(powers[-1][alpha])
    return powers


def _ladder_to_spec(ladder, radixes, names, spec_radices) -> np.ndarray:
    size = _prod(radixes)
    codes = np.arange(size)
    exps = {g: np.zeros(size, dtype=np.int64) for g in names}
    rem = codes.copy()
    for (name, mult), radix in zip(ladder, radixes):
        digits = rem % radix
        rem = rem // radix
        exps[name] += mult * digits
    out = np.zeros(size, dtype=np.int64)
    scale = 1
    for g, radix in zip(names, spec_radices):
        out += (exps[g] % radix) * scale
        scale *= radix
    return out


# public collect + oracles -----------------------------------------------------

_MATERIALIZE_CACHE: dict[str, GroupInstance] = {}


def materialize_cached(pres: PcPresentation) -> GroupInstance:
    key = pres.canonical_key()
    if key not in _MATERIALIZE_CACHE:
        _MATERIALIZE_CACHE[key] = materialize(pres)
    return _MATERIALIZE_CACHE[key]


def collect(word: Word, pres: PcPresentation, max_steps: int | None = None) -> int:
    """Normal-form code of a word; see Collector for the rewrite strategy."""
    return materialize_cached(pres).collect(word, max_steps=max_steps)


@dataclass
class OracleVerdict:
    ok: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


def permutation_oracle(group: GroupInstance) -> OracleVerdict:
    """Check the left-regular permutation action composes like the table.

    For every pair (a, b) the permutation x -> a(bx) must equal x -> (ab)x;
    returns the first counterexample otherwise.
    """
    T = group.table
    for a in range(group.order):
        lhs = T[a][T]          # lhs[b, x] = a * (b * x)
        rhs = T[T[a]]          # rhs[b, x] = (a * b) * x
        if not np.array_equal(lhs, rhs):
            b, x = np.argwhere(lhs != rhs)[0]
            return OracleVerdict(False, (a, int(b), int(x)))
    return OracleVerdict(True)


def verify_associativity(group: GroupInstance, samples: int | None = None,
                         seed: int = 0) -> OracleVerdict:
    """Associativity over all triples, or over `samples` random triples."""
    T = group.table
    n = group.order
    if samples is None:
        for a in range(n):
            if not np.array_equal(T[T[a]], T[a][T]):
                b = int(np.argwhere(T[T[a]] != T[a][T])[0][0])
                return OracleVerdict(False, (a, b))
        return OracleVerdict(True)
    rng = np.random.default_rng(seed)
    a = rng.integers(0, n, size=samples)
    b = rng.integers(0, n, size=samples)
    c = rng.integers(0, n, size=samples)
    ok = T[T[a, b], c] == T[a, T[b, c]]
    if ok.all():
        return OracleVerdict(True)
    i = int(np.flatnonzero(~ok)[0])
    return OracleVerdict(False, (int(a[i]), int(b[i]), int(c[i])))
