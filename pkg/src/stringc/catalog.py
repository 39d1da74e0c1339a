"""Family catalog: every tabulated parameter row as a buildable group spec,
plus the generic cyclic/dihedral/product constructors.

The parameter tables live in families.txt, mirrored row for row from the
classification they come from; corrected rows keep their faulty originals
under a historical flag so the order-collapse diagnostics stay testable.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

import numpy as np

from . import engine, fp
from .engine import GroupInstance, PcPresentation
from .words import Word


FAMILIES = ("N_II", "M_II-A", "M_II-B", "M_II-C", "M_II-D",
            "M_II-E", "M_II-F", "M_II-G", "M_III")

M_II_SUBCLASSES = ("M_II-A", "M_II-B", "M_II-C", "M_II-D",
                   "M_II-E", "M_II-F", "M_II-G")


class UnknownFamily(Exception):
    pass


class InvalidAction(Exception):
    """The map supplied to semidirect_product is not a group action."""


@dataclass(frozen=True)
class TableRowMeta:
    family: str
    n: int
    params: tuple[int, ...]
    duplicate_of: int | None = None
    provenance: str = "original"      # original | added | corrected
    historical_params: tuple[int, ...] | None = None


@dataclass(frozen=True)
class FamilySpec:
    """One group: a family, a table row, and the order parameter m."""

    family: str
    n: int
    m: int
    historical: bool = False

    def __post_init__(self):
        rows = table_rows(self.family)
        if self.n not in rows:
            raise UnknownFamily("%s has no row %d" % (self.family, self.n))
        if self.historical and rows[self.n].historical_params is None:
            raise UnknownFamily("%s,%d has no historical variant" % (self.family, self.n))
        min_m = 6 if self.family == "N_II" else 7
        if self.m < min_m:
            raise ValueError("%s requires m >= %d" % (self.family, min_m))

    @property
    def params(self) -> tuple[int, ...]:
        row = table_rows(self.family)[self.n]
        return row.historical_params if self.historical else row.params

    @property
    def u(self) -> int:
        if (self.family == "M_II-B" and self.n in (27, 28)) or \
           (self.family == "M_II-D" and self.n in (10, 11)):
            return 1
        return self.m - 4

    @property
    def label(self) -> str:
        tag = " historical" if self.historical else ""
        return "%s,%d(%d)%s" % (self.family, self.n, self.m, tag)


_ROWS: dict[str, dict[int, TableRowMeta]] = {}


def _load_tables():
    if _ROWS:
        return
    text = resources.files("stringc").joinpath("families.txt").read_text()
    family = None
    pending: dict[int, dict] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("["):
            if family is not None:
                _ROWS[family] = {n: TableRowMeta(family=family, n=n, **kw)
                                 for n, kw in pending.items()}
            family = line.strip("[]")
            pending = {}
            continue
        tokens = line.split()
        n = int(tokens[0])
        values, flags = [], []
        for tok in tokens[1:]:
            try:
                values.append(int(tok))
            except ValueError:
                flags.append(tok)
        if "historical" in flags:
            pending[n]["historical_params"] = tuple(values)
            continue
        kw = {"params": tuple(values)}
        for flag in flags:
            if flag.startswith("dup="):
                kw["duplicate_of"] = int(flag[4:])
            elif flag in ("added", "corrected"):
                kw["provenance"] = flag
        pending[n] = kw
    if family is not None:
        _ROWS[family] = {n: TableRowMeta(family=family, n=n, **kw)
                         for n, kw in pending.items()}


def table_rows(family: str) -> dict[int, TableRowMeta]:
    _load_tables()
    if family not in _ROWS:
        raise UnknownFamily(family)
    return _ROWS[family]


# presentation templates -----------------------------------------------------


def _w(*syllables) -> Word:
    return Word(tuple(syllables))


def family_presentation(family: str, m: int, params, u: int | None = None,
                         label: str | None = None) -> PcPresentation:
    """Instantiate a family template with concrete parameter values."""
    label = label or "%s(%d)%s" % (family, m, tuple(params))
    if family == "N_I":
        # the single omitted rank-2 presentation, kept as a demo build
        N = 2 ** (m - 2)
        return PcPresentation(
            label=label, m=m, generators=("p", "q"), relative_orders=(N, 4),
            power_words=(("p", Word()), ("q", _w(("p", 2 ** (m - 3))))),
            conj_words=(((("p", "q")), _w(("q", 2), ("p", -1 + 2 ** (m - 3)))),),
            conj_q2_word=_w(("p", 1 + 2 ** (m - 3))))
    if family == "N_II":
        e1, e2, e3, e4, e5 = params
        N = 2 ** (m - 2)
        return PcPresentation(
            label=label, m=m, generators=("p", "q", "r"), relative_orders=(N, 2, 2),
            power_words=(("p", Word()), ("q", Word()), ("r", _w(("p", 2 ** (m - 3) * e5)))),
            conj_words=(
                (("p", "q"), _w(("p", 1 + 2 ** (m - 3) * e2))),
                (("p", "r"), _w(("p", e1 + 2 ** (m - 3) * e3))),
                (("q", "r"), _w(("q", 1), ("p", 2 ** (m - 3) * e4)))))
    if family == "M_III":
        e1, e2, e3, e4, e5, e6, e7, e8 = params
        N = 2 ** (m - 3)
        return PcPresentation(
            label=label, m=m, generators=("p", "q", "r", "s"),
            relative_orders=(N, 2, 2, 2),
            power_words=(("p", Word()), ("q", Word()),
                         ("r", _w(("p", 2 ** (m - 4) * e8))),
                         ("s", _w(("p", 2 ** (m - 4) * e5)))),
            conj_words=(
                (("p", "q"), _w(("p", 1))),
                (("p", "r"), _w(("p", e2 + 2 ** (m - 4) * e3))),
                (("q", "r"), _w(("q", 1))),
                (("p", "s"), _w(("p", e1 + 2 ** (m - 4) * e6))),
                (("q", "s"), _w(("q", 1), ("p", 2 ** (m - 4) * e4))),
                (("r", "s"), _w(("r", 1), ("p", 2 ** (m - 4) * e7)))))

    N = 2 ** (m - 3)
    if u is None:
        u = m - 4
    common = dict(label=label, m=m, generators=("p", "q", "r"),
                  relative_orders=(N, 4, 2))
    if family == "M_II-A":
        e1, e2, e3, e4, e5, e6, e7, e8 = params
        return PcPresentation(
            **common,
            power_words=(("p", Word()), ("q", Word()),
                         ("r", _w(("q", 2 * e3), ("p", 2 ** (m - 4) * e4)))),
            conj_words=(
                (("p", "q"), _w(("p", 1 + 2 ** (m - 5) * e7))),
                (("p", "r"), _w(("q", 2 * e1), ("p", e8 + 2 ** (m - 4) * e5))),
                (("q", "r"), _w(("q", 1 + 2 * e2), ("p", 2 ** (m - 5) * e6)))))
    if family == "M_II-B":
        e1, e2, e3, e4, e5, e6, e7 = params
        return PcPresentation(
            **common,
            power_words=(("p", Word()), ("q", Word()), ("r", _w(("q", 2 * e3)))),
            conj_words=(
                (("p", "q"), _w(("p", -1 + 2 ** (m - 5) * e6))),
                (("p", "r"), _w(("q", 2 * e1), ("p", e7 + 2 ** (m - 4) * e5))),
                (("q", "r"), _w(("q", 1 + 2 * e2), ("p", 2 ** u * e4)))))
    if family == "M_II-C":
        e1, e2 = params
        return PcPresentation(
            **common,
            power_words=(("p", Word()), ("q", _w(("p", 2 ** (m - 4)))), ("r", Word())),
            conj_words=(
                (("p", "q"), _w(("p", -1))),
                (("p", "r"), _w(("p", 1 + 2 ** (m - 4) * e2))),
                (("q", "r"), _w(("q", 1 + 2 * e1)))))
    if family == "M_II-D":
        e1, e2, e3, e4, e5, e6, e7, e8 = params
        return PcPresentation(
            **common,
            power_words=(("p", Word()), ("q", Word()), ("r", _w(("q", 2 * e3)))),
            conj_words=(
                (("p", "q"), _w(("q", 2), ("p", -1 + 2 ** (m - 4) * e7))),
                (("p", "r"), _w(("q", 2 * e1), ("p", e8 + 2 ** (m - 4) * e5))),
                (("q", "r"), _w(("q", 1 + 2 * e2), ("p", 2 ** u * e4)))),
            conj_q2_word=_w(("p", 1 + 2 ** (m - 4) * e6)))
    if family == "M_II-E":
        e1, e2, e3, e4 = params
        return PcPresentation(
            **common,
            power_words=(("p", Word()), ("q", Word()), ("r", Word())),
            conj_words=(
                (("p", "q"), _w(("q", 2), ("p", 1 - 2 ** (m - 5) * e2))),
                (("p", "r"), _w(("p", e1 + 2 ** (m - 4) * e4))),
                (("q", "r"), _w(("q", 1), ("p", 2 ** (m - 5) * e3)))),
            conj_q2_word=_w(("p", 1 + 2 ** (m - 4) * e2)))
    if family == "M_II-F":
        e1, e2, e3, e4, e5 = params
        return PcPresentation(
            **common,
            power_words=(("p", Word()), ("q", _w(("p", 2 ** (m - 4)))), ("r", Word())),
            conj_words=(
                (("p", "q"), _w(("q", 2), ("p", -1 + 2 ** (m - 4) * e5))),
                (("p", "r"), _w(("q", 2 * e3), ("p", 1 + 2 ** (m - 4) * e2))),
                (("q", "r"), _w(("q", 1 + 2 * e3), ("p", 2 ** (m - 4) * e4)))),
            conj_q2_word=_w(("p", 1 + 2 ** (m - 4) * e1)))
    if family == "M_II-G":
        e1, e2, e3, e4 = params
        return PcPresentation(
            **common,
            power_words=(("p", Word()), ("q", _w(("p", 4))), ("r", Word())),
            conj_words=(
                (("p", "q"), _w(("q", 2), ("p", -1 + 2 ** (m - 5) * e4))),
                (("p", "r"), _w(("p", 1 + 2 ** (m - 4) * e3))),
                (("q", "r"), _w(("q", 1), ("p", 2 ** (m - 4) * e2)))),
            conj_q2_word=_w(("p", 1 + 2 ** (m - 4) * e1)))
    raise UnknownFamily(family)


def build(spec: FamilySpec) -> GroupInstance:
    """Materialize one catalog row; OrderMismatch for degenerate parameters."""
    pres = family_presentation(spec.family, spec.m, spec.params, u=spec.u,
                               label=spec.label)
    return engine.materialize(pres)


def catalog_enumerate(m: int, include_duplicates: bool = False):
    """All catalog instances at order 2^m (146 rows; 149 with duplicates)."""
    for family in FAMILIES:
        if family == "N_II" and m < 6:
            continue
        for n, row in sorted(table_rows(family).items()):
            if row.duplicate_of is not None and not include_duplicates:
                continue
            yield build(FamilySpec(family, n, m))


def catalog_specs(m: int, include_duplicates: bool = False):
    out = []
    for family in FAMILIES:
        for n, row in sorted(table_rows(family).items()):
            if row.duplicate_of is not None and not include_duplicates:
                continue
            out.append(FamilySpec(family, n, m))
    return out


# generic constructors --------------------------------------------------------


def build_cyclic(k: int) -> GroupInstance:
    idx = np.arange(k, dtype=np.int32)
    table = ((idx[:, None] + idx[None, :]) % k).astype(np.int32)
    names = ["1"] + ["c^%d" % i if i > 1 else "c" for i in range(1, k)]
    return GroupInstance("Z_%d" % k, table, {"c": 1 % k},
                         names=lambda c: names[c])


def build_dihedral(k: int) -> GroupInstance:
    """Dihedral group of order 2k (rotation subgroup of order k)."""
    codes = np.arange(2 * k)
    i1, f1 = codes % k, codes // k
    table = np.zeros((2 * k, 2 * k), dtype=np.int32)
    for f in (0, 1):
        rows = codes[f1 == f]
        sign = 1 if f == 0 else -1
        for y in range(2 * k):
            i2, f2 = y % k, y // k
            table[rows, y] = (i1[rows] + sign * i2) % k + k * ((f + f2) % 2)
    gens = {"a": k, "b": (k + 1) % (2 * k)}   # two reflections, ord(ab) = k
    return GroupInstance("D_%d" % k, table, gens)


def direct_product(a: GroupInstance, b: GroupInstance) -> GroupInstance:
    na, nb = a.order, b.order
    codes = np.arange(na * nb)
    xa, xb = codes % na, codes // na
    # T[(x1,y1),(x2,y2)] = (Ta[x1,x2], Tb[y1,y2])
    Ta = a.table[np.ix_(xa, xa)]
    Tb = b.table[np.ix_(xb, xb)]
    table = (Ta + na * Tb).astype(np.int32)
    gens = {}
    for name, code in a.gens.items():
        gens[name] = int(code)
    for name, code in b.gens.items():
        key = name if name not in gens else name + "'"
        gens[key] = int(na * code)
    return GroupInstance("(%s x %s)" % (a.label, b.label), table, gens)


def semidirect_product(a: GroupInstance, b: GroupInstance,
                       action: np.ndarray) -> GroupInstance:
    """A semidirect product A x| B; action[y] is the automorphism of A
    applied by y in B, as a permutation of A's codes.

    Raises InvalidAction unless every action[y] is an automorphism of A and
    y -> action[y] is a homomorphism from B to Aut(A).
    """
    na, nb = a.order, b.order
    action = np.asarray(action, dtype=np.int64)
    if action.shape != (nb, na):
        raise InvalidAction("action must have shape (|B|, |A|)")
    if not np.array_equal(action[0], np.arange(na)):
        raise InvalidAction("identity of B must act trivially")
    for y in range(nb):
        phi = action[y]
        if not np.array_equal(np.sort(phi), np.arange(na)):
            raise InvalidAction("action of %d is not a bijection" % y)
        if not np.array_equal(phi[a.table], a.table[np.ix_(phi, phi)]):
            raise InvalidAction("action of %d is not an automorphism" % y)
    for y1 in range(nb):
        for y2 in range(nb):
            composed = action[y1][action[y2]]
            if not np.array_equal(composed, action[b.mul(y1, y2)]):
                raise InvalidAction("action is not a homomorphism at (%d, %d)"
                                    % (y1, y2))
    codes = np.arange(na * nb)
    xa, xb = codes % na, codes // na
    # (x1, y1)(x2, y2) = (x1 * phi_{y1}(x2), y1 y2)
    phi_x2 = action[xb[:, None], xa[None, :]]
    Ta = a.table[xa[:, None], phi_x2]
    Tb = b.table[np.ix_(xb, xb)]
    table = (Ta + na * Tb).astype(np.int32)
    gens = {}
    for name, code in a.gens.items():
        gens[name] = int(code)
    for name, code in b.gens.items():
        key = name if name not in gens else name + "'"
        gens[key] = int(na * code)
    return GroupInstance("(%s x| %s)" % (a.label, b.label), table, gens)


def action_from_gen_images(a: GroupInstance, b: GroupInstance,
                           gen_perms: dict[str, np.ndarray]) -> np.ndarray:
    """Full action array from automorphisms assigned to B's generators.

    Each element of B is reached as a word in the generators; the action is
    the corresponding composite.  Consistency is still checked downstream by
    semidirect_product.
    """
    na, nb = a.order, b.order
    action = np.full((nb, na), -1, dtype=np.int64)
    action[0] = np.arange(na)
    frontier = [0]
    while frontier:
        y = frontier.pop(0)
        for name, perm in gen_perms.items():
            z = b.mul(y, b.gens[name])
            if action[z][0] == -1:
                action[z] = perm[action[y]]
                frontier.append(z)
    if (action < 0).any():
        raise InvalidAction("generator images do not reach all of B")
    return action


def group_from_fp(pres: fp.FpPresentation, label: str | None = None,
                  max_cosets: int = 65536) -> GroupInstance:
    """Concrete group from a finite presentation via its regular coset action."""
    ct = fp.coset_enumerate(pres, max_cosets=max_cosets)
    n = ct.order
    table = np.zeros((n, n), dtype=np.int32)
    base = np.arange(n)
    for j in range(n):
        v = base
        for letter in ct.rep_words[j]:
            v = ct.table[v, letter]
        table[:, j] = v
    gens = {g: int(ct.table[0, 2 * i]) for i, g in enumerate(pres.generators)}
    return GroupInstance(label or "fp-group", table, gens)
