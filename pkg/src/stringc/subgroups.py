"""Subgroup spans, intersections, normality, and the product-decomposition
and subgroup-isomorphism verdicts used by the structure propositions."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .engine import GroupInstance, closure


class MixedParents(Exception):
    """Set operation on subgroups of different group instances."""


@dataclass(frozen=True)
class Subgroup:
    parent: GroupInstance
    elements: frozenset[int]
    generators: tuple[int, ...]

    def __len__(self):
        return len(self.elements)

    def __contains__(self, code):
        return code in self.elements

    def __repr__(self):
        return "Subgroup(|%d| of %s)" % (len(self.elements), self.parent.label)


def span(g: GroupInstance, gens) -> Subgroup:
    gens = tuple(int(x) for x in gens)
    codes = closure(g.table, gens or (0,))
    return Subgroup(g, frozenset(int(c) for c in codes), gens)


def intersect(a: Subgroup, b: Subgroup) -> Subgroup:
    if a.parent is not b.parent:
        raise MixedParents("subgroups belong to different instances")
    elems = a.elements & b.elements
    return Subgroup(a.parent, elems, tuple(sorted(elems - {0}))[:0] or ())


def is_normal(g: GroupInstance, sub: Subgroup) -> bool:
    if sub.parent is not g:
        raise MixedParents("subgroup belongs to a different instance")
    elems = np.fromiter(sub.elements, dtype=np.int64)
    for gen in g.gens.values():
        conj = g.table[g.table[g.inv(gen), elems], gen]
        if not set(int(c) for c in conj) <= sub.elements:
            return False
    return True


def center(g: GroupInstance) -> Subgroup:
    codes = g.center_codes
    return Subgroup(g, frozenset(int(c) for c in codes), tuple(int(c) for c in codes))


def centralizer(g: GroupInstance, x: int) -> Subgroup:
    codes = np.flatnonzero(g.table[:, x] == g.table[x, :])
    return Subgroup(g, frozenset(int(c) for c in codes), (int(x),))


def product_set(a: Subgroup, b: Subgroup) -> frozenset[int]:
    if a.parent is not b.parent:
        raise MixedParents("subgroups belong to different instances")
    ea = np.fromiter(a.elements, dtype=np.int64)
    eb = np.fromiter(b.elements, dtype=np.int64)
    return frozenset(int(c) for c in np.unique(a.parent.table[np.ix_(ea, eb)]))


@dataclass
class Verdict:
    ok: bool
    detail: list

    def __bool__(self):
        return self.ok


def verify_decomposition(g: GroupInstance, pattern, conjugation_checks=()) -> Verdict:
    """Check a product-decomposition claim.

    pattern is a tree: a leaf is a tuple of generator codes; an inner node is
    (kind, left, right) with kind one of "direct", "semidirect", "product".
    direct requires both factors normal in their product span with trivial
    intersection; semidirect requires the left factor normal and a trivially
    intersecting complement; product only that the setwise product has the
    span's full size.  The root span must be the whole group.

    conjugation_checks are (a, x, expected) triples verifying a x a^-1 ==
    expected, for decompositions whose proofs rest on explicit identities.
    """
    detail = []

    def eval_node(node) -> Subgroup:
        if isinstance(node, tuple) and node and isinstance(node[0], str):
            kind, left, right = node
            sl, sr = eval_node(left), eval_node(right)
            m = span(g, tuple(sl.elements | sr.elements))
            inter = sl.elements & sr.elements
            if kind in ("direct", "semidirect"):
                if inter != {0}:
                    detail.append(("nontrivial_intersection", kind, len(inter)))
                if len(sl) * len(sr) != len(m):
                    detail.append(("order_product", kind, len(sl), len(sr), len(m)))
                if not _normal_in(m, sl):
                    detail.append(("left_factor_not_normal", kind))
                if kind == "direct" and not _normal_in(m, sr):
                    detail.append(("right_factor_not_normal", kind))
            elif kind == "product":
                prod = product_set(sl, sr)
                if len(prod) != len(m):
                    detail.append(("product_not_full", len(prod), len(m)))
            else:
                raise ValueError("unknown decomposition kind %r" % kind)
            return m
        return span(g, tuple(node))

    def _normal_in(m: Subgroup, sub: Subgroup) -> bool:
        for y in m.elements:
            iy = g.inv(y)
            for x in sub.generators or tuple(sub.elements):
                if g.mul(g.mul(iy, x), y) not in sub.elements:
                    return False
        return True

    root = eval_node(pattern)
    if len(root) != g.order:
        detail.append(("span_not_whole_group", len(root), g.order))
    for a, x, expected in conjugation_checks:
        got = g.mul(g.mul(a, x), g.inv(a))
        if got != expected:
            detail.append(("conjugation_identity", a, x, got, expected))
    return Verdict(not detail, detail)


def verify_subgroup_isomorphism(g_sub: Subgroup, target: GroupInstance,
                                images) -> Verdict:
    """Check that generator -> image extends to an isomorphism onto target.

    Closes the graph subgroup generated by (gen, image) pairs inside the
    direct product; the map is a well-defined homomorphism iff the graph has
    the subgroup's size, and an isomorphism onto the target iff additionally
    the images span the whole target and the orders agree.
    """
    detail = []
    src = g_sub.parent
    pairs = list(zip(g_sub.generators, images))
    graph = {(0, 0)}
    frontier = [(0, 0)]
    while frontier:
        x, y = frontier.pop()
        for gx, gy in pairs:
            nxt = (src.mul(x, gx), target.mul(y, gy))
            if nxt not in graph:
                graph.add(nxt)
                frontier.append(nxt)
    if len(graph) != len(g_sub.elements):
        detail.append(("not_a_homomorphism", len(graph), len(g_sub.elements)))
    image_span = closure(target.table, [y for _, y in pairs])
    if len(image_span) != target.order:
        detail.append(("image_not_surjective", len(image_span), target.order))
    if len(g_sub.elements) != target.order:
        detail.append(("order_mismatch", len(g_sub.elements), target.order))
    return Verdict(not detail, detail)
