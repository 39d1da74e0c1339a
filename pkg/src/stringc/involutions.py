"""Involution enumeration, sign-homomorphism certificates, and the
generated-by-involutions analysis."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .engine import GroupInstance, closure


@dataclass
class InvolutionReport:
    label: str
    central: list[int]
    noncentral: list[int]
    generated_by_involutions: bool
    phi_witness: frozenset[str] | None

    @property
    def total(self) -> int:
        return len(self.central) + len(self.noncentral)


class PhiHomomorphism:
    """Sign character phi_X on a minimal generating set: -1 on X, +1 off X."""

    def __init__(self, group: GroupInstance, X):
        self.group = group
        self.X = frozenset(X)
        gens = group.presentation.generators
        if not self.X or not self.X <= set(gens):
            raise ValueError("X must be a nonempty subset of the generators")
        self.signs = {g: (-1 if g in self.X else 1) for g in gens}

    def well_defined(self) -> bool:
        """Every defining relator must have even total weight on X."""
        for _, relator in self.group.presentation.relations():
            if self.of_word_weight(relator) != 1:
                return False
        return True

    def of_word_weight(self, word) -> int:
        weight = sum(e for g, e in word.syllables if g in self.X)
        return -1 if weight % 2 else 1

    def of_code(self, code: int) -> int:
        exps = self.group.unpack(code)
        weight = sum(e for g, e in zip(self.group.presentation.generators, exps)
                     if g in self.X)
        return -1 if weight % 2 else 1


def phi_test(group: GroupInstance, X) -> str:
    """Evaluate phi_X on every involution.

    "certifies_not": all involutions map to +1, so they span a proper
    subgroup and the group is not generated by involutions.  "generates":
    some involution maps to -1 (X certifies nothing).  "invalid": the sign
    assignment violates a defining relator.
    """
    phi = PhiHomomorphism(group, X)
    if not phi.well_defined():
        return "invalid"
    if all(phi.of_code(int(x)) == 1 for x in group.involution_codes):
        return "certifies_not"
    return "generates"


def minimal_generating_set(group: GroupInstance) -> tuple[str, ...]:
    gens = group.presentation.generators
    if len(gens) != group.rank:
        raise ValueError("presentation generators are not minimal")
    return gens


def generated_by_involutions(group: GroupInstance) -> tuple[bool, frozenset | None]:
    """Decide span(inv(G)) = G exactly; hunt a certifying phi_X when false."""
    invs = group.involution_codes
    generated = invs.size > 0 and len(closure(group.table, invs)) == group.order
    witness = None
    if not generated and group.presentation is not None:
        gens = minimal_generating_set(group)
        for size in range(1, len(gens) + 1):
            for X in combinations(gens, size):
                if phi_test(group, X) == "certifies_not":
                    witness = frozenset(X)
                    break
            if witness:
                break
    return generated, witness


def enumerate_involutions(group: GroupInstance) -> InvolutionReport:
    invs = group.involution_codes
    central_mask = group.central_mask[invs]
    central = [int(x) for x in invs[central_mask]]
    noncentral = [int(x) for x in invs[~central_mask]]
    generated, witness = generated_by_involutions(group)
    return InvolutionReport(group.label, central, noncentral, generated, witness)


def gamma_members(groups) -> list[GroupInstance]:
    """The groups generated by their involutions, in input order."""
    out = []
    for g in groups:
        invs = g.involution_codes
        if invs.size and len(closure(g.table, invs)) == g.order:
            out.append(g)
    return out
