"""Exact 2-group catalog and string C-group classification toolkit."""

from .engine import (
    GroupInstance,
    NonTerminatingCollection,
    OrderMismatch,
    PcPresentation,
    RelationViolated,
    UnknownGenerator,
    collect,
    materialize,
    permutation_oracle,
    verify_associativity,
)
from .catalog import (
    FamilySpec,
    build,
    build_cyclic,
    build_dihedral,
    catalog_enumerate,
    direct_product,
    semidirect_product,
)
from .words import Word, parse_word

__all__ = [
    "FamilySpec",
    "GroupInstance",
    "NonTerminatingCollection",
    "OrderMismatch",
    "PcPresentation",
    "RelationViolated",
    "UnknownGenerator",
    "Word",
    "build",
    "build_cyclic",
    "build_dihedral",
    "catalog_enumerate",
    "collect",
    "direct_product",
    "materialize",
    "parse_word",
    "permutation_oracle",
    "semidirect_product",
    "verify_associativity",
]

__version__ = "0.1.0"
