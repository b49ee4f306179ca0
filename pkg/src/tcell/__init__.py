"""Finite 2-cell structures over monoids: construction, law checking and search."""

from .cellcore import (
    Cell,
    CellMorphism,
    CellStructure,
    DiscreteStructure,
    MonoidCategory,
    OneObjectCategory,
    ViolationReport,
    find_interchange_counterexample,
    hcompose,
    is_natural,
    is_natural_wrt,
    verify_cell_morphism,
    verify_structure_axioms,
)
from .finmon import ElementMap, FinMonoid, Hom, builtin, enumerate_homs, validate_monoid
from .moncell import MonCellStructure

__all__ = [
    "Cell", "CellMorphism", "CellStructure", "DiscreteStructure", "ElementMap", "FinMonoid", "Hom",
    "MonCellStructure", "MonoidCategory", "OneObjectCategory", "ViolationReport", "builtin",
    "enumerate_homs", "find_interchange_counterexample", "hcompose", "is_natural", "is_natural_wrt",
    "validate_monoid", "verify_cell_morphism", "verify_structure_axioms",
]
