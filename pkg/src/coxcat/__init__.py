"""Exact Coxeter-Catalan combinatorics.

Reflection groups with exact arithmetic, noncrossing partition lattices,
generalized cluster complexes, parking-function posets, cluster parking
functions, and Catalan hyperplane arrangements, with integral homology and
closed-form cross-checks throughout.
"""

from .catalan import CatalanArrangement, verify_prop_9_1, verify_thm_9_3
from .cluster import ClusterComplex
from .complexes import SimplicialComplex, order_complex
from .coxeter import CoxeterDatum, parse_type, product_datum
from .cpf import CpfComplex, lefschetz_target, park_rank
from .enumerative import (f_poly_formula, h_poly_formula, kung_identity_check,
                          os_exponents, quasi_stirling)
from .groups import Group, Parabolic
from .homology import homology_cm_check, homology_profile
from .noncrossing import NcLattice
from .parking import PfPoset, park_char
from .posets import FinitePoset

__all__ = [
    "CatalanArrangement", "ClusterComplex", "CoxeterDatum", "CpfComplex",
    "FinitePoset", "Group", "NcLattice", "Parabolic", "PfPoset",
    "SimplicialComplex", "f_poly_formula", "h_poly_formula",
    "homology_cm_check", "homology_profile", "kung_identity_check",
    "lefschetz_target", "order_complex", "os_exponents", "park_char",
    "park_rank", "parse_type", "product_datum", "quasi_stirling",
    "verify_prop_9_1", "verify_thm_9_3",
]
