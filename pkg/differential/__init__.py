"""
Differential package.

Provides the maps of the cube complex over GF(2):
- Sparse column maps with composition and dumps (SparseMapF2)
- Configuration maps F and edge homotopies H (f_config, f_edge, h_edge, f_terms)
- Assembly of d_k, d(t), H_m and the decoration isomorphism (assemble_dk, assemble_d, assemble_Hm, decoration_iso)
- Graded complexes, the reduced subcomplex and the transverse element (ChainComplex, reduced_subcomplex, transverse_cycle)
- Rule checks over sampled faces (run_rule_suite, check_pairing_table)
"""

from .assemble import (
    DifferentialError,
    assemble_d,
    assemble_dk,
    assemble_Hm,
    decoration_iso,
    is_differential,
    khovanov_differential,
)
from .checks import CheckResult, check_pairing_table, run_rule_suite
from .complex import THEORIES, ChainComplex, cube_complex
from .reduced import divisible_generators, reduced_subcomplex
from .rules import f_config, f_edge, f_terms, h_edge, h_terms
from .sparse import SparseMapF2
from .transverse import is_closed, transverse_cycle, transverse_resolution

__all__ = [
    "THEORIES",
    "ChainComplex",
    "CheckResult",
    "DifferentialError",
    "SparseMapF2",
    "assemble_Hm",
    "assemble_d",
    "assemble_dk",
    "check_pairing_table",
    "cube_complex",
    "decoration_iso",
    "divisible_generators",
    "f_config",
    "f_edge",
    "f_terms",
    "h_edge",
    "h_terms",
    "is_closed",
    "is_differential",
    "khovanov_differential",
    "reduced_subcomplex",
    "run_rule_suite",
    "transverse_cycle",
    "transverse_resolution",
]
