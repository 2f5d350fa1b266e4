"""Lyubeznik tables of Stanley-Reisner rings, with machine verification.

The table of R/I for a squarefree monomial ideal I is computed from the
minimal free resolution of the Alexander dual ideal: entry (p, i) is the
p-th homology of the dualized linear strand of slope n - i.  Alongside the
table the package computes depth, deficiency module dimensions, the Serre
and Cohen-Macaulay codimension levels, and facet intersection graphs, and
can check the identities and vanishing theorems relating all of these on
any given ideal.
"""

from .homology import BettiTable, hochster_betti, lc_face_dims, reduced_homology
from .invariants import (DeficiencyProfile, GammaGraph, LyubeznikTable,
                         VerifyReport, cm_codim_min, deficiency_dims, depth,
                         gamma_components, is_cm, is_generalized_cm,
                         lyubeznik_table, serre_max, verify_report)
from .linalg import FieldSpec, QQ, GF2
from .resolution import (ConsistencyError, MonomialMatrix, OracleMismatchError,
                         Resolution, StrandDual, minimal_resolution,
                         strand_dual, taylor_minimized)
from .squarefree import (MonomialIdeal, SimplicialComplex, alexander_dual,
                         complex_of_ideal, ideal_from_primes, ideal_of_complex,
                         minimal_hitting_sets, minimal_primes)

__version__ = "0.1.0"

__all__ = [
    "BettiTable", "ConsistencyError", "DeficiencyProfile", "FieldSpec",
    "QQ", "GF2",
    "GammaGraph", "LyubeznikTable", "MonomialIdeal", "MonomialMatrix",
    "OracleMismatchError", "Resolution", "SimplicialComplex", "StrandDual",
    "VerifyReport", "alexander_dual", "cm_codim_min", "complex_of_ideal",
    "deficiency_dims", "depth", "gamma_components", "hochster_betti",
    "ideal_from_primes", "ideal_of_complex", "is_cm", "is_generalized_cm",
    "lc_face_dims", "lyubeznik_table", "minimal_hitting_sets",
    "minimal_primes", "minimal_resolution", "reduced_homology", "serre_max",
    "strand_dual", "taylor_minimized", "verify_report",
]
