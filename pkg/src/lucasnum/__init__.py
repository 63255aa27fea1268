"""Exact Lucas analogues of classical combinatorial triangles."""
from .polyring import (
    ONE, S, T, ZERO, AuxPoly, NotDivisible, Poly, RationalFunction,
    canonical_string, div_exact, eval_int, parse_laurent, parse_poly, phi, rf_eq,
)
from .sequences import (
    InternalInconsistency, SequenceId, TriangleTable, UnknownSequence,
    a_n1_poly, catalan, eulerian, eulerian_dblprime, eulerian_first_column, eulerian_prime,
    lucas, lucasnomial, lucasnomial_closed, lucasnomial_rec, lucastorial, motzkin_rec,
    motzkin_sum, narayana_closed, narayana_gk, narayana_rec, stirling2, triangle,
)
from .verify import VerificationReport, golden_tables, run_suite

__version__ = "0.1.0"
