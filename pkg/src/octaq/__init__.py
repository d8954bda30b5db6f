"""Exact arithmetic for octahedral quartic fields over Q: principality,
central embedding problems in GL2(F9), and the correspondence with
degree-2 Q-curves."""

from .embedding import (DiscDecomposition, EmbeddingReport, EndoReport,
                        classify, decompose_discriminant, det_field,
                        endo_algebras, obstruction, splitting_obstruction)
from .errors import OctaqError
from .gl2f9 import classify_hjk, s4_conjugacy_scan, verify_subgroup_classification
from .hilbert import (INF, BrauerClass, brauer_class, class_product,
                      hilbert_symbol, witt_invariant_diagonal)
from .polynomials import (QQ, FunctionField, QuadElement, QuadField, RatFunc,
                          UniPoly, count_real_roots, discriminant, poly_gcd,
                          qpoly, resultant)
from .qcurve import (QCurveRecord, SymbolicContext, curve_from_t, family,
                     symbolic_suite, t_from_principal, tschirnhaus_to_torsion,
                     weil_restriction_factor)
from .quartic import (FieldCertificate, PrincipalQuartic, ReducedQuartic,
                      TraceFormData, depress, galois_is_S4, is_principal,
                      principalize, resolvent_cubic, same_field, trace_form,
                      tschirnhaus, witt_formula)
from .rationals import (IntegerFactorization, factorize, is_square,
                        rational_reconstruct, squarefree_part)
from .roots import ComplexApprox, complex_roots
from .tables import TableRow, load_bundled_corpus, parse_table, verify_table_row

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
