"""Trivalent sl3 webs: bracket evaluation, face-shape classification,
exhaustive enumeration, witness certificates, and closed pre-foam values.
"""

from .errors import (BoundaryMismatch, BudgetExceeded, IdenticalWebs,
                     InvalidWeb, MalformedFoam, NotClosed, NotNonElliptic,
                     NotSuperficial, ParseError, WebError, WrongFaceKind)
from .laurent import LaurentPoly, parse_poly, quantum_int
from .webs import SignSequence, Web, disjoint_union, flip_upside_down, glue, mirror
from .webio import (load_web, load_webs, parse_web, parse_webs, save_web,
                    web_to_text)
from .classify import (blocks, bounded_face_profile, classify_web,
                       is_1_elliptic, is_non_elliptic, is_semi_non_elliptic,
                       is_semi_superficial, is_superficial, nested_faces)
from .skein import (SkeinElement, find_reducible, graded_hom_dim,
                    kuperberg_bracket, reduce_circle, reduce_digon,
                    reduce_to_nonelliptic, resolve_square)
from .enumeration import (admissible_sequences, enumerate_non_elliptic,
                          enumerate_superficial_non_elliptic, invariant_dim)
from .certify import (Certificate, certify_indecomposable,
                      certify_not_isomorphic, is_nice, verify_key_lemma)
from .foams import (Facet, FrobElement, PreFoam, degree as foam_degree,
                    evaluate as foam_evaluate, foam_to_text, load_foam,
                    parse_foam, save_foam, theta_value)

__version__ = "0.1.0"
