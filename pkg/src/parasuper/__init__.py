"""Exact Z2 x Z2-graded Lie superalgebras gl(m1,m2|n1,n2), osp(2m1+1,2m2|2n,0)
and their parastatistics generators."""

from .axioms import Check, verify_bracket_branch, verify_grading, verify_jacobi, verify_symmetry
from .errors import EmptyAlgebraError, GradingMismatchError, ParasuperError, PreconditionError
from .gl import GlAlgebra, build_gl, check_cartan, check_gl_closed_form
from .grading import G00, G01, G10, G11, Grading, grading_add, grading_pairing
from .linalg import ExactSpan, rank
from .matrix import (
    GradedMatrix,
    IndexGradingScheme,
    anticommutator,
    commutator,
    graded_bracket,
    homogeneous_components,
)
from .osp import CanonicalBasis, OspAlgebra, SignedIndexScheme, build_osp, check_osp_closed_form, check_structure
from .parastat import (
    FAMILIES,
    ParaGenerator,
    check_short_root_triples,
    check_substitution,
    closure_dimension,
    make_generators,
    verify_degenerate,
    verify_family,
)
from .report import VerificationReport
from .scalar import SQRT2, QSqrt2

FieldScalar = QSqrt2

__version__ = "0.1.0"
