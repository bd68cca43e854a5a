"""Exact equivariant Schubert calculus on Grassmannians.

The engine works in the fixed-point model: a cohomology class on Gr(k, n)
is its tuple of polynomial restrictions at the coordinate fixed points,
with all arithmetic done exactly over the integers.
"""

from .exactalg import (
    EqschubError,
    FactoredRational,
    IndexOutOfRange,
    LinearForm,
    NotDivisible,
    NotPolynomial,
    ParseError,
    Polynomial,
    UnmappedVariable,
    elementary_symmetric,
    exact_divide,
    ratf_sum,
    ratf_to_polynomial,
    substitute,
    t,
    u,
    x,
    y,
)
from .ytcomb import (
    DoesNotFitBox,
    GrassmannianShape,
    Partition,
    PivotSubset,
    Tableau,
    bruhat_leq,
    cell_weights,
    normal_weights,
    partition_to_subset,
    ssyt_enumerate,
    subset_to_partition,
    tangent_weights,
)
from .dschur import DoubleSchur, TooManyRows, double_schur, ordinary_schur, restrict_schur
from .gkmgrass import (
    BasisExpansion,
    EqClass,
    GKMGraph,
    GkmCheckResult,
    NotInSpan,
    PositivityCertificate,
    ShapeMismatch,
    chern_class_taut,
    class_add,
    class_mul,
    constant_class,
    euler_class,
    expand_in_basis,
    gkm_check,
    gkm_graph,
    integrate,
    kempf_laksov_class,
    opposite_schubert_class,
    positivity_certificate,
    projective_zeta,
    schubert_class,
    structure_constants,
)

__version__ = "0.1.0"

__all__ = [
    "BasisExpansion",
    "DoesNotFitBox",
    "DoubleSchur",
    "EqClass",
    "EqschubError",
    "FactoredRational",
    "GKMGraph",
    "GkmCheckResult",
    "GrassmannianShape",
    "IndexOutOfRange",
    "LinearForm",
    "NotDivisible",
    "NotInSpan",
    "NotPolynomial",
    "ParseError",
    "Partition",
    "PivotSubset",
    "Polynomial",
    "PositivityCertificate",
    "ShapeMismatch",
    "Tableau",
    "TooManyRows",
    "UnmappedVariable",
    "bruhat_leq",
    "cell_weights",
    "chern_class_taut",
    "class_add",
    "class_mul",
    "constant_class",
    "double_schur",
    "elementary_symmetric",
    "euler_class",
    "exact_divide",
    "expand_in_basis",
    "gkm_check",
    "gkm_graph",
    "integrate",
    "kempf_laksov_class",
    "normal_weights",
    "opposite_schubert_class",
    "ordinary_schur",
    "partition_to_subset",
    "positivity_certificate",
    "projective_zeta",
    "ratf_sum",
    "ratf_to_polynomial",
    "restrict_schur",
    "schubert_class",
    "ssyt_enumerate",
    "structure_constants",
    "subset_to_partition",
    "substitute",
    "t",
    "tangent_weights",
    "u",
    "x",
    "y",
]
