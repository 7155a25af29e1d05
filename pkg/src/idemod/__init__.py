"""Exact algebra of complete idempotent semirings and their semimodules:
residuation, nonlinear projection, separation, a Hilbert-type metric,
conjugation duality, and discrete Fenchel transforms."""

from .errors import (
    DomainError,
    IdemodError,
    MismatchError,
    SchemaError,
    TheoremViolation,
)
from .semiring import (
    BOOL,
    NMAX,
    RMAX,
    Phi,
    Scalar,
    SemiringId,
    add,
    bot,
    default_phi,
    fin,
    leq,
    lres,
    make_phi,
    mat_of,
    matrix_semiring,
    meet,
    mul,
    phi_nn,
    rres,
    scal,
    scalar_from_text,
    scalar_to_text,
    top,
    unit,
)
from .freemod import (
    CoVector,
    GeneratingFamily,
    Matrix,
    Vector,
    act,
    bot_vector,
    column_family,
    covec_mat,
    covector,
    family,
    mat_lres,
    mat_vec,
    matrix,
    top_vector,
    vec_leq,
    vec_lres,
    vec_rres,
    vector,
    vjoin,
    vmeet,
)
from .project import ProjectionResult, inf_dominating, is_member, project, project_dual
from .separate import (
    ConvexSeparation,
    HalfSpace,
    SeparationCertificate,
    convex_projection,
    halfspace,
    halfspace_contains,
    separate_dual,
    separate_from_convex,
    separate_from_module,
    separate_points,
)
from .metric import hilbert_distance, projection_maximizes_distance
from .dual import (
    CANONICAL,
    MATRIX,
    OPPOSITE,
    DualPairConfig,
    LatticeReport,
    LinearForm,
    bracket_eval,
    conj_left,
    conj_right,
    eval_form,
    extend_form,
    is_closed,
    is_reflexive,
    opposite_bracket,
    represent_form,
    rowcol_report,
)
from .fenchel import (
    GridFunction,
    SlopeSet,
    Transform,
    biconjugate_is_fixed,
    fenchel_transform,
    grid_function,
    lsc_convex_hull,
    slope_bracket,
    slope_set,
)

__version__ = "0.1.0"
