"""kirbycheck: a verification engine for 4-manifold handle calculus.

Handle decompositions are recorded as passage words and linking tables;
on top of that sit exact integer homology (Smith normal form), group
presentations with certified Tietze simplification, a Kirby-move engine
with replayable audited scripts, concordance movies with complement /
doubling / product certification, Legendrian front invariants with the
combinatorial Stein criterion, plain-text formats, and a transcribed
figure corpus replayed end to end by ``kirbycheck corpus run``.
"""

from .words import Word
from .linalg import (
    AbelianGroup,
    IntegerMatrix,
    Z,
    ZERO_GROUP,
    cokernel,
    generates_cokernel,
    kernel_rank,
    smith_normal_form,
)
from .structures import (
    HandleStructure,
    LinkingTable,
    MarkedCurve,
    OneHandle,
    TwoHandle,
    ValidationReport,
    attach_two_handle_along_curve,
    boundary_surgery_form,
    curve_class,
    geometric_passage_count,
    passage_matrix,
    validate,
)
from .homology import boundary_h1, curve_generates_h1, euler_characteristic, homology
from .presentation import (
    Presentation,
    abelianization,
    certify_trivial,
    free_reduce,
    pi1_presentation,
    replay_trace,
    tietze_simplify,
)
from .moves import (
    AuditReport,
    Cancel12,
    Cancel23,
    DotToZero,
    MoveError,
    MoveScript,
    ReduceWord,
    RenameCurve,
    Slide,
    ZeroToDot,
    apply_move,
    apply_slide,
    cancel_pair_12,
    cancel_pair_23,
    canonical_form,
    dot_to_zero,
    replay_script,
    same_encoding,
    zero_to_dot,
)
from .movie import (
    Band,
    Birth,
    Death,
    Isotopy,
    Movie,
    ProductCertificate,
    check_complement_invariants,
    complement_structure,
    double,
    glue_along_curve,
    homology_cobordism_check,
    validate_movie,
    verify_product,
)
from .front import (
    Crossing,
    FrontDiagram,
    HandlePass,
    LeftCusp,
    RightCusp,
    SteinReport,
    apply_front_move,
    front_passage_counts,
    rotation_number,
    stein_check,
    thurston_bennequin,
    validate_front,
    writhe,
)

__version__ = "0.1.0"
