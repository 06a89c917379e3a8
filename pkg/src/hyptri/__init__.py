"""Triangle trigonometry on the hyperbolic plane, internal-bisector
geometry, and numerical verification that equal bisectors force an
isosceles triangle."""

from .core import (
    DEFAULT_TOL,
    DomainCap,
    HypTriError,
    InvalidInput,
    InvalidPoint,
    InvalidTriangle,
    NoBracket,
    NonConvergence,
    NumericalFailure,
    ToleranceConfig,
    Triangle,
    TriangleAngles,
    TriangleSides,
    defect,
    law_of_cosines_residual,
    law_of_sines_residual,
    solve_from_angles,
    solve_from_asa,
    solve_from_sas,
    solve_from_sss,
)
from .cevian import (
    BisectorData,
    CevianResiduals,
    RatioResiduals,
    bisector_foot_from_B,
    bisector_foot_from_C,
    bisector_lengths,
    subtriangle_residuals,
    unconditional_identities,
)
from .diskmodel import (
    DiskPoint,
    GeodesicArc,
    disk_angle,
    disk_distance,
    embed_triangle,
    geodesic_arc,
    point_toward,
    render_svg,
    svg_document,
)
from .rng import SplitMix64
from .steiner_lehmus import (
    SCAN_TOL,
    EqualBisectorSolve,
    MonotonicityResult,
    ProofTrace,
    ScanReport,
    check_monotonicity,
    equal_bisector_report,
    proof_trace,
    sample_angles,
    scan_random,
    solve_equal_bisector_angle,
)

__version__ = "0.1.0"
