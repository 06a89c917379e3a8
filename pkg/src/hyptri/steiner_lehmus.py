"""Numerical verification that equal internal bisectors force an isosceles
triangle.

Three layers of evidence:

* ``proof_trace`` reports the ratio/difference quantities of the underlying
  inequality chain with their expected signs (R1, R2 < 1 and R3 > 1 whenever
  B < C, mirrored for B > C).
* ``check_monotonicity`` tests the strict contrapositive
  sign(tB - tC) = sign(C - B), with a tie band around B = C.
* ``solve_equal_bisector_angle`` realizes the equality case constructively:
  for admissible (A, B) the unique root of g(C) = tB - tC is C = B, found by
  a bracketed bisection/secant hybrid plus a sign-change uniqueness sweep.

The strict sign law was confirmed on a dense parameter grid before being
relied on here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cevian import (
    BisectorData,
    bisector_lengths,
    subtriangle_residuals,
    unconditional_identities,
    _feet_and_lengths,
)
from .core import (
    DEFAULT_TOL,
    InvalidTriangle,
    NoBracket,
    NonConvergence,
    ToleranceConfig,
    Triangle,
    TriangleAngles,
    law_of_sines_residual,
    solve_from_angles,
    _sides_from_angles,
)
from .rng import SplitMix64

__all__ = [
    "SCAN_TOL",
    "TIE_BAND_ANGLE",
    "TIE_BAND_GAP_RTOL",
    "ProofTrace",
    "MonotonicityResult",
    "EqualBisectorSolve",
    "ScanReport",
    "proof_trace",
    "check_monotonicity",
    "solve_equal_bisector_angle",
    "equal_bisector_report",
    "scan_random",
]

# The scan harness samples with a wider angle margin and accepts identity
# residuals up to 1e-9; strict per-value validation keeps the 1e-10 default.
SCAN_TOL = ToleranceConfig(rtol_identity=1e-9, eps_angle=1e-3)

# |C - B| below this exempts strict-sign assertions; inside the band the gap
# must vanish to TIE_BAND_GAP_RTOL * max(tB, tC) instead.
TIE_BAND_ANGLE = 1e-9
TIE_BAND_GAP_RTOL = 1e-7


@dataclass(frozen=True, slots=True)
class ProofTrace:
    """Per-step quantities of the equal-bisector inequality chain.

    R1 = (sin beta/sin gamma)(sinh b/sinh c)   -- the U:V sinh ratio
    R2 = sin beta/sin gamma                    -- the u:v sinh ratio
    R3 = cos beta/cos gamma                    -- the double-angle ratio step
    D  = (sinh a/sinh c)cosh u + cosh U - (sinh a/sinh b)cosh v - cosh V
         (equals sinh b/sinh u - sinh c/sinh v by the sum formula)
    idU, idV are the unconditional foot-ratio identity residuals and gap is
    tB - tC, both carried along for reporting.
    """

    R1: float
    R2: float
    R3: float
    D: float
    idU: float
    idV: float
    gap: float


@dataclass(frozen=True, slots=True)
class MonotonicityResult:
    passed: bool
    gap: float
    angle_gap: float
    tB: float
    tC: float
    in_tie_band: bool


@dataclass(frozen=True, slots=True)
class EqualBisectorSolve:
    c: float
    iterations: int
    sign_changes: int


@dataclass(frozen=True, slots=True)
class ScanReport:
    """Aggregates over a seeded random triangle ensemble."""

    samples: int
    seed: int
    eps_angle: float
    max_identity_residual: float
    max_sine_residual: float
    max_cevian_residual: float
    max_ratio_residual: float
    monotonicity_failures: int
    inequality_failures: int
    tie_band_samples: int
    max_side: float


def proof_trace(
    t: Triangle,
    d: BisectorData | None = None,
    tol: ToleranceConfig | None = None,
) -> ProofTrace:
    """Evaluate every step quantity on the actual triangle (no equal-bisector
    assumption is imposed anywhere)."""
    if d is None:
        d = bisector_lengths(t, tol)
    sin_beta = math.sin(d.beta)
    sin_gamma = math.sin(d.gamma)
    sinh_b = math.sinh(t.b)
    sinh_c = math.sinh(t.c)
    ratios = unconditional_identities(d, t)
    sinh_a = math.sinh(t.a)
    D = (
        (sinh_a / sinh_c) * math.cosh(d.u)
        + math.cosh(d.U)
        - (sinh_a / sinh_b) * math.cosh(d.v)
        - math.cosh(d.V)
    )
    return ProofTrace(
        R1=(sin_beta / sin_gamma) * (sinh_b / sinh_c),
        R2=sin_beta / sin_gamma,
        R3=math.cos(d.beta) / math.cos(d.gamma),
        D=D,
        idU=ratios.idU,
        idV=ratios.idV,
        gap=d.tB - d.tC,
    )


def check_monotonicity(
    t: Triangle,
    tol: ToleranceConfig | None = None,
    d: BisectorData | None = None,
) -> MonotonicityResult:
    """Pass iff sign(tB - tC) = sign(C - B) outside the tie band, and the gap
    is negligible inside it."""
    if d is None:
        d = bisector_lengths(t, tol)
    gap = d.tB - d.tC
    angle_gap = t.C - t.B
    in_band = abs(angle_gap) < TIE_BAND_ANGLE
    if in_band:
        passed = abs(gap) < TIE_BAND_GAP_RTOL * max(d.tB, d.tC)
    else:
        passed = (gap > 0.0) if angle_gap > 0.0 else (gap < 0.0)
    return MonotonicityResult(
        passed=passed, gap=gap, angle_gap=angle_gap, tB=d.tB, tC=d.tC, in_tie_band=in_band
    )


def _gap(A: float, B: float, C: float) -> float:
    """tB - tC for the triangle with the given (valid) angles; raw kernel."""
    a, b, c = _sides_from_angles(A, B, C)
    u, U, v, V, tB, tC = _feet_and_lengths(a, b, c, A)
    return tB - tC


def _bracketed_hybrid(g, lo, hi, width_tol=1e-13, max_iter=200):
    """Bisection refined by secant steps; keeps a sign-change bracket at all
    times and falls back to bisection whenever a secant step fails to halve
    the interval. Returns (root, function evaluations)."""
    flo = g(lo)
    if flo == 0.0:
        return lo, 1
    fhi = g(hi)
    if fhi == 0.0:
        return hi, 2
    if (flo > 0.0) == (fhi > 0.0):
        raise NoBracket(
            f"no sign change on [{lo!r}, {hi!r}]: g(lo) = {flo!r}, g(hi) = {fhi!r}"
        )
    evals = 2
    force_bisect = False
    while hi - lo > width_tol:
        if evals >= max_iter:
            raise NonConvergence(f"no convergence after {max_iter} evaluations")
        width = hi - lo
        x = math.nan
        if not force_bisect and fhi != flo:
            x = (lo * fhi - hi * flo) / (fhi - flo)
        if not (lo < x < hi):
            x = lo + 0.5 * width
        fx = g(x)
        evals += 1
        if fx == 0.0:
            return x, evals
        if (fx > 0.0) == (fhi > 0.0):
            hi, fhi = x, fx
        else:
            lo, flo = x, fx
        force_bisect = (hi - lo) > 0.5 * width
    return 0.5 * (lo + hi), evals


def _count_sign_changes(g, lo, hi, points):
    changes = 0
    prev = 0
    step = (hi - lo) / points
    for i in range(points):
        value = g(lo + (i + 0.5) * step)
        sgn = (value > 0.0) - (value < 0.0)
        if sgn == 0:
            continue
        if prev != 0 and sgn != prev:
            changes += 1
        prev = sgn
    return changes


def equal_bisector_report(
    A: float,
    B: float,
    tol: ToleranceConfig | None = None,
    sweep_points: int = 1000,
) -> EqualBisectorSolve:
    """Root-solve g(C) = tB - tC on the admissible interval and sweep it for
    sign changes; the theorem predicts the unique root C = B."""
    t = tol if tol is not None else DEFAULT_TOL
    if not (math.isfinite(A) and 0.0 < A < math.pi):
        raise InvalidTriangle(f"angle A must lie in (0, pi), got {A!r}")
    if not (math.isfinite(B) and B > t.eps_angle):
        raise InvalidTriangle(f"angle B must exceed the margin {t.eps_angle}, got {B!r}")
    hi = math.fsum((math.pi, -A, -B, -t.eps_angle))
    if math.fsum((math.pi, -A, -2.0 * B)) <= 0.0 or hi <= t.eps_angle:
        raise InvalidTriangle(
            f"A + 2B = {A + 2 * B!r} leaves no room for an isosceles solution below pi"
        )

    def g(C: float) -> float:
        return _gap(A, B, C)

    root, evals = _bracketed_hybrid(g, t.eps_angle, hi)
    changes = _count_sign_changes(g, t.eps_angle, hi, sweep_points)
    return EqualBisectorSolve(c=root, iterations=evals, sign_changes=changes)


def solve_equal_bisector_angle(
    A: float, B: float, tol: ToleranceConfig | None = None
) -> float:
    """The angle C at which both bisectors have equal length (equals B)."""
    return equal_bisector_report(A, B, tol).c


def sample_angles(rng: SplitMix64, eps_angle: float) -> tuple[float, float, float]:
    """One triple, uniform on the open simplex {A,B,C > eps, A+B+C < pi - eps}.

    Three draws per triple: sorted-uniform spacings give a uniform point of
    the solid simplex, then an affine map into the margin region.
    """
    r1, r2, r3 = sorted((rng.random(), rng.random(), rng.random()))
    span = math.pi - 4.0 * eps_angle
    return (
        eps_angle + span * r1,
        eps_angle + span * (r2 - r1),
        eps_angle + span * (r3 - r2),
    )


def scan_random(n: int, seed: int, tol: ToleranceConfig | None = None) -> ScanReport:
    """Solve ``n`` seeded random triangles and aggregate every identity
    residual, strict-sign check, and monotonicity verdict (ordered reduction,
    so reports are reproducible)."""
    if n < 1:
        raise ValueError(f"sample count must be >= 1, got {n!r}")
    t = tol if tol is not None else SCAN_TOL
    rng = SplitMix64(seed)
    max_sine = 0.0
    max_cevian = 0.0
    max_ratio = 0.0
    mono_failures = 0
    ineq_failures = 0
    ties = 0
    max_side = 0.0
    for _ in range(n):
        A, B, C = sample_angles(rng, t.eps_angle)
        tri = solve_from_angles(TriangleAngles(A, B, C, tol=t), tol=t)
        d = bisector_lengths(tri, tol=t)
        trace = proof_trace(tri, d=d)
        mono = check_monotonicity(tri, tol=t, d=d)

        max_sine = max(max_sine, law_of_sines_residual(tri))
        max_cevian = max(max_cevian, subtriangle_residuals(tri, d).max())
        max_ratio = max(max_ratio, trace.idU, trace.idV)
        max_side = max(max_side, tri.a, tri.b, tri.c)

        if mono.in_tie_band:
            ties += 1
        if not mono.passed:
            mono_failures += 1
        if not mono.in_tie_band:
            if B < C:
                ok = trace.R1 < 1.0 and trace.R2 < 1.0 and trace.R3 > 1.0 and tri.b < tri.c
            else:
                ok = trace.R1 > 1.0 and trace.R2 > 1.0 and trace.R3 < 1.0 and tri.b > tri.c
            if not ok:
                ineq_failures += 1
    return ScanReport(
        samples=n,
        seed=seed,
        eps_angle=t.eps_angle,
        max_identity_residual=max(max_sine, max_cevian),
        max_sine_residual=max_sine,
        max_cevian_residual=max_cevian,
        max_ratio_residual=max_ratio,
        monotonicity_failures=mono_failures,
        inequality_failures=ineq_failures,
        tie_band_samples=ties,
        max_side=max_side,
    )
