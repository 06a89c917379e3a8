"""Triangle trigonometry on the hyperbolic plane (curvature -1).

Domain types validate eagerly: a constructed ``Triangle`` always satisfies
the law of sines, the law of cosines at every vertex, and angle/side
ordering. There is no partially-solved triangle value anywhere.

All angles are radians, all lengths are in curvature -1 units.
"""

from __future__ import annotations

import math
from dataclasses import InitVar, dataclass

__all__ = [
    "HypTriError",
    "InvalidTriangle",
    "DomainCap",
    "NumericalFailure",
    "InvalidPoint",
    "InvalidInput",
    "NoBracket",
    "NonConvergence",
    "ToleranceConfig",
    "DEFAULT_TOL",
    "TriangleAngles",
    "TriangleSides",
    "Triangle",
    "defect",
    "solve_from_angles",
    "solve_from_sss",
    "solve_from_sas",
    "solve_from_asa",
    "law_of_sines_residual",
    "law_of_cosines_residual",
    "sine_ratio_spread",
    "band_cmp",
]


class HypTriError(Exception):
    """Base class for every domain or numerical failure in this package."""


class InvalidTriangle(HypTriError):
    """Input does not determine a valid hyperbolic triangle."""


class DomainCap(HypTriError):
    """A length exceeds the supported range (side cap, or tanh saturation)."""


class NumericalFailure(HypTriError):
    """A computed quantity left its mathematically guaranteed range."""


class InvalidPoint(HypTriError):
    """Point not strictly inside the unit disk."""


class InvalidInput(HypTriError):
    """Degenerate input (coincident points and the like)."""


class NoBracket(HypTriError):
    """Root search interval does not bracket a sign change."""


class NonConvergence(HypTriError):
    """Root refinement exceeded its iteration budget."""


@dataclass(frozen=True, slots=True)
class ToleranceConfig:
    """Numerical policy: identity tolerances, tie bands, and domain caps.

    rtol_identity  relative tolerance for identity residuals
    atol_equal     absolute tie band for equality decisions
    eps_angle      required margin of the angle sum below pi
    max_side       side-length cap; larger inputs are rejected outright
    """

    rtol_identity: float = 1e-10
    atol_equal: float = 1e-12
    eps_angle: float = 1e-9
    max_side: float = 50.0

    def __post_init__(self) -> None:
        for name in ("rtol_identity", "atol_equal", "eps_angle", "max_side"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0.0):
                raise ValueError(f"{name} must be finite and positive, got {value!r}")
        if self.rtol_identity > 1e-8:
            raise ValueError("rtol_identity must be <= 1e-8")


DEFAULT_TOL = ToleranceConfig()


def band_cmp(x: float, y: float, atol: float) -> int:
    """Three-way compare with |x - y| <= atol treated as a tie (0)."""
    if abs(x - y) <= atol:
        return 0
    return -1 if x < y else 1


def _rel_diff(x: float, y: float) -> float:
    return abs(x - y) / max(abs(x), abs(y))


@dataclass(frozen=True, slots=True)
class TriangleAngles:
    """Interior angles of a hyperbolic triangle; validates positivity and angle sum."""

    A: float
    B: float
    C: float
    tol: InitVar[ToleranceConfig | None] = None

    def __post_init__(self, tol: ToleranceConfig | None) -> None:
        t = tol if tol is not None else DEFAULT_TOL
        for name, value in (("A", self.A), ("B", self.B), ("C", self.C)):
            if not (math.isfinite(value) and 0.0 < value < math.pi):
                raise InvalidTriangle(f"angle {name} must lie in (0, pi), got {value!r}")
        # fsum keeps the defect exact under relabeling of the angles
        gap = math.pi - math.fsum((self.A, self.B, self.C))
        if gap <= t.eps_angle:
            raise InvalidTriangle(
                f"angle sum must stay below pi by at least {t.eps_angle} (defect {gap!r})"
            )

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.A, self.B, self.C)


@dataclass(frozen=True, slots=True)
class TriangleSides:
    """Side lengths opposite A, B, C; validates positivity, the strict
    triangle inequality, and the side cap."""

    a: float
    b: float
    c: float
    tol: InitVar[ToleranceConfig | None] = None

    def __post_init__(self, tol: ToleranceConfig | None) -> None:
        t = tol if tol is not None else DEFAULT_TOL
        for name, value in (("a", self.a), ("b", self.b), ("c", self.c)):
            if not (math.isfinite(value) and value > 0.0):
                raise InvalidTriangle(f"side {name} must be finite and positive, got {value!r}")
            if value > t.max_side:
                raise DomainCap(f"side {name} = {value!r} exceeds the cap {t.max_side}")
        for name, excess in (
            ("a", math.fsum((self.b, self.c, -self.a))),
            ("b", math.fsum((self.c, self.a, -self.b))),
            ("c", math.fsum((self.a, self.b, -self.c))),
        ):
            if excess <= 0.0:
                raise InvalidTriangle(
                    f"triangle inequality violated: side {name} is not shorter "
                    f"than the other two combined"
                )

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.a, self.b, self.c)


@dataclass(frozen=True, slots=True)
class Triangle:
    """A fully solved triangle: sides and angles, mutually consistent."""

    sides: TriangleSides
    angles: TriangleAngles
    tol: InitVar[ToleranceConfig | None] = None

    def __post_init__(self, tol: ToleranceConfig | None) -> None:
        t = tol if tol is not None else DEFAULT_TOL
        spread = sine_ratio_spread(*self.sides.as_tuple(), *self.angles.as_tuple())
        if spread > t.rtol_identity:
            raise InvalidTriangle(f"law of sines residual {spread!r} exceeds {t.rtol_identity}")
        loc = law_of_cosines_residual(self)
        if loc > t.rtol_identity:
            raise InvalidTriangle(f"law of cosines residual {loc!r} exceeds {t.rtol_identity}")
        pairs = (
            (self.sides.a, self.sides.b, self.angles.A, self.angles.B),
            (self.sides.b, self.sides.c, self.angles.B, self.angles.C),
            (self.sides.c, self.sides.a, self.angles.C, self.angles.A),
        )
        for x, y, X, Y in pairs:
            # ties inside the atol band are fine; only strictly opposed orderings fail
            if band_cmp(x, y, t.atol_equal) * band_cmp(X, Y, t.atol_equal) < 0:
                raise InvalidTriangle(
                    "side/angle ordering violated: larger angle must face larger side"
                )

    @property
    def a(self) -> float:
        return self.sides.a

    @property
    def b(self) -> float:
        return self.sides.b

    @property
    def c(self) -> float:
        return self.sides.c

    @property
    def A(self) -> float:
        return self.angles.A

    @property
    def B(self) -> float:
        return self.angles.B

    @property
    def C(self) -> float:
        return self.angles.C


def defect(angles: TriangleAngles) -> float:
    """Angle defect pi - (A + B + C); strictly positive for valid triangles."""
    d = math.pi - math.fsum((angles.A, angles.B, angles.C))
    if d <= 0.0:
        raise InvalidTriangle(f"angle sum {math.fsum(angles.as_tuple())!r} is not below pi")
    return d


def sine_ratio_spread(a: float, b: float, c: float, A: float, B: float, C: float) -> float:
    """Largest pairwise relative difference of sinh(side)/sin(angle) ratios."""
    ra = math.sinh(a) / math.sin(A)
    rb = math.sinh(b) / math.sin(B)
    rc = math.sinh(c) / math.sin(C)
    hi = max(ra, rb, rc)
    lo = min(ra, rb, rc)
    return (hi - lo) / hi


def law_of_sines_residual(t: Triangle) -> float:
    """Residual of sinh a / sin A = sinh b / sin B = sinh c / sin C; 0 means exact."""
    return sine_ratio_spread(t.a, t.b, t.c, t.A, t.B, t.C)


def _loc_vertex_residual(opp: float, adj1: float, adj2: float, angle: float) -> float:
    # cosh(opp) = cosh(adj1)cosh(adj2) - sinh(adj1)sinh(adj2)cos(angle), evaluated
    # in the cancellation-free split cosh(adj1-adj2) + 2 sinh(adj1)sinh(adj2)sin^2(angle/2)
    s = math.sin(0.5 * angle)
    rhs = math.cosh(adj1 - adj2) + 2.0 * math.sinh(adj1) * math.sinh(adj2) * s * s
    lhs = math.cosh(opp)
    return abs(lhs - rhs) / max(lhs, rhs)


def law_of_cosines_residual(t: Triangle) -> float:
    """Max over the three vertices of the law-of-cosines relative residual."""
    return max(
        _loc_vertex_residual(t.a, t.b, t.c, t.A),
        _loc_vertex_residual(t.b, t.c, t.a, t.B),
        _loc_vertex_residual(t.c, t.a, t.b, t.C),
    )


def _sides_from_angles(A: float, B: float, C: float) -> tuple[float, float, float]:
    """AAA side solve, assuming a validated angle triple.

    The dual law of cosines cosh a = (cos A + cos B cos C)/(sin B sin C) is
    evaluated as cosh a - 1 = 2 sin(d/2) sin(A + d/2)/(sin B sin C) with
    d the defect, which stays positive and cancellation-free even when the
    defect is tiny or the angles are near the simplex corners.
    """
    half_defect = 0.5 * (math.pi - math.fsum((A, B, C)))
    sd = math.sin(half_defect)
    sA = math.sin(A)
    sB = math.sin(B)
    sC = math.sin(C)
    a = 2.0 * math.asinh(math.sqrt(sd * math.sin(A + half_defect) / (sB * sC)))
    b = 2.0 * math.asinh(math.sqrt(sd * math.sin(B + half_defect) / (sC * sA)))
    c = 2.0 * math.asinh(math.sqrt(sd * math.sin(C + half_defect) / (sA * sB)))
    return a, b, c


def _angles_from_sides(a: float, b: float, c: float) -> tuple[float, float, float]:
    """SSS angle solve via the hyperbolic half-angle form.

    sin^2(A/2) = sinh(s-b) sinh(s-c) / (sinh b sinh c) and
    cos^2(A/2) = sinh(s) sinh(s-a) / (sinh b sinh c), s the semiperimeter;
    atan2 of the square roots avoids acos conditioning near 0 and pi.
    """
    s = 0.5 * math.fsum((a, b, c))
    ma = 0.5 * math.fsum((b, c, -a))
    mb = 0.5 * math.fsum((c, a, -b))
    mc = 0.5 * math.fsum((a, b, -c))
    if min(ma, mb, mc) <= 0.0:
        raise InvalidTriangle("triangle inequality violated")
    ss = math.sinh(s)
    sa = math.sinh(ma)
    sb = math.sinh(mb)
    sc = math.sinh(mc)
    A = 2.0 * math.atan2(math.sqrt(sb * sc), math.sqrt(ss * sa))
    B = 2.0 * math.atan2(math.sqrt(sc * sa), math.sqrt(ss * sb))
    C = 2.0 * math.atan2(math.sqrt(sa * sb), math.sqrt(ss * sc))
    return A, B, C


def solve_from_angles(angles: TriangleAngles, tol: ToleranceConfig | None = None) -> Triangle:
    """AAA case: in hyperbolic geometry the three angles determine the triangle."""
    t = tol if tol is not None else DEFAULT_TOL
    a, b, c = _sides_from_angles(angles.A, angles.B, angles.C)
    sides = TriangleSides(a, b, c, tol=t)
    return Triangle(sides, angles, tol=t)


def solve_from_sss(sides: TriangleSides, tol: ToleranceConfig | None = None) -> Triangle:
    """SSS case via the hyperbolic law of cosines."""
    t = tol if tol is not None else DEFAULT_TOL
    A, B, C = _angles_from_sides(sides.a, sides.b, sides.c)
    return Triangle(sides, TriangleAngles(A, B, C, tol=t), tol=t)


def _third_side(b: float, A: float, c: float) -> float:
    # cosh a = cosh b cosh c - sinh b sinh c cos A, evaluated as
    # 2 sinh^2(a/2) = 2 sinh^2((b-c)/2) + 2 sinh b sinh c sin^2(A/2)
    h = math.sinh(0.5 * (b - c))
    s = math.sin(0.5 * A)
    return 2.0 * math.asinh(math.sqrt(h * h + math.sinh(b) * math.sinh(c) * s * s))


def solve_from_sas(b: float, A: float, c: float, tol: ToleranceConfig | None = None) -> Triangle:
    """SAS case: two sides and the included angle."""
    t = tol if tol is not None else DEFAULT_TOL
    for name, value in (("b", b), ("c", c)):
        if not (math.isfinite(value) and value > 0.0):
            raise InvalidTriangle(f"side {name} must be finite and positive, got {value!r}")
        if value > t.max_side:
            raise DomainCap(f"side {name} = {value!r} exceeds the cap {t.max_side}")
    if not (math.isfinite(A) and 0.0 < A < math.pi):
        raise InvalidTriangle(f"included angle must lie in (0, pi), got {A!r}")
    a = _third_side(b, A, c)
    if a > t.max_side:
        raise DomainCap(f"computed side a = {a!r} exceeds the cap {t.max_side}")
    return solve_from_sss(TriangleSides(a, b, c, tol=t), tol=t)


def solve_from_asa(A: float, c: float, B: float, tol: ToleranceConfig | None = None) -> Triangle:
    """ASA case: the dual law of cosines gives the third angle, then AAA."""
    t = tol if tol is not None else DEFAULT_TOL
    for name, value in (("A", A), ("B", B)):
        if not (math.isfinite(value) and 0.0 < value < math.pi):
            raise InvalidTriangle(f"angle {name} must lie in (0, pi), got {value!r}")
    if A + B >= math.pi:
        raise InvalidTriangle(f"angles A + B = {A + B!r} must stay below pi")
    if not (math.isfinite(c) and c > 0.0):
        raise InvalidTriangle(f"included side must be finite and positive, got {c!r}")
    if c > t.max_side:
        raise DomainCap(f"side c = {c!r} exceeds the cap {t.max_side}")
    cos_C = math.sin(A) * math.sin(B) * math.cosh(c) - math.cos(A) * math.cos(B)
    if cos_C >= 1.0:
        raise InvalidTriangle(
            "the rays at the given angles do not meet (computed third angle <= 0)"
        )
    C = math.acos(cos_C)
    return solve_from_angles(TriangleAngles(A, B, C, tol=t), tol=t)
