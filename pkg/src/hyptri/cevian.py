"""Internal angle-bisector geometry.

The bisector from B meets side AC (length b) at a foot splitting it into
u (next to A) and U (next to C) with sinh u / sinh U = sinh c / sinh a;
mirror-symmetrically the bisector from C splits side AB into v and V.
tB and tC are the bisector lengths BB' and CC'.

The foot position and the cevian length are computed in closed form; the
four sub-triangle sine-law identities are kept as residual checks so they
stay independent evidence rather than part of the computation path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    DEFAULT_TOL,
    NumericalFailure,
    ToleranceConfig,
    Triangle,
)

__all__ = [
    "BisectorData",
    "CevianResiduals",
    "RatioResiduals",
    "bisector_foot_from_B",
    "bisector_foot_from_C",
    "bisector_lengths",
    "subtriangle_residuals",
    "unconditional_identities",
]


@dataclass(frozen=True, slots=True)
class BisectorData:
    """Half-angles, foot segments, and lengths of both internal bisectors.

    beta = B/2, gamma = C/2; u + U = b and v + V = c; tB = BB', tC = CC'.
    """

    beta: float
    gamma: float
    u: float
    U: float
    v: float
    V: float
    tB: float
    tC: float


@dataclass(frozen=True, slots=True)
class CevianResiduals:
    """Relative residuals of the four sub-triangle sine laws.

    res_u: sinh tB / sin A = sinh u / sin beta   (triangle ABB')
    res_U: sinh tB / sin C = sinh U / sin beta   (triangle CBB')
    res_v: sinh tC / sin A = sinh v / sin gamma  (triangle ACC')
    res_V: sinh tC / sin B = sinh V / sin gamma  (triangle BCC')
    """

    res_u: float
    res_U: float
    res_v: float
    res_V: float

    def max(self) -> float:
        return max(self.res_u, self.res_U, self.res_v, self.res_V)


@dataclass(frozen=True, slots=True)
class RatioResiduals:
    """Residuals of sinh U/sinh u = sin A/sin C and sinh V/sinh v = sin A/sin B."""

    idU: float
    idV: float

    def max(self) -> float:
        return max(self.idU, self.idV)


def _adjacent_split(side: float, k: float) -> float:
    """Segment of ``side`` next to the shared vertex when the foot divides it
    with sinh(near)/sinh(far) = k.

    Solves tanh x = k sinh(side) / (1 + k cosh(side)) in the logarithmic form
    x = (log1p(k e^side) - log1p(k e^-side)) / 2, which stays accurate when
    tanh saturates for large sides.
    """
    return 0.5 * (math.log1p(k * math.exp(side)) - math.log1p(k * math.exp(-side)))


def _cevian_length(adjacent: float, segment: float, apex: float) -> float:
    """Law of cosines cosh t = cosh(adjacent)cosh(segment) -
    sinh(adjacent)sinh(segment)cos(apex), evaluated as
    sinh^2(t/2) = sinh^2((adjacent-segment)/2) + sinh(adjacent)sinh(segment)sin^2(apex/2)
    so slivers with a tiny cevian keep full precision."""
    h = math.sinh(0.5 * (adjacent - segment))
    s = math.sin(0.5 * apex)
    return 2.0 * math.asinh(math.sqrt(h * h + math.sinh(adjacent) * math.sinh(segment) * s * s))


def _feet_and_lengths(
    a: float, b: float, c: float, A: float
) -> tuple[float, float, float, float, float, float]:
    """Raw kernel: (u, U, v, V, tB, tC) from plain side/angle floats."""
    sinh_a = math.sinh(a)
    sinh_b = math.sinh(b)
    sinh_c = math.sinh(c)
    u = _adjacent_split(b, sinh_c / sinh_a)
    U = _adjacent_split(b, sinh_a / sinh_c)
    v = _adjacent_split(c, sinh_b / sinh_a)
    V = _adjacent_split(c, sinh_a / sinh_b)
    tB = _cevian_length(c, u, A)
    tC = _cevian_length(b, v, A)
    return u, U, v, V, tB, tC


def bisector_foot_from_B(t: Triangle) -> tuple[float, float]:
    """Segments (u, U) of side AC cut by the foot of the bisector from B."""
    sinh_a = math.sinh(t.a)
    sinh_c = math.sinh(t.c)
    return (
        _adjacent_split(t.b, sinh_c / sinh_a),
        _adjacent_split(t.b, sinh_a / sinh_c),
    )


def bisector_foot_from_C(t: Triangle) -> tuple[float, float]:
    """Segments (v, V) of side AB cut by the foot of the bisector from C."""
    sinh_a = math.sinh(t.a)
    sinh_b = math.sinh(t.b)
    return (
        _adjacent_split(t.c, sinh_b / sinh_a),
        _adjacent_split(t.c, sinh_a / sinh_b),
    )


def subtriangle_residuals(t: Triangle, d: BisectorData) -> CevianResiduals:
    """Relative residuals of the four sine laws in the bisector sub-triangles."""

    def rel(x: float, y: float) -> float:
        return abs(x - y) / max(abs(x), abs(y))

    sin_A = math.sin(t.A)
    sin_beta = math.sin(d.beta)
    sin_gamma = math.sin(d.gamma)
    sinh_tB = math.sinh(d.tB)
    sinh_tC = math.sinh(d.tC)
    return CevianResiduals(
        res_u=rel(sinh_tB / sin_A, math.sinh(d.u) / sin_beta),
        res_U=rel(sinh_tB / math.sin(t.C), math.sinh(d.U) / sin_beta),
        res_v=rel(sinh_tC / sin_A, math.sinh(d.v) / sin_gamma),
        res_V=rel(sinh_tC / math.sin(t.B), math.sinh(d.V) / sin_gamma),
    )


def unconditional_identities(d: BisectorData, t: Triangle) -> RatioResiduals:
    """Residuals of the two foot-ratio identities that hold for every triangle:
    sinh U / sinh u = sin A / sin C and sinh V / sinh v = sin A / sin B."""

    def rel(x: float, y: float) -> float:
        return abs(x - y) / max(abs(x), abs(y))

    sin_A = math.sin(t.A)
    return RatioResiduals(
        idU=rel(math.sinh(d.U) / math.sinh(d.u), sin_A / math.sin(t.C)),
        idV=rel(math.sinh(d.V) / math.sinh(d.v), sin_A / math.sin(t.B)),
    )


def bisector_lengths(t: Triangle, tol: ToleranceConfig | None = None) -> BisectorData:
    """Both bisectors of ``t``: feet in closed form, lengths by the law of
    cosines in the A-side sub-triangles; validates every identity before
    returning."""
    cfg = tol if tol is not None else DEFAULT_TOL
    u, U, v, V, tB, tC = _feet_and_lengths(t.a, t.b, t.c, t.A)
    d = BisectorData(beta=0.5 * t.B, gamma=0.5 * t.C, u=u, U=U, v=v, V=V, tB=tB, tC=tC)
    for name, value in (
        ("u", u), ("U", U), ("v", v), ("V", V), ("tB", tB), ("tC", tC),
    ):
        if not (math.isfinite(value) and value > 0.0):
            raise NumericalFailure(f"bisector quantity {name} = {value!r} must be positive")
    if abs(u + U - t.b) > cfg.rtol_identity * t.b:
        raise NumericalFailure(f"foot segments do not sum to the side: u + U - b = {u + U - t.b!r}")
    if abs(v + V - t.c) > cfg.rtol_identity * t.c:
        raise NumericalFailure(f"foot segments do not sum to the side: v + V - c = {v + V - t.c!r}")
    worst = subtriangle_residuals(t, d).max()
    if worst > cfg.rtol_identity:
        raise NumericalFailure(
            f"sub-triangle sine-law residual {worst!r} exceeds {cfg.rtol_identity}"
        )
    return d
