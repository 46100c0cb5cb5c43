"""Quadrature for the inverse-square-root phase integrals and L2 norms.

The three interval constants and all WKB phases are integrals of
1/sqrt(+-Q) over an interval whose endpoints are simple roots of the
quartic Q. The substitution x = mid + half*sin(theta) turns the two
singular factors (x - lo)(hi - x) into half^2 cos^2(theta), which cancels
the jacobian exactly; what is left is a smooth integrand 1/sqrt(q(x))
with q the product over the two non-adjacent roots. Adaptive
Gauss-Kronrod then converges rapidly and uniformly in the endpoint
distance, which is exactly what the exponentially sensitive downstream
formulas need.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .geometry import EndpointConfig


class NonPositiveRadicand(ValueError):
    """The chosen sign makes the radicand non-positive on the interval."""


class ToleranceNotMet(RuntimeError):
    """Adaptive refinement exhausted its depth budget."""


class GridMismatch(ValueError):
    """Sample values and grid do not line up."""


DEFAULT_TOL = 1e-10

# 15-point Kronrod extension of 7-point Gauss (QUADPACK nodes/weights).
_XGK = (
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0,
)
_WGK = (
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728,
)
_WG = (
    0.129484966168870, 0.279705391489277,
    0.381830050505119, 0.417959183673469,
)


def _gk15(f, lo, hi):
    """One Gauss-Kronrod 15(7) panel; returns (integral, error estimate)."""
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    fc = f(mid)
    resk = _WGK[7] * fc
    resg = _WG[3] * fc
    for j in range(7):
        fa = f(mid - half * _XGK[j])
        fb = f(mid + half * _XGK[j])
        resk += _WGK[j] * (fa + fb)
        if j % 2 == 1:
            resg += _WG[j // 2] * (fa + fb)
    return resk * half, abs(resk - resg) * abs(half)


def adaptive_quad(f, lo, hi, tol, max_depth=60):
    """Adaptive bisection on GK15 panels to absolute accuracy tol.

    Deterministic: depth-first, always splitting at the midpoint.
    Raises ToleranceNotMet when a panel at max_depth still fails its
    share of the tolerance budget.
    """
    total = 0.0
    stack = [(lo, hi, tol, 0)]
    while stack:
        a, b, t, depth = stack.pop()
        val, err = _gk15(f, a, b)
        if err <= max(t, 64.0 * 2.2e-16 * abs(val)):
            total += val
        elif depth >= max_depth:
            raise ToleranceNotMet(
                f"panel [{a}, {b}] error {err:.3e} exceeds budget {t:.3e} at depth {depth}"
            )
        else:
            m = 0.5 * (a + b)
            stack.append((m, b, 0.5 * t, depth + 1))
            stack.append((a, m, 0.5 * t, depth + 1))
    return total


@dataclass(frozen=True)
class SpectralConstants:
    """The three inverse-square-root interval integrals.

    k_minus and k_minus_right are the integrals over the two outer
    (oscillatory) intervals and agree identically; k_plus is the integral
    over the overlap. Their ratio controls both exponential tails of the
    spectrum.
    """

    k_minus: float
    k_plus: float
    k_minus_right: float
    tol: float


_ADJACENT = {(1, 2), (2, 3), (3, 4)}


def _theta_integrand(cfg: EndpointConfig, lo_index: int, hi_index: int, sign: int):
    """Integrand in theta after the sine substitution, singular factors cancelled."""
    e = cfg.endpoints
    lo, hi = e[lo_index - 1], e[hi_index - 1]
    others = [e[j] for j in range(4) if j + 1 not in (lo_index, hi_index)]
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)

    def f(theta):
        x = mid + half * math.sin(theta)
        # sign*Q(x) = (x-lo)(hi-x) * q(x) with q = -sign * prod over other roots
        q = -sign * (x - others[0]) * (x - others[1])
        if q <= 0.0:
            raise NonPositiveRadicand(
                f"radicand non-positive at x={x} for interval ({lo}, {hi}), sign={sign:+d}"
            )
        return 1.0 / math.sqrt(q)

    return f, mid, half


def integrate_inv_sqrt(cfg: EndpointConfig, lo_index: int, hi_index: int,
                       sign: int, tol: float = DEFAULT_TOL) -> float:
    """Integral of 1/sqrt(sign * quartic) over an adjacent endpoint pair.

    Parameters
    ----------
    lo_index, hi_index : int
        1-based endpoint indices; must be adjacent ((1,2), (2,3) or (3,4)).
    sign : int
        +1 where the quartic is positive (overlap interval), -1 where it
        is negative (outer intervals).
    tol : float
        Absolute accuracy of the result.
    """
    if (lo_index, hi_index) not in _ADJACENT:
        raise ValueError(f"({lo_index}, {hi_index}) is not an adjacent endpoint pair")
    f, _, _ = _theta_integrand(cfg, lo_index, hi_index, sign)
    return adaptive_quad(f, -0.5 * math.pi, 0.5 * math.pi, tol)


def compute_constants(cfg: EndpointConfig, tol: float = DEFAULT_TOL) -> SpectralConstants:
    """All three interval constants at absolute accuracy tol."""
    return SpectralConstants(
        k_minus=integrate_inv_sqrt(cfg, 1, 2, -1, tol),
        k_plus=integrate_inv_sqrt(cfg, 2, 3, +1, tol),
        k_minus_right=integrate_inv_sqrt(cfg, 3, 4, -1, tol),
        tol=tol,
    )


def phase_integral(cfg: EndpointConfig, a_ref_index: int, x: float,
                   sign: int, tol: float = DEFAULT_TOL) -> float:
    """Cumulative integral of 1/sqrt(sign * quartic) from endpoint a_ref to x.

    x must lie inside the adjacent interval on the side of a_ref that it
    selects; the singularity-removing substitution is anchored at both
    ends of that interval, so accuracy is uniform as x approaches either
    endpoint. Signed: negative when x < a_ref.
    """
    e = cfg.endpoints
    if a_ref_index not in (1, 2, 3, 4):
        raise ValueError(f"endpoint index must be 1..4, got {a_ref_index}")
    a_ref = e[a_ref_index - 1]
    if x == a_ref:
        return 0.0
    if x > a_ref:
        lo_index, hi_index = a_ref_index, a_ref_index + 1
    else:
        lo_index, hi_index = a_ref_index - 1, a_ref_index
    if (lo_index, hi_index) not in _ADJACENT:
        raise ValueError(f"x={x} is outside the intervals adjacent to endpoint {a_ref_index}")
    lo, hi = e[lo_index - 1], e[hi_index - 1]
    if not (lo <= x <= hi):
        raise ValueError(f"x={x} is not inside interval ({lo}, {hi})")
    f, mid, half = _theta_integrand(cfg, lo_index, hi_index, sign)
    theta_x = math.asin(min(1.0, max(-1.0, (x - mid) / half)))
    theta_ref = -0.5 * math.pi if a_ref_index == lo_index else 0.5 * math.pi
    if theta_ref < theta_x:
        return adaptive_quad(f, theta_ref, theta_x, tol)
    return -adaptive_quad(f, theta_x, theta_ref, tol)


@lru_cache(maxsize=200_000)
def _cached_phase(endpoints: tuple, a_ref_index: int, x: float, sign: int, tol: float) -> float:
    return phase_integral(EndpointConfig(*endpoints), a_ref_index, x, sign, tol)


def cached_phase_integral(cfg: EndpointConfig, a_ref_index: int, x: float,
                          sign: int, tol: float = DEFAULT_TOL) -> float:
    """Memoized phase_integral; the builders hit the same abscissae repeatedly."""
    return _cached_phase(cfg.endpoints, a_ref_index, float(x), sign, tol)


def l2_norm(values, grid) -> float:
    """Trapezoid-rule L2 norm sqrt(integral of f^2) of samples on a grid."""
    import numpy as np

    values = np.asarray(values, dtype=float)
    grid = np.asarray(grid, dtype=float)
    if values.shape != grid.shape or values.ndim != 1:
        raise GridMismatch(f"shape mismatch: values {values.shape}, grid {grid.shape}")
    if grid.size < 2 or np.any(np.diff(grid) <= 0):
        raise GridMismatch("grid must be strictly increasing with at least 2 points")
    return float(math.sqrt(np.trapezoid(values * values, grid)))
