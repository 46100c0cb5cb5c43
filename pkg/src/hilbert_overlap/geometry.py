"""Interval geometry: the four breakpoints and the quartic they define.

Everything downstream (quadrature constants, WKB phases, Bessel patch
variables) is expressed through the quartic with roots at the four
breakpoints, so it is evaluated in factored form to stay accurate near
the roots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class ConfigError(ValueError):
    """Raised when the four breakpoints do not form a valid configuration."""


@dataclass(frozen=True)
class EndpointConfig:
    """The four interval breakpoints a1 < a2 < a3 < a4.

    The observation interval is [a1, a3], the support interval is
    [a2, a4]; the two overlap on [a2, a3]. Immutable and safe to share
    between threads.
    """

    a1: float
    a2: float
    a3: float
    a4: float

    def __post_init__(self):
        vals = (self.a1, self.a2, self.a3, self.a4)
        if not all(math.isfinite(v) for v in vals):
            raise ConfigError(f"endpoints must be finite, got {vals}")
        if not (self.a1 < self.a2 < self.a3 < self.a4):
            raise ConfigError(f"endpoints must be strictly increasing, got {vals}")

    @property
    def endpoints(self) -> tuple[float, float, float, float]:
        return (self.a1, self.a2, self.a3, self.a4)

    @property
    def center(self) -> float:
        """Arithmetic mean of the four breakpoints."""
        return 0.25 * (self.a1 + self.a2 + self.a3 + self.a4)

    def endpoint(self, index: int) -> float:
        """Breakpoint by 1-based index (a1 is index 1)."""
        if index not in (1, 2, 3, 4):
            raise ConfigError(f"endpoint index must be 1..4, got {index}")
        return self.endpoints[index - 1]

    def poly(self, x):
        """Quartic with roots at the breakpoints, evaluated in factored form.

        Negative on (a1, a2) and (a3, a4), positive on (a2, a3). Accepts
        a scalar or a numpy array.
        """
        return (x - self.a1) * (x - self.a2) * (x - self.a3) * (x - self.a4)

    def poly_prime(self, x):
        """Derivative of :meth:`poly` via the product rule.

        At a root the value reduces to the product of differences to the
        other three roots, which is the exact quantity the local Bessel
        variables need.
        """
        e = self.endpoints
        total = 0.0
        for skip in range(4):
            term = 1.0
            for j in range(4):
                if j != skip:
                    term = term * (x - e[j])
            total = total + term
        return total

    def scaled(self, c: float) -> "EndpointConfig":
        """All breakpoints multiplied by c > 0."""
        if c <= 0:
            raise ConfigError("scale factor must be positive")
        return EndpointConfig(c * self.a1, c * self.a2, c * self.a3, c * self.a4)

    def translated(self, s: float) -> "EndpointConfig":
        """All breakpoints shifted by s."""
        return EndpointConfig(self.a1 + s, self.a2 + s, self.a3 + s, self.a4 + s)

    def reflected(self) -> "EndpointConfig":
        """Mirror image under x -> (a1 + a4) - x.

        Swaps the roles of the two oscillatory intervals while keeping the
        quartic pointwise invariant; used to build the support-side
        singular functions from the observation-side construction.
        """
        s = self.a1 + self.a4
        return EndpointConfig(s - self.a4, s - self.a3, s - self.a2, s - self.a1)
