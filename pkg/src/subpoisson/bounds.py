"""Bennett and Bernstein tail bounds for upper sub-Poisson variables.

All bounds are evaluated in log space and exponentiated once. A zero
proxy means the variable is degenerate, for which P(X - EX >= t) = 0 for
every t > 0; the formulas are not evaluated there and a
:class:`DegenerateProxyError` is raised instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .special_functions import DomainError, h, phi

KINDS = ("bennett", "bernstein1", "bernstein2")


class DegenerateProxyError(DomainError):
    """sigma2 = 0: the variable is a.s. constant, so the tail is exactly 0 for t > 0."""


def _check(sigma2: float, t: float) -> None:
    if not (math.isfinite(sigma2) and math.isfinite(t)):
        raise DomainError("sigma2 and t must be finite")
    if sigma2 == 0.0:
        raise DegenerateProxyError(
            "sigma2 = 0 means X = EX almost surely: P(X - EX >= t) = 0 for t > 0 and 1 at t = 0"
        )
    if sigma2 < 0.0:
        raise DomainError(f"sigma2 must be > 0, got {sigma2}")
    if t < 0.0:
        raise DomainError(f"t must be >= 0, got {t}")


def log_bennett(sigma2: float, t: float) -> float:
    _check(sigma2, t)
    # -sigma2 + (sigma2 + t)(1 + log sigma2 - log(sigma2 + t)) == -sigma2 h(t / sigma2)
    return -sigma2 * h(t / sigma2)


def log_bernstein1(sigma2: float, t: float) -> float:
    _check(sigma2, t)
    return -(0.5 * t * t) / (sigma2 + t / 3.0)


def log_bernstein2(sigma2: float, t: float) -> float:
    _check(sigma2, t)
    return -min(t * t / (4.0 * sigma2), 0.75 * t)


def bennett(sigma2: float, t: float) -> float:
    """exp(-sigma2) (e sigma2 / (sigma2 + t))^(sigma2 + t)."""
    return math.exp(log_bennett(sigma2, t))


def bernstein1(sigma2: float, t: float) -> float:
    """exp(-(t^2 / 2) / (sigma2 + t / 3))."""
    return math.exp(log_bernstein1(sigma2, t))


def bernstein2(sigma2: float, t: float) -> float:
    """exp(-min(t^2 / (4 sigma2), 3t / 4))."""
    return math.exp(log_bernstein2(sigma2, t))


_BOUNDS = {"bennett": bennett, "bernstein1": bernstein1, "bernstein2": bernstein2}


def bound(kind: str, sigma2: float, t: float) -> float:
    if kind not in _BOUNDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    return _BOUNDS[kind](sigma2, t)


def chernoff_lambda_star(sigma2: float, t: float) -> float:
    """Minimiser log(1 + t / sigma2) of -lam t + sigma2 phi(lam)."""
    _check(sigma2, t)
    return math.log1p(t / sigma2)


def chernoff_exponent(sigma2: float, t: float, lam: float) -> float:
    """-lam t + sigma2 phi(lam): log of the exponential Markov bound at lam."""
    return -lam * t + sigma2 * phi(lam)


def two_sided_bound(kind: str, sigma2_plus: float, sigma2_minus: float, t: float) -> float:
    """Union bound min(1, P(X - EX >= t) bound + P(EX - X >= t) bound)."""
    return min(1.0, bound(kind, sigma2_plus, t) + bound(kind, sigma2_minus, t))


def sum_bound(kind: str, proxies, t: float) -> float:
    """Bound for an independent sum: the proxies add up."""
    proxies = list(proxies)
    if not proxies:
        raise ValueError("sum_bound needs at least one proxy")
    return bound(kind, math.fsum(proxies), t)


@dataclass
class BoundCurve:
    kind: str
    side: str
    sigma2: float
    points: list = field(default_factory=list)
    sigma2_minus: float | None = None

    def to_dict(self) -> dict:
        out = {
            "kind": self.kind,
            "side": self.side,
            "sigma2": self.sigma2,
            "points": [[t, v] for t, v in self.points],
        }
        if self.sigma2_minus is not None:
            out["sigma2_minus"] = self.sigma2_minus
        return out


def bound_curve(kind: str, sigma2: float, ts, side: str = "upper",
                sigma2_minus: float | None = None) -> BoundCurve:
    """Evaluate one bound over a grid of t.

    ``side="lower"`` uses ``sigma2`` as the lower proxy; ``two_sided`` needs
    ``sigma2_minus`` (defaults to ``sigma2``).
    """
    if side not in ("upper", "lower", "two_sided"):
        raise ValueError(f"unknown side {side!r}")
    ts = [float(t) for t in np.atleast_1d(ts)]
    if side == "two_sided":
        sm = sigma2 if sigma2_minus is None else sigma2_minus
        pts = [(t, two_sided_bound(kind, sigma2, sm, t)) for t in ts]
        return BoundCurve(kind, side, sigma2, pts, sm)
    return BoundCurve(kind, side, sigma2, [(t, bound(kind, sigma2, t)) for t in ts])
