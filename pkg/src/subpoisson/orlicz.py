"""Orlicz psi_p norms and their relation to sub-Poisson proxies.

``psi_norm`` solves E exp((|X - EX| / K)^p) = 2 for K by bisection on
log K. Expectations are exact sums over the (truncated) support for
discrete members and adaptive quadrature for the Gaussian and exponential.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .distributions import Distribution, Exponential, Gaussian, Scaled
from .special_functions import DomainError, ExtendedReal, lambert_w0

# Sharp equivalence constants between psi_2 and the sub-Gaussian proxy for
# centered X: SG_LOWER * ||X||_psi2 <= sigma_SG(X) <= SG_UPPER * ||X||_psi2.
SG_LOWER = math.sqrt(3.0 / 8.0)
SG_UPPER = math.sqrt(math.log(2.0))

_QUAD_ABS_TOL = 1e-12
_MAX_DOUBLINGS = 60


@dataclass(frozen=True)
class OrliczNorm:
    p: float
    value: ExtendedReal
    method: str

    def to_dict(self) -> dict:
        return {"p": self.p, "value": self.value, "method": self.method}


def _unwrap_scale(d: Distribution) -> tuple[Distribution, float]:
    scale = 1.0
    while isinstance(d, Scaled):
        scale *= abs(d.factor)
        d = d.base
    return d, scale


def _log_objective_fn(d: Distribution, p: float):
    """Return K -> log E exp((|X - EX| / K)^p)."""
    if isinstance(d, Gaussian):
        s = math.sqrt(d.sigma2)

        def f(K):
            if p == 2.0:
                # E exp(s^2 Z^2 / K^2) = (1 - 2 s^2 / K^2)^(-1/2)
                c = 2.0 * d.sigma2 / (K * K)
                return math.inf if c >= 1.0 else -0.5 * math.log1p(-c)
            # |X - EX| = s |Z|; integrate the half-normal density
            def integrand(z):
                return math.exp((s * z / K) ** p - 0.5 * z * z) * math.sqrt(2.0 / math.pi)
            val, _ = integrate.quad(integrand, 0.0, math.inf, epsabs=_QUAD_ABS_TOL, limit=200)
            return math.log(val) if val > 0.0 else math.inf
        return f
    if isinstance(d, Exponential):
        r, m = d.rate, 1.0 / d.rate

        def f(K):
            if p == 1.0 and 1.0 / K >= r:
                return math.inf
            def integrand(x):
                return r * math.exp((abs(x - m) / K) ** p - r * x)
            left, _ = integrate.quad(integrand, 0.0, m, epsabs=_QUAD_ABS_TOL, limit=200)
            right, _ = integrate.quad(integrand, m, math.inf, epsabs=_QUAD_ABS_TOL, limit=200)
            return math.log(left + right) if left + right > 0.0 else math.inf
        return f
    values, probs = d.support()
    keep = probs > 0.0
    values, probs = values[keep], probs[keep]
    dev = np.abs(values - d.mean)
    logp = np.log(probs)

    def f(K):
        a = logp + (dev / K) ** p
        top = float(np.max(a))
        if not math.isfinite(top):
            return top
        return top + math.log(float(np.sum(np.exp(a - top))))
    return f


def psi_norm(d: Distribution, p: float) -> OrliczNorm:
    """inf{K > 0 : E exp((|X - EX| / K)^p) <= 2}, +inf if no K qualifies."""
    if not p >= 1.0:
        raise DomainError(f"Orlicz exponent must be >= 1, got {p}")
    p = float(p)
    base, scale = _unwrap_scale(d)
    if d.variance == 0.0 or scale == 0.0:
        return OrliczNorm(p, 0.0, "closed_form")
    if p > base.orlicz_max_exponent:
        return OrliczNorm(p, math.inf, "closed_form")
    if isinstance(base, Gaussian) and p == 2.0:
        # closed form of the p = 2 objective solved for K
        return OrliczNorm(p, scale * math.sqrt(8.0 * base.sigma2 / 3.0), "closed_form")
    method = "quadrature_bisection" if isinstance(base, (Gaussian, Exponential)) else "bisection"
    f = _log_objective_fn(base, p)
    target = math.log(2.0)

    hi = math.sqrt(base.variance)
    for _ in range(_MAX_DOUBLINGS):
        if f(hi) <= target:
            break
        hi *= 2.0
    else:
        return OrliczNorm(p, math.inf, method)
    lo = hi
    while f(lo) <= target:
        lo *= 0.5
    f_lo, f_hi = f(lo), f(hi)
    while hi - lo > 1e-14 * hi:
        mid = math.sqrt(lo * hi)
        if not (lo < mid < hi):
            break
        f_mid = f(mid)
        # the objective is strictly decreasing in K
        assert f_hi <= f_mid + 1e-12 and f_mid <= f_lo + 1e-12 or not math.isfinite(f_lo)
        if f_mid <= target:
            hi, f_hi = mid, f_mid
        else:
            lo, f_lo = mid, f_mid
    return OrliczNorm(p, scale * hi, method)


def psi1_bound_from_proxy(sigma2: float) -> float:
    """4 min(1 / W(1 / sigma), 1 / W(1 / sigma^2)) for a centered variable."""
    if sigma2 == 0.0:
        raise DomainError("sigma2 = 0: the variable is degenerate and its psi_1 norm is 0")
    if not sigma2 > 0.0:
        raise DomainError(f"sigma2 must be > 0, got {sigma2}")
    if math.isinf(sigma2):
        return math.inf
    return 4.0 * min(1.0 / lambert_w0(1.0 / math.sqrt(sigma2)), 1.0 / lambert_w0(1.0 / sigma2))


def proxy_bound_from_psi2(psi2: float) -> float:
    """Sub-Poisson proxy bound log(2) * ||X||_psi2^2 for centered X."""
    if not psi2 >= 0.0:
        raise DomainError(f"psi2 must be >= 0, got {psi2}")
    return math.log(2.0) * psi2 * psi2


def orlicz_summary(d: Distribution, sigma2: float | None = None) -> dict:
    """psi_1, psi_2, and the two proxy bridges for one distribution.

    ``sigma2`` is the two-sided proxy used for the psi_1 bound; callers
    pass the analytic or numeric optimum.
    """
    psi1 = psi_norm(d, 1.0)
    psi2 = psi_norm(d, 2.0)
    if sigma2 is None or sigma2 == 0.0 or math.isinf(sigma2):
        prop = 0.0 if sigma2 == 0.0 else math.inf
    else:
        prop = psi1_bound_from_proxy(sigma2)
    return {
        "psi1": psi1.value,
        "psi2": psi2.value,
        "psi1_bound_from_proxy": prop,
        "psi2_bridge_bound": proxy_bound_from_psi2(psi2.value) if math.isfinite(psi2.value) else math.inf,
    }
