"""Scalar special functions: phi, Lambert W, h and its inverse.

All functions are pure and raise :class:`DomainError` outside their
domain instead of returning NaN.
"""

from __future__ import annotations

import math

import numpy as np

# Values in [-inf, +inf]; NaN is never a legal value.
ExtendedReal = float

PHI_SERIES_THRESHOLD = 1e-4
H_SERIES_THRESHOLD = 1e-2
_W_TOL = 1e-14
_W_MAX_ITER = 64


class DomainError(ValueError):
    """Argument outside the domain of a special function."""


def extended(x: float) -> ExtendedReal:
    """Coerce ``x`` to an extended real, rejecting NaN."""
    x = float(x)
    if math.isnan(x):
        raise DomainError("NaN is not an extended real")
    return x


def _require_finite(x: float, name: str = "x") -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")
    return x


def phi(x: float) -> float:
    """Return e^x - 1 - x, the centered unit Poisson log-MGF.

    Uses the series x^2/2 + x^3/6 + x^4/24 + x^5/120 below
    ``PHI_SERIES_THRESHOLD`` in absolute value, and expm1 otherwise.
    Overflows to +inf for x above ~709.
    """
    x = _require_finite(x)
    if x == 0.0:
        return 0.0
    if abs(x) < PHI_SERIES_THRESHOLD:
        return x * x * (0.5 + x * (1.0 / 6.0 + x * (1.0 / 24.0 + x / 120.0)))
    try:
        value = math.expm1(x) - x
    except OverflowError:
        return math.inf
    return max(value, 0.0)


def phi_abs(x: float) -> float:
    """phi(|x|)."""
    return phi(abs(_require_finite(x)))


def log_phi(x: float) -> float:
    """log(phi(x)), finite for large positive x where phi itself overflows."""
    x = _require_finite(x)
    if x == 0.0:
        return -math.inf
    if x > 30.0:
        return x + math.log1p(-(1.0 + x) * math.exp(-x))
    if abs(x) < PHI_SERIES_THRESHOLD:
        # log(x^2 / 2) + log(1 + x/3 + x^2/12 + x^3/60); phi itself may underflow
        return 2.0 * math.log(abs(x)) - math.log(2.0) + math.log1p(x * (1.0 / 3.0 + x * (1.0 / 12.0 + x / 60.0)))
    return math.log(phi(x))


def phi_array(z: np.ndarray) -> np.ndarray:
    """Vectorised :func:`phi` with the same series switch."""
    z = np.asarray(z, dtype=float)
    out = np.empty_like(z)
    small = np.abs(z) < PHI_SERIES_THRESHOLD
    zs = z[small]
    out[small] = zs * zs * (0.5 + zs * (1.0 / 6.0 + zs * (1.0 / 24.0 + zs / 120.0)))
    zl = z[~small]
    with np.errstate(over="ignore"):
        out[~small] = np.maximum(np.expm1(zl) - zl, 0.0)
    return out


def coshm1(x: float) -> float:
    """cosh(x) - 1 without cancellation near 0."""
    x = _require_finite(x)
    s = math.sinh(0.5 * x) if abs(x) < 1400 else math.inf
    return 2.0 * s * s


def lambert_w0(x: float) -> float:
    """Principal branch of the Lambert W function on [0, inf].

    Returns the w >= 0 solving w * exp(w) = x.
    """
    x = extended(x)
    if x < 0.0:
        raise DomainError(f"lambert_w0 is only defined for x >= 0, got {x!r}")
    if x == 0.0:
        return 0.0
    if math.isinf(x):
        return math.inf
    if x > math.e:
        # Newton on w + log(w) - log(x); never forms exp(w).
        logx = math.log(x)
        w = logx - math.log(logx)
        for _ in range(_W_MAX_ITER):
            f = w + math.log(w) - logx
            step = f / (1.0 + 1.0 / w)
            w -= step
            if abs(step) <= _W_TOL * w:
                break
        return w
    w = x if x < 1.0 else math.log1p(x)
    for _ in range(_W_MAX_ITER):
        ew = math.exp(w)
        f = w * ew - x
        wp1 = w + 1.0
        step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1))
        w -= step
        if abs(step) <= _W_TOL * max(w, 1e-300):
            break
    return w


def h(u: float) -> float:
    """Return (1+u) log(1+u) - u for u >= 0."""
    u = extended(u)
    if u < 0.0:
        raise DomainError(f"h is only defined for u >= 0, got {u!r}")
    if math.isinf(u):
        return math.inf
    if u < H_SERIES_THRESHOLD:
        # sum_{k>=2} (-1)^k u^k / (k (k-1)), Horner form up to k = 9
        acc = 0.0
        for k in range(9, 1, -1):
            acc = ((-1) ** k) / (k * (k - 1)) + u * acc
        return u * u * acc
    return (1.0 + u) * math.log1p(u) - u


def h_inverse(y: float) -> float:
    """Inverse of :func:`h` on [0, inf).

    Closed form exp(1 + W((y - 1)/e)) - 1 seeds the iteration for y >= 1;
    below that the argument of W leaves [0, inf), so a safeguarded Newton
    solve of h(u) = y is used throughout.
    """
    y = extended(y)
    if y < 0.0:
        raise DomainError(f"h_inverse is only defined for y >= 0, got {y!r}")
    if y == 0.0:
        return 0.0
    if math.isinf(y):
        return math.inf
    # h(u) <= u^2/2, so sqrt(2y) is a lower bracket.
    lo = math.sqrt(2.0 * y)
    if y >= 1.0:
        u = math.exp(1.0 + lambert_w0((y - 1.0) / math.e)) - 1.0
    else:
        u = lo * (1.0 + lo / 6.0)
    hi = max(u, lo, 1.0)
    while h(hi) < y:
        hi *= 2.0
    if h(lo) > y:
        lo = 0.0
    u = min(max(u, lo), hi)
    for _ in range(200):
        f = h(u) - y
        if f == 0.0:
            return u
        if f > 0.0:
            hi = u
        else:
            lo = u
        step = f / math.log1p(u) if u > 0.0 else math.inf
        cand = u - step
        if not (lo < cand < hi):
            cand = 0.5 * (lo + hi)
        if abs(cand - u) <= 1e-16 * max(u, 1e-300):
            return cand
        u = cand
    return u
