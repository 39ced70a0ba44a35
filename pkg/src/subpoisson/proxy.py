"""Optimal sub-Poisson (and sub-Gaussian) variance proxies.

The optimal proxy is the supremum over lam != 0 of
``clmgf(lam) / phi(|lam|)``. The ratio is not assumed to be unimodal, so
the solver scans a log-spaced grid whose upper end is doubled while the
ratio is still near its running maximum, refines the best grid point by
golden-section search, and merges in the lam -> 0 limit (the variance)
analytically.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .special_functions import DomainError, ExtendedReal, log_phi, phi_abs

SIDES = ("upper", "lower", "two_sided")
DENOMINATORS = ("phi", "half_lambda_squared")

_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class SolverOptions:
    tol: float = 1e-8
    grid_per_decade: int = 200
    lambda_min: float = 1e-6
    lambda_max: float = 50.0
    max_doublings: int = 10
    divergence_cap: float = 1e12
    plateau: float = 0.999
    refine_tol: float = 1e-10

    def __post_init__(self):
        if not (self.tol > 0.0 and self.refine_tol > 0.0):
            raise ValueError("tolerances must be positive")
        if self.grid_per_decade < 1:
            raise ValueError("grid_per_decade must be >= 1")
        if not (0.0 < self.lambda_min < self.lambda_max and math.isfinite(self.lambda_max)):
            raise ValueError("need 0 < lambda_min < lambda_max < inf")
        if self.max_doublings < 0:
            raise ValueError("max_doublings must be >= 0")
        if not self.divergence_cap > 0.0:
            raise ValueError("divergence_cap must be positive")


@dataclass
class Diagnostics:
    grid_size: int = 0
    refinement_iterations: int = 0
    divergent: bool = False
    limit_value: float = 0.0
    lambda_max: float = 0.0
    lambda_max_exhausted: bool = False


@dataclass
class ProxyResult:
    side: str
    value: ExtendedReal
    argmax_lambda: float | None
    method: str
    diagnostics: Diagnostics = field(default_factory=Diagnostics)
    components: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "side": self.side,
            "value": self.value,
            "argmax_lambda": self.argmax_lambda,
            "method": self.method,
            "diagnostics": asdict(self.diagnostics),
        }
        if self.components:
            out["components"] = {k: v.to_dict() for k, v in self.components.items()}
        return out


def _check_side(side: str) -> None:
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")


def _log_denominator(lam: float, denominator: str) -> float:
    if denominator == "phi":
        return log_phi(lam)
    return 2.0 * math.log(lam) - math.log(2.0)


def ratio(d, lam: float, denominator: str = "phi") -> ExtendedReal:
    """clmgf(lam) / phi(|lam|); +inf where the MGF is infinite."""
    lam = float(lam)
    if lam == 0.0:
        raise DomainError("ratio is undefined at lam = 0; use ratio_limit_at_zero")
    value = d.clmgf(lam)
    if value == math.inf:
        return math.inf
    if denominator == "phi":
        den = phi_abs(lam)
        if math.isfinite(value) and math.isfinite(den):
            return value / den
    return _log_ratio(d, abs(lam), 1.0 if lam > 0 else -1.0, denominator)[0]


def ratio_limit_at_zero(d) -> float:
    """The lam -> 0 limit of the ratio, which is the variance."""
    v = float(d.variance)
    if not math.isfinite(v) or v < 0.0:
        raise ValueError("ratio_limit_at_zero needs a finite variance")
    return v


def _log_ratio(d, lam: float, sign: float, denominator: str) -> tuple[float, bool]:
    """(ratio, genuinely_infinite) at sign * lam, evaluated in log space."""
    num = d.log_clmgf(sign * lam)
    if num == math.inf:
        return math.inf, True
    if num == -math.inf:
        return 0.0, False
    with np.errstate(over="ignore"):
        return float(np.exp(num - _log_denominator(lam, denominator))), False


def _golden_max(f, a: float, b: float, rel_tol: float) -> tuple[float, float, int]:
    """Maximise ``f`` on [a, b]; returns (x, f(x), iterations)."""
    c = b - _INV_GOLDEN * (b - a)
    e = a + _INV_GOLDEN * (b - a)
    fc, fe = f(c), f(e)
    it = 0
    while (b - a) > rel_tol * 0.5 * (a + b) and it < 500:
        it += 1
        if fc >= fe:
            b, e, fe = e, c, fc
            c = b - _INV_GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, e, fe
            e = a + _INV_GOLDEN * (b - a)
            fe = f(e)
    return (c, fc, it) if fc >= fe else (e, fe, it)


def _grid(lo: float, hi: float, per_decade: int, include_lo: bool) -> np.ndarray:
    """Points of the global grid 10**(k/per_decade) in (lo, hi], plus hi."""
    k0 = math.floor(math.log10(lo) * per_decade)
    k1 = math.floor(math.log10(hi) * per_decade)
    pts = 10.0 ** (np.arange(k0, k1 + 1) / per_decade)
    pts = pts[(pts > lo) & (pts < hi)]
    parts = [[lo]] if include_lo else []
    return np.concatenate(parts + [pts, [hi]])


def _one_sided(d, sign: float, opts: SolverOptions, denominator: str, limit: float):
    diag = Diagnostics(limit_value=limit)
    lams: list[float] = []
    vals: list[float] = []

    def scan(lo, hi, include_lo):
        for lam in _grid(lo, hi, opts.grid_per_decade, include_lo):
            r, infinite = _log_ratio(d, float(lam), sign, denominator)
            if infinite:
                return True
            lams.append(float(lam))
            vals.append(r)
        return False

    lam_max = opts.lambda_max
    if scan(opts.lambda_min, lam_max, True):
        diag.divergent = True
    at_max = [vals[-1]] if vals else []
    doublings = 0
    while not diag.divergent:
        running = max(max(vals), limit)
        if not at_max[-1] > opts.plateau * running:
            break
        if (len(at_max) >= 4 and at_max[-1] > opts.divergence_cap
                and all(x < y for x, y in zip(at_max[-4:], at_max[-3:]))):
            diag.divergent = True
            break
        if doublings >= opts.max_doublings:
            diag.lambda_max_exhausted = True
            break
        if scan(lam_max, 2.0 * lam_max, False):
            diag.divergent = True
        lam_max *= 2.0
        doublings += 1
        if vals:
            at_max.append(vals[-1])
    if not diag.divergent and any(v == math.inf for v in vals):
        diag.divergent = True
    diag.grid_size = len(lams)
    diag.lambda_max = lam_max
    if diag.divergent:
        return math.inf, None, diag

    i = int(np.argmax(vals))
    best, best_lam = vals[i], lams[i]
    if best <= limit:
        return limit, 0.0, diag
    lo = lams[i - 1] if i > 0 else lams[i]
    hi = lams[i + 1] if i + 1 < len(lams) else lams[i]
    if hi > lo:
        x, fx, it = _golden_max(lambda t: _log_ratio(d, t, sign, denominator)[0], lo, hi, opts.refine_tol)
        diag.refinement_iterations = it
        if fx > best:
            best, best_lam = fx, x
    return best, best_lam, diag


def optimal_proxy(d, side: str = "two_sided", options: SolverOptions | None = None,
                  denominator: str = "phi") -> ProxyResult:
    """Optimal upper / lower / two-sided variance proxy of ``d``.

    ``d`` is any object with ``clmgf(lam)``, ``log_clmgf(lam)`` and a
    ``variance`` attribute (every catalog member qualifies).
    ``denominator="half_lambda_squared"`` gives the sub-Gaussian proxy.
    """
    _check_side(side)
    if denominator not in DENOMINATORS:
        raise ValueError(f"denominator must be one of {DENOMINATORS}")
    opts = options or SolverOptions()
    limit = ratio_limit_at_zero(d)
    method = "numeric" if denominator == "phi" else "numeric_subgaussian"
    if side == "two_sided":
        up = optimal_proxy(d, "upper", opts, denominator)
        lo = optimal_proxy(d, "lower", opts, denominator)
        pick = up if up.value >= lo.value else lo
        diag = Diagnostics(
            grid_size=up.diagnostics.grid_size + lo.diagnostics.grid_size,
            refinement_iterations=up.diagnostics.refinement_iterations + lo.diagnostics.refinement_iterations,
            divergent=up.diagnostics.divergent or lo.diagnostics.divergent,
            limit_value=limit,
            lambda_max=max(up.diagnostics.lambda_max, lo.diagnostics.lambda_max),
            lambda_max_exhausted=up.diagnostics.lambda_max_exhausted or lo.diagnostics.lambda_max_exhausted,
        )
        arg = pick.argmax_lambda
        if arg is not None and pick is lo:
            arg = -arg
        if math.isinf(pick.value):
            arg = None
        return ProxyResult("two_sided", max(up.value, lo.value), arg, method, diag,
                           {"upper": up, "lower": lo})
    sign = 1.0 if side == "upper" else -1.0
    value, arg, diag = _one_sided(d, sign, opts, denominator, limit)
    return ProxyResult(side, value, arg, method, diag)


@dataclass
class DominanceReport:
    side: str
    sigma2: float
    passed: bool
    worst_margin: float
    worst_lambda: float | None
    points: int

    def to_dict(self) -> dict:
        return asdict(self)


def default_lambda_grid(lo: float = 1e-3, hi: float = 50.0, per_decade: int = 50) -> np.ndarray:
    return _grid(lo, hi, per_decade, True)


def mgf_dominance_check(d, sigma2: float, side: str = "two_sided", lambda_grid=None,
                        rtol: float = 1e-12) -> DominanceReport:
    """Check clmgf(+-lam) <= sigma2 * phi(lam) on a grid of lam > 0.

    The worst margin is max(clmgf - sigma2 * phi); a point passes when the
    excess is within ``rtol`` of sigma2 * phi(lam).
    """
    _check_side(side)
    if sigma2 < 0.0:
        raise ValueError("sigma2 must be >= 0")
    grid = default_lambda_grid() if lambda_grid is None else np.asarray(lambda_grid, dtype=float)
    signs = {"upper": (1.0,), "lower": (-1.0,), "two_sided": (1.0, -1.0)}[side]
    passed = True
    worst, worst_lam = -math.inf, None
    for lam in grid:
        if lam <= 0.0:
            raise ValueError("dominance grid must contain positive lambdas")
        rhs = sigma2 * phi_abs(lam)
        for s in signs:
            lhs = d.clmgf(s * lam)
            margin = lhs - rhs if lhs != rhs else 0.0
            if margin > worst:
                worst, worst_lam = margin, s * lam
            if margin > rtol * rhs:
                passed = False
    return DominanceReport(side, float(sigma2), passed, worst, worst_lam, int(grid.size))
