"""Sample-based estimates and Monte-Carlo verification reports.

Reproducibility: every random quantity is drawn from numpy's PCG64
generator seeded with the caller's integer seed (``numpy.random.default_rng``),
so a report is a function of (descriptor, n, seed).

The plug-in proxy estimate is a heuristic: the empirical MGF is dominated
by the sample maximum once |lam| exceeds roughly log(n) / max|x - mean|,
so the lam range is capped there.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from . import bounds as _bounds
from .closure import (
    cert_abs, cert_bounded_multiplier, cert_convex, cert_from_bounded,
    cert_scale, cert_sum, certificate,
)
from .distributions import (
    Bernoulli, Discrete, Distribution, IndependentSum, PointMass, Poisson,
    Rademacher, SampleSet, Scaled, Skellam, abs_centered, catalog,
    independent_product, sample,
)
from .orlicz import proxy_bound_from_psi2, psi1_bound_from_proxy, psi_norm
from .proxy import Diagnostics, ProxyResult, mgf_dominance_check, optimal_proxy
from .special_functions import h_inverse, phi_abs, phi_array

OVERFLOW_GUARD = 700.0


class LambdaRangeError(ValueError):
    """lam outside the range where the empirical MGF can be evaluated."""


def load_samples(path, column: int | str | None = None) -> SampleSet:
    """Read one value per line, or one column of a CSV file."""
    path = Path(path)
    text = path.read_text()
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ValueError(f"{path}: no values")
    if column is None and "," not in lines[0]:
        values = [float(ln) for ln in lines]
    else:
        header = [c.strip() for c in lines[0].split(",")]
        try:
            [float(c) for c in header]
            rows = lines
            idx = 0 if column is None else int(column)
        except ValueError:
            rows = lines[1:]
            idx = header.index(column) if isinstance(column, str) else int(column or 0)
        values = [float(r.split(",")[idx]) for r in rows]
    return SampleSet(np.array(values), None, str(path))


def _centered(s: SampleSet) -> tuple[np.ndarray, np.ndarray]:
    """Unique centered values with weights; exact zeros for constant samples."""
    x = s.values
    if x.min() == x.max():
        return np.zeros(1), np.ones(1)
    uniq, counts = np.unique(x, return_counts=True)
    if uniq.size < x.size // 4:
        w = counts / x.size
        return uniq - float(np.dot(w, uniq)), w
    return x - x.mean(), np.full(x.size, 1.0 / x.size)


def admissible_lambda(s: SampleSet) -> float:
    """Largest |lam| passing the overflow guard max|lam (x - mean)| <= 700."""
    dev, _ = _centered(s)
    spread = float(np.max(np.abs(dev)))
    return math.inf if spread == 0.0 else OVERFLOW_GUARD / spread


_SERIES_ORDER = 20


class _MomentSeries:
    """mean phi(lam d) = sum_k lam^k m_k / k! for |lam| max|d| <= 1.

    Truncating after k = 20 leaves a relative error below 1e-16, and each
    evaluation is O(1) instead of a pass over the sample.
    """

    def __init__(self, dev: np.ndarray, w: np.ndarray):
        coef, power = [], dev * dev
        for k in range(2, _SERIES_ORDER + 1):
            coef.append(float(np.dot(w, power)) / math.factorial(k))
            power = power * dev
        self.coef = coef[::-1]

    def __call__(self, lam: float) -> float:
        acc = 0.0
        for c in self.coef:
            acc = acc * lam + c
        return math.log1p(lam * lam * acc)


def _clmgf(dev: np.ndarray, w: np.ndarray, lam: float) -> float:
    z = lam * dev
    if np.max(np.abs(z)) <= 1.0:
        return math.log1p(float(np.dot(w, phi_array(z))))
    # max-shifted log-sum-exp
    a = z + np.log(w)
    m = float(np.max(a))
    return max(m + math.log(float(np.sum(np.exp(a - m)))), 0.0)


def empirical_clmgf(s: SampleSet, lam: float) -> float:
    """log of the sample mean of exp(lam (x_i - sample mean))."""
    lam = float(lam)
    limit = admissible_lambda(s)
    if abs(lam) > limit:
        raise LambdaRangeError(f"|lam| = {abs(lam)} outside the admissible range [0, {limit}]")
    dev, w = _centered(s)
    if lam == 0.0 or not np.any(dev):
        return 0.0
    return _clmgf(dev, w, lam)


def empirical_proxy(s: SampleSet, side: str = "two_sided", lambda_range=None,
                    grid_per_decade: int = 25) -> ProxyResult:
    """Plug-in estimate of the optimal proxy. An estimate, not a bound.

    The sup of the empirical ratio over a log grid on ``lambda_range``
    (default [1e-4, 1] times min(log n, 700) / max|x - mean|) is merged
    with the sample variance, the lam -> 0 limit.
    """
    if side not in ("upper", "lower", "two_sided"):
        raise ValueError(f"unknown side {side!r}")
    dev, w = _centered(s)
    variance = float(np.dot(w, dev * dev))
    spread = float(np.max(np.abs(dev)))
    if spread == 0.0:
        return ProxyResult(side, 0.0, 0.0, "empirical", Diagnostics(limit_value=0.0))
    guard = OVERFLOW_GUARD / spread
    if lambda_range is None:
        hi = min(math.log(len(s)), OVERFLOW_GUARD) / spread
        lo = 1e-4 * hi
    else:
        lo, hi = map(float, lambda_range)
        if not 0.0 < lo < hi <= guard:
            raise LambdaRangeError(f"lambda range must satisfy 0 < lo < hi <= {guard}")
    n_pts = max(2, int(round(math.log10(hi / lo) * grid_per_decade)) + 1)
    grid = np.geomspace(lo, hi, n_pts)
    signs = {"upper": (1.0,), "lower": (-1.0,), "two_sided": (1.0, -1.0)}[side]
    series = _MomentSeries(dev, w)
    best, arg = variance, 0.0
    for sgn in signs:
        for lam in grid:
            z = sgn * lam
            value = series(z) if lam * spread <= 1.0 else _clmgf(dev, w, z)
            r = value / phi_abs(lam)
            if r > best:
                best, arg = r, sgn * lam
    diag = Diagnostics(grid_size=int(grid.size) * len(signs), limit_value=variance, lambda_max=hi)
    return ProxyResult(side, best, arg, "empirical", diag)


# -- verification reports ----------------------------------------------------

@dataclass
class CheckPoint:
    label: str
    observed: float
    bound: float
    tolerance: float
    passed: bool

    @property
    def margin(self) -> float:
        return self.bound + self.tolerance - self.observed

    def to_dict(self) -> dict:
        return {**asdict(self), "margin": self.margin}


@dataclass
class VerificationReport:
    check: str
    points: list = field(default_factory=list)
    sample_size: int | None = None
    seed: int | None = None

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.points)

    @property
    def worst_margin(self) -> float:
        return min((p.margin for p in self.points), default=math.inf)

    def add(self, label, observed, bound, tolerance=0.0):
        ok = observed <= bound + tolerance
        self.points.append(CheckPoint(label, float(observed), float(bound), float(tolerance), bool(ok)))

    def extend(self, other: VerificationReport) -> None:
        self.points.extend(other.points)

    def failures(self) -> list:
        return [p for p in self.points if not p.passed]

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "passed": self.passed,
            "worst_margin": self.worst_margin,
            "sample_size": self.sample_size,
            "seed": self.seed,
            "points": [p.to_dict() for p in self.points],
        }


def statistical_tolerance(bound: float, n: int) -> float:
    """Three binomial standard errors plus 10 / n."""
    return 3.0 * math.sqrt(max(bound * (1.0 - bound), 0.0) / n) + 10.0 / n


def default_t_grid(sigma2: float, n: int, points: int = 20) -> np.ndarray:
    """Evenly spaced t up to where the Bennett bound reaches 10 / n."""
    t_max = sigma2 * h_inverse(math.log(n / 10.0) / sigma2)
    return np.linspace(t_max / points, t_max, points)


def _tail_frequencies(dev_sorted: np.ndarray, ts) -> np.ndarray:
    n = dev_sorted.size
    return (n - np.searchsorted(dev_sorted, ts, side="left")) / n


def mc_verify_tail_bounds(d: Distribution, proxies: dict, t_grid=None, n: int = 1_000_000,
                          seed: int = 0, kinds=_bounds.KINDS) -> VerificationReport:
    """Compare empirical tail frequencies with the three bounds.

    ``proxies`` maps "upper" and/or "lower" to a finite proxy for that tail.
    A point passes iff frequency <= bound + statistical_tolerance(bound, n).
    """
    report = VerificationReport(f"tail_bounds:{d.descriptor()}", sample_size=n, seed=seed)
    s = sample(d, n, seed)
    dev = s.values - d.mean
    for side, sigma2 in proxies.items():
        if side not in ("upper", "lower"):
            raise ValueError(f"tail side must be upper or lower, got {side!r}")
        if not math.isfinite(sigma2):
            raise ValueError(f"{side} proxy must be finite")
        tail = np.sort(dev if side == "upper" else -dev)
        if sigma2 == 0.0:
            ts = np.array([1.0]) if t_grid is None else np.asarray(t_grid, dtype=float)
            for t, f in zip(ts, _tail_frequencies(tail, ts)):
                if t > 0.0:
                    report.add(f"{side}:t={t:.6g}:degenerate", f, 0.0, 0.0)
            continue
        ts = default_t_grid(sigma2, n) if t_grid is None else np.asarray(t_grid, dtype=float)
        for t, f in zip(ts, _tail_frequencies(tail, ts)):
            for kind in kinds:
                b = _bounds.bound(kind, sigma2, float(t))
                report.add(f"{side}:t={t:.6g}:{kind}", f, b, statistical_tolerance(b, n))
    return report


def finite_proxy_members() -> list[tuple[Distribution, dict]]:
    """Catalog members with their finite one-sided proxies."""
    out = []
    for d in catalog():
        a = d.analytic_proxies()
        sides = {k: v for k, v in (("upper", a.sp_upper), ("lower", a.sp_lower)) if math.isfinite(v)}
        if sides:
            out.append((d, sides))
    return out


# -- proposition suites --------------------------------------------------------

_SOUND_TOL = 1e-6


def _suite_variance_floor(n, seed):
    r = VerificationReport("variance_floor")
    for d in catalog():
        for side in ("upper", "lower", "two_sided"):
            v = optimal_proxy(d, side).value
            # observed = variance must not exceed the proxy
            r.add(f"{d}:{side}", d.variance, v, 1e-9)
    return r


def _suite_degenerate(n, seed):
    r = VerificationReport("degenerate")
    for c in (0.0, 5.0, -2.5):
        for side in ("upper", "lower", "two_sided"):
            v = optimal_proxy(PointMass(c), side).value
            r.points.append(CheckPoint(f"pointmass({c:g}):{side}", v, 0.0, 0.0, v == 0.0))
    return r


def _sound(r, label, dist, cert, side=None):
    side = side or cert.side
    r.add(label, optimal_proxy(dist, side).value, cert.bound, _SOUND_TOL)


def _suite_closure(n, seed):
    r = VerificationReport("closure")
    pois = [certificate(a, rule="analytic", source=f"poisson({a:g})") for a in (1.0, 2.0, 0.5)]
    _sound(r, "sum:poisson(1)+poisson(2)+poisson(0.5)",
           IndependentSum((Poisson(1.0), Poisson(2.0), Poisson(0.5))), cert_sum(pois))
    _sound(r, "sum:poisson(1)+rademacher",
           IndependentSum((Poisson(1.0), Rademacher())), cert_sum([pois[0], certificate(1.0, rule="analytic")]))
    for a in (0.0, 0.25, 0.5, 0.9, 1.0):
        x, y = Poisson(1.0), Skellam(2.0, 1.0)
        mix = IndependentSum((Scaled(1.0 - a, x), Scaled(a, y)))
        c = cert_convex(a, certificate(1.0, rule="analytic"), certificate(3.0, rule="analytic"))
        _sound(r, f"convex:a={a:g}", mix, c)
    for a in (1.0, 0.75, 0.5, -0.5, -1.0):
        c = cert_scale(a, certificate(2.0, rule="analytic", source="skellam(1,1)"))
        _sound(r, f"scale:a={a:g}:skellam(1,1)", Scaled(a, Skellam(1.0, 1.0)), c)
        c = cert_scale(a, certificate(3.0, rule="analytic", source="poisson(3)"))
        _sound(r, f"scale:a={a:g}:poisson(3)", Scaled(a, Poisson(3.0)), c)
    xis = {
        "uniform5": Discrete((-1.0, -0.5, 0.0, 0.5, 1.0), (0.2,) * 5),
        "skewed": Discrete((0.3, 1.0), (0.6, 0.4)),
    }
    for name, xi in xis.items():
        c = cert_bounded_multiplier(certificate(1.0, rule="analytic", source="rademacher"))
        _sound(r, f"multiplier:{name}*rademacher", independent_product(Rademacher(), xi), c)
        c = cert_bounded_multiplier(certificate(2.0, rule="analytic", source="skellam(1,1)"))
        _sound(r, f"multiplier:{name}*skellam(1,1)", independent_product(Skellam(1.0, 1.0), xi), c)
    _sound(r, "bounded:range(0,1):bernoulli(0.3)", Bernoulli(0.3), cert_from_bounded("range", 0.0, 1.0))
    _sound(r, "bounded:unit_interval:bernoulli(0.3)", Bernoulli(0.3), cert_from_bounded("unit_interval", 0.3))
    _sound(r, "bounded:le_one:bernoulli(0.3)", Bernoulli(0.3), cert_from_bounded("le_one", 0.3))
    _sound(r, "bounded:abs_le_one:rademacher", Rademacher(), cert_from_bounded("abs_le_one", 1.0))
    return r


def _suite_abs_value(n, seed):
    r = VerificationReport("abs_value")
    for d in (Skellam(1.0, 1.0), Poisson(2.0), Rademacher(), Bernoulli(0.3), Skellam(3.0, 1.0)):
        sp = d.analytic_proxies().sp_two_sided
        c = cert_abs(certificate(sp, rule="analytic", source=d.descriptor()))
        _sound(r, f"abs:{d}", abs_centered(d), c, "upper")
    return r


def _suite_scaling(n, seed):
    r = VerificationReport("scaling")
    for d in (Skellam(1.0, 1.0), Poisson(2.0), Bernoulli(0.3)):
        base = optimal_proxy(d, "two_sided").value
        ident = optimal_proxy(Scaled(1.0, d), "two_sided").value
        r.points.append(CheckPoint(f"identity:{d}", ident, base, 0.0, ident == base))
        for a in (0.9, 0.5, 0.1):
            r.add(f"a={a:g}:{d}", optimal_proxy(Scaled(a, d), "two_sided").value, a * a * base, _SOUND_TOL)
    return r


def _suite_dominance(n, seed):
    r = VerificationReport("dominance")
    for d in catalog():
        a = d.analytic_proxies()
        for side, v in (("upper", a.sp_upper), ("lower", a.sp_lower)):
            if math.isfinite(v):
                rep = mgf_dominance_check(d, v, side)
                r.points.append(CheckPoint(f"{d}:{side}", rep.worst_margin, 0.0, 0.0, rep.passed))
    # sub-Poisson proxy never exceeds the sub-Gaussian one
    for d in (Bernoulli(0.01), Bernoulli(0.3), Rademacher(), Binomial_(), Gaussian_()):
        sp = optimal_proxy(d).value
        sg = optimal_proxy(d, denominator="half_lambda_squared").value
        r.add(f"sp<=sg:{d}", sp, sg, 1e-12 * sg)
    return r


def Binomial_():
    from .distributions import Binomial
    return Binomial(10, 0.3)


def Gaussian_():
    from .distributions import Gaussian
    return Gaussian(0.0, 1.0)


def _suite_orlicz(n, seed):
    r = VerificationReport("orlicz")
    from .distributions import Gaussian, ScaledRademacher
    for d in (Poisson(0.1), Poisson(1.0), Poisson(10.0), Skellam(1.0, 1.0), Rademacher(),
              Bernoulli(0.3), Gaussian(0.0, 1.0)):
        sp = d.analytic_proxies().sp_two_sided
        r.add(f"psi1:{d}", psi_norm(d, 1.0).value, psi1_bound_from_proxy(sp), 1e-6)
    for d in catalog():
        psi2 = psi_norm(d, 2.0).value
        if math.isfinite(psi2):
            r.add(f"psi2_bridge:{d}", optimal_proxy(d).value, proxy_bound_from_psi2(psi2), 1e-6)
    for a in (0.25, 0.5, 1.0):
        got = psi_norm(ScaledRademacher(a), 2.0).value
        want = a * psi_norm(Rademacher(), 2.0).value
        r.points.append(CheckPoint(f"homogeneity:a={a:g}", got, want, 1e-8 * want,
                                   abs(got - want) <= 1e-8 * want))
    return r


def _suite_tail_bounds(n, seed):
    r = VerificationReport("tail_bounds", sample_size=n, seed=seed)
    for d, proxies in finite_proxy_members():
        r.extend(mc_verify_tail_bounds(d, proxies, n=n, seed=seed))
    return r


SUITES = {
    "variance_floor": _suite_variance_floor,
    "degenerate": _suite_degenerate,
    "closure": _suite_closure,
    "abs_value": _suite_abs_value,
    "scaling": _suite_scaling,
    "dominance": _suite_dominance,
    "orlicz": _suite_orlicz,
    "tail_bounds": _suite_tail_bounds,
}


def mc_verify_propositions(suite: str = "all", n: int = 100_000, seed: int = 0) -> VerificationReport:
    """Run one named suite (or ``all``) and merge the results into one report.

    Point labels are prefixed with the suite name; only ``tail_bounds``
    draws samples.
    """
    names = list(SUITES) if suite == "all" else [suite]
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    report = VerificationReport(suite, sample_size=n, seed=seed)
    for name in names:
        sub = SUITES[name](n, seed)
        for p in sub.points:
            p.label = f"{name}:{p.label}"
        report.extend(sub)
    return report
