"""Distribution catalog with closed-form centered log-MGFs.

Every member exposes its mean, variance and centered log-MGF
``clmgf(lam) = log E exp(lam (X - E X))`` in closed form, the exactly known
variance proxies where they exist, and a seeded sampler.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field

import numpy as np
from scipy import stats

from .special_functions import ExtendedReal, log_phi, phi, phi_array

INF = math.inf

# Unbounded discrete supports are cut where the log-pmf drops below this.
_LOG_PMF_FLOOR = -800.0


@dataclass(frozen=True)
class AnalyticProxies:
    """Exactly known optimal variance proxies of a distribution."""

    sp_upper: ExtendedReal
    sp_lower: ExtendedReal
    source: str

    @property
    def sp_two_sided(self) -> ExtendedReal:
        return max(self.sp_upper, self.sp_lower)

    def to_dict(self) -> dict:
        return {
            "sp_upper": self.sp_upper,
            "sp_lower": self.sp_lower,
            "sp_two_sided": self.sp_two_sided,
            "source": self.source,
        }


@dataclass(frozen=True)
class SampleSet:
    values: np.ndarray
    seed: int | None
    source: str

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 1 or values.size == 0:
            raise ValueError("a sample set needs at least one value")
        if not np.all(np.isfinite(values)):
            raise ValueError("sample values must be finite")
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return self.values.size


def _logsumexp(terms) -> float:
    terms = [t for t in terms if t != -INF]
    if not terms:
        return -INF
    m = max(terms)
    if m == INF:
        return INF
    return m + math.log(sum(math.exp(t - m) for t in terms))


def _finite_clmgf(dev: np.ndarray, probs: np.ndarray, lam: float) -> float:
    """Centered log-MGF of a finitely supported law given centered support.

    Since E[lam (X - EX)] = 0, log E e^{lam (X-EX)} = log1p(E phi(lam (X-EX))),
    a sum of nonnegative terms; that form is used while it cannot overflow.
    """
    z = lam * dev
    if np.max(np.abs(z)) <= 1.0:
        return max(math.log1p(float(np.dot(probs, phi_array(z)))), 0.0)
    with np.errstate(divide="ignore"):
        a = np.log(probs) + z
    m = float(np.max(a))
    return max(m + math.log(float(np.sum(np.exp(a - m)))), 0.0)


class Distribution(ABC):
    """Base class for catalog members.

    Subclasses implement ``mean``, ``variance``, ``clmgf`` and ``draw``.
    ``log_clmgf`` returns log(clmgf) and stays finite where ``clmgf``
    overflows; kinds whose log-MGF grows exponentially override it.
    """

    @property
    @abstractmethod
    def mean(self) -> float: ...

    @property
    @abstractmethod
    def variance(self) -> float: ...

    @abstractmethod
    def clmgf(self, lam: float) -> ExtendedReal: ...

    @abstractmethod
    def draw(self, rng: np.random.Generator, n: int) -> np.ndarray: ...

    @abstractmethod
    def descriptor(self) -> str: ...

    def log_clmgf(self, lam: float) -> ExtendedReal:
        value = self.clmgf(lam)
        return math.log(value) if value > 0.0 else -INF

    def analytic_proxies(self) -> AnalyticProxies | None:
        return None

    def support(self) -> tuple[np.ndarray, np.ndarray]:
        """Support points and probabilities (unbounded laws are truncated)."""
        raise NotImplementedError(f"{self.descriptor()} has no discrete support")

    # Largest Orlicz exponent p with E exp((|X - EX|/K)^p) finite for large K.
    orlicz_max_exponent: float = INF

    def __str__(self) -> str:
        return self.descriptor()


def _fmt(x: float) -> str:
    return repr(float(x)) if not float(x).is_integer() else str(int(x))


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


@dataclass(frozen=True)
class Bernoulli(Distribution):
    p: float

    def __post_init__(self):
        _check(0.0 <= self.p <= 1.0, f"bernoulli: p must lie in [0, 1], got {self.p}")

    @property
    def mean(self):
        return self.p

    @property
    def variance(self):
        return self.p * (1.0 - self.p)

    def clmgf(self, lam):
        dev, probs = self._centered()
        return _finite_clmgf(dev, probs, lam)

    def _centered(self):
        return np.array([-self.p, 1.0 - self.p]), np.array([1.0 - self.p, self.p])

    def support(self):
        return np.array([0.0, 1.0]), np.array([1.0 - self.p, self.p])

    def draw(self, rng, n):
        return (rng.random(n) < self.p).astype(float)

    def analytic_proxies(self):
        v = self.p * (1.0 - self.p)
        return AnalyticProxies(v, v, "bounded in [0,1], centered equality: p(1-p)")

    def descriptor(self):
        return f"bernoulli({_fmt(self.p)})"


@dataclass(frozen=True)
class Binomial(Distribution):
    n: int
    p: float

    def __post_init__(self):
        _check(int(self.n) == self.n and self.n >= 1, f"binomial: n must be an integer >= 1, got {self.n}")
        _check(0.0 <= self.p <= 1.0, f"binomial: p must lie in [0, 1], got {self.p}")
        object.__setattr__(self, "n", int(self.n))

    @property
    def mean(self):
        return self.n * self.p

    @property
    def variance(self):
        return self.n * self.p * (1.0 - self.p)

    def clmgf(self, lam):
        return self.n * Bernoulli(self.p).clmgf(lam)

    def support(self):
        k = np.arange(self.n + 1, dtype=float)
        return k, stats.binom.pmf(k, self.n, self.p)

    def draw(self, rng, n):
        return rng.binomial(self.n, self.p, size=n).astype(float)

    def analytic_proxies(self):
        v = self.n * self.p * (1.0 - self.p)
        return AnalyticProxies(v, v, "independent sum of Bernoulli proxies meets variance: np(1-p)")

    def descriptor(self):
        return f"binomial({self.n},{_fmt(self.p)})"


@dataclass(frozen=True)
class ScaledRademacher(Distribution):
    a: float = 1.0

    def __post_init__(self):
        _check(self.a >= 0.0, f"scaled rademacher: a must be >= 0, got {self.a}")

    @property
    def mean(self):
        return 0.0

    @property
    def variance(self):
        return self.a * self.a

    def clmgf(self, lam):
        # log cosh(a lam)
        x = abs(self.a * lam)
        if x <= 1.0:
            s = math.sinh(0.5 * x)
            return math.log1p(2.0 * s * s)
        return x + math.log1p(math.exp(-2.0 * x)) - math.log(2.0)

    def support(self):
        return np.array([-self.a, self.a]), np.array([0.5, 0.5])

    def draw(self, rng, n):
        return self.a * (2.0 * rng.integers(0, 2, size=n) - 1.0)

    def analytic_proxies(self):
        v = self.a * self.a
        return AnalyticProxies(v, v, "sub-Gaussian norm scaling meets variance: a^2")

    def descriptor(self):
        return f"scaledrademacher({_fmt(self.a)})"


class Rademacher(ScaledRademacher):
    def __init__(self):
        super().__init__(1.0)

    def __repr__(self):
        return "Rademacher()"

    def analytic_proxies(self):
        return AnalyticProxies(1.0, 1.0, "|X| <= 1, centered equality: E X^2 = 1")

    def descriptor(self):
        return "rademacher()"


def _poisson_support(a: float) -> tuple[np.ndarray, np.ndarray]:
    if a == 0.0:
        return np.array([0.0]), np.array([1.0])
    kmax = int(a + 10.0 * math.sqrt(a) + 20.0)
    while stats.poisson.logpmf(kmax, a) > _LOG_PMF_FLOOR:
        kmax *= 2
    k = np.arange(kmax + 1, dtype=float)
    logp = stats.poisson.logpmf(k, a)
    keep = logp > _LOG_PMF_FLOOR
    return k[keep], np.exp(logp[keep])


@dataclass(frozen=True)
class Poisson(Distribution):
    a: float

    orlicz_max_exponent = 1.0

    def __post_init__(self):
        _check(self.a >= 0.0, f"poisson: a must be >= 0, got {self.a}")

    @property
    def mean(self):
        return self.a

    @property
    def variance(self):
        return self.a

    def clmgf(self, lam):
        return self.a * phi(lam) if self.a > 0.0 else 0.0

    def log_clmgf(self, lam):
        if self.a == 0.0 or lam == 0.0:
            return -INF
        return math.log(self.a) + log_phi(lam)

    def support(self):
        return _poisson_support(self.a)

    def draw(self, rng, n):
        return rng.poisson(self.a, size=n).astype(float)

    def analytic_proxies(self):
        return AnalyticProxies(self.a, self.a, "centered log-MGF a phi(lam): a")

    def descriptor(self):
        return f"poisson({_fmt(self.a)})"


def _skellam_support(a1: float, a2: float) -> tuple[np.ndarray, np.ndarray]:
    k1, p1 = _poisson_support(a1)
    k2, p2 = _poisson_support(a2)
    pmf = np.convolve(p1, p2[::-1])
    values = np.arange(-int(k2[-1]), int(k1[-1]) + 1, dtype=float)
    keep = pmf > 0.0
    return values[keep], pmf[keep]


@dataclass(frozen=True)
class Skellam(Distribution):
    a1: float
    a2: float

    orlicz_max_exponent = 1.0

    def __post_init__(self):
        _check(self.a1 >= 0.0 and self.a2 >= 0.0, "skellam: parameters must be >= 0")

    @property
    def mean(self):
        return self.a1 - self.a2

    @property
    def variance(self):
        return self.a1 + self.a2

    def clmgf(self, lam):
        return self.a1 * phi(lam) + self.a2 * phi(-lam)

    def log_clmgf(self, lam):
        if lam == 0.0:
            return -INF
        terms = []
        if self.a1 > 0.0:
            terms.append(math.log(self.a1) + log_phi(lam))
        if self.a2 > 0.0:
            terms.append(math.log(self.a2) + log_phi(-lam))
        return _logsumexp(terms)

    def support(self):
        return _skellam_support(self.a1, self.a2)

    def draw(self, rng, n):
        return (rng.poisson(self.a1, size=n) - rng.poisson(self.a2, size=n)).astype(float)

    def analytic_proxies(self):
        v = self.a1 + self.a2
        return AnalyticProxies(v, v, "difference of independent Poissons: a1 + a2")

    def descriptor(self):
        return f"skellam({_fmt(self.a1)},{_fmt(self.a2)})"


@dataclass(frozen=True)
class ScaledSkellam(Distribution):
    """a * (X1 - X2) with X1, X2 independent Poisson(1)."""

    a: float

    orlicz_max_exponent = 1.0

    def __post_init__(self):
        _check(self.a >= 0.0, f"scaledskellam: a must be >= 0, got {self.a}")

    @property
    def mean(self):
        return 0.0

    @property
    def variance(self):
        return 2.0 * self.a * self.a

    def clmgf(self, lam):
        x = self.a * lam
        return phi(x) + phi(-x)

    def log_clmgf(self, lam):
        x = self.a * lam
        if x == 0.0:
            return -INF
        return _logsumexp([log_phi(x), log_phi(-x)])

    def support(self):
        values, probs = _skellam_support(1.0, 1.0)
        return self.a * values, probs

    def draw(self, rng, n):
        return self.a * (rng.poisson(1.0, size=n) - rng.poisson(1.0, size=n)).astype(float)

    def analytic_proxies(self):
        if self.a <= 1.0:
            v = 2.0 * self.a * self.a
            return AnalyticProxies(v, v, "balanced scaling of Skellam(1,1) meets variance: 2a^2")
        return AnalyticProxies(INF, INF, "phi(a lam)/phi(lam) diverges for a > 1")

    def descriptor(self):
        return f"scaledskellam({_fmt(self.a)})"


@dataclass(frozen=True)
class Gaussian(Distribution):
    mu: float
    sigma2: float

    orlicz_max_exponent = 2.0

    def __post_init__(self):
        _check(self.sigma2 >= 0.0, f"gaussian: sigma2 must be >= 0, got {self.sigma2}")

    @property
    def mean(self):
        return self.mu

    @property
    def variance(self):
        return self.sigma2

    def clmgf(self, lam):
        return 0.5 * self.sigma2 * lam * lam

    def log_clmgf(self, lam):
        if self.sigma2 == 0.0 or lam == 0.0:
            return -INF
        return math.log(0.5 * self.sigma2) + 2.0 * math.log(abs(lam))

    def draw(self, rng, n):
        return rng.normal(self.mu, math.sqrt(self.sigma2), size=n)

    def analytic_proxies(self):
        return AnalyticProxies(self.sigma2, self.sigma2, "sub-Gaussian proxy meets variance: sigma2")

    def descriptor(self):
        return f"gaussian({_fmt(self.mu)},{_fmt(self.sigma2)})"


def _minus_log1m_minus(x: float) -> float:
    """-log(1 - x) - x for x < 1, accurate near 0."""
    if abs(x) < 1e-3:
        # sum_{k>=2} x^k / k
        acc = 0.0
        for k in range(9, 1, -1):
            acc = 1.0 / k + x * acc
        return x * x * acc
    return -math.log1p(-x) - x


@dataclass(frozen=True)
class Exponential(Distribution):
    rate: float

    orlicz_max_exponent = 1.0

    def __post_init__(self):
        _check(self.rate > 0.0, f"exponential: rate must be > 0, got {self.rate}")

    @property
    def mean(self):
        return 1.0 / self.rate

    @property
    def variance(self):
        return 1.0 / (self.rate * self.rate)

    def clmgf(self, lam):
        x = lam / self.rate
        if x >= 1.0:
            return INF
        return max(_minus_log1m_minus(x), 0.0)

    def draw(self, rng, n):
        return rng.exponential(1.0 / self.rate, size=n)

    def analytic_proxies(self):
        return AnalyticProxies(INF, self.variance, "MGF infinite for lam >= rate; lower proxy 1/rate^2")

    def descriptor(self):
        return f"exponential({_fmt(self.rate)})"


@dataclass(frozen=True)
class PointMass(Distribution):
    c: float

    def __post_init__(self):
        _check(math.isfinite(self.c), "pointmass: c must be finite")

    @property
    def mean(self):
        return self.c

    @property
    def variance(self):
        return 0.0

    def clmgf(self, lam):
        return 0.0

    def support(self):
        return np.array([float(self.c)]), np.array([1.0])

    def draw(self, rng, n):
        return np.full(n, float(self.c))

    def analytic_proxies(self):
        return AnalyticProxies(0.0, 0.0, "degenerate variable: 0")

    def descriptor(self):
        return f"pointmass({_fmt(self.c)})"


@dataclass(frozen=True)
class Discrete(Distribution):
    """Finitely supported law; equal support points are merged."""

    values: tuple
    probs: tuple

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        probs = np.asarray(self.probs, dtype=float)
        _check(values.ndim == 1 and values.shape == probs.shape and values.size > 0,
               "discrete: values and probs must be equal-length, nonempty")
        _check(bool(np.all(np.isfinite(values))), "discrete: values must be finite")
        _check(bool(np.all(probs >= 0.0)), "discrete: probabilities must be >= 0")
        total = float(np.sum(probs))
        _check(abs(total - 1.0) < 1e-9, f"discrete: probabilities sum to {total}, not 1")
        uniq, inv = np.unique(values, return_inverse=True)
        merged = np.zeros(uniq.size)
        np.add.at(merged, inv, probs / total)
        keep = merged > 0.0
        object.__setattr__(self, "values", tuple(uniq[keep].tolist()))
        object.__setattr__(self, "probs", tuple(merged[keep].tolist()))

    @property
    def mean(self):
        return float(np.dot(self.probs, self.values))

    @property
    def variance(self):
        dev = np.asarray(self.values) - self.mean
        return float(np.dot(self.probs, dev * dev))

    def clmgf(self, lam):
        dev = np.asarray(self.values) - self.mean
        return _finite_clmgf(dev, np.asarray(self.probs), lam)

    def support(self):
        return np.asarray(self.values), np.asarray(self.probs)

    def draw(self, rng, n):
        return rng.choice(np.asarray(self.values), size=n, p=np.asarray(self.probs))

    def descriptor(self):
        pairs = ",".join(f"{_fmt(v)},{_fmt(p)}" for v, p in zip(self.values, self.probs))
        return f"discrete({pairs})"


@dataclass(frozen=True)
class Scaled(Distribution):
    """factor * X for a base distribution X."""

    factor: float
    base: Distribution

    def __post_init__(self):
        _check(math.isfinite(self.factor), "scaled: factor must be finite")

    @property
    def orlicz_max_exponent(self):
        return self.base.orlicz_max_exponent if self.factor != 0.0 else INF

    @property
    def mean(self):
        return self.factor * self.base.mean

    @property
    def variance(self):
        return self.factor * self.factor * self.base.variance

    def clmgf(self, lam):
        return self.base.clmgf(self.factor * lam)

    def log_clmgf(self, lam):
        return self.base.log_clmgf(self.factor * lam)

    def support(self):
        values, probs = self.base.support()
        return self.factor * values, probs

    def draw(self, rng, n):
        return self.factor * self.base.draw(rng, n)

    def descriptor(self):
        return f"scaled({_fmt(self.factor)},{self.base.descriptor()})"


@dataclass(frozen=True)
class IndependentSum(Distribution):
    members: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        _check(len(self.members) > 0, "sum: needs at least one member")

    @property
    def orlicz_max_exponent(self):
        return min(m.orlicz_max_exponent for m in self.members)

    @property
    def mean(self):
        return sum(m.mean for m in self.members)

    @property
    def variance(self):
        return sum(m.variance for m in self.members)

    def clmgf(self, lam):
        return sum(m.clmgf(lam) for m in self.members)

    def log_clmgf(self, lam):
        return _logsumexp([m.log_clmgf(lam) for m in self.members])

    def draw(self, rng, n):
        out = np.zeros(n)
        for m in self.members:
            out += m.draw(rng, n)
        return out

    def descriptor(self):
        return "sum(" + ",".join(m.descriptor() for m in self.members) + ")"


# -- module-level operations -------------------------------------------------

def clmgf(d: Distribution, lam: float) -> ExtendedReal:
    """log E exp(lam (X - E X)); +inf where the MGF is infinite."""
    return d.clmgf(float(lam))


def moments(d: Distribution) -> tuple[float, float]:
    return d.mean, d.variance


def analytic_proxies(d: Distribution) -> AnalyticProxies | None:
    """Exact optimal proxies where known, else None."""
    return d.analytic_proxies()


def sample(d: Distribution, n: int, seed: int) -> SampleSet:
    """Draw ``n`` values with a PCG64 generator seeded by ``seed``."""
    if int(n) != n or n < 1:
        raise ValueError(f"sample size must be a positive integer, got {n}")
    rng = np.random.default_rng(seed)
    return SampleSet(d.draw(rng, int(n)), seed, d.descriptor())


def abs_centered(d: Distribution) -> Discrete:
    """Law of |X - E X| for a discrete member."""
    values, probs = d.support()
    return Discrete(tuple(np.abs(values - d.mean)), tuple(probs / probs.sum()))


def independent_product(d: Distribution, xi: Distribution) -> Discrete:
    """Law of xi * X for independent discrete X and xi."""
    xv, xp = d.support()
    yv, yp = xi.support()
    values = np.outer(yv, xv).ravel()
    probs = np.outer(yp, xp).ravel()
    return Discrete(tuple(values), tuple(probs / probs.sum()))


# -- descriptor grammar ------------------------------------------------------
#
#   descriptor := name '(' [ arg { ',' arg } ] ')'
#   arg        := number | descriptor
#
# Names are case-insensitive. `sum` and `scaled` take descriptor arguments.

class DescriptorError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


def _numbers(name, args, count=None):
    if any(isinstance(a, Distribution) for a in args):
        raise ValueError(f"{name}: expected numeric arguments")
    if count is not None and len(args) not in count:
        raise ValueError(f"{name}: expected {' or '.join(map(str, count))} arguments, got {len(args)}")
    return [float(a) for a in args]


def _build_discrete(args):
    nums = _numbers("discrete", args)
    if len(nums) < 2 or len(nums) % 2:
        raise ValueError("discrete: expected value,prob pairs")
    return Discrete(tuple(nums[0::2]), tuple(nums[1::2]))


def _build_scaled(args):
    if len(args) != 2 or isinstance(args[0], Distribution) or not isinstance(args[1], Distribution):
        raise ValueError("scaled: expected scaled(factor, descriptor)")
    return Scaled(float(args[0]), args[1])


def _build_sum(args):
    if not args or not all(isinstance(a, Distribution) for a in args):
        raise ValueError("sum: expected one or more descriptors")
    return IndependentSum(tuple(args))


_BUILDERS = {
    "bernoulli": lambda a: Bernoulli(*_numbers("bernoulli", a, (1,))),
    "binomial": lambda a: Binomial(*_numbers("binomial", a, (2,))),
    "rademacher": lambda a: (_numbers("rademacher", a, (0,)), Rademacher())[1],
    "scaledrademacher": lambda a: ScaledRademacher(*_numbers("scaledrademacher", a, (1,))),
    "poisson": lambda a: Poisson(*_numbers("poisson", a, (1,))),
    "skellam": lambda a: Skellam(*_numbers("skellam", a, (2,))),
    "scaledskellam": lambda a: ScaledSkellam(*_numbers("scaledskellam", a, (1,))),
    "gaussian": lambda a: Gaussian(*_numbers("gaussian", a, (1, 2))) if len(a) == 2
    else Gaussian(0.0, *_numbers("gaussian", a, (1,))),
    "exponential": lambda a: Exponential(*_numbers("exponential", a, (1,))),
    "pointmass": lambda a: PointMass(*_numbers("pointmass", a, (1,))),
    "discrete": _build_discrete,
    "scaled": _build_scaled,
    "sum": _build_sum,
}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message, pos=None):
        return DescriptorError(message, self.text, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise self.error(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def parse(self) -> Distribution:
        d = self.descriptor()
        if self.peek():
            raise self.error("unexpected trailing input")
        return d

    def descriptor(self) -> Distribution:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        name = self.text[start:self.pos].lower()
        if not name:
            raise self.error("expected a distribution name")
        if name not in _BUILDERS:
            raise self.error(f"unknown distribution {name!r}", start)
        self.expect("(")
        args = []
        if self.peek() != ")":
            args.append(self.arg())
            while self.peek() == ",":
                self.pos += 1
                args.append(self.arg())
        self.expect(")")
        try:
            return _BUILDERS[name](args)
        except (TypeError, ValueError) as exc:
            raise self.error(str(exc), start) from None

    def arg(self):
        ch = self.peek()
        if ch.isalpha():
            return self.descriptor()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in ",()" and not self.text[self.pos].isspace():
            self.pos += 1
        token = self.text[start:self.pos]
        try:
            value = float(token)
        except ValueError:
            raise self.error(f"expected a number, found {token!r}", start) from None
        if not math.isfinite(value):
            raise self.error("parameters must be finite", start)
        return value


def parse_descriptor(text: str) -> Distribution:
    """Parse e.g. ``poisson(4)`` or ``sum(poisson(1),bernoulli(0.2))``."""
    return _Parser(text).parse()


def catalog() -> list[Distribution]:
    """The reference members whose optimal proxies are known exactly."""
    return [
        Bernoulli(0.01), Bernoulli(0.3), Bernoulli(0.5), Bernoulli(0.9),
        Binomial(10, 0.3),
        Rademacher(),
        ScaledRademacher(0.5), ScaledRademacher(2.0),
        Poisson(0.1), Poisson(1.0), Poisson(10.0),
        Skellam(3.0, 1.0),
        ScaledSkellam(0.5), ScaledSkellam(1.0), ScaledSkellam(1.5),
        Gaussian(0.0, 1.0), Gaussian(0.0, 2.5),
        Exponential(2.0),
        PointMass(5.0),
    ]
