"""Proxy certificates and the rules that transform them.

A certificate is a valid (not necessarily optimal) upper bound on a
variance proxy together with the chain of rules that produced it. Rules
are trusted as stated; independence and centering preconditions cannot be
verified from a certificate, so they are recorded in the derivation as
caller assertions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .special_functions import ExtendedReal

RULES = (
    "analytic",
    "numeric",
    "assumed",
    "independent_sum",
    "convex_combination",
    "scaling",
    "absolute_value",
    "bounded_multiplier",
    "bounded_range",
    "unit_interval",
    "bounded_above_by_one",
    "bounded_by_one",
    "subgaussian_import",
)

_FLIP = {"upper": "lower", "lower": "upper", "two_sided": "two_sided"}


@dataclass(frozen=True)
class Step:
    rule: str
    inputs: tuple = ()
    note: str = ""

    def __post_init__(self):
        if self.rule not in RULES:
            raise ValueError(f"unknown rule {self.rule!r}")

    def to_dict(self) -> dict:
        out = {"rule": self.rule, "inputs": list(self.inputs)}
        if self.note:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class ProxyCertificate:
    side: str
    bound: ExtendedReal
    derivation: tuple = ()

    def __post_init__(self):
        if self.side not in _FLIP:
            raise ValueError(f"unknown side {self.side!r}")
        if math.isnan(self.bound) or self.bound < 0.0:
            raise ValueError(f"certificate bound must be in [0, inf], got {self.bound}")

    def then(self, side: str, bound: float, step: Step) -> ProxyCertificate:
        return ProxyCertificate(side, bound, self.derivation + (step,))

    def to_dict(self) -> dict:
        return {
            "side": self.side,
            "bound": self.bound,
            "derivation": [s.to_dict() for s in self.derivation],
        }


def certificate(bound: float, side: str = "two_sided", rule: str = "assumed",
                source: str = "") -> ProxyCertificate:
    """Leaf certificate, e.g. from a known or numerically computed proxy."""
    return ProxyCertificate(side, float(bound), (Step(rule, (source,) if source else ()),))


def cert_sum(certs) -> ProxyCertificate:
    """Independent sums: proxies add. Independence is caller-asserted."""
    certs = list(certs)
    if not certs:
        raise ValueError("cert_sum needs at least one certificate")
    sides = {c.side for c in certs}
    if len(sides) != 1:
        raise ValueError(f"cert_sum needs matching sides, got {sorted(sides)}")
    total = math.fsum(c.bound for c in certs) if all(math.isfinite(c.bound) for c in certs) else math.inf
    derivation = tuple(s for c in certs for s in c.derivation)
    step = Step("independent_sum", tuple(c.bound for c in certs), "summands asserted independent")
    return ProxyCertificate(certs[0].side, total, derivation + (step,))


def cert_convex(a: float, cx: ProxyCertificate, cy: ProxyCertificate) -> ProxyCertificate:
    """(1 - a) X + a Y for two-sided certificates of X and Y, 0 <= a <= 1."""
    if not 0.0 <= a <= 1.0:
        raise ValueError(f"cert_convex needs 0 <= a <= 1, got {a}")
    if cx.side != "two_sided" or cy.side != "two_sided":
        raise ValueError("cert_convex needs two-sided certificates")
    if a == 0.0:
        value = cx.bound
    elif a == 1.0:
        value = cy.bound
    else:
        value = (1.0 - a) * cx.bound + a * cy.bound
    step = Step("convex_combination", (a, cx.bound, cy.bound))
    return ProxyCertificate("two_sided", value, cx.derivation + cy.derivation + (step,))


def cert_scale(a: float, c: ProxyCertificate) -> ProxyCertificate:
    """a X. Finite only for |a| <= 1; a < 0 swaps upper and lower."""
    if not math.isfinite(a):
        raise ValueError("scale factor must be finite")
    side = _FLIP[c.side] if a < 0 else c.side
    if abs(a) > 1.0:
        return c.then(side, math.inf, Step("scaling", (a,), "|a| > 1: no closure guarantee"))
    value = a * a * c.bound if c.bound != math.inf or a != 0.0 else 0.0
    return c.then(side, value, Step("scaling", (a,)))


def cert_abs(c: ProxyCertificate) -> ProxyCertificate:
    """|X - EX| is upper sub-Poisson with proxy at most twice that of X."""
    if c.side != "two_sided":
        raise ValueError("cert_abs needs a two-sided certificate")
    return c.then("upper", 2.0 * c.bound, Step("absolute_value"))


def cert_bounded_multiplier(c: ProxyCertificate) -> ProxyCertificate:
    """xi X with |xi| <= 1 independent of a centered X keeps the proxy."""
    if c.side != "two_sided":
        raise ValueError("cert_bounded_multiplier needs a two-sided certificate")
    return c.then("two_sided", c.bound, Step(
        "bounded_multiplier", (), "X asserted centered; |xi| <= 1 asserted independent of X"))


def cert_from_bounded(shape: str, *params: float) -> ProxyCertificate:
    """Certificates for bounded variables.

    ``range(a, b)``: a <= X <= b gives (b - a)^2 / 4.
    ``unit_interval(mean)``: 0 <= X <= 1 gives E X.
    ``le_one(second_moment)``: X <= 1 gives an upper-side E X^2.
    ``abs_le_one(second_moment)``: |X| <= 1 gives E X^2.
    The last two hold with equality when E X = 0.
    """
    p = [float(x) for x in params]
    if shape == "range":
        if len(p) != 2 or not p[0] <= p[1] or not all(map(math.isfinite, p)):
            raise ValueError("range needs finite a <= b")
        return ProxyCertificate("two_sided", (p[1] - p[0]) ** 2 / 4.0,
                                (Step("bounded_range", tuple(p)),))
    if len(p) != 1:
        raise ValueError(f"{shape} takes exactly one parameter")
    (m,) = p
    if shape == "unit_interval":
        if not 0.0 <= m <= 1.0:
            raise ValueError("unit_interval needs 0 <= E X <= 1")
        return ProxyCertificate("two_sided", m, (Step("unit_interval", (m,)),))
    if shape == "le_one":
        if not 0.0 <= m < math.inf:
            raise ValueError("le_one needs a finite E X^2 >= 0")
        return ProxyCertificate("upper", m, (Step("bounded_above_by_one", (m,), "equality when E X = 0"),))
    if shape == "abs_le_one":
        if not 0.0 <= m <= 1.0:
            raise ValueError("abs_le_one needs 0 <= E X^2 <= 1")
        return ProxyCertificate("two_sided", m, (Step("bounded_by_one", (m,), "equality when E X = 0"),))
    raise ValueError(f"unknown bounded shape {shape!r}")


def cert_from_subgaussian(sg: float, side: str = "two_sided") -> ProxyCertificate:
    """A sub-Gaussian proxy is also a sub-Poisson proxy on the same side."""
    if not sg >= 0.0:
        raise ValueError("sub-Gaussian proxy must be >= 0")
    return ProxyCertificate(side, float(sg), (Step("subgaussian_import", (float(sg),)),))
