"""Acceptance gate: one test per criterion, each recording a PASS/FAIL line.

The lines are printed in the pytest terminal summary (see conftest.py) and
when this file is run directly with ``python tests/test_acceptance.py``.
"""

import math
import subprocess
import sys
import time

import mpmath
import numpy as np
from scipy.optimize import minimize_scalar

from subpoisson.bounds import (
    bennett, bernstein1, bernstein2, chernoff_exponent, chernoff_lambda_star, log_bennett,
)
from subpoisson.distributions import (
    Bernoulli, Binomial, Exponential, Gaussian, PointMass, Poisson, Rademacher, ScaledRademacher,
    ScaledSkellam, Skellam, catalog,
)
from subpoisson.empirical import finite_proxy_members, mc_verify_propositions, mc_verify_tail_bounds
from subpoisson.orlicz import proxy_bound_from_psi2, psi1_bound_from_proxy, psi_norm
from subpoisson.proxy import optimal_proxy
from subpoisson.special_functions import (
    PHI_SERIES_THRESHOLD, coshm1, h, h_inverse, lambert_w0, phi, phi_abs,
)

RESULTS: dict[int, str] = {}


def record(number: int, title: str, passed: bool, detail: str) -> None:
    RESULTS[number] = f"criterion {number} [{'PASS' if passed else 'FAIL'}] {title}: {detail}"
    assert passed, RESULTS[number]


def rel(a, b):
    return 0.0 if a == b else abs(a - b) / abs(b)


# 1 ------------------------------------------------------------------------------------------------

def test_criterion_1_catalog_oracle_equivalence():
    start = time.perf_counter()
    finite = [Bernoulli(p) for p in (0.01, 0.3, 0.5, 0.9)] + [
        Binomial(10, 0.3), Rademacher(), ScaledRademacher(0.5), ScaledRademacher(2.0),
        Poisson(0.1), Poisson(1.0), Poisson(10.0), Skellam(3.0, 1.0), ScaledSkellam(0.5),
        ScaledSkellam(1.0), Gaussian(0.0, 1.0), Gaussian(0.0, 2.5),
    ]
    worst = 0.0
    for d in finite:
        a = d.analytic_proxies()
        for side, want in (("upper", a.sp_upper), ("lower", a.sp_lower), ("two_sided", a.sp_two_sided)):
            worst = max(worst, rel(optimal_proxy(d, side).value, want))
    worst = max(worst, rel(optimal_proxy(Exponential(2.0), "lower").value, 0.25))
    infinite = [optimal_proxy(ScaledSkellam(1.5), s).value for s in ("upper", "lower", "two_sided")]
    infinite.append(optimal_proxy(Exponential(2.0), "upper").value)
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-6 and all(v == math.inf for v in infinite) and elapsed < 30.0
    record(1, "catalog oracle equivalence", ok,
           f"worst rel error {worst:.2e} (<= 1e-6), divergent cases inf: {all(v == math.inf for v in infinite)}, "
           f"{elapsed:.1f}s (< 30s)")


# 2 ------------------------------------------------------------------------------------------------

def test_criterion_2_bound_chain_and_chernoff_envelope():
    sigmas = (0.01, 0.3, 1.0, 4.0, 100.0)
    ts = np.geomspace(1e-3, 1e3, 200)
    worst_chain = math.inf
    worst_env = 0.0
    for s2 in sigmas:
        for t in ts:
            b0, b1, b2 = bennett(s2, t), bernstein1(s2, t), bernstein2(s2, t)
            worst_chain = min(worst_chain, b1 - b0, b2 - b1)
            lam_star = chernoff_lambda_star(s2, t)
            grid = np.append(np.geomspace(lam_star * 1e-3, lam_star * 1e3, 400), lam_star)
            grid_inf = min(chernoff_exponent(s2, t, lam) for lam in grid if lam < 700)
            # probabilities compared through their logs so that underflow cannot hide errors
            worst_env = max(worst_env, abs(math.expm1(grid_inf - log_bennett(s2, t))))
            if t in ts[::20]:
                res = minimize_scalar(lambda lam: chernoff_exponent(s2, t, lam),
                                      bounds=(0.0, min(2 * lam_star + 1, 700)), method="bounded",
                                      options={"xatol": 1e-12})
                assert chernoff_exponent(s2, t, lam_star) <= res.fun + 1e-10 * (1 + abs(res.fun))
    ok = worst_chain >= -1e-12 and worst_env <= 1e-8
    record(2, "bound chain and Chernoff envelope", ok,
           f"min chain margin {worst_chain:.2e} (>= -1e-12), envelope rel error {worst_env:.2e} (<= 1e-8) "
           f"on a 5x200 grid")


# 3 ------------------------------------------------------------------------------------------------

def test_criterion_3_monte_carlo_validity():
    start = time.perf_counter()
    n = 10**6
    failures = []
    points = 0
    for seed in range(5):
        for d, proxies in finite_proxy_members():
            r = mc_verify_tail_bounds(d, proxies, n=n, seed=seed)
            points += len(r.points)
            failures += [f"{d}:{p.label}:seed={seed}" for p in r.failures()]
    control = mc_verify_tail_bounds(Poisson(4.0), {"upper": 1.0}, [1.0, 2.0, 4.0, 8.0], n, 0)
    elapsed = time.perf_counter() - start
    ok = not failures and not control.passed and elapsed < 120.0
    record(3, "Monte-Carlo validity", ok,
           f"{points} checks, {len(failures)} failures; quartered-proxy control failed at "
           f"{len(control.failures())} points; {elapsed:.1f}s (< 120s)")


# 4 ------------------------------------------------------------------------------------------------

def test_criterion_4_variance_floor_and_degeneracy():
    worst = math.inf
    for d in catalog():
        for side in ("upper", "lower", "two_sided"):
            worst = min(worst, optimal_proxy(d, side).value - d.variance)
    zeros = [optimal_proxy(PointMass(c), side).value
             for c in (0.0, 5.0, -2.5, 1e6) for side in ("upper", "lower", "two_sided")]
    ok = worst >= -1e-9 and all(v == 0.0 for v in zeros)
    record(4, "variance floor and degeneracy", ok,
           f"min(proxy - variance) {worst:.2e} (>= -1e-9), point masses exactly 0: {all(v == 0.0 for v in zeros)}")


# 5 ------------------------------------------------------------------------------------------------

def test_criterion_5_closure_soundness():
    r = mc_verify_propositions("closure")
    # the suite's points carry tolerance 1e-6, so margin >= 0 means cert >= optimum - 1e-6
    ok = r.passed and r.worst_margin >= 0.0
    record(5, "closure soundness", ok,
           f"{len(r.points)} certificates vs numeric optima, worst cert - optimum "
           f"{r.worst_margin - 1e-6:.2e} (>= -1e-6)")


# 6 ------------------------------------------------------------------------------------------------

def _series_phi(x):
    x = mpmath.mpf(x)
    total, term, k = mpmath.mpf(0), x, 1
    while True:
        k += 1
        term = term * x / k
        total += term
        if abs(term) < mpmath.mpf(10) ** -60 * abs(total):
            return total


def test_criterion_6_special_functions():
    mpmath.mp.dps = 50
    xs = np.geomspace(1e-12, 50.0, 500)
    ulps = 4 * np.finfo(float).eps
    sandwich = all(coshm1(x) <= phi_abs(x) <= 2 * coshm1(x) * (1 + ulps) and phi(x) <= phi_abs(x)
                   for x in np.concatenate([xs, -xs]))
    ws = np.concatenate([[0.0], np.geomspace(1e-12, 1e12, 500)])
    w_scaling = all(c * lambert_w0(x) <= lambert_w0(c * x) * (1 + 1e-15) and lambert_w0(c * x) <= lambert_w0(x)
                  for x in ws for c in (0.0, 0.1, 0.5, 0.9, 1.0))
    w_trip = max(rel(lambert_w0(x) * math.exp(lambert_w0(x)), x) for x in ws[1:])
    ys = np.geomspace(1e-20, 1e6, 500)
    h_trip = max(rel(h(h_inverse(y)), y) for y in ys)
    series_xs = np.concatenate([np.geomspace(1e-12, PHI_SERIES_THRESHOLD * 0.999, 100),
                                -np.geomspace(1e-12, PHI_SERIES_THRESHOLD * 0.999, 100)])
    phi_err = max(rel(phi(x), float(_series_phi(x))) for x in series_xs)
    ok = sandwich and w_scaling and w_trip <= 1e-10 and h_trip <= 1e-10 and phi_err <= 1e-12
    record(6, "special functions", ok,
           f"cosh sandwich {sandwich}, W scaling inequalities {w_scaling}, W round trip {w_trip:.1e}, "
           f"h round trip {h_trip:.1e} (<= 1e-10), phi vs series {phi_err:.1e} (<= 1e-12)")


# 7 ------------------------------------------------------------------------------------------------

def test_criterion_7_orlicz_bridges():
    members = [Poisson(0.1), Poisson(1.0), Poisson(10.0), Skellam(1.0, 1.0), Rademacher(), Gaussian(0.0, 1.0)]
    psi1_margin = min(psi1_bound_from_proxy(d.analytic_proxies().sp_two_sided) - psi_norm(d, 1.0).value
                      for d in members)
    bridge_margin = math.inf
    checked = 0
    for d in catalog():
        psi2 = psi_norm(d, 2.0).value
        if math.isfinite(psi2):
            checked += 1
            bridge_margin = min(bridge_margin, proxy_bound_from_psi2(psi2) - optimal_proxy(d).value)
    rad = proxy_bound_from_psi2(psi_norm(Rademacher(), 2.0).value)
    ok = psi1_margin >= -1e-6 and bridge_margin >= -1e-6 and rel(rad, 1.0) <= 1e-8
    record(7, "Orlicz bridges", ok,
           f"min psi1 bound margin {psi1_margin:.3g}, min psi2 bridge margin {bridge_margin:.2e} over "
           f"{checked} sub-Gaussian members, Rademacher bridge {rad:.15f}")


# 8 ------------------------------------------------------------------------------------------------

CLI_RUNS = [
    ["proxy", "poisson(4)"],
    ["proxy", "bernoulli(0.3)", "--format", "json"],
    ["proxy", "scaledskellam(1.5)", "--format", "csv"],
    ["bound", "--sigma2", "4", "--t", "0:10:0.5", "--kind", "all"],
    ["bound", "--sigma2", "1", "--t", "0:3:0.25", "--side", "two_sided", "--format", "json"],
    ["cert", "sum", "poisson(1)", "poisson(1)", "--format", "json"],
    ["cert", "abs", "skellam(1,1)"],
    ["orlicz", "poisson(1)", "--format", "json"],
    ["verify", "--suite", "all", "--n", "100000", "--seed", "7", "--format", "json"],
    ["verify", "poisson(4)", "--sigma2", "1", "--t", "1,2,4,8", "--n", "100000", "--seed", "3"],
    ["catalog"],
]


def _cli(argv):
    r = subprocess.run([sys.executable, "-m", "subpoisson", *argv], capture_output=True)
    return r.returncode, r.stdout


def test_criterion_8_determinism():
    mismatched = [" ".join(a) for a in CLI_RUNS if _cli(a) != _cli(a)]
    record(8, "CLI determinism", not mismatched,
           f"{len(CLI_RUNS) - len(mismatched)}/{len(CLI_RUNS)} invocations byte-identical across two runs")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
    print("\n".join(RESULTS[k] for k in sorted(RESULTS)))
    sys.exit(0 if all("[PASS]" in v for v in RESULTS.values()) else 1)
