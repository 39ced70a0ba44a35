import json
import math

import numpy as np
import pytest

from subpoisson.distributions import (
    Bernoulli, Gaussian, PointMass, Poisson, SampleSet, Skellam, sample,
)
from subpoisson.empirical import (
    CheckPoint, LambdaRangeError, VerificationReport, admissible_lambda, default_t_grid,
    empirical_clmgf, empirical_proxy, finite_proxy_members, load_samples,
    mc_verify_propositions, mc_verify_tail_bounds, statistical_tolerance,
)
from subpoisson.special_functions import phi


def constant(n=50, c=3.0):
    return SampleSet(np.full(n, c), None, "const")


# -- empirical clmgf ----------------------------------------------------------------------

def test_clmgf_zero_lambda():
    assert empirical_clmgf(sample(Poisson(2.0), 1000, 1), 0.0) == 0.0


def test_clmgf_constant_samples_exact():
    s = constant()
    for lam in (-1e6, -1.0, 0.0, 2.0, 1e9):
        assert empirical_clmgf(s, lam) == 0.0
    assert admissible_lambda(s) == math.inf


def test_clmgf_matches_direct_average():
    s = SampleSet(np.array([0.0, 1.0, 1.0, 4.0]), None, "x")
    for lam in (-3.0, -0.2, 0.01, 0.7, 2.5):
        want = math.log(np.mean(np.exp(lam * (s.values - 1.5))))
        assert empirical_clmgf(s, lam) == pytest.approx(want, rel=1e-13)


def test_clmgf_range_error_reports_range():
    s = SampleSet(np.array([0.0, 10.0]), None, "x")
    with pytest.raises(LambdaRangeError, match=r"\[0, 140"):
        empirical_clmgf(s, 141.0)
    assert math.isfinite(empirical_clmgf(s, 139.0))


def test_clmgf_poisson_against_bootstrap():
    s = sample(Poisson(2.0), 10**6, 2024)
    est = empirical_clmgf(s, 0.5)
    # bootstrap standard error on the same samples via multinomial reweighting
    values, counts = np.unique(s.values, return_counts=True)
    rng = np.random.default_rng(0)
    reps = []
    for _ in range(200):
        w = rng.multinomial(len(s), counts / len(s)) / len(s)
        m = np.dot(w, values)
        reps.append(math.log(np.dot(w, np.exp(0.5 * (values - m)))))
    se = float(np.std(reps, ddof=1))
    assert abs(est - 2.0 * phi(0.5)) <= 5 * se


def test_clmgf_convex_midpoints():
    s = sample(Skellam(2.0, 1.0), 20000, 9)
    grid = np.linspace(-2.0, 2.0, 41)
    vals = [empirical_clmgf(s, l) for l in grid]
    for a, m, b in zip(vals, vals[1:], vals[2:]):
        assert m <= 0.5 * (a + b) + 1e-12


# -- empirical proxy -----------------------------------------------------------------------

def test_proxy_constant_samples():
    r = empirical_proxy(constant())
    assert r.value == 0.0 and r.method == "empirical"


def test_proxy_bernoulli_over_seeds():
    values = [empirical_proxy(sample(Bernoulli(0.3), 10**6, seed)).value for seed in range(20)]
    spread = float(np.std(values, ddof=1))
    assert abs(np.mean(values) - 0.21) <= 0.01
    assert all(abs(v - 0.21) <= max(0.01, 5 * spread) for v in values)


def test_proxy_gaussian_over_seeds():
    values = [empirical_proxy(sample(Gaussian(0.0, 1.0), 10**6, seed)).value for seed in range(20)]
    assert all(0.95 <= v <= 1.05 for v in values)


def test_proxy_sides_and_range():
    s = sample(Poisson(3.0), 10000, 4)
    two = empirical_proxy(s)
    assert two.value == max(empirical_proxy(s, "upper").value, empirical_proxy(s, "lower").value)
    assert two.value >= float(np.var(s.values))
    assert two.diagnostics.lambda_max == pytest.approx(math.log(10000) / np.max(np.abs(s.values - s.values.mean())))
    with pytest.raises(LambdaRangeError):
        empirical_proxy(s, "upper", (1.0, 1e6))
    with pytest.raises(ValueError):
        empirical_proxy(s, "middle")


# -- tail verification ------------------------------------------------------------------------

def test_tolerance_formula():
    assert statistical_tolerance(0.5, 10**6) == pytest.approx(3 * 0.5 / 1e3 + 1e-5)
    assert statistical_tolerance(0.0, 100) == pytest.approx(0.1)


def test_default_t_grid_reaches_ten_over_n():
    from subpoisson.bounds import bennett
    ts = default_t_grid(4.0, 10**6)
    assert bennett(4.0, ts[-1]) == pytest.approx(1e-5, rel=1e-8)


def test_poisson_true_proxy_passes():
    r = mc_verify_tail_bounds(Poisson(4.0), {"upper": 4.0, "lower": 4.0}, [1, 2, 4, 8], 10**6, 1)
    assert r.passed and len(r.points) == 2 * 4 * 3


def test_quartered_proxy_fails():
    r = mc_verify_tail_bounds(Poisson(4.0), {"upper": 1.0}, [1, 2, 4, 8], 10**6, 1)
    assert not r.passed
    assert {p.label.split(":")[1] for p in r.failures()} >= {"t=4", "t=8"}


def test_pointmass_tail_is_zero():
    r = mc_verify_tail_bounds(PointMass(2.0), {"upper": 0.0}, [0.5, 1.0], 1000, 3)
    assert r.passed and all(p.observed == 0.0 for p in r.points)


def test_infinite_proxy_rejected():
    with pytest.raises(ValueError):
        mc_verify_tail_bounds(Poisson(1.0), {"upper": math.inf}, [1.0], 100, 0)


@pytest.mark.parametrize("seed", range(5))
def test_catalog_tail_bounds(seed):
    for d, proxies in finite_proxy_members():
        r = mc_verify_tail_bounds(d, proxies, n=10**6, seed=seed)
        assert r.passed, (str(d), [p.label for p in r.failures()])


def test_reports_are_reproducible():
    a = mc_verify_tail_bounds(Skellam(3.0, 1.0), {"upper": 4.0}, None, 10**5, 11).to_dict()
    b = mc_verify_tail_bounds(Skellam(3.0, 1.0), {"upper": 4.0}, None, 10**5, 11).to_dict()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_report_margin_and_serialisation():
    r = VerificationReport("x")
    r.add("a", 0.2, 0.1, 0.05)
    r.add("b", 0.1, 0.1, 0.0)
    assert not r.passed and r.worst_margin == pytest.approx(-0.05)
    d = r.to_dict()
    assert d["points"][0]["margin"] == pytest.approx(-0.05) and d["passed"] is False
    assert CheckPoint("c", 0.0, 1.0, 0.0, True).margin == 1.0


# -- proposition suites ------------------------------------------------------------------------------

@pytest.mark.parametrize("suite", ["variance_floor", "degenerate", "closure", "abs_value", "scaling",
                                   "dominance", "orlicz"])
def test_suites_pass(suite):
    r = mc_verify_propositions(suite)
    assert r.passed, [p.label for p in r.failures()]
    assert all(p.label.startswith(suite + ":") for p in r.points)


def test_abs_value_skellam_bound():
    r = mc_verify_propositions("abs_value")
    p = next(p for p in r.points if "skellam(1,1)" in p.label)
    assert p.bound == 4.0 and p.observed <= 4.0


def test_scaling_identity():
    r = mc_verify_propositions("scaling")
    assert all(p.observed == p.bound for p in r.points if "identity" in p.label)


def test_unknown_suite():
    with pytest.raises(ValueError, match="unknown suite"):
        mc_verify_propositions("everything")


# -- sample files -----------------------------------------------------------------------------------------

def test_load_text(tmp_path):
    f = tmp_path / "x.txt"
    f.write_text("# comment\n1.5\n2\n\n-3e-1\n")
    assert list(load_samples(f).values) == [1.5, 2.0, -0.3]


def test_load_csv_column(tmp_path):
    f = tmp_path / "x.csv"
    f.write_text("id,value\n1,0.5\n2,1.5\n")
    assert list(load_samples(f, "value").values) == [0.5, 1.5]
    assert list(load_samples(f, 0).values) == [1.0, 2.0]


def test_load_errors(tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("1\nnan\n")
    with pytest.raises(ValueError):
        load_samples(f)
    with pytest.raises(OSError):
        load_samples(tmp_path / "missing.txt")
