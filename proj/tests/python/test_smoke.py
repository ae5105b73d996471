import math

import pytest

import corrkit


def test_line_panel():
    x = [float(i) for i in range(1, 21)]
    y = [2.0 * v + 1.0 for v in x]
    assert corrkit.pearson(x, y) == pytest.approx(1.0, abs=1e-9)
    assert corrkit.spearman(x, y) == 1.0
    assert corrkit.kendall(x, y) == 1.0
    assert corrkit.fechner(x, y).kappa == 1.0
    fit = corrkit.fit_g(x, y)
    assert fit.omega == 1.0
    assert 10.0 < fit.c < 11.0
    assert fit.diagonal == corrkit.Diagonal.main


def test_ranks_and_stats():
    assert corrkit.rank_with_average_ties([5, 5, 7]) == [1.5, 1.5, 3.0]
    assert corrkit.sample_median([4, 1, 2, 3]) == 2.5
    assert corrkit.sample_mean([1, 2, 3]) == 2.0


def test_errors_carry_codes():
    with pytest.raises(corrkit.CorrkitError) as info:
        corrkit.pearson([1, 1, 1], [1, 2, 3])
    assert info.value.code == "DegenerateVariance"
    with pytest.raises(ValueError):
        corrkit.fit_g([1, 2, 3], [4, 4, 4])
    with pytest.raises(corrkit.CorrkitError):
        corrkit.generate("spiral", 10)


def test_generate_is_deterministic():
    a = corrkit.generate("sinusoid", 400, seed=3)
    b = corrkit.generate("sinusoid", 400, seed=3)
    assert a == b
    x, y = a
    assert len(x) == len(y) == 400
    assert abs(corrkit.pearson(x, y)) <= 0.15
    assert corrkit.fit_g(x, y).omega >= 0.65


def test_split_estimate_and_panel():
    x, y = corrkit.generate("noise", 50, seed=11)
    one = corrkit.estimate_g(x, y, train=30, eval=20, iterations=500, seed=9)
    many = corrkit.estimate_g(x, y, train=30, eval=20, iterations=500, seed=9, threads=3)
    assert one.omega_mean == many.omega_mean
    assert one.omega_stddev == many.omega_stddev
    assert one.omega_mean <= 0.62

    panel = corrkit.compute_panel(x, y, train=30, eval=20, iterations=100, seed=9)
    assert set(panel) >= {"r", "rho", "tau", "kappa", "ncc", "omega", "omega_sd"}
    assert 0.0 <= panel["ncc"] <= 1.0

    flat = corrkit.compute_panel([1, 2, 3, 4, 5], [2, 2, 2, 2, 2], bins=2)
    assert flat["omega"] == 0.5
    assert flat["r"] is None
    assert flat["notes"]["omega"] == "Y constant: uncorrelated"


def test_multi():
    rows = [[float(i), float(j)] for i in range(10) for j in range(10)]
    y = [r[0] + r[1] for r in rows]
    fit = corrkit.fit_g_multi(rows, y)
    assert fit.omega == 1.0
    assert math.isclose(sum(w * w for w in fit.normal), 1.0)

    xs = [0.3, 1.2, 0.7, 2.5, 1.9, 0.1, 3.3]
    ys = [1.0, 0.5, 2.0, 1.5, 3.0, 0.2, 2.2]
    single = corrkit.fit_g_multi([[v] for v in xs], ys)
    assert single.omega == corrkit.fit_g(xs, ys).omega
    assert single.normal == [1.0]


def test_ncc_endpoints():
    v = [float(i) for i in range(100)]
    assert corrkit.ncc(v, v) == pytest.approx(1.0, abs=1e-12)
    x = [10.0 * i + j for i in range(10) for j in range(10)]
    y = [10.0 * j + i for i in range(10) for j in range(10)]
    assert corrkit.ncc(x, y) == pytest.approx(0.0, abs=1e-12)
