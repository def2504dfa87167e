import math

import pytest

import mgslab


def test_symbol_values():
    p = mgslab.Params()
    m1, m2, m3 = mgslab.mg_symbol(1, 2, 3, p)
    assert abs(1 * m1 + 2 * m2 + 3 * m3) < 1e-14
    with pytest.raises(ValueError):
        mgslab.mg_symbol(1, 1, 0, p)
    assert mgslab.max_divergence_residual(16, p) < 1e-12


def test_params_validation():
    with pytest.raises(ValueError, match="gamma must lie in"):
        mgslab.Params(gamma=1.5)


def test_eigenvalue():
    p = mgslab.Params(kappa=0.1, gamma=0.25)
    r = mgslab.solve_eigenvalue(3, p)
    assert r.sigma == pytest.approx(0.201047, rel=1e-5)
    assert r.c[0] > 0 > r.c[1]
    with pytest.raises(mgslab.NoUnstableEigenvalue):
        mgslab.solve_eigenvalue(1, p)
    r1 = mgslab.solve_eigenvalue(1, p, mgslab.RootSign.Any)
    assert r1.sigma < 0


def test_bounds_and_threshold():
    lower, upper = mgslab.eigenvalue_bounds(1, mgslab.Params(kappa=0.0))
    assert lower == pytest.approx(0.04)
    assert upper == pytest.approx(4 / 26)
    assert mgslab.critical_kappa_half(mgslab.Params(gamma=0.5)) == pytest.approx(1 / 34)


def test_run_json(tmp_path):
    assert "symbol-audit" in mgslab.experiment_names()
    v = mgslab.run_json('{"experiment": "symbol-audit", "seed": 7}', output_dir=str(tmp_path))
    assert v["passed"]
    assert (tmp_path / "verdict.csv").exists()
    assert all(math.isfinite(m["value"]) for m in v["metrics"])
    with pytest.raises(mgslab.ConfigError):
        mgslab.run_json('{"experiment": "nope"}')
