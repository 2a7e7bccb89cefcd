import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from satenhance import compare, entropy_diff, mse, psnr, rmse


def test_mse_fixtures():
    a = np.arange(12.0).reshape(3, 4)
    assert mse(a, a) == 0.0
    assert mse(a, a + 1) == 1.0
    assert mse([[0.0, 0.0]], [[3.0, 4.0]]) == pytest.approx(12.5, abs=1e-9)


def test_psnr_fixtures():
    a = np.zeros((4, 4))
    assert psnr(a, a) == math.inf
    assert psnr(a, np.full((4, 4), 255.0)) == pytest.approx(0.0, abs=1e-12)
    assert psnr(a, a + 1) == pytest.approx(10 * math.log10(65025), abs=1e-9)
    assert psnr(a, a + 1) == pytest.approx(48.1308036086791, abs=1e-9)
    assert psnr(a, a + 2, r=2.0) == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(ValueError):
        psnr(a, a, r=0)


def test_rmse_fixtures():
    assert rmse(np.ones((2, 2)), np.ones((2, 2))) == 0.0
    assert rmse([[0.0, 0.0]], [[3.0, 4.0]]) == pytest.approx(math.sqrt(12.5), abs=1e-9)
    assert rmse([[0.0, 0.0]], [[2.0, 2.0]]) == 2.0


def test_size_mismatch():
    with pytest.raises(ValueError, match="sizes differ"):
        mse(np.zeros((2, 2)), np.zeros((2, 3)))


def test_entropy_fixtures():
    assert entropy_diff(np.full((5, 5), 17.0)) == 0.0
    # odd width so +255 and -255 occur equally often
    stripes = np.tile([0.0, 255.0], (4, 5))[:, :9]
    assert entropy_diff(stripes) == pytest.approx(1.0, abs=1e-9)
    expected = (2 / 3) * math.log2(1.5) + (1 / 3) * math.log2(3)
    assert entropy_diff([[0.0, 1.0, 0.0, 1.0]]) == pytest.approx(expected, abs=1e-9)
    assert expected == pytest.approx(0.9182958340544896, abs=1e-12)
    with pytest.raises(ValueError):
        entropy_diff(np.zeros((3, 1)))


def test_report_json():
    a = np.arange(16.0).reshape(4, 4)
    rep = compare(a, a)
    d = rep.to_json_dict()
    assert d["psnr_db"] == "inf" and d["mse"] == 0.0
    json.dumps(d)
    rep = compare(a, a + 1)
    assert rep.rmse == pytest.approx(math.sqrt(rep.mse), abs=1e-12)
    assert math.isfinite(rep.psnr_db)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 12), st.integers(2, 12), st.integers(0, 2**32 - 1), st.integers(-20, 20))
def test_metric_properties(h, w, seed, shift):
    r = np.random.default_rng(seed)
    a = r.integers(30, 226, size=(h, w)).astype(float)
    b = r.integers(0, 256, size=(h, w)).astype(float)
    assert mse(a, b) == mse(b, a)
    assert rmse(a, b) ** 2 == pytest.approx(mse(a, b), rel=1e-12, abs=1e-12)
    e = entropy_diff(a)
    assert 0.0 <= e <= math.log2(h * (w - 1)) + 1e-12
    assert entropy_diff(a + shift) == pytest.approx(e, abs=1e-12)


def test_psnr_decreases_with_error():
    a = np.zeros((4, 4))
    values = [psnr(a, a + d) for d in (0.5, 1, 2, 8, 40)]
    assert all(x > y for x, y in zip(values, values[1:]))
