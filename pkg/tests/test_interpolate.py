import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from oracles import brute_bicubic, keys_weight
from satenhance import bicubic_downscale_half, bicubic_resize
from satenhance.interpolate import keys_kernel, output_size


def test_kernel_matches_scalar_formula():
    xs = np.linspace(-2.5, 2.5, 101)
    np.testing.assert_allclose(keys_kernel(xs), [keys_weight(x) for x in xs], atol=1e-15)
    assert keys_kernel(0.0) == 1.0
    assert keys_kernel(1.0) == 0.0 and keys_kernel(2.0) == 0.0


@pytest.mark.parametrize("factor", [0.5, 1.5, 2.0, 3.0, 0.37])
def test_constant_preserved(factor):
    out = bicubic_resize(np.full((9, 7), 81.25), factor)
    assert out.shape == output_size(7, 9, factor)[::-1]
    np.testing.assert_allclose(out, 81.25, atol=1e-12)


def test_factor_one_is_identity(rng):
    img = rng.uniform(0, 255, (11, 13))
    np.testing.assert_allclose(bicubic_resize(img, 1.0), img, atol=1e-12)


def test_linear_ramp_reproduced_in_interior():
    w, h = 16, 6
    ramp = np.tile(np.arange(w, dtype=float), (h, 1))
    out = bicubic_resize(ramp, 2.0)
    src_x = (np.arange(2 * w) + 0.5) / 2 - 0.5
    interior = (src_x >= 2) & (src_x <= w - 3)
    np.testing.assert_allclose(out[:, interior], np.tile(src_x[interior], (2 * h, 1)), atol=1e-9)


@pytest.mark.parametrize("factor", [2.0, 0.5, 1.7])
def test_matches_per_pixel_oracle(rng, factor):
    img = rng.uniform(0, 255, (8, 10))
    np.testing.assert_allclose(bicubic_resize(img, factor), brute_bicubic(img, factor), atol=1e-9)


def test_downscale_2x2_is_mean():
    # per-axis weights at the half-grid point are [-1/16, 9/16, 9/16, -1/16]
    np.testing.assert_allclose(keys_kernel([1.5, 0.5, 0.5, 1.5]), [-0.0625, 0.5625, 0.5625, -0.0625])
    out = bicubic_downscale_half([[1.0, 2.0], [3.0, 4.0]])
    assert out.shape == (1, 1)
    assert out[0, 0] == pytest.approx(2.5, abs=1e-12)


def test_downscale_constant_and_errors():
    np.testing.assert_allclose(bicubic_downscale_half(np.full((6, 8), 9.0)), 9.0, atol=1e-12)
    with pytest.raises(ValueError):
        bicubic_downscale_half(np.zeros((5, 8)))
    with pytest.raises(ValueError):
        bicubic_resize(np.zeros((4, 4)), 0.0)
    with pytest.raises(ValueError):
        bicubic_resize(np.zeros((4, 4)), -1.0)


def test_smooth_round_trip():
    y, x = np.mgrid[0:64, 0:64]
    smooth = 128 + 60 * np.sin(2 * np.pi * x / 64) * np.cos(2 * np.pi * y / 64)
    back = bicubic_downscale_half(bicubic_resize(smooth, 2))
    # observed maximum 9.8e-5 on this fixture
    assert np.abs(back - smooth)[4:-4, 4:-4].max() < 1.0


def test_output_size_is_content_independent(rng):
    for factor in (0.5, 1.25, 2.0, 3.3):
        a = bicubic_resize(rng.uniform(size=(7, 9)), factor)
        b = bicubic_resize(np.zeros((7, 9)), factor)
        assert a.shape == b.shape == output_size(9, 7, factor)[::-1]


@settings(max_examples=30, deadline=None)
@given(arrays(np.float64, st.tuples(st.integers(2, 12), st.integers(2, 12)),
              elements=st.floats(0, 255, allow_nan=False)),
       st.sampled_from([0.5, 1.5, 2.0, 2.5]))
def test_overshoot_bound_and_separability(img, factor):
    out = bicubic_resize(img, factor)
    lo, hi = img.min(), img.max()
    span = hi - lo
    assert out.min() >= lo - 0.25 * span - 1e-9
    assert out.max() <= hi + 0.25 * span + 1e-9
    other = bicubic_resize(img, factor, order="columns-first")
    np.testing.assert_allclose(out, other, atol=1e-9)
