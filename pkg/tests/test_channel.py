import numpy as np
import pytest

from dce import RngStream, SystemConfig, add_awgn, sample_channels, svd, wr_decompose
from dce.errors import DimensionError

from conftest import make_cfg


def test_config_defaults_valid():
    cfg = SystemConfig()
    assert cfg.n_t == 4 and cfg.n_l == 2 and cfg.n_u == 2
    assert cfg.t0 == cfg.t1 == 140


@pytest.mark.parametrize(
    "kw",
    [
        dict(n_t=2, n_l=2),
        dict(t0=1),
        dict(t1=3),
        dict(sigma0_sq=-1.0),
        dict(p_ave=0.0),
        dict(gamma=0.0),
    ],
)
def test_config_rejects_invalid(kw):
    with pytest.raises((DimensionError, ValueError)):
        make_cfg(**kw)


def test_sample_channels_shapes_and_zero_variance():
    cfg = make_cfg(sigma_b_sq=0.0)
    ch = sample_channels(cfg, RngStream(0).generator())
    assert ch.h.shape == (2, 4)
    assert ch.g.shape == (2, 4)
    assert ch.b.shape == (2, 2)
    assert np.all(ch.b == 0)


def test_sample_channels_statistics():
    cfg = SystemConfig()
    rng = RngStream(1).generator()
    acc = 0.0
    trials = 100_000
    for _ in range(trials):
        h = sample_channels(cfg, rng).h
        acc += np.real(np.vdot(h, h))
    mean = acc / (trials * cfg.n_l * cfg.n_t)
    assert 0.99 <= mean <= 1.01


def test_wr_decompose_identity():
    d = wr_decompose(np.eye(2))
    assert np.allclose(d.w, np.eye(2))
    assert np.allclose(d.q, np.eye(2))


def test_wr_decompose_roundtrip_bulk():
    rng = np.random.default_rng(2)
    for _ in range(1000):
        m = int(rng.integers(2, 9))
        k = int(rng.integers(1, m + 1))
        a = rng.standard_normal((m, k)) + 1j * rng.standard_normal((m, k))
        d = wr_decompose(a)
        assert np.linalg.norm(d.q @ d.q.conj().T - np.eye(k)) <= 1e-10
        rel = np.linalg.norm(d.w @ d.q.conj().T - a) / np.linalg.norm(a)
        assert rel <= 1e-10


def test_wr_decompose_matches_svd_factors():
    rng = np.random.default_rng(3)
    h = rng.standard_normal((2, 4)) + 1j * rng.standard_normal((2, 4))
    a = h.T
    d = wr_decompose(a)
    res = svd(a)
    assert np.allclose(d.w, res.u[:, :2] * res.sigma, atol=1e-12)


def test_wr_decompose_rejects_wide():
    with pytest.raises(DimensionError):
        wr_decompose(np.ones((2, 4), dtype=complex))


def test_add_awgn_zero_noise():
    sig = np.ones((3, 5), dtype=complex)
    out = add_awgn(sig, 0.0, RngStream(4).generator())
    assert np.array_equal(out, sig)


def test_add_awgn_power():
    sig = np.zeros((100, 1000), dtype=complex)
    out = add_awgn(sig, 0.01, RngStream(5).generator())
    assert abs(np.mean(np.abs(out) ** 2) / 0.01 - 1.0) < 0.01
