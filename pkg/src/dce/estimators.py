"""Channel estimators for both schemes.

Baseline scheme: linear MMSE from known pilots, at the transmitter
(reverse phase) and at both receivers (forward phase).

Semiblind scheme: the transmitter recovers only the whitening factor of
the uplink channel from the received autocorrelation (no pilot knowledge
needed), while each receiver splits its channel into a whitening factor
estimated from the pilot correlation and a unitary rotation solved in
closed form as an orthogonal Procrustes problem.

Orientation conventions: x0 is the (n_t, t0) reverse-phase observation,
x1 / y1 are (rx, t1) forward-phase observations.  Uplink estimates are
returned as (n_t, n_l) matrices approximating H^T so the null-space
construction in the training module applies directly; downlink estimates
match the (rx, n_t) downlink channel itself.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, NumericalError
from .linalg import svd
from .training import ForwardSignal, ReverseSignal

__all__ = [
    "UplinkEstimate",
    "ChannelEstimate",
    "lmmse_uplink",
    "lmmse_downlink",
    "blind_whitening_tx",
    "procrustes_rotation",
    "wr_estimate_lr",
    "wr_estimate_ur",
]


@dataclass(frozen=True)
class UplinkEstimate:
    """(n_t, n_l) estimate of the uplink channel H^T or of its whitening factor."""

    matrix: np.ndarray
    kind: str  # "lmmse_channel" | "blind_whitening"


@dataclass(frozen=True)
class ChannelEstimate:
    """Downlink estimate, optionally with its whitening/rotation factors."""

    matrix: np.ndarray
    whitening: np.ndarray | None = None
    rotation: np.ndarray | None = None


def lmmse_uplink(
    x0: np.ndarray,
    reverse: ReverseSignal,
    sigma_h_sq: float,
    sigma0_sq: float,
) -> UplinkEstimate:
    """LMMSE estimate of the uplink channel from known reverse pilots.

    The textbook expression sigma_h^2 (sigma_h^2 S0 S0^H + sigma0^2 I)^-1
    S0 X0^H produces a conjugated downlink-oriented matrix; it is returned
    conjugate-transposed so the result is an (n_t, n_l) estimate of H^T.
    With orthogonal pilots the estimator reduces to a scalar shrinkage of
    the pilot correlation, and the shrinkage goes to 1 as sigma0_sq -> 0.
    """
    s0 = reverse.s0
    n_l = s0.shape[0]
    gram = sigma_h_sq * (s0 @ s0.conj().T) + sigma0_sq * np.eye(n_l)
    rhs = s0 @ x0.conj().T
    try:
        printed = sigma_h_sq * np.linalg.solve(gram, rhs)
    except np.linalg.LinAlgError:
        if sigma0_sq > 0:
            raise NumericalError("singular regularized Gram matrix with sigma0_sq > 0")
        printed = sigma_h_sq * (np.linalg.pinv(gram) @ rhs)
    return UplinkEstimate(matrix=printed.conj().T, kind="lmmse_channel")


def lmmse_downlink(
    x1: np.ndarray,
    forward: ForwardSignal,
    sigma_ch_sq: float,
    sigma0_sq: float,
) -> ChannelEstimate:
    """LMMSE estimate of a downlink channel from the known forward pilots.

    Only the pilot part of the forward signal is known to a receiver, so
    the correlation and Gram matrix use s1_pilot; the artificial-noise
    residue is treated as part of the additive noise and the receiver
    regularizes with sigma0_sq alone.  Output is (rx, n_t), oriented as
    the downlink channel.
    """
    s1p = forward.s1_pilot
    n_t = s1p.shape[0]
    gram = sigma_ch_sq * (s1p @ s1p.conj().T) + sigma0_sq * np.eye(n_t)
    rhs = s1p @ x1.conj().T
    try:
        printed = sigma_ch_sq * np.linalg.solve(gram, rhs)
    except np.linalg.LinAlgError:
        if sigma0_sq > 0:
            raise NumericalError("singular regularized Gram matrix with sigma0_sq > 0")
        printed = sigma_ch_sq * (np.linalg.pinv(gram) @ rhs)
    return ChannelEstimate(matrix=printed.conj().T)


def blind_whitening_tx(x0: np.ndarray, p0: float, t0: int, n_l: int) -> UplinkEstimate:
    """Blind whitening-factor estimate from the reverse-phase autocorrelation.

    Forms R = X0 X0^H / ((p0 / n_l) t0), whose expectation is
    H^T H^* plus an isotropic noise floor, and keeps the top-n_l
    eigen-directions scaled by the square root of their eigenvalues.
    Only the column space of the result is consumed downstream, so the
    overall scale is immaterial.
    """
    n_t, t0_obs = x0.shape
    if t0_obs < n_l:
        raise DimensionError(f"t0={t0_obs} observations cannot resolve rank {n_l}")
    r = x0 @ x0.conj().T / ((p0 / n_l) * t0)
    res = svd(r)
    w0 = res.u[:, :n_l] * np.sqrt(res.sigma[:n_l])
    return UplinkEstimate(matrix=w0, kind="blind_whitening")


def procrustes_rotation(cross: np.ndarray, order: str = "uv") -> np.ndarray:
    """Closed-form unitary solution of the orthogonal Procrustes problem.

    Returns U V^H (order="uv") or V U^H (order="vu") from the SVD of the
    cross-correlation matrix: the unitary factor closest in Frobenius norm
    to the alignment the cross-correlation encodes.  Zero singular
    directions contribute an arbitrary but deterministic block, which
    downstream products multiply by vanishing singular values.
    """
    res = svd(cross)
    uvh = res.u @ res.vh
    if order == "uv":
        return uvh
    if order == "vu":
        return uvh.conj().T
    raise ValueError(f"unknown order {order!r}, expected 'uv' or 'vu'")


def wr_estimate_lr(
    x1: np.ndarray,
    s1_pilot: np.ndarray,
    p1: float,
    t1: int,
    n_t: int,
) -> ChannelEstimate:
    """Semiblind whitening-rotation estimate at the legitimate receiver.

    Steps: (i) pilot correlation X_W = X1 S1p^H / ((p1/n_t) t1);
    (ii) whitening factor W1 = V^* Sigma^T from its SVD; (iii) rotation
    cross-correlation X_Q = X1^* S1p^T W1 / ((p1/n_t) t1); (iv) unitary
    rotation Q1 as the Procrustes factor of X_Q; (v) channel estimate
    Q1^* W1^T.
    """
    scale = (p1 / n_t) * t1
    xw = x1 @ s1_pilot.conj().T / scale
    if not np.any(np.abs(xw) > 0):
        raise NumericalError("degenerate pilot correlation: received signal uncorrelated with pilots")
    res = svd(xw)
    w1 = res.vh.T[:, : res.sigma.size] * res.sigma
    xq = x1.conj() @ s1_pilot.T @ w1 / scale
    q1 = procrustes_rotation(xq, order="uv")
    h1 = q1.conj() @ w1.T
    return ChannelEstimate(matrix=h1, whitening=w1, rotation=q1)


def wr_estimate_ur(
    y1: np.ndarray,
    s1_pilot: np.ndarray,
    p1: float,
    t1: int,
    n_t: int,
) -> ChannelEstimate:
    """Semiblind whitening-rotation estimate at the unauthorized receiver.

    Steps: (i) pilot correlation Y_M; (ii) whitening factor M = U Sigma
    from its SVD; (iii) rotation cross-correlation Y_R = M^H Y1 S1p^H /
    ((p1/n_t) t1); (iv) rotation R as the reversed Procrustes factor;
    (v) channel estimate M R^H.
    """
    scale = (p1 / n_t) * t1
    ym = y1 @ s1_pilot.conj().T / scale
    if not np.any(np.abs(ym) > 0):
        raise NumericalError("degenerate pilot correlation: received signal uncorrelated with pilots")
    res = svd(ym)
    n_u = y1.shape[0]
    m_hat = np.zeros((n_u, n_t), dtype=complex)
    m_hat[:, : res.sigma.size] = res.u * res.sigma
    yr = m_hat.conj().T @ y1 @ s1_pilot.conj().T / scale
    r_hat = procrustes_rotation(yr, order="vu")
    g_hat = m_hat @ r_hat.conj().T
    return ChannelEstimate(matrix=g_hat, whitening=m_hat, rotation=r_hat)
