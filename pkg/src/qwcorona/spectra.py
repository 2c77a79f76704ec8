"""Numeric spectral machinery: eigenprojectors of Q, walk amplitudes, scans.

Everything here is brute force on dense matrices.  The closed-form layers
are validated against these routines, never the other way around.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .graphs import (
    Graph,
    diameter,
    distance_k_adjacency,
    is_connected,
    signless_laplacian,
)

DEFAULT_CLUSTER_TOL = 1e-7
DEFAULT_SUPPORT_TOL = 1e-8
GAP_WARNING_FACTOR = 10.0


@dataclass(frozen=True)
class SpectralDecomposition:
    """Distinct eigenvalues of a symmetric matrix with their projectors.

    Eigenvalues are strictly descending.  Projectors are symmetric,
    idempotent, mutually orthogonal, and sum to the identity.
    """

    eigenvalues: tuple
    multiplicities: tuple
    projectors: tuple
    warnings: tuple = ()

    @property
    def n(self) -> int:
        return self.projectors[0].shape[0]

    def reconstruct(self) -> np.ndarray:
        out = np.zeros_like(self.projectors[0])
        for theta, f in zip(self.eigenvalues, self.projectors):
            out += theta * f
        return out


@dataclass(frozen=True)
class Amplitude:
    """One entry of U_Q(tau) = exp(-i tau Q)."""

    value: complex
    time: float
    source: int
    target: int

    @property
    def fidelity(self) -> float:
        return float(abs(self.value) ** 2)


def decompose(q: np.ndarray, cluster_tol: float = DEFAULT_CLUSTER_TOL) -> SpectralDecomposition:
    """Eigendecompose a symmetric matrix, merging eigenvalues within tolerance.

    The clustering threshold is cluster_tol scaled by the spectral norm of q
    (floored at 1 for tiny matrices).  When two clusters sit closer than ten
    times the threshold a warning string is attached to the result.
    """
    q = np.asarray(q, dtype=float)
    if q.ndim != 2 or q.shape[0] != q.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {q.shape}")
    if not np.allclose(q, q.T, atol=1e-10):
        raise ValueError("expected a symmetric matrix")
    if cluster_tol <= 0:
        raise ValueError(f"cluster_tol must be positive, got {cluster_tol}")

    vals, vecs = np.linalg.eigh(q)
    scale = max(1.0, float(np.max(np.abs(vals))) if vals.size else 1.0)
    tol = cluster_tol * scale

    # descending order
    order = np.argsort(vals)[::-1]
    vals = vals[order]
    vecs = vecs[:, order]

    clusters = []
    start = 0
    for i in range(1, len(vals)):
        if vals[start] - vals[i] > tol:
            clusters.append((start, i))
            start = i
    clusters.append((start, len(vals)))

    eigenvalues = []
    multiplicities = []
    projectors = []
    for lo, hi in clusters:
        block = vecs[:, lo:hi]
        f = block @ block.T
        f = (f + f.T) / 2.0
        f.flags.writeable = False
        eigenvalues.append(float(np.mean(vals[lo:hi])))
        multiplicities.append(hi - lo)
        projectors.append(f)

    warnings = []
    for k in range(1, len(eigenvalues)):
        gap = eigenvalues[k - 1] - eigenvalues[k]
        if gap < GAP_WARNING_FACTOR * tol:
            warnings.append(
                f"clusters {eigenvalues[k - 1]:.12g} and {eigenvalues[k]:.12g} "
                f"are separated by {gap:.3e}, below {GAP_WARNING_FACTOR:g}x the "
                f"clustering threshold {tol:.3e}"
            )

    return SpectralDecomposition(
        eigenvalues=tuple(eigenvalues),
        multiplicities=tuple(multiplicities),
        projectors=tuple(projectors),
        warnings=tuple(warnings),
    )


def decompose_graph(g: Graph, cluster_tol: float = DEFAULT_CLUSTER_TOL) -> SpectralDecomposition:
    return decompose(signless_laplacian(g), cluster_tol)


def transition_matrix(dec: SpectralDecomposition, tau: float) -> np.ndarray:
    """U_Q(tau) = sum_r exp(-i tau theta_r) F_r."""
    n = dec.n
    out = np.zeros((n, n), dtype=complex)
    for theta, f in zip(dec.eigenvalues, dec.projectors):
        out += np.exp(-1j * tau * theta) * f
    return out


def transition_amplitude(dec: SpectralDecomposition, u: int, v: int, taus):
    """Entry U_Q(tau)[u, v] for a scalar tau or an array of times."""
    taus_arr = np.asarray(taus, dtype=float)
    out = np.zeros(taus_arr.shape, dtype=complex)
    for theta, f in zip(dec.eigenvalues, dec.projectors):
        out = out + np.exp(-1j * taus_arr * theta) * f[u, v]
    if np.isscalar(taus) or getattr(taus, "ndim", 0) == 0:
        return complex(out)
    return out


def amplitude(dec: SpectralDecomposition, u: int, v: int, tau: float) -> Amplitude:
    return Amplitude(
        value=transition_amplitude(dec, u, v, float(tau)),
        time=float(tau),
        source=int(u),
        target=int(v),
    )


def eigenvalue_support(
    dec: SpectralDecomposition, u: int, support_tol: float = DEFAULT_SUPPORT_TOL
) -> tuple:
    """Eigenvalues whose projector column at u is nonzero (max norm)."""
    out = []
    for theta, f in zip(dec.eigenvalues, dec.projectors):
        if float(np.max(np.abs(f[:, u]))) > support_tol:
            out.append(theta)
    return tuple(out)


def strong_cospectrality(
    dec: SpectralDecomposition, u: int, v: int, tol: float = DEFAULT_SUPPORT_TOL
):
    """True iff every projector column satisfies F e_u = +/- F e_v.

    Returns (flag, signs) with one sign per eigenvalue: +1 or -1 for a
    matched nonzero column, 0 when F e_u vanishes.  A column that vanishes
    on one side only, or matches neither sign, makes the flag false.
    """
    if u == v:
        raise ValueError("strong cospectrality needs two distinct vertices")
    flag = True
    signs = []
    for f in dec.projectors:
        x = f[:, u]
        y = f[:, v]
        x_zero = float(np.max(np.abs(x))) <= tol
        y_zero = float(np.max(np.abs(y))) <= tol
        if x_zero and y_zero:
            signs.append(0)
            continue
        if x_zero != y_zero:
            signs.append(0)
            flag = False
            continue
        if float(np.max(np.abs(x - y))) <= tol:
            signs.append(1)
        elif float(np.max(np.abs(x + y))) <= tol:
            signs.append(-1)
        else:
            signs.append(0)
            flag = False
    return flag, tuple(signs)


def antipodal_identity_check(g: Graph, tol: float = DEFAULT_SUPPORT_TOL) -> bool:
    """Check A_d F_i = (-1)^i F_i for every projector, eigenvalues descending.

    A_d is the 0/1 matrix of vertex pairs at distance exactly the diameter.
    Holds for antipodal distance-regular graphs whose antipodal classes
    have size two; fails elsewhere.
    """
    if not is_connected(g):
        raise ValueError("antipodal identity needs a connected graph")
    a_d = distance_k_adjacency(g, diameter(g))
    dec = decompose_graph(g)
    for i, f in enumerate(dec.projectors):
        want = f if i % 2 == 0 else -f
        if float(np.max(np.abs(a_d @ f - want))) > tol:
            return False
    return True


@dataclass(frozen=True)
class FidelityScan:
    """Grid samples of |U(tau)_{uv}|^2 plus the refined running maximum."""

    taus: np.ndarray
    fidelities: np.ndarray
    best_tau: float
    best_fidelity: float


def fidelity_scan(
    dec: SpectralDecomposition, u: int, v: int, t_max: float, steps: int
) -> FidelityScan:
    """Sample |U(tau)_{uv}|^2 over tau in (0, t_max] and refine the maximum.

    The grid has `steps` uniform points ending at t_max.  Around the best
    grid point the maximum is sharpened by a bracketed golden-section
    search; the refined value is never below the grid value.  Ties on the
    grid resolve to the smaller tau.
    """
    if t_max <= 0:
        raise ValueError(f"t_max must be positive, got {t_max}")
    steps = int(steps)
    if steps < 2:
        raise ValueError(f"steps must be at least 2, got {steps}")

    taus = t_max * np.arange(1, steps + 1) / steps
    amps = transition_amplitude(dec, u, v, taus)
    fids = np.abs(amps) ** 2

    best = int(np.argmax(fids))
    best_tau = float(taus[best])
    best_fid = float(fids[best])

    lo = float(taus[best - 1]) if best > 0 else 0.0
    hi = float(taus[best + 1]) if best + 1 < steps else float(taus[best])

    def neg_fid(t: float) -> float:
        return -abs(transition_amplitude(dec, u, v, float(t))) ** 2

    if hi > lo:
        try:
            res = minimize_scalar(neg_fid, bracket=(lo, best_tau, hi), method="golden")
        except ValueError:
            res = minimize_scalar(neg_fid, bounds=(lo, hi), method="bounded")
        cand_tau = float(res.x)
        cand_fid = float(-res.fun)
        if lo < cand_tau <= t_max and cand_fid > best_fid:
            best_tau, best_fid = cand_tau, cand_fid

    taus.flags.writeable = False
    fids.flags.writeable = False
    return FidelityScan(taus=taus, fidelities=fids, best_tau=best_tau, best_fidelity=best_fid)
