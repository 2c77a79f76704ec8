"""Closed-form eigensystem of vertex complemented coronas of regular graphs.

For an r1-regular connected base G on n1 vertices and an r2-regular
attachment H on n2 vertices, the signless Laplacian spectrum of the corona
splits into three families, written with s = n1 + 2*r2 - 1 and
t = n2*(n1 - 1):

  shift      n1 - 1 + mu, one block per copy, for each eigenvalue mu of
             Q(H); the all-ones direction at mu = 2*r2 is excluded
  pair       ((theta + s + t) +/- sqrt((theta - s + t)^2 + 4*n2)) / 2
             for each eigenvalue theta of Q(G) below the top
  top pair   ((2*r1 + s + t) +/- sqrt((2*r1 - s + t)^2
             + 4*n2*(n1 - 1)^2)) / 2

Values are carried exactly (QuadExt) whenever the source spectrum is
integral, so downstream certification needs no float recognition.  The
transition element between base vertices is evaluated from G's
decomposition alone, without assembling the corona.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebraic import QuadExt, square_free_part
from .graphs import Graph, is_connected, regular_degree, signless_laplacian
from .spectra import SpectralDecomposition

INTEGRALITY_TOL = 1e-6

SHIFT = "shift"
PAIR_PLUS = "pair-plus"
PAIR_MINUS = "pair-minus"
TOP_PLUS = "top-plus"
TOP_MINUS = "top-minus"


@dataclass(frozen=True)
class CoronaParams:
    """Orders and degrees of the two factors, with the derived shifts s, t."""

    n1: int
    n2: int
    r1: int
    r2: int

    def __post_init__(self) -> None:
        for field in ("n1", "n2", "r1", "r2"):
            val = getattr(self, field)
            if not isinstance(val, int):
                raise TypeError(f"{field} must be an integer, got {val!r}")
        if self.n1 <= 0 or self.n2 <= 0:
            raise ValueError(f"orders must be positive, got n1={self.n1}, n2={self.n2}")
        if not 0 <= self.r1 <= self.n1 - 1:
            raise ValueError(f"base degree r1={self.r1} out of range [0, {self.n1 - 1}]")
        if not 0 <= self.r2 <= self.n2 - 1:
            raise ValueError(
                f"attachment degree r2={self.r2} out of range [0, {self.n2 - 1}]"
            )

    @property
    def s(self) -> int:
        return self.n1 + 2 * self.r2 - 1

    @property
    def t(self) -> int:
        return self.n2 * (self.n1 - 1)

    @classmethod
    def from_graphs(cls, g: Graph, h: Graph) -> CoronaParams:
        if not is_connected(g):
            raise ValueError("corona closed form needs a connected base graph")
        return cls(n1=g.n, n2=h.n, r1=regular_degree(g), r2=regular_degree(h))


def pair_radicand(params: CoronaParams, theta: int) -> int:
    """(theta - s + t)^2 + 4*n2, the squared gap of one eigenvalue pair."""
    return (theta - params.s + params.t) ** 2 + 4 * params.n2


def top_radicand(params: CoronaParams) -> int:
    """(2*r1 - s + t)^2 + 4*n2*(n1 - 1)^2, squared gap of the top pair."""
    x = 2 * params.r1 - params.s + params.t
    return x * x + 4 * params.n2 * (params.n1 - 1) ** 2


def pair_identity_targets(params: CoronaParams, theta: int):
    """Exact targets for the pair products:

    (s - v+)(s - v-) = -n2  and  ((s - v+)^2 + n2)((s - v-)^2 + n2) = n2 * D.
    """
    d = pair_radicand(params, theta)
    return -params.n2, params.n2 * d


def top_identity_targets(params: CoronaParams):
    """Same products for the top pair, with n2*(1 - n1)^2 in place of n2."""
    d = top_radicand(params)
    c = params.n2 * (1 - params.n1) ** 2
    return -c, c * d


@dataclass(frozen=True)
class CoronaEigenvalue:
    """One closed-form eigenvalue: family tag, exact or float value, origin.

    `origin` is the source eigenvalue (mu of H for shifts, theta of G for
    pairs), `radicand` the integer (or float) D with pair gap sqrt(D), and
    `source_index` the position of the origin in its decomposition.
    """

    kind: str
    value: object
    origin: float
    multiplicity: int
    radicand: object = None
    source_index: int = -1

    def __float__(self) -> float:
        return float(self.value)


def _as_int(x: float) -> int | None:
    r = round(float(x))
    if abs(float(x) - r) <= INTEGRALITY_TOL:
        return int(r)
    return None


def _pair_values(theta, a_sum: int | float, radicand, n_int: int | None):
    """Both members of a pair: QuadExt when the radicand is an exact integer."""
    if n_int is not None:
        d = int(radicand)
        root, delta = square_free_part(d)
        plus = QuadExt(a_sum, root, delta)
        minus = QuadExt(a_sum, -root, delta)
        return plus, minus
    root = math.sqrt(float(radicand))
    return (a_sum + root) / 2.0, (a_sum - root) / 2.0


def _validate_base(gdec: SpectralDecomposition, params: CoronaParams, tol: float) -> None:
    if params.n1 < 2:
        raise ValueError("corona needs at least two base vertices")
    if sum(gdec.multiplicities) != params.n1:
        raise ValueError(
            f"base decomposition has order {sum(gdec.multiplicities)}, expected {params.n1}"
        )
    top = gdec.eigenvalues[0]
    if abs(top - 2 * params.r1) > tol:
        raise ValueError(
            f"top base eigenvalue {top:.12g} does not equal 2*r1 = {2 * params.r1}"
        )
    if gdec.multiplicities[0] != 1:
        raise ValueError("top base eigenvalue is not simple; base graph is disconnected")


@dataclass(frozen=True)
class CoronaSpectrum:
    """Closed-form corona eigensystem with on-demand projector blocks."""

    params: CoronaParams
    entries: tuple
    gdec: SpectralDecomposition
    hdec: SpectralDecomposition

    @property
    def n(self) -> int:
        return self.params.n1 * (1 + self.params.n2)

    def values_with_multiplicity(self) -> list:
        return [(float(e.value), e.multiplicity) for e in self.entries]

    def projector(self, k: int) -> np.ndarray:
        """Materialize the dense eigenprojector of entry k in corona order."""
        entry = self.entries[k]
        p = self.params
        n1, n2 = p.n1, p.n2
        total = n1 * (1 + n2)
        out = np.zeros((total, total))
        if entry.kind == SHIFT:
            f_mu = self.hdec.projectors[entry.source_index]
            block = np.array(f_mu)
            if entry.source_index == 0:
                # all-ones direction removed from the top attachment eigenspace
                block -= np.ones((n2, n2)) / n2
            for i in range(n1):
                lo = n1 + i * n2
                out[lo : lo + n2, lo : lo + n2] = block
            return out

        lam = float(entry.value)
        w = p.s - lam
        if entry.kind in (PAIR_PLUS, PAIR_MINUS):
            f_th = self.gdec.projectors[entry.source_index]
            copy_weight = 1.0
            denom = w * w + n2
        else:
            f_th = self.gdec.projectors[0]
            copy_weight = 1.0 - n1
            denom = w * w + n2 * (n1 - 1) ** 2
        ones_row = np.ones((1, n2))
        ones_block = np.ones((n2, n2))
        out[:n1, :n1] = (w * w / denom) * f_th
        bc = (w * copy_weight / denom) * np.kron(f_th, ones_row)
        out[:n1, n1:] = bc
        out[n1:, :n1] = bc.T
        out[n1:, n1:] = (copy_weight**2 / denom) * np.kron(f_th, ones_block)
        return out

    def as_decomposition(self, tol: float = 1e-8) -> SpectralDecomposition:
        """Merge entries that share a value into a standard decomposition."""
        items = sorted(
            range(len(self.entries)),
            key=lambda k: float(self.entries[k].value),
            reverse=True,
        )
        eigenvalues = []
        multiplicities = []
        projectors = []
        for k in items:
            val = float(self.entries[k].value)
            if eigenvalues and eigenvalues[-1] - val <= tol:
                multiplicities[-1] += self.entries[k].multiplicity
                projectors[-1] = projectors[-1] + self.projector(k)
            else:
                eigenvalues.append(val)
                multiplicities.append(self.entries[k].multiplicity)
                projectors.append(self.projector(k))
        for f in projectors:
            f.flags.writeable = False
        return SpectralDecomposition(
            eigenvalues=tuple(eigenvalues),
            multiplicities=tuple(multiplicities),
            projectors=tuple(projectors),
        )


def corona_spectrum(
    gdec: SpectralDecomposition,
    hdec: SpectralDecomposition,
    params: CoronaParams,
    tol: float = 1e-8,
) -> CoronaSpectrum:
    """All eigenvalues of the corona from the two factor decompositions."""
    _validate_base(gdec, params, tol)
    if sum(hdec.multiplicities) != params.n2:
        raise ValueError(
            f"attachment decomposition has order {sum(hdec.multiplicities)}, "
            f"expected {params.n2}"
        )
    if abs(hdec.eigenvalues[0] - 2 * params.r2) > tol:
        raise ValueError(
            f"top attachment eigenvalue {hdec.eigenvalues[0]:.12g} does not equal "
            f"2*r2 = {2 * params.r2}"
        )

    n1 = params.n1
    s, t = params.s, params.t
    entries = []

    # shift family: one copy of H per base vertex, all-ones directions excluded
    for idx, (mu, m) in enumerate(zip(hdec.eigenvalues, hdec.multiplicities)):
        mult = n1 * (m - 1) if idx == 0 else n1 * m
        if mult == 0:
            continue
        mu_int = _as_int(mu)
        value = QuadExt.from_int(n1 - 1 + mu_int) if mu_int is not None else n1 - 1 + mu
        entries.append(
            CoronaEigenvalue(
                kind=SHIFT,
                value=value,
                origin=float(mu),
                multiplicity=mult,
                radicand=None,
                source_index=idx,
            )
        )

    # pair family for every base eigenvalue below the top
    for idx in range(1, len(gdec.eigenvalues)):
        theta = gdec.eigenvalues[idx]
        m = gdec.multiplicities[idx]
        th_int = _as_int(theta)
        if th_int is not None:
            radicand = pair_radicand(params, th_int)
            a_sum = th_int + s + t
        else:
            radicand = (theta - s + t) ** 2 + 4 * params.n2
            a_sum = theta + s + t
        assert float(radicand) > 0
        plus, minus = _pair_values(theta, a_sum, radicand, th_int)
        for kind, value in ((PAIR_PLUS, plus), (PAIR_MINUS, minus)):
            entries.append(
                CoronaEigenvalue(
                    kind=kind,
                    value=value,
                    origin=float(theta),
                    multiplicity=m,
                    radicand=radicand,
                    source_index=idx,
                )
            )

    # top pair from the simple eigenvalue 2*r1
    radicand = top_radicand(params)
    assert radicand > 0
    plus, minus = _pair_values(2 * params.r1, 2 * params.r1 + s + t, radicand, 1)
    for kind, value in ((TOP_PLUS, plus), (TOP_MINUS, minus)):
        entries.append(
            CoronaEigenvalue(
                kind=kind,
                value=value,
                origin=float(2 * params.r1),
                multiplicity=1,
                radicand=radicand,
                source_index=0,
            )
        )

    total = sum(e.multiplicity for e in entries)
    expect = n1 * (1 + params.n2)
    if total != expect:
        raise AssertionError(f"multiplicities sum to {total}, expected {expect}")
    return CoronaSpectrum(params=params, entries=tuple(entries), gdec=gdec, hdec=hdec)


def corona_transition_element(
    gdec: SpectralDecomposition,
    params: CoronaParams,
    u: int,
    v: int,
    taus,
    tol: float = 1e-8,
):
    """Walk amplitude (u,0) -> (v,0) on the corona, from G's spectrum alone.

    Each base eigenvalue theta contributes
      exp(-i*tau*(theta+s+t)/2) *
        (cos(L*tau/2) - i*((theta-s+t)/L)*sin(L*tau/2)) * F_theta[u,v]
    with L = sqrt((theta-s+t)^2 + 4*n2), and the top eigenvalue 2*r1 the
    same with 4*n2*(n1-1)^2 under the root.
    """
    _validate_base(gdec, params, tol)
    s, t = params.s, params.t
    taus_arr = np.asarray(taus, dtype=float)
    out = np.zeros(taus_arr.shape, dtype=complex)
    for idx, theta in enumerate(gdec.eigenvalues):
        x = theta - s + t
        if idx == 0:
            lam2 = x * x + 4 * params.n2 * (params.n1 - 1) ** 2
        else:
            lam2 = x * x + 4 * params.n2
        assert lam2 > 0
        lam = math.sqrt(lam2)
        half = taus_arr / 2.0
        phase = np.exp(-1j * half * (theta + s + t))
        osc = np.cos(lam * half) - 1j * (x / lam) * np.sin(lam * half)
        out = out + phase * osc * gdec.projectors[idx][u, v]
    if np.isscalar(taus) or getattr(taus, "ndim", 0) == 0:
        return complex(out)
    return out


def corona_full_q(g: Graph, h: Graph) -> np.ndarray:
    """Signless Laplacian of the corona assembled directly in block form.

    Works for arbitrary (not necessarily regular) factors and must equal
    signless_laplacian(vertex_complemented_corona(g, h)) entrywise.
    """
    n1, n2 = g.n, h.n
    total = n1 * (1 + n2)
    q = np.zeros((total, total))
    q[:n1, :n1] = signless_laplacian(g) + (n1 - 1) * n2 * np.eye(n1)
    copy_block = signless_laplacian(h) + (n1 - 1) * np.eye(n2)
    join = np.kron(np.ones((n1, n1)) - np.eye(n1), np.ones((1, n2)))
    q[:n1, n1:] = join
    q[n1:, :n1] = join.T
    q[n1:, n1:] = np.kron(np.eye(n1), copy_block)
    return q
