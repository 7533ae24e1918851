"""Momentum-lattice kinematics for the free Dirac field.

Single-mode building blocks consumed by the Fock-space current assemblies
and the wave-packet propagator: box-normalized momentum lattices, the Dirac
alpha/beta matrices in the standard representation, positive- and
negative-energy spinor doublets, the complex polarization triad attached to
each momentum direction, and the coupling tensor between electron and
positron modes at opposite momenta that drives the oscillatory part of the
current.

Conventions
-----------
* Natural units; omega = sqrt(k^2 + m^2).
* Spinors are normalized to u^h u = v^h v = delta_{ss'} (not 2E), so the
  single-mode velocity u^h alpha u comes out as k/omega.
* Spin doublets are quantized along the momentum direction.  On the k3
  axis (and for k = 0) the azimuth is fixed by the k_perp -> 0+, k2 = 0
  limit, which keeps all quantities continuous off the axis.
* v(k, s) is the negative-energy eigenvector of alpha.k + beta m.  It is
  the spinor carried by the positron mode of momentum -k, which is why the
  pair tensor below contracts u(k, s) with v(k, s') directly.

All functions are pure and return read-only arrays; they are safe to
evaluate concurrently over modes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import ZeroEnergyMode, ZeroMomentum

__all__ = [
    "ALGEBRAIC_TOL",
    "SPECTRAL_TOL",
    "LatticeSpec",
    "MomentumMode",
    "DiracSpinorSet",
    "PolarizationBasis",
    "PairCoefficientTensor",
    "ChannelAlignment",
    "dirac_matrices",
    "build_lattice",
    "helicity_doublet",
    "make_spinors",
    "polarization_basis",
    "rest_frame_triad",
    "pair_coefficients",
    "pair_trace_norm",
    "classical_velocity",
    "channel_layout",
    "align_channels",
    "calibrate_channels",
]

# Double-precision tolerance budget: algebraic identities vs. derived
# spectral quantities.
ALGEBRAIC_TOL = 1e-12
SPECTRAL_TOL = 1e-10

_SIGMA = np.array(
    [
        [[0.0, 1.0], [1.0, 0.0]],
        [[0.0, -1.0j], [1.0j, 0.0]],
        [[1.0, 0.0], [0.0, -1.0]],
    ],
    dtype=complex,
)
_SIGMA.setflags(write=False)


def _build_alphas():
    alphas = np.zeros((3, 4, 4), dtype=complex)
    alphas[:, :2, 2:] = _SIGMA
    alphas[:, 2:, :2] = _SIGMA
    alphas.setflags(write=False)
    return alphas


_ALPHAS = _build_alphas()
_BETA = np.diag([1.0, 1.0, -1.0, -1.0]).astype(complex)
_BETA.setflags(write=False)


def dirac_matrices():
    """Return (alpha1, alpha2, alpha3, beta) in the standard representation.

    The alphas carry the Pauli matrices on the off-diagonal 2x2 blocks and
    beta = diag(1, 1, -1, -1).  The Clifford relations
    {alpha_i, alpha_j} = 2 delta_ij, {alpha_i, beta} = 0 and beta^2 = 1
    hold exactly in this representation.
    """
    return (
        _ALPHAS[0].copy(),
        _ALPHAS[1].copy(),
        _ALPHAS[2].copy(),
        _BETA.copy(),
    )


def _sigma_dot(k):
    """2x2 matrix sigma . k."""
    k = np.asarray(k, dtype=float)
    return k[0] * _SIGMA[0] + k[1] * _SIGMA[1] + k[2] * _SIGMA[2]


def mode_energy(k, mass):
    """omega = sqrt(k^2 + m^2)."""
    k = np.asarray(k, dtype=float)
    return float(np.sqrt(k @ k + mass * mass))


@dataclass(frozen=True)
class LatticeSpec:
    """Cubic momentum lattice k = spacing * n with |n_i| <= half_extent.

    The generated mode set is closed under k -> -k by construction.  A
    massless lattice must not contain the k = 0 mode, since omega = 0 is
    forbidden everywhere in the package.
    """

    mass: float
    spacing: float
    half_extent: int
    dim: int = 1

    def __post_init__(self):
        if not np.isfinite(self.mass) or self.mass < 0:
            raise ValueError("mass must be finite and non-negative")
        if not np.isfinite(self.spacing) or self.spacing <= 0:
            raise ValueError("spacing must be finite and positive")
        if int(self.half_extent) != self.half_extent or self.half_extent < 0:
            raise ValueError("half_extent must be a non-negative integer")
        if self.dim not in (1, 3):
            raise ValueError("dim must be 1 or 3")


@dataclass(frozen=True)
class MomentumMode:
    """A single lattice point with its derived energy.

    `steps` are the integer lattice coordinates, so negation closure and
    partner lookup are exact; `k = spacing * steps`.
    """

    steps: tuple
    k: tuple
    omega: float
    index: int

    @property
    def k_vec(self):
        return np.array(self.k, dtype=float)


def build_lattice(spec):
    """Enumerate all modes of `spec`, sorted by a stable index.

    One-dimensional lattices run along the first axis.  Raises
    ZeroEnergyMode when the massless lattice would contain k = 0.
    """
    n = spec.half_extent
    if spec.dim == 1:
        steps = [(i, 0, 0) for i in range(-n, n + 1)]
    else:
        rng = range(-n, n + 1)
        steps = list(itertools.product(rng, rng, rng))
    steps.sort()
    modes = []
    for index, s in enumerate(steps):
        k = tuple(spec.spacing * c for c in s)
        omega = mode_energy(k, spec.mass)
        if omega == 0.0:
            raise ZeroEnergyMode(
                "massless lattice contains the k = 0 mode (omega = 0)"
            )
        modes.append(MomentumMode(steps=s, k=k, omega=omega, index=index))
    return modes


def helicity_doublet(k):
    """Two-spinor doublet quantized along k.

    Returns (chi_plus, chi_minus) with (sigma . khat) chi_pm = +-chi_pm.
    For k = 0 and on the k3 axis the azimuth is fixed at phi = 0 (the
    k_perp -> 0+, k2 = 0 limit), giving the plain z basis at k = 0.
    """
    k = np.asarray(k, dtype=float)
    norm = float(np.linalg.norm(k))
    if norm == 0.0:
        return (
            np.array([1.0, 0.0], dtype=complex),
            np.array([0.0, 1.0], dtype=complex),
        )
    half = 0.5 * np.arccos(np.clip(k[2] / norm, -1.0, 1.0))
    phase = np.exp(1j * np.arctan2(k[1], k[0]))
    c, s = np.cos(half), np.sin(half)
    chi_plus = np.array([c, phase * s], dtype=complex)
    chi_minus = np.array([-np.conj(phase) * s, c], dtype=complex)
    return chi_plus, chi_minus


@dataclass(frozen=True)
class DiracSpinorSet:
    """The four 4-component spinors at fixed (k, m).

    `u[s-1]` / `v[s-1]` hold the spin-s positive/negative energy
    eigenvectors of alpha.k + beta m, with eigenvalues +-omega and
    u^h u = v^h v = delta_{ss'}.
    """

    k: tuple
    mass: float
    basis: str
    u: np.ndarray
    v: np.ndarray

    def __post_init__(self):
        self.u.setflags(write=False)
        self.v.setflags(write=False)

    @property
    def omega(self):
        return mode_energy(self.k, self.mass)


def make_spinors(k, mass, basis="helicity"):
    """Build the spinor set at (k, m).

    basis = "helicity" uses the momentum-direction doublet for both u and
    v; this is the convention in which the pair-coupling tensor takes the
    reference channel layout (see `channel_layout`) with no extra rotation.
    basis = "zaxis" quantizes u along +z and derives the v doublet by
    charge conjugation (xi_s = -i sigma2 chi_s*); its channel layout
    differs by per-mode unitaries, which `calibrate_channels` recovers.
    """
    k = np.asarray(k, dtype=float)
    omega = mode_energy(k, mass)
    if omega == 0.0:
        raise ZeroEnergyMode("omega = 0: spinors undefined")
    if basis == "helicity":
        chis = helicity_doublet(k)
        xis = chis
    elif basis == "zaxis":
        chis = (
            np.array([1.0, 0.0], dtype=complex),
            np.array([0.0, 1.0], dtype=complex),
        )
        xis = (
            np.array([0.0, 1.0], dtype=complex),
            np.array([-1.0, 0.0], dtype=complex),
        )
    else:
        raise ValueError(f"unknown spin basis {basis!r}")
    scale = np.sqrt((omega + mass) / (2.0 * omega))
    lower = _sigma_dot(k) / (omega + mass)
    u = np.stack([scale * np.concatenate([chi, lower @ chi]) for chi in chis])
    v = np.stack([scale * np.concatenate([-lower @ xi, xi]) for xi in xis])
    return DiracSpinorSet(k=tuple(k), mass=float(mass), basis=basis, u=u, v=v)


@dataclass(frozen=True)
class PolarizationBasis:
    """Complex orthonormal triad attached to a momentum direction.

    eta_zero = k/|k| is longitudinal; eta_plus/eta_minus are transverse
    with eta_minus = conj(eta_plus).  `axis_degenerate` marks momenta on
    the k3 axis, where the generic formula degenerates and the documented
    limit convention is used instead.
    """

    eta_plus: np.ndarray
    eta_zero: np.ndarray
    eta_minus: np.ndarray
    axis_degenerate: bool

    def __post_init__(self):
        self.eta_plus.setflags(write=False)
        self.eta_zero.setflags(write=False)
        self.eta_minus.setflags(write=False)


_SQRT2 = np.sqrt(2.0)


def polarization_basis(k):
    """Polarization triad at k; requires |k| > 0.

    The transverse members divide by k1 - i k2, so on the k3 axis the
    k_perp -> 0+, k2 = 0 limit is taken: eta_plus = (1, i, 0)/sqrt(2) for
    k3 > 0 and (-1, i, 0)/sqrt(2) for k3 < 0.  At k = 0 the triad is
    undefined and ZeroMomentum is raised.
    """
    k = np.asarray(k, dtype=float)
    norm = float(np.linalg.norm(k))
    if norm == 0.0:
        raise ZeroMomentum("polarization triad undefined at k = 0")
    k1, k2, k3 = k
    if k1 == 0.0 and k2 == 0.0:
        sign = 1.0 if k3 > 0 else -1.0
        plus = np.array([sign, 1.0j, 0.0]) / _SQRT2
        degenerate = True
    else:
        den = k1 - 1.0j * k2
        plus = np.array(
            [
                (k1 * k3 - 1.0j * k2 * norm) / den,
                (k2 * k3 + 1.0j * k1 * norm) / den,
                -(k1 + 1.0j * k2),
            ]
        ) / (_SQRT2 * norm)
        degenerate = False
    zero = (k / norm).astype(complex)
    return PolarizationBasis(
        eta_plus=plus,
        eta_zero=zero,
        eta_minus=np.conj(plus),
        axis_degenerate=degenerate,
    )


def rest_frame_triad():
    """Conventional triad for the zero-momentum mode.

    The k3 -> 0+ axis limit: eta_zero = z-hat, eta_plus = (1, i, 0)/sqrt(2).
    `polarization_basis` deliberately raises at k = 0; the Fock-space
    assemblies use this fixed convention there, matching the rest-frame
    spin doublet so the current decomposition stays exact on lattices that
    contain the zero mode.
    """
    return PolarizationBasis(
        eta_plus=np.array([1.0, 1.0j, 0.0]) / _SQRT2,
        eta_zero=np.array([0.0, 0.0, 1.0], dtype=complex),
        eta_minus=np.array([1.0, -1.0j, 0.0]) / _SQRT2,
        axis_degenerate=True,
    )


@dataclass(frozen=True)
class PairCoefficientTensor:
    """Coupling tensor of electron-positron pairs with zero net momentum.

    coeffs[i, s-1, s'-1] = u(k,s)^h alpha_i v(k,s') multiplies the creation
    of an electron at k with spin s together with a positron at -k with
    spin s' (v(k, .) being the spinor carried by the -k positron mode).
    `longitudinal` is the projection onto k-hat and `transverse` the
    remainder; their Gram matrices have the spin-basis-independent spectra
    {m^2/omega^2, m^2/omega^2} and {2, 2}.
    """

    k: tuple
    mass: float
    omega: float
    coeffs: np.ndarray
    longitudinal: np.ndarray
    transverse: np.ndarray

    def __post_init__(self):
        self.coeffs.setflags(write=False)
        self.longitudinal.setflags(write=False)
        self.transverse.setflags(write=False)

    @property
    def frobenius_sq(self):
        """Total squared coupling strength; equals 4 + 2 m^2/omega^2."""
        return float(np.sum(np.abs(self.coeffs) ** 2))

    @property
    def transverse_gram(self):
        """sum_i T_i^h T_i; eigenvalues {2, 2}."""
        return np.einsum("iab,iac->bc", np.conj(self.transverse), self.transverse)

    @property
    def longitudinal_gram(self):
        """L^h L; eigenvalues {m^2/omega^2, m^2/omega^2}."""
        return np.conj(self.longitudinal).T @ self.longitudinal


def pair_coefficients(k, mass, basis="helicity"):
    """Pair coupling tensor at (k, m); requires omega > 0 and |k| > 0."""
    k = np.asarray(k, dtype=float)
    norm = float(np.linalg.norm(k))
    if norm == 0.0:
        raise ZeroMomentum("pair tensor split undefined at k = 0")
    spinors = make_spinors(k, mass, basis=basis)
    coeffs = np.einsum("sa,iab,tb->ist", np.conj(spinors.u), _ALPHAS, spinors.v)
    khat = k / norm
    longitudinal = np.einsum("i,ist->st", khat, coeffs)
    transverse = coeffs - khat[:, None, None] * longitudinal[None, :, :]
    return PairCoefficientTensor(
        k=tuple(k),
        mass=float(mass),
        omega=spinors.omega,
        coeffs=coeffs,
        longitudinal=longitudinal,
        transverse=transverse,
    )


def pair_trace_norm(k, mass):
    """Projector-trace oracle for the squared pair-coupling strength.

    Computes sum_i Tr[P+ alpha_i P- alpha_i] with P+- the energy-branch
    projectors (omega +- (alpha.k + beta m)) / (2 omega).  This equals
    sum_{i,s,s'} |coeffs_i(s,s')|^2 for any spin-basis choice, and its
    closed form is 4 + 2 m^2/omega^2.
    """
    k = np.asarray(k, dtype=float)
    omega = mode_energy(k, mass)
    if omega == 0.0:
        raise ZeroEnergyMode("omega = 0")
    h = (
        k[0] * _ALPHAS[0]
        + k[1] * _ALPHAS[1]
        + k[2] * _ALPHAS[2]
        + mass * _BETA
    )
    eye = np.eye(4, dtype=complex)
    p_plus = (omega * eye + h) / (2.0 * omega)
    p_minus = (omega * eye - h) / (2.0 * omega)
    total = 0.0
    for a in _ALPHAS:
        total += np.trace(p_plus @ a @ p_minus @ a).real
    return float(total)


def classical_velocity(k, mass):
    """Drift velocity k/omega of a mode; equals u(k,s)^h alpha u(k,s)."""
    k = np.asarray(k, dtype=float)
    omega = mode_energy(k, mass)
    if omega == 0.0:
        raise ZeroEnergyMode("omega = 0")
    return k / omega


def channel_layout(k, mass, pairing="symmetric"):
    """Reference creation-channel coefficient tensor for the pair current.

    layout[i, s-1, s'-1] multiplies c^dag(k,s) d^dag(-k,s'): the diagonal
    channels carry +-(m/omega) eta(k,0) and the off-diagonal channels
    sqrt(2) times a transverse triad member.  Two conventions exist for
    the momentum labels feeding the second transverse channel:

    * "symmetric": channel (1,2) carries sqrt(2) eta(k,-1);
    * "crossed":   channel (1,2) carries sqrt(2) eta(-k,-1), i.e. the
      annihilation-side labels are pinned to the opposite momentum.

    In the helicity spin basis the pair tensor reproduces the "symmetric"
    layout identically; no spin convention can reproduce "crossed" (its
    transverse part is rank deficient in the channel space).
    """
    if pairing not in ("symmetric", "crossed"):
        raise ValueError(f"unknown pairing {pairing!r}")
    k = np.asarray(k, dtype=float)
    omega = mode_energy(k, mass)
    if omega == 0.0:
        raise ZeroEnergyMode("omega = 0")
    if float(np.linalg.norm(k)) == 0.0:
        triad = rest_frame_triad()
        triad_neg = triad
    else:
        triad = polarization_basis(k)
        triad_neg = polarization_basis(-k)
    layout = np.zeros((3, 2, 2), dtype=complex)
    layout[:, 0, 0] = (mass / omega) * triad.eta_zero
    layout[:, 1, 1] = -(mass / omega) * triad.eta_zero
    layout[:, 1, 0] = _SQRT2 * triad.eta_plus
    if pairing == "symmetric":
        layout[:, 0, 1] = _SQRT2 * triad.eta_minus
    else:
        layout[:, 0, 1] = _SQRT2 * triad_neg.eta_minus
    return layout


@dataclass(frozen=True)
class ChannelAlignment:
    """Result of aligning a pair tensor with a reference channel layout."""

    pairing: str
    identity_residual: float
    aligned_residual: float
    left: np.ndarray
    right: np.ndarray


def _unitary_2x2(params):
    phase, a, b, c = params
    ca, sa = np.cos(a), np.sin(a)
    return np.exp(1j * phase) * np.array(
        [
            [ca * np.exp(1j * b), sa * np.exp(1j * c)],
            [-sa * np.exp(-1j * c), ca * np.exp(-1j * b)],
        ]
    )


def _layout_residual(coeffs, target, left, right):
    rotated = np.einsum("ab,iac,cd->ibd", np.conj(left), coeffs, right)
    num = np.sum(np.abs(rotated - target) ** 2)
    den = np.sum(np.abs(target) ** 2)
    return float(np.sqrt(num / den))


def align_channels(coeffs, target, restarts=8, seed=0):
    """Search 2x2 spin rotations (A, B) minimizing |A^h C B - target|.

    Returns (residual, A, B).  The search is a report-only diagnostic: the
    current decomposition never requires it because the helicity basis
    matches the "symmetric" layout with A = B = 1.
    """
    from scipy.optimize import minimize

    rng = np.random.default_rng(seed)
    eye = np.eye(2, dtype=complex)
    best = (_layout_residual(coeffs, target, eye, eye), eye, eye)

    def objective(params):
        return _layout_residual(
            coeffs, target, _unitary_2x2(params[:4]), _unitary_2x2(params[4:])
        )

    for _ in range(restarts):
        x0 = rng.uniform(-np.pi, np.pi, size=8)
        result = minimize(objective, x0, method="Nelder-Mead",
                          options={"maxiter": 4000, "xatol": 1e-12, "fatol": 1e-14})
        if result.fun < best[0]:
            best = (
                float(result.fun),
                _unitary_2x2(result.x[:4]),
                _unitary_2x2(result.x[4:]),
            )
    return best


def calibrate_channels(k, mass, basis="helicity", restarts=8, seed=0):
    """Compare the pair tensor against both reference layouts.

    Returns a tuple of ChannelAlignment, one per pairing convention.  When
    the identity rotation already reproduces a layout to ALGEBRAIC_TOL the
    search is skipped for that pairing.
    """
    tensor = pair_coefficients(k, mass, basis=basis)
    reports = []
    eye = np.eye(2, dtype=complex)
    for pairing in ("symmetric", "crossed"):
        target = channel_layout(k, mass, pairing=pairing)
        identity = _layout_residual(tensor.coeffs, target, eye, eye)
        if identity <= ALGEBRAIC_TOL:
            reports.append(
                ChannelAlignment(pairing, identity, identity, eye, eye)
            )
            continue
        residual, left, right = align_channels(
            tensor.coeffs, target, restarts=restarts, seed=seed
        )
        reports.append(ChannelAlignment(pairing, identity, residual, left, right))
    return tuple(reports)
