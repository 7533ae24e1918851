"""Numerical laboratory for the zitterbewegung of the Dirac field.

Three layers:

* `kinematics` -- momentum lattices, Dirac matrices, spinor doublets,
  polarization triads and the electron-positron pair coupling tensor;
* `fock` -- exact sparse-matrix Fock space in which the total current
  operator is assembled directly and verified against its decomposition
  into a number-diagonal drift part plus transverse/longitudinal pair
  parts oscillating at twice the mode energy;
* `dynamics` -- first-quantized wave-packet propagation exhibiting the
  2*omega current oscillation, with a closed-form single-mode oracle and a
  periodogram-based frequency detector.

`horizon` renders the exchange-interaction event diagrams (flat space and
with a horizon), and `cli` exposes the batch commands.
"""

from .errors import (
    ConfigError,
    InsufficientSamples,
    NonPositiveRadius,
    TooLarge,
    UnknownDof,
    UnresolvedPacket,
    UnsupportedFormat,
    ZblabError,
    ZeroEnergyMode,
    ZeroMomentum,
)
from .kinematics import (
    DiracSpinorSet,
    LatticeSpec,
    MomentumMode,
    PairCoefficientTensor,
    PolarizationBasis,
    build_lattice,
    calibrate_channels,
    classical_velocity,
    dirac_matrices,
    make_spinors,
    pair_coefficients,
    pair_trace_norm,
    polarization_basis,
)

__version__ = "0.1.0"
