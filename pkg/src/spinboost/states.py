"""Parametrized state families and named special states.

Momentum states live on the two-particle momentum pair (dim 4, order
[pA, pB]), spin states on the two-particle spin pair (dim 9, order
[sA, sB]). Assembly produces the canonical [pA, pB, sA, sB] product state.

Basis conventions: momentum |p+> is index 0 and |p-> index 1 within each
particle; spin indices run |1> = 0, |0> = 1, |-1> = 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .lorentz import wigner_d
from .tensor import NORM_TOL, PureState, kron


class SpinFamily(Enum):
    S1 = "s1"
    S2 = "s2"


@dataclass(frozen=True)
class MomentumParams:
    alpha: float


@dataclass(frozen=True)
class SpinParams:
    family: SpinFamily
    theta: float
    phi: float


# basis positions of the three amplitudes of each family within the 9-dim spin space
_S1_INDICES = (0, 4, 8)  # |1 1>, |0 0>, |-1 -1>
_S2_INDICES = (2, 6, 4)  # |1 -1>, |-1 1>, |0 0>

# momentum basis positions within the 4-dim momentum space
_IDX_PLUS_MINUS = 1  # |p+ p->
_IDX_MINUS_PLUS = 2  # |p- p+>


def momentum_state(params: MomentumParams | float) -> np.ndarray:
    """cos(alpha) |p+ p-> + sin(alpha) |p- p+> as a 4-dim vector."""
    alpha = params.alpha if isinstance(params, MomentumParams) else float(params)
    vec = np.zeros(4, dtype=complex)
    vec[_IDX_PLUS_MINUS] = math.cos(alpha)
    vec[_IDX_MINUS_PLUS] = math.sin(alpha)
    return vec


def spin_state(params: SpinParams) -> np.ndarray:
    """Three-term spin superposition of the requested family, 9-dim vector.

    Family S1 puts (sin t cos p, sin t sin p, cos t) on |1 1>, |0 0>, |-1 -1>;
    family S2 uses |1 -1>, |-1 1>, |0 0> instead.
    """
    indices = _S1_INDICES if params.family is SpinFamily.S1 else _S2_INDICES
    vec = np.zeros(9, dtype=complex)
    st = math.sin(params.theta)
    vec[indices[0]] = st * math.cos(params.phi)
    vec[indices[1]] = st * math.sin(params.phi)
    vec[indices[2]] = math.cos(params.theta)
    return vec


def assemble(spin: np.ndarray, momentum: np.ndarray) -> PureState:
    """Product state |momentum> x |spin> in the canonical factor order."""
    spin = np.asarray(spin, dtype=complex)
    momentum = np.asarray(momentum, dtype=complex)
    if abs(np.linalg.norm(spin) - 1.0) > NORM_TOL:
        raise ValueError("spin vector is not normalized")
    if abs(np.linalg.norm(momentum) - 1.0) > NORM_TOL:
        raise ValueError("momentum vector is not normalized")
    return PureState(np.kron(momentum, spin))


def invariant_spin_state() -> np.ndarray:
    """(|1 1> - |0 0> + |-1 -1>) / sqrt(3).

    This sign pattern satisfies d1(w) M d1(w) = M with M = diag(1, -1, 1),
    which makes the state invariant under the paired rotation
    d1(w) x d1(-w) for every angle w. The other sign choices on the middle
    and last term do not share the property; see invariance_defect.
    """
    return sign_pattern_state(-1, +1)


def sign_pattern_state(sign_00: int, sign_mm: int) -> np.ndarray:
    """(|1 1> + sign_00 |0 0> + sign_mm |-1 -1>) / sqrt(3)."""
    if sign_00 not in (-1, 1) or sign_mm not in (-1, 1):
        raise ValueError("signs must be +1 or -1")
    vec = np.zeros(9, dtype=complex)
    vec[0] = 1.0
    vec[4] = float(sign_00)
    vec[8] = float(sign_mm)
    return vec / math.sqrt(3.0)


def invariance_defect(spin: np.ndarray, omega: float) -> float:
    """Norm of (d1(omega) x d1(-omega)) |spin> - |spin>.

    Zero exactly for the invariant state; order 0.5 for the other sign
    patterns of the same three-term family.
    """
    rot = kron(wigner_d(1, omega).matrix, wigner_d(1, -omega).matrix)
    spin = np.asarray(spin, dtype=complex)
    return float(np.linalg.norm(rot @ spin - spin))


@dataclass(frozen=True)
class NamedState:
    """A catalog entry: a spin state with its family parameters."""

    name: str
    family: SpinFamily
    theta: float
    phi: float
    description: str

    @property
    def params(self) -> SpinParams:
        return SpinParams(self.family, self.theta, self.phi)

    def spin_vector(self) -> np.ndarray:
        return spin_state(self.params)


_THETA_INV = math.atan(math.sqrt(2.0))

NAMED_STATES: dict[str, NamedState] = {
    state.name: state
    for state in (
        NamedState("s00", SpinFamily.S1, math.pi / 2, math.pi / 2, "|0 0>"),
        NamedState("phi-plus", SpinFamily.S1, math.pi / 4, 0.0, "(|1 1> + |-1 -1>)/sqrt2"),
        NamedState("phi-minus", SpinFamily.S1, 3 * math.pi / 4, 0.0, "(|1 1> - |-1 -1>)/sqrt2"),
        NamedState("bell-plus", SpinFamily.S2, math.pi / 2, math.pi / 4, "(|1 -1> + |-1 1>)/sqrt2"),
        NamedState("bell-minus", SpinFamily.S2, math.pi / 2, 7 * math.pi / 4, "(|1 -1> - |-1 1>)/sqrt2"),
        NamedState("singlet", SpinFamily.S2, math.pi - _THETA_INV, math.pi / 4,
                   "(|1 -1> + |-1 1> - |0 0>)/sqrt3"),
        NamedState("inv3", SpinFamily.S1, _THETA_INV, 7 * math.pi / 4,
                   "(|1 1> - |0 0> + |-1 -1>)/sqrt3, boost invariant"),
    )
}


def get_named_state(name: str) -> NamedState:
    try:
        return NAMED_STATES[name]
    except KeyError:
        known = ", ".join(sorted(NAMED_STATES))
        raise ValueError(f"unknown state name {name!r}; known names: {known}") from None
