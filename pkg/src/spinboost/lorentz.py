"""Relativistic kinematics: Wigner angle, rotation matrices, boost operator.

For particles moving along +z and -z and an observer boost along x, the
boost acts on each spin as a rotation about y. The rotation angle has equal
magnitude and opposite sense for the two momentum directions, which makes
the full transformation a momentum-controlled spin rotation on the
composite space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .tensor import kron, kron_all

SUPPORTED_SPINS = (0.5, 1.0)


def wigner_angle(xi: float, eta: float) -> float:
    """Rotation angle from the particle rapidity xi and the boost rapidity eta.

    The angle is arctan(sinh(xi) sinh(eta) / (cosh(xi) + cosh(eta))). The
    ratio grows without bound with the rapidities, so the angle fills
    [0, pi/2) and reaches pi/2 only in the infinite-rapidity limit.
    Symmetric in its arguments and monotone nondecreasing in each.
    """
    if xi < 0 or eta < 0:
        raise ValueError("rapidities must be nonnegative")
    if xi == 0.0 or eta == 0.0:
        return 0.0
    return math.atan(math.sinh(xi) * math.sinh(eta) / (math.cosh(xi) + math.cosh(eta)))


@dataclass(frozen=True)
class BoostSpec:
    """Boost given either as rapidities (xi, eta) or as a direct angle omega.

    The direct-omega path exists so that the limiting angle pi/2, which the
    rapidity formula only approaches, can be requested exactly.
    """

    xi: float | None = None
    eta: float | None = None
    omega: float | None = None

    def __post_init__(self) -> None:
        direct = self.omega is not None
        rapidities = self.xi is not None or self.eta is not None
        if direct and rapidities:
            raise ValueError("give either omega or the rapidity pair, not both")
        if direct:
            if not 0.0 <= self.omega <= math.pi / 2:
                raise ValueError("direct omega must lie in [0, pi/2]")
        else:
            if self.xi is None or self.eta is None:
                raise ValueError("both xi and eta are required")
            if self.xi < 0 or self.eta < 0:
                raise ValueError("rapidities must be nonnegative")

    def resolve(self) -> float:
        if self.omega is not None:
            return float(self.omega)
        return wigner_angle(self.xi, self.eta)


@dataclass(frozen=True)
class WignerRotation:
    """Spin-j rotation about y by angle beta, as a real orthogonal matrix."""

    j: float
    beta: float
    matrix: np.ndarray


def jy_matrix(j: float) -> np.ndarray:
    """Angular-momentum y generator for spin j, basis ordered by descending m."""
    j = float(j)
    if j not in SUPPORTED_SPINS:
        raise ValueError("only j = 1/2 and j = 1 are supported")
    n = int(round(2 * j)) + 1
    ms = [j - k for k in range(n)]
    jplus = np.zeros((n, n), dtype=complex)
    for k in range(1, n):
        m = ms[k]
        jplus[k - 1, k] = math.sqrt(j * (j + 1) - m * (m + 1))
    return (jplus - jplus.conj().T) / 2j


def wigner_d(j: float, beta: float) -> WignerRotation:
    """Closed-form small-d rotation matrix, equal to exp(-i beta Jy) entrywise.

    The j = 1 form, in the basis (|1>, |0>, |-1>), is the workhorse; j = 1/2
    exists as a cross-check against two-level treatments.
    """
    j = float(j)
    if j not in SUPPORTED_SPINS:
        raise ValueError("only j = 1/2 and j = 1 are supported")
    c, s = math.cos(beta), math.sin(beta)
    if j == 0.5:
        ch, sh = math.cos(beta / 2), math.sin(beta / 2)
        mat = np.array([[ch, -sh], [sh, ch]], dtype=complex)
    else:
        r = math.sqrt(2.0)
        mat = np.array(
            [
                [(1 + c) / 2, -s / r, (1 - c) / 2],
                [s / r, c, -s / r],
                [(1 - c) / 2, s / r, (1 + c) / 2],
            ],
            dtype=complex,
        )
    return WignerRotation(j=j, beta=float(beta), matrix=mat)


_P_PLUS = np.diag([1.0, 0.0]).astype(complex)
_P_MINUS = np.diag([0.0, 1.0]).astype(complex)
_SECTORS = ((_P_PLUS, 1.0), (_P_MINUS, -1.0))


def boost_operator(omega: float) -> np.ndarray:
    """Composite boost on the canonical [pA, pB, sA, sB] space.

    Momentum p+ controls a spin rotation by +omega about y and p- the
    opposite rotation, independently for each particle:

        U = sum over a, b of (P_a x P_b) x (d1(sign_a omega) x d1(sign_b omega))

    The 36x36 result is unitary and block diagonal over momentum sectors.
    """
    u = np.zeros((36, 36), dtype=complex)
    for proj_a, sign_a in _SECTORS:
        for proj_b, sign_b in _SECTORS:
            da = wigner_d(1, sign_a * omega).matrix
            db = wigner_d(1, sign_b * omega).matrix
            u += kron_all(proj_a, proj_b, da, db)
    return u


def single_particle_boost(omega: float) -> np.ndarray:
    """Controlled rotation on one particle's (momentum, spin) pair, 6x6.

    The composite boost factors as the product of one copy per particle
    after reordering factors to [pA, sA, pB, sB].
    """
    return kron(_P_PLUS, wigner_d(1, omega).matrix) + kron(_P_MINUS, wigner_d(1, -omega).matrix)
