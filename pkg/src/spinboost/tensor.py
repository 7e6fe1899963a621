"""Dense linear algebra on a small composite Hilbert space.

The composite space describes two distinguishable spin-1 particles, each
carrying a two-level momentum label and a three-level spin. Composite
indices are row-major over the factor order with the first factor varying
slowest. The canonical factor order is [pA, pB, sA, sB], so the total
dimension is 2*2*3*3 = 36.

All operations are pure functions on immutable values and are safe to call
concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

import numpy as np

NORM_TOL = 1e-12
TRACE_TOL = 1e-12
HERMITICITY_TOL = 1e-12
EIGENVALUE_TOL = 1e-10


class SubsystemLabel(Enum):
    """The four physical subsystems: momenta and spins of particles A and B."""

    PA = "pA"
    PB = "pB"
    SA = "sA"
    SB = "sB"

    @property
    def dim(self) -> int:
        return _LABEL_DIMS[self]


_LABEL_DIMS = {
    SubsystemLabel.PA: 2,
    SubsystemLabel.PB: 2,
    SubsystemLabel.SA: 3,
    SubsystemLabel.SB: 3,
}


@dataclass(frozen=True)
class FactorOrder:
    """Ordered (label, dim) pairs fixing the composite index convention."""

    factors: tuple[tuple[SubsystemLabel, int], ...]

    def __post_init__(self) -> None:
        labels = [label for label, _ in self.factors]
        if len(set(labels)) != len(labels):
            raise ValueError("factor labels must be unique")
        for label, dim in self.factors:
            if dim != label.dim:
                raise ValueError(f"label {label.value} has fixed dimension {label.dim}, got {dim}")

    @property
    def labels(self) -> tuple[SubsystemLabel, ...]:
        return tuple(label for label, _ in self.factors)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(dim for _, dim in self.factors)

    @property
    def total_dim(self) -> int:
        out = 1
        for dim in self.dims:
            out *= dim
        return out

    def axis(self, label: SubsystemLabel) -> int:
        """Tensor axis of a label within this order."""
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"label {label.value} not present in factor order") from None


CANONICAL_ORDER = FactorOrder(
    (
        (SubsystemLabel.PA, 2),
        (SubsystemLabel.PB, 2),
        (SubsystemLabel.SA, 3),
        (SubsystemLabel.SB, 3),
    )
)


@dataclass(frozen=True)
class PureState:
    """Unit-norm complex amplitude vector over a factor order."""

    amplitudes: np.ndarray
    order: FactorOrder = CANONICAL_ORDER

    def __post_init__(self) -> None:
        amps = np.asarray(self.amplitudes, dtype=complex)
        object.__setattr__(self, "amplitudes", amps)
        if amps.shape != (self.order.total_dim,):
            raise ValueError(
                f"amplitude vector has length {amps.shape}, expected {self.order.total_dim}"
            )
        if abs(np.linalg.norm(amps) - 1.0) > NORM_TOL:
            raise ValueError("state vector is not normalized")


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, positive semidefinite, unit-trace matrix over a factor order."""

    entries: np.ndarray
    order: FactorOrder

    def __post_init__(self) -> None:
        rho = np.asarray(self.entries, dtype=complex)
        object.__setattr__(self, "entries", rho)
        n = self.order.total_dim
        if rho.shape != (n, n):
            raise ValueError(f"density matrix has shape {rho.shape}, expected ({n}, {n})")
        if np.max(np.abs(rho - rho.conj().T)) > HERMITICITY_TOL:
            raise ValueError("density matrix is not Hermitian")
        if abs(np.trace(rho).real - 1.0) > TRACE_TOL or abs(np.trace(rho).imag) > TRACE_TOL:
            raise ValueError("density matrix trace is not 1")
        if np.min(np.linalg.eigvalsh(rho)) < -EIGENVALUE_TOL:
            raise ValueError("density matrix has a significantly negative eigenvalue")


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two matrices."""
    return np.kron(np.asarray(a), np.asarray(b))


def kron_all(*mats: np.ndarray) -> np.ndarray:
    """Kronecker product of several matrices, left to right."""
    out = np.asarray(mats[0])
    for m in mats[1:]:
        out = np.kron(out, m)
    return out


def outer(psi: PureState) -> DensityMatrix:
    """Rank-1 projector |psi><psi| as a DensityMatrix."""
    v = psi.amplitudes
    return DensityMatrix(np.outer(v, v.conj()), psi.order)


def partial_trace(rho: DensityMatrix, keep: Iterable[SubsystemLabel]) -> DensityMatrix:
    """Reduced density matrix over `keep`, traced over everything else.

    The retained factors are emitted in canonical label order regardless of
    the order in which `keep` lists them.
    """
    keep = set(keep)
    if not keep:
        raise ValueError("keep must be a nonempty set of labels")
    order = rho.order
    for label in keep:
        if label not in order.labels:
            raise ValueError(f"label {label.value} not present in the density matrix")

    kept = [label for label in CANONICAL_ORDER.labels if label in keep]
    kept_axes = [order.axis(label) for label in kept]
    n = len(order.factors)
    dims = order.dims

    # einsum label mechanics: traced axes share a letter between bra and ket
    letters = "abcdefghijklmnopqrstuvwx"
    bra = list(letters[:n])
    ket = list(letters[:n])
    out = []
    for pos, ax in enumerate(kept_axes):
        ket[ax] = letters[n + pos]
        out.append(bra[ax])
    out += [ket[ax] for ax in kept_axes]
    spec = "".join(bra) + "".join(ket) + "->" + "".join(out)

    tens = rho.entries.reshape(dims + dims)
    dk = 1
    for label in kept:
        dk *= label.dim
    reduced = np.einsum(spec, tens).reshape(dk, dk)
    new_order = FactorOrder(tuple((label, label.dim) for label in kept))
    return DensityMatrix(reduced, new_order)


def purity(rho: DensityMatrix) -> float:
    """Tr(rho^2), real by hermiticity."""
    r = rho.entries
    return float(np.trace(r @ r).real)


def state_purity(psi: PureState | np.ndarray, keep: Iterable[SubsystemLabel],
                 order: FactorOrder = CANONICAL_ORDER) -> float:
    """Purity of the reduced state of a pure state, without forming the full projector.

    Accepts either a PureState or a raw canonical-order amplitude vector
    (the raw path skips normalization checks and exists for engine code that
    must see unnormalized vectors as they are).
    """
    if isinstance(psi, PureState):
        vec, order = psi.amplitudes, psi.order
    else:
        vec = np.asarray(psi, dtype=complex)
    keep = set(keep)
    if not keep:
        raise ValueError("keep must be a nonempty set of labels")
    kept_axes = sorted(order.axis(label) for label in keep)
    rest_axes = [ax for ax in range(len(order.factors)) if ax not in kept_axes]
    dims = order.dims
    dk = 1
    for ax in kept_axes:
        dk *= dims[ax]
    a = np.transpose(vec.reshape(dims), kept_axes + rest_axes).reshape(dk, -1)
    gram = a @ a.conj().T
    return float(np.sum(np.abs(gram) ** 2))


def permute_factors(psi: PureState, new_order: FactorOrder) -> PureState:
    """Reindex a state vector into a different factor order."""
    if set(new_order.factors) != set(psi.order.factors):
        raise ValueError("new order must be a permutation of the state's factor order")
    perm = [psi.order.axis(label) for label in new_order.labels]
    amps = np.transpose(psi.amplitudes.reshape(psi.order.dims), perm).ravel()
    return PureState(amps, new_order)


def permute_operator(matrix: np.ndarray, order: FactorOrder, new_order: FactorOrder) -> np.ndarray:
    """Reindex an operator's rows and columns into a different factor order."""
    if set(new_order.factors) != set(order.factors):
        raise ValueError("new order must be a permutation of the operator's factor order")
    n = len(order.factors)
    perm = [order.axis(label) for label in new_order.labels]
    dims = order.dims
    tens = np.asarray(matrix).reshape(dims + dims)
    tens = np.transpose(tens, perm + [n + ax for ax in perm])
    total = order.total_dim
    return tens.reshape(total, total)
