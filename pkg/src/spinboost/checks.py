"""Self-diagnostic suite exercising the numerical identities the engine relies on.

Every check recomputes its target through an independent route (spectral
matrix exponentials, brute-force reshapes, closed-form values) and compares
against the production code path. The boost operator used by the
state-dependent checks can be swapped out, so a defective operator is
reported as a failed check rather than an exception.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .entanglement import CONSERVATION_TOL, PARTITIONS, linear_entropy
from .lorentz import (
    boost_operator,
    jy_matrix,
    single_particle_boost,
    wigner_angle,
    wigner_d,
)
from .states import (
    SpinFamily,
    SpinParams,
    invariant_spin_state,
    momentum_state,
    spin_state,
)
from .sweep import delta_e_grid
from .tensor import (
    CANONICAL_ORDER,
    FactorOrder,
    SubsystemLabel,
    kron,
    permute_operator,
)

MATRIX_TOL = 1e-12
_SEED = 20240817

BoostFn = Callable[[float], np.ndarray]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class CheckReport:
    results: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [
                {"name": r.name, "passed": r.passed, "detail": r.detail}
                for r in self.results
            ],
        }


def _expm_spectral(hermitian: np.ndarray, scale: complex) -> np.ndarray:
    """exp(scale * H) for Hermitian H via eigendecomposition."""
    vals, vecs = np.linalg.eigh(hermitian)
    return (vecs * np.exp(scale * vals)) @ vecs.conj().T


def _check_wigner_d_exponential() -> CheckResult:
    rng = np.random.default_rng(_SEED)
    worst = 0.0
    for j in (0.5, 1.0):
        jy = jy_matrix(j)
        for beta in rng.uniform(-2 * math.pi, 2 * math.pi, size=50):
            direct = wigner_d(j, float(beta)).matrix
            spectral = _expm_spectral(jy, -1j * float(beta))
            worst = max(worst, float(np.abs(direct - spectral).max()))
    passed = worst < MATRIX_TOL
    return CheckResult(
        "wigner_d_matches_exponential",
        passed,
        f"max |closed form - expm(-i beta Jy)| = {worst:.3e}",
    )


def _check_wigner_angle_properties() -> CheckResult:
    rng = np.random.default_rng(_SEED + 1)
    issues = []
    for _ in range(50):
        xi, eta = rng.uniform(0.0, 10.0, size=2)
        omega = wigner_angle(xi, eta)
        if not 0.0 <= omega < math.pi / 2:
            issues.append(f"range violation at ({xi:.3f}, {eta:.3f}): {omega}")
        if abs(omega - wigner_angle(eta, xi)) > 1e-15:
            issues.append(f"asymmetric at ({xi:.3f}, {eta:.3f})")
    if wigner_angle(0.0, 3.0) != 0.0 or wigner_angle(3.0, 0.0) != 0.0:
        issues.append("nonzero angle for a single boost")
    frozen = 0.42078396163807286
    got = wigner_angle(1.0, 1.0)
    if abs(got - frozen) > 1e-15:
        issues.append(f"reference value drifted: {got!r}")
    grid = [wigner_angle(x, 1.5) for x in np.linspace(0.1, 8.0, 40)]
    if any(b <= a for a, b in zip(grid, grid[1:])):
        issues.append("not increasing in the first rapidity")
    passed = not issues
    return CheckResult(
        "wigner_angle_properties",
        passed,
        "; ".join(issues) if issues else "range, symmetry, zeros, monotonicity, reference value",
    )


def _check_boost_unitarity(boost_fn: BoostFn) -> CheckResult:
    rng = np.random.default_rng(_SEED + 2)
    eye = np.eye(36)
    worst = 0.0
    for omega in rng.uniform(0.0, math.pi / 2, size=20):
        u = boost_fn(float(omega))
        worst = max(worst, float(np.abs(u.conj().T @ u - eye).max()))
    passed = worst < MATRIX_TOL
    return CheckResult(
        "boost_unitarity", passed, f"max |U^dag U - I| = {worst:.3e} over 20 angles"
    )


def _check_boost_block_structure(boost_fn: BoostFn) -> CheckResult:
    u = boost_fn(0.7)
    blocks = u.reshape(4, 9, 4, 9)
    off = 0.0
    for a in range(4):
        for b in range(4):
            if a != b:
                off = max(off, float(np.abs(blocks[a, :, b, :]).max()))
    passed = off < MATRIX_TOL
    return CheckResult(
        "boost_block_diagonal",
        passed,
        f"max coupling between distinct momentum sectors = {off:.3e}",
    )


def _check_boost_factorization(boost_fn: BoostFn) -> CheckResult:
    particle_order = FactorOrder(
        (
            (SubsystemLabel.PA, 2),
            (SubsystemLabel.SA, 3),
            (SubsystemLabel.PB, 2),
            (SubsystemLabel.SB, 3),
        )
    )
    worst = 0.0
    for omega in (0.3, 1.1):
        u = permute_operator(boost_fn(omega), CANONICAL_ORDER, particle_order)
        best = math.inf
        for sign in (1.0, -1.0):
            sp = single_particle_boost(sign * omega)
            best = min(best, float(np.abs(u - kron(sp, sp)).max()))
        worst = max(worst, best)
    passed = worst < MATRIX_TOL
    return CheckResult(
        "boost_factorizes_per_particle",
        passed,
        f"max |U - U_single x U_single| = {worst:.3e} after particle reordering",
    )


def _check_conservation(boost_fn: BoostFn) -> CheckResult:
    rng = np.random.default_rng(_SEED + 3)
    conserved = (PARTITIONS["AvsB"], PARTITIONS["mixed"])
    worst = 0.0
    for _ in range(50):
        family = SpinFamily.S1 if rng.integers(2) else SpinFamily.S2
        params = SpinParams(
            family,
            float(rng.uniform(0.0, math.pi)),
            float(rng.uniform(0.0, 2 * math.pi)),
        )
        alpha = float(rng.uniform(0.0, math.pi))
        vec = np.kron(momentum_state(alpha), spin_state(params))
        omega = float(rng.uniform(0.0, math.pi / 2))
        after = boost_fn(omega) @ vec
        for partition in conserved:
            before_e = linear_entropy(vec, partition)
            after_e = linear_entropy(after, partition)
            worst = max(worst, abs(after_e - before_e))
    passed = worst < CONSERVATION_TOL
    return CheckResult(
        "particle_partition_conservation",
        passed,
        f"max |dE| over AvsB and mixed on 50 family draws = {worst:.3e}",
    )


def _check_separable_momentum(boost_fn: BoostFn) -> CheckResult:
    rng = np.random.default_rng(_SEED + 4)
    worst = 0.0
    for alpha in (0.0, math.pi / 2):
        mom = momentum_state(alpha)
        for _ in range(10):
            family = SpinFamily.S1 if rng.integers(2) else SpinFamily.S2
            params = SpinParams(
                family,
                float(rng.uniform(0.0, math.pi)),
                float(rng.uniform(0.0, 2 * math.pi)),
            )
            vec = np.kron(mom, spin_state(params))
            omega = float(rng.uniform(0.0, math.pi / 2))
            after = boost_fn(omega) @ vec
            for partition in PARTITIONS.values():
                change = linear_entropy(after, partition) - linear_entropy(vec, partition)
                worst = max(worst, abs(change))
    passed = worst < CONSERVATION_TOL
    return CheckResult(
        "separable_momentum_is_inert",
        passed,
        f"max |dE| for product momentum across all partitions = {worst:.3e}",
    )


def _check_invariant_state(boost_fn: BoostFn) -> CheckResult:
    spin = invariant_spin_state()
    worst = 0.0
    for alpha in (math.pi / 4, 0.9):
        vec = np.kron(momentum_state(alpha), spin)
        for omega in (0.2, math.pi / 4, math.pi / 2):
            after = boost_fn(omega) @ vec
            worst = max(worst, float(np.linalg.norm(after - vec)))
    passed = worst < 1e-10
    return CheckResult(
        "invariant_state_is_fixed",
        passed,
        f"max |U psi - psi| for the invariant spin pattern = {worst:.3e}",
    )


def _check_alpha_scaling(boost_fn: BoostFn) -> CheckResult:
    omega = math.pi / 5
    u = boost_fn(omega)
    spins = (
        spin_state(SpinParams(SpinFamily.S1, math.pi / 2, math.pi / 2)),
        spin_state(SpinParams(SpinFamily.S1, 1.1, 2.3)),
        spin_state(SpinParams(SpinFamily.S2, math.pi / 2, math.pi / 4)),
    )
    partitions = (PARTITIONS["1vs3"], PARTITIONS["SvsP"])
    worst = 0.0
    for spin in spins:
        for partition in partitions:
            ratios = []
            for alpha in (0.15, 0.4, math.pi / 4, 1.1):
                vec = np.kron(momentum_state(alpha), spin)
                change = linear_entropy(u @ vec, partition) - linear_entropy(vec, partition)
                ratios.append(change / math.sin(2 * alpha) ** 2)
            scale = max(abs(r) for r in ratios)
            if scale > 1e-12:
                worst = max(worst, (max(ratios) - min(ratios)) / scale)
    passed = worst < 1e-6
    return CheckResult(
        "alpha_scaling_constancy",
        passed,
        f"max relative spread of dE / sin^2(2 alpha) = {worst:.3e}",
    )


def _check_sign_flip_invariance() -> CheckResult:
    thetas = np.linspace(0.0, math.pi, 7)
    phis = np.linspace(0.0, 2 * math.pi, 9)
    worst = 0.0
    for omega in (math.pi / 8, math.pi / 2):
        for partition in PARTITIONS.values():
            plus = delta_e_grid(
                SpinFamily.S1, math.pi / 4, omega, partition, thetas, phis
            )
            flip = _flipped_delta_e_grid(omega, partition, thetas, phis)
            worst = max(worst, float(np.abs(plus - flip).max()))
    passed = worst < MATRIX_TOL
    return CheckResult(
        "global_sign_flip_invariance",
        passed,
        f"max |dE(+) - dE(-)| over sampled grids = {worst:.3e}",
    )


def _flipped_delta_e_grid(omega, partition, thetas, phis) -> np.ndarray:
    flipped = boost_operator(-omega)
    mom = momentum_state(math.pi / 4)
    values = np.zeros((thetas.size, phis.size))
    for i, theta in enumerate(thetas):
        for j, phi in enumerate(phis):
            spin = spin_state(SpinParams(SpinFamily.S1, float(theta), float(phi)))
            vec = np.kron(mom, spin)
            values[i, j] = linear_entropy(flipped @ vec, partition) - linear_entropy(
                vec, partition
            )
    return values


def _check_entropy_bounds() -> CheckResult:
    rng = np.random.default_rng(_SEED + 5)
    issues = []
    for _ in range(30):
        raw = rng.standard_normal(36) + 1j * rng.standard_normal(36)
        vec = raw / np.linalg.norm(raw)
        for partition in PARTITIONS.values():
            value = linear_entropy(vec, partition)
            limit = partition.max_entropy()
            if value < -1e-12 or value > limit + 1e-12:
                issues.append(
                    f"{partition.name}: {value:.6f} outside [0, {limit:.6f}]"
                )
    passed = not issues
    return CheckResult(
        "entropy_bounds",
        passed,
        "; ".join(issues[:3]) if issues else "all sampled entropies within partition bounds",
    )


def _wrap(fn: Callable[[], CheckResult], name: str) -> CheckResult:
    try:
        return fn()
    except Exception as exc:  # surface as a failed check, not a crash
        return CheckResult(name, False, f"raised {type(exc).__name__}: {exc}")


def check_suite(boost_fn: BoostFn | None = None) -> CheckReport:
    """Run every self-check against the supplied boost operator factory."""
    active = boost_operator if boost_fn is None else boost_fn
    specs: tuple[tuple[Callable[[], CheckResult], str], ...] = (
        (_check_wigner_d_exponential, "wigner_d_matches_exponential"),
        (_check_wigner_angle_properties, "wigner_angle_properties"),
        (lambda: _check_boost_unitarity(active), "boost_unitarity"),
        (lambda: _check_boost_block_structure(active), "boost_block_diagonal"),
        (lambda: _check_boost_factorization(active), "boost_factorizes_per_particle"),
        (lambda: _check_conservation(active), "particle_partition_conservation"),
        (lambda: _check_separable_momentum(active), "separable_momentum_is_inert"),
        (lambda: _check_invariant_state(active), "invariant_state_is_fixed"),
        (lambda: _check_alpha_scaling(active), "alpha_scaling_constancy"),
        (_check_sign_flip_invariance, "global_sign_flip_invariance"),
        (_check_entropy_bounds, "entropy_bounds"),
    )
    return CheckReport(tuple(_wrap(fn, name) for fn, name in specs))
