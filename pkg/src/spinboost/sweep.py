"""Grid sweeps of the entanglement change over (theta, phi) and extrema reports.

The sweep ranges over one spin family at fixed momentum parameter alpha and
boost angle omega, evaluating the entanglement change for every grid cell.
Cells are independent pure evaluations with no cross-cell reductions, so
the emitted grid is deterministic and identical however the cells are
batched.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import IO

import numpy as np

from .entanglement import Partition
from .lorentz import BoostSpec, boost_operator
from .states import SpinFamily, momentum_state
from .tensor import SubsystemLabel

COLLECT_TOL = 1e-9
DEFAULT_MERGE_RADIUS = 3.0

_AXIS = {
    SubsystemLabel.PA: 0,
    SubsystemLabel.PB: 1,
    SubsystemLabel.SA: 2,
    SubsystemLabel.SB: 3,
}
_DIMS = (2, 2, 3, 3)
_S1_INDICES = (0, 4, 8)
_S2_INDICES = (2, 6, 4)


@dataclass(frozen=True)
class GridSpec:
    """Inclusive linspace specification for one sweep axis."""

    start: float
    stop: float
    count: int

    def __post_init__(self) -> None:
        if self.count < 2:
            raise ValueError("grid count must be at least 2")

    @property
    def points(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.count)

    @property
    def step(self) -> float:
        return (self.stop - self.start) / (self.count - 1)


DEFAULT_THETA_GRID = GridSpec(0.0, math.pi, 121)
DEFAULT_PHI_GRID = GridSpec(0.0, 2 * math.pi, 241)


@dataclass(frozen=True)
class SweepConfig:
    family: SpinFamily
    alpha: float
    omega_spec: BoostSpec
    partition: Partition
    theta_grid: GridSpec = DEFAULT_THETA_GRID
    phi_grid: GridSpec = DEFAULT_PHI_GRID
    output: Path | None = None
    format: str = "csv"

    def __post_init__(self) -> None:
        if self.format not in ("csv", "json"):
            raise ValueError("format must be csv or json")


@dataclass(frozen=True)
class SweepResult:
    """Dense grid of entanglement changes, row-major with theta outer."""

    thetas: np.ndarray
    phis: np.ndarray
    values: np.ndarray
    family: SpinFamily | None = None
    alpha: float | None = None
    omega: float | None = None
    partition_name: str | None = None
    theta_grid: GridSpec | None = None
    phi_grid: GridSpec | None = None


def _spin_columns(family: SpinFamily, thetas_flat: np.ndarray, phis_flat: np.ndarray) -> np.ndarray:
    """Spin vectors for every cell as a (9, cells) array."""
    indices = _S1_INDICES if family is SpinFamily.S1 else _S2_INDICES
    spins = np.zeros((9, thetas_flat.size), dtype=complex)
    st = np.sin(thetas_flat)
    spins[indices[0]] = st * np.cos(phis_flat)
    spins[indices[1]] = st * np.sin(phis_flat)
    spins[indices[2]] = np.cos(thetas_flat)
    return spins


def _entropy_columns(columns: np.ndarray, partition: Partition) -> np.ndarray:
    """Linear entropy of each column of a (36, cells) amplitude array.

    Each cell occupies its own leading tensor slice, so every reduction runs
    within a single cell and batching cannot change any value.
    """
    cells = columns.shape[1]
    tens = np.ascontiguousarray(columns.T).reshape((cells,) + _DIMS)
    total = np.zeros(cells)
    for part in partition.parts:
        keep = sorted(_AXIS[label] for label in part)
        rest = [ax for ax in range(4) if ax not in keep]
        dim_keep = 1
        for ax in keep:
            dim_keep *= _DIMS[ax]
        perm = [0] + [ax + 1 for ax in keep] + [ax + 1 for ax in rest]
        a = np.ascontiguousarray(np.transpose(tens, perm)).reshape(cells, dim_keep, -1)
        gram = np.einsum("mik,mjk->mij", a, a.conj(), optimize=False)
        purities = np.einsum("mij,mij->m", gram, gram.conj(), optimize=False).real
        total += 1.0 - purities
    return total


def delta_e_grid(
    family: SpinFamily,
    alpha: float,
    omega: float,
    partition: Partition,
    thetas: np.ndarray,
    phis: np.ndarray,
) -> np.ndarray:
    """Entanglement-change surface over a (theta, phi) grid, theta outer."""
    tt = np.repeat(thetas, phis.size)
    pp = np.tile(phis, thetas.size)
    spins = _spin_columns(family, tt, pp)
    mom = momentum_state(alpha)
    psi = (mom[:, None, None] * spins[None, :, :]).reshape(36, tt.size)
    boosted = boost_operator(omega) @ psi
    change = _entropy_columns(boosted, partition) - _entropy_columns(psi, partition)
    return change.reshape(thetas.size, phis.size)


def run_sweep(config: SweepConfig) -> SweepResult:
    thetas = config.theta_grid.points
    phis = config.phi_grid.points
    omega = config.omega_spec.resolve()
    values = delta_e_grid(config.family, config.alpha, omega, config.partition, thetas, phis)
    return SweepResult(
        thetas=thetas,
        phis=phis,
        values=values,
        family=config.family,
        alpha=config.alpha,
        omega=omega,
        partition_name=config.partition.name,
        theta_grid=config.theta_grid,
        phi_grid=config.phi_grid,
    )


@dataclass(frozen=True)
class ExtremaReport:
    """Clustered global extrema of a sweep surface.

    Grid points within COLLECT_TOL of the global extreme value are clustered
    by index distance; each cluster is reported through one representative
    point. A surface whose full range is below the collection tolerance is
    flagged flat and carries no extrema entries (every point would qualify
    as both).
    """

    maxima: tuple[tuple[float, float, float], ...]
    minima: tuple[tuple[float, float, float], ...]
    merge_radius: float
    flat: bool = False


def _cluster(points: list[tuple[int, int]], radius: float) -> list[list[tuple[int, int]]]:
    """Group index pairs whose euclidean distance is at most radius."""
    clusters: list[list[tuple[int, int]]] = []
    remaining = sorted(points)
    while remaining:
        seed = remaining.pop(0)
        group = [seed]
        frontier = [seed]
        while frontier:
            ci, cj = frontier.pop()
            linked = [
                p for p in remaining if (p[0] - ci) ** 2 + (p[1] - cj) ** 2 <= radius ** 2
            ]
            for p in linked:
                remaining.remove(p)
            group.extend(linked)
            frontier.extend(linked)
        clusters.append(group)
    return clusters


def find_extrema(result: SweepResult, merge_radius: float = DEFAULT_MERGE_RADIUS) -> ExtremaReport:
    """Collect and cluster the global maxima and minima of a sweep surface.

    merge_radius is measured in grid steps. Representatives are the
    best-valued point of each cluster, ties broken toward smaller
    (theta, phi); output is ordered by (theta, phi) ascending.
    """
    values = result.values
    if values.size == 0:
        raise ValueError("empty sweep grid")
    vmax = float(values.max())
    vmin = float(values.min())
    if vmax - vmin < COLLECT_TOL:
        return ExtremaReport(maxima=(), minima=(), merge_radius=merge_radius, flat=True)

    def collect(target: float, sign: float) -> tuple[tuple[float, float, float], ...]:
        hits = [tuple(ij) for ij in np.argwhere(sign * (target - values) < COLLECT_TOL)]
        reps = []
        for group in _cluster(hits, merge_radius):
            best = min(
                group,
                key=lambda ij: (-sign * values[ij], result.thetas[ij[0]], result.phis[ij[1]]),
            )
            reps.append(
                (float(result.thetas[best[0]]), float(result.phis[best[1]]), float(values[best]))
            )
        return tuple(sorted(reps, key=lambda rec: (rec[0], rec[1])))

    return ExtremaReport(
        maxima=collect(vmax, 1.0),
        minima=collect(vmin, -1.0),
        merge_radius=merge_radius,
        flat=False,
    )


def write_csv(result: SweepResult, stream: IO[str]) -> None:
    """Emit the grid as CSV with header theta,phi,delta_e, theta outer."""
    stream.write("theta,phi,delta_e\n")
    for i, theta in enumerate(result.thetas):
        for j, phi in enumerate(result.phis):
            stream.write(f"{theta:.17g},{phi:.17g},{result.values[i, j]:.17g}\n")


def read_csv(stream: IO[str]) -> SweepResult:
    """Rebuild a SweepResult from CSV; grid values round-trip exactly."""
    header = stream.readline().strip()
    if header != "theta,phi,delta_e":
        raise ValueError(f"unexpected CSV header {header!r}")
    thetas: list[float] = []
    phis: list[float] = []
    values: list[float] = []
    for line in stream:
        line = line.strip()
        if not line:
            continue
        t, p, v = line.split(",")
        thetas.append(float(t))
        phis.append(float(p))
        values.append(float(v))
    if not values:
        raise ValueError("CSV contains no data rows")
    n_phi = 1
    while n_phi < len(thetas) and thetas[n_phi] == thetas[0]:
        n_phi += 1
    n_theta, rem = divmod(len(values), n_phi)
    if rem != 0:
        raise ValueError("CSV rows do not form a rectangular grid")
    return SweepResult(
        thetas=np.array(thetas[::n_phi]),
        phis=np.array(phis[:n_phi]),
        values=np.array(values).reshape(n_theta, n_phi),
    )


def write_json(result: SweepResult, stream: IO[str]) -> None:
    """Emit the grid as a JSON envelope: config metadata, shape, flat values."""
    def grid_dict(grid: GridSpec | None, points: np.ndarray) -> dict:
        if grid is not None:
            return {"start": grid.start, "stop": grid.stop, "count": grid.count}
        return {"start": float(points[0]), "stop": float(points[-1]), "count": int(points.size)}

    envelope = {
        "config": {
            "family": result.family.value if result.family else None,
            "alpha": result.alpha,
            "omega": result.omega,
            "partition": result.partition_name,
            "theta_grid": grid_dict(result.theta_grid, result.thetas),
            "phi_grid": grid_dict(result.phi_grid, result.phis),
        },
        "shape": [int(result.values.shape[0]), int(result.values.shape[1])],
        "values": [float(v) for v in result.values.ravel()],
    }
    json.dump(envelope, stream, indent=2)
    stream.write("\n")


def read_json(stream: IO[str]) -> SweepResult:
    envelope = json.load(stream)
    config = envelope["config"]
    tg = GridSpec(**config["theta_grid"])
    pg = GridSpec(**config["phi_grid"])
    shape = tuple(envelope["shape"])
    values = np.array(envelope["values"]).reshape(shape)
    family = SpinFamily(config["family"]) if config.get("family") else None
    return SweepResult(
        thetas=tg.points,
        phis=pg.points,
        values=values,
        family=family,
        alpha=config.get("alpha"),
        omega=config.get("omega"),
        partition_name=config.get("partition"),
        theta_grid=tg,
        phi_grid=pg,
    )
