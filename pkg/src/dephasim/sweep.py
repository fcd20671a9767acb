"""Scaled-action-time sweeps, feature detection, window comparison, and CSV output."""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np

from .engine import ModelParams, dephasing_fixed_point, extract_xform, stationary_state
from .errors import GridMismatchError
from .measures import (
    CriterionReport,
    concurrence_xform,
    mutual_information_xform,
    qutrit_sufficient_entangled,
)
from .states import DensityMatrix, parse_ket_expression, pure_density

MODE_QUBIT_SWEEP = "qubit-sweep"
MODE_QUTRIT_CRITERION = "qutrit-criterion"

# Concurrence below this is indistinguishable from propagator noise.
ENTANGLEMENT_THRESHOLD = 1e-9
# Bisection interval width; tight enough that the concurrence at a refined
# transition stays below 1e-6 even at drive-scale slopes.
_REFINE_TOL = 1e-9

CSV_HEADER = "gamma_T,concurrence,mutual_information"


@dataclass(frozen=True)
class SweepConfig:
    """Inputs of one sweep or criterion run."""

    initial_state: str
    omega_ratio: float = 31.25
    gamma_t_max: float = 4.0
    samples: int = 2000
    output_path: str | None = None
    mode: str = MODE_QUBIT_SWEEP

    def __post_init__(self):
        if self.samples < 2:
            raise ValueError(f"samples must be at least 2, got {self.samples}")
        if not self.gamma_t_max > 0:
            raise ValueError(f"gamma_t_max must be positive, got {self.gamma_t_max!r}")
        if self.omega_ratio < 0:
            raise ValueError(f"omega_ratio must be nonnegative, got {self.omega_ratio!r}")
        if self.mode not in (MODE_QUBIT_SWEEP, MODE_QUTRIT_CRITERION):
            raise ValueError(f"unknown mode {self.mode!r}")


@dataclass(frozen=True)
class SweepResult:
    """Sampled (gamma_T, concurrence, mutual information) rows plus detected features."""

    gamma_t: np.ndarray
    concurrence: np.ndarray
    mutual_information: np.ndarray
    transitions: list[float] = field(default_factory=list)
    maxima: list[tuple[float, float, float]] = field(default_factory=list)

    def __post_init__(self):
        gt = np.asarray(self.gamma_t, dtype=float)
        object.__setattr__(self, "gamma_t", gt)
        object.__setattr__(self, "concurrence", np.asarray(self.concurrence, dtype=float))
        object.__setattr__(
            self, "mutual_information", np.asarray(self.mutual_information, dtype=float)
        )
        if len(gt) != len(self.concurrence) or len(gt) != len(self.mutual_information):
            raise ValueError("row columns must have equal length")
        if np.any(np.diff(gt) <= 0):
            raise ValueError("gamma_t values must be strictly increasing")
        for _, c_value, _ in self.maxima:
            if not c_value > 0:
                raise ValueError("every maximum must lie inside an entangled window")

    def rows(self):
        return zip(self.gamma_t, self.concurrence, self.mutual_information)


@dataclass(frozen=True)
class WindowOverlapReport:
    """Per-grid comparison of simultaneous entanglement between two sweeps."""

    samples: int
    a_entangled: int
    b_entangled: int
    overlap_count: int
    overlap_gamma_t: list[float]


def _stationary_measures(rho0: DensityMatrix, omega_ratio: float, gamma_t: float):
    params = ModelParams(omega1=omega_ratio, T=float(gamma_t))
    x = extract_xform(stationary_state(rho0, params))
    return concurrence_xform(x), mutual_information_xform(x)


def _measure_chunk(rho0_matrix: np.ndarray, omega_ratio: float, gamma_ts: np.ndarray):
    # Module-level so the worker pool can pickle it; rebuilds the validated
    # state inside each worker to keep the per-sample computation identical
    # for every worker count.
    rho0 = DensityMatrix(np.asarray(rho0_matrix), (2, 2))
    out = np.empty((len(gamma_ts), 2))
    for k, gamma_t in enumerate(gamma_ts):
        out[k] = _stationary_measures(rho0, omega_ratio, gamma_t)
    return out


def run_sweep(config: SweepConfig, workers: int = 1) -> SweepResult:
    """Sweep gamma_T over a uniform grid and detect transitions and maxima.

    Grid points are independent, so with workers > 1 they are evaluated by a
    process pool; results are reassembled in index order, which makes the
    output identical for every worker count.
    """
    if config.mode != MODE_QUBIT_SWEEP:
        raise ValueError(f"run_sweep needs mode {MODE_QUBIT_SWEEP!r}, got {config.mode!r}")
    rho0 = pure_density(parse_ket_expression(config.initial_state, (2, 2)))
    grid = np.linspace(0.0, config.gamma_t_max, config.samples)

    if workers <= 1:
        values = _measure_chunk(rho0.matrix, config.omega_ratio, grid)
    else:
        chunks = np.array_split(grid, workers)
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_measure_chunk, rho0.matrix, config.omega_ratio, chunk)
                for chunk in chunks
                if len(chunk)
            ]
            values = np.concatenate([f.result() for f in futures])

    result = SweepResult(grid, values[:, 0], values[:, 1])
    transitions = detect_transitions(
        result, lambda gt: _stationary_measures(rho0, config.omega_ratio, gt)[0]
    )
    maxima = detect_local_maxima(result)
    return replace(result, transitions=transitions, maxima=maxima)


def detect_transitions(
    result: SweepResult,
    concurrence_of: Callable[[float], float],
    threshold: float = ENTANGLEMENT_THRESHOLD,
) -> list[float]:
    """Entangled/separable crossing points, bisection-refined on the exact map.

    Each grid cell where the concurrence crosses the threshold is refined by
    bisecting `concurrence_of` until the bracket is below 1e-9 in gamma_T.
    """
    entangled = result.concurrence > threshold
    transitions = []
    for i in np.flatnonzero(entangled[:-1] != entangled[1:]):
        lo, hi = float(result.gamma_t[i]), float(result.gamma_t[i + 1])
        lo_entangled = bool(entangled[i])
        while hi - lo > _REFINE_TOL:
            mid = 0.5 * (lo + hi)
            if (concurrence_of(mid) > threshold) == lo_entangled:
                lo = mid
            else:
                hi = mid
        transitions.append(0.5 * (lo + hi))
    return transitions


def detect_local_maxima(result: SweepResult) -> list[tuple[float, float, float]]:
    """Interior grid points where the concurrence strictly exceeds both neighbors."""
    c = result.concurrence
    maxima = []
    for i in range(1, len(c) - 1):
        if c[i] > c[i - 1] and c[i] > c[i + 1]:
            maxima.append(
                (float(result.gamma_t[i]), float(c[i]), float(result.mutual_information[i]))
            )
    return maxima


def compare_windows(
    a: SweepResult, b: SweepResult, threshold: float = ENTANGLEMENT_THRESHOLD
) -> WindowOverlapReport:
    """Count grid points where both sweeps are simultaneously entangled."""
    if len(a.gamma_t) != len(b.gamma_t) or not np.allclose(
        a.gamma_t, b.gamma_t, rtol=0.0, atol=1e-9
    ):
        raise GridMismatchError("sweeps do not share the same gamma_T grid")
    a_on = a.concurrence > threshold
    b_on = b.concurrence > threshold
    both = a_on & b_on
    return WindowOverlapReport(
        samples=len(a.gamma_t),
        a_entangled=int(np.count_nonzero(a_on)),
        b_entangled=int(np.count_nonzero(b_on)),
        overlap_count=int(np.count_nonzero(both)),
        overlap_gamma_t=[float(g) for g in a.gamma_t[both]],
    )


def _fmt(value: float) -> str:
    return f"{value:.12g}"


def write_csv(result: SweepResult, path: str) -> None:
    """Write rows at 12 significant digits; transitions and maxima as '#' comments."""
    lines = [CSV_HEADER]
    for gamma_t, c_value, mi_value in result.rows():
        lines.append(f"{_fmt(gamma_t)},{_fmt(c_value)},{_fmt(mi_value)}")
    for transition in result.transitions:
        lines.append(f"# transition gamma_T = {_fmt(transition)}")
    for gamma_t, c_value, mi_value in result.maxima:
        lines.append(
            f"# maximum gamma_T = {_fmt(gamma_t)} concurrence = {_fmt(c_value)}"
            f" mutual_information = {_fmt(mi_value)}"
        )
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write("\n".join(lines) + "\n")


def read_csv(path: str) -> SweepResult:
    """Parse a file produced by write_csv back into a SweepResult."""
    rows = []
    transitions = []
    maxima = []
    with open(path, "r", encoding="utf-8") as handle:
        lines = [line.rstrip("\n") for line in handle if line.strip()]
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError(f"{path}: missing header {CSV_HEADER!r}")
    for line in lines[1:]:
        if line.startswith("#"):
            parts = line.split()
            if "transition" in parts:
                transitions.append(float(parts[parts.index("=") + 1]))
            elif "maximum" in parts:
                values = [float(parts[i + 1]) for i, tok in enumerate(parts) if tok == "="]
                maxima.append(tuple(values))
            continue
        rows.append([float(cell) for cell in line.split(",")])
    data = np.asarray(rows, dtype=float)
    return SweepResult(data[:, 0], data[:, 1], data[:, 2], transitions, maxima)


def run_qutrit_scan(config: SweepConfig) -> CriterionReport:
    """Dephase the initial two-qutrit state and evaluate the entanglement criterion.

    When `config.output_path` is set, the report is written there as
    `key = value` lines.
    """
    if config.mode != MODE_QUTRIT_CRITERION:
        raise ValueError(
            f"run_qutrit_scan needs mode {MODE_QUTRIT_CRITERION!r}, got {config.mode!r}"
        )
    rho0 = pure_density(parse_ket_expression(config.initial_state, (3, 3)))
    report = qutrit_sufficient_entangled(dephasing_fixed_point(rho0))
    if config.output_path is not None:
        write_criterion_report(report, config.initial_state, config.output_path)
    return report


def write_criterion_report(report: CriterionReport, initial_state: str, path: str) -> None:
    """Write a CriterionReport as flat `key = value` text."""
    lines = [
        f"mode = {MODE_QUTRIT_CRITERION}",
        f"initial_state = {initial_state}",
        f"xi = {_fmt(report.xi)}",
        f"zeta = {_fmt(report.zeta)}",
        f"eta = {_fmt(report.eta)}",
        f"xi_population_squares = {_fmt(report.xi_population_squares)}",
        f"cubic_has_negative_root = {str(report.cubic_has_negative_root).lower()}",
        f"pt_block_plus_negative = {str(report.pt_block_plus_negative).lower()}",
        f"pt_block_minus_negative = {str(report.pt_block_minus_negative).lower()}",
        f"sufficient_entangled = {str(report.sufficient_entangled).lower()}",
        f"min_pt_eigenvalue = {_fmt(report.min_pt_eigenvalue)}",
    ]
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write("\n".join(lines) + "\n")
