"""Parameter sweeps behind the reachable-set datasets, plus the randomized
harness that validates the time bound against direct simulation.

Grid points and verification trials are independent pure-function
evaluations; records are always emitted in grid/trial order, so output
files are byte-identical for identical configuration and seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import qsl
from .dynamics import SystemSpec, integrate, theta_rate_check
from .models import (
    BELL_LABELS,
    GateParams,
    QubitParams,
    bell_coefficients,
    qubit_gate_time_bound,
    qubit_spec,
    qutrit_gate_time_bound,
)

DEFAULT_HORIZONS = (0.3, 0.5, 0.8)
DEFAULT_SWEEP_POINTS = 200
DEFAULT_MAP_POINTS = 100
MARGIN_TOL = 1e-4  # numerical slack on T >= T*

#: Simulated radii below this are indistinguishable from zero: the angle is
#: arccos of a fidelity carrying integrator roundoff, so a frozen state can
#: come back with lambda ~ 1e-8 of pure noise (fatal when A = E = 0, where
#: any nonzero radius maps to an infinite bound).
RADIUS_RESOLUTION = 1e-6


def measured_radius(theta_t: float) -> float:
    """Radius of a *simulated* final angle, with sub-resolution displacements
    reported as exactly zero."""
    lam = qsl.radius_from_angle(theta_t)
    return lam if lam >= RADIUS_RESOLUTION else 0.0


@dataclass(frozen=True)
class GridAxis:
    name: str
    start: float
    stop: float
    count: int

    def __post_init__(self):
        if self.count < 2:
            raise ValueError("axis count must be >= 2")
        if not self.start < self.stop:
            raise ValueError("axis start must be < stop")

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.count)


@dataclass(frozen=True)
class SweepGrid:
    axes: tuple[GridAxis, ...]
    horizons: tuple[float, ...] = DEFAULT_HORIZONS

    def __post_init__(self):
        hs = tuple(float(h) for h in self.horizons)
        if not hs:
            raise ValueError("at least one horizon is required")
        if any(h <= 0 for h in hs):
            raise ValueError("horizons must be positive")
        if any(b <= a for a, b in zip(hs, hs[1:])):
            raise ValueError("horizons must be strictly increasing")
        object.__setattr__(self, "axes", tuple(self.axes))
        object.__setattr__(self, "horizons", hs)


@dataclass(frozen=True)
class ReachRecord:
    """One grid point: its coordinates and per-horizon reachability data.

    Radius sweeps fill ``lambda_max`` (one value per horizon); gate maps
    fill ``t_star`` and ``reachable`` (t_star <= T per horizon).
    """

    coords: dict
    horizons: tuple[float, ...]
    t_star: float | None = None
    lambda_max: tuple[float, ...] | None = None
    reachable: tuple[bool, ...] | None = None


@dataclass(frozen=True)
class VerifyRecord:
    """One randomized trial of the bound-validity check."""

    trial: int
    seed: int
    dim: int
    T: float
    theta_T: float
    lam: float
    t_star: float
    margin: float
    rate_excess: float = field(default=-math.inf)
    summary: str = ""

    @property
    def violated(self) -> bool:
        return self.margin < -MARGIN_TOL


def sweep_reachable_radius(grid: SweepGrid, gamma: float, omega: float = 1.0) -> list[ReachRecord]:
    """Largest reachable radius versus initial-state angle theta.

    Coefficients come from the generic pipeline for the driven, decaying
    qubit; for gamma = 0 the result reduces to min(1, omega |sin 2th| T).
    """
    if len(grid.axes) != 1:
        raise ValueError("radius sweep expects a single theta axis")
    records = []
    for theta in grid.axes[0].values():
        p = QubitParams(theta=float(theta), omega=omega, gamma=gamma)
        coeffs = qsl.generic_coefficients(qubit_spec(p))
        lams = tuple(qsl.max_reachable_radius(coeffs, T) for T in grid.horizons)
        records.append(
            ReachRecord(
                coords={"theta": float(theta), "gamma": gamma, "omega": omega},
                horizons=grid.horizons,
                lambda_max=lams,
            )
        )
    return records


def gate_reach_map(
    model: str,
    grid: SweepGrid,
    theta: float = 0.0,
    omega: float = 1.0,
    u_max: float = 1.0,
) -> list[ReachRecord]:
    """Gate-implementation time bound over an (alpha, beta) grid.

    ``model`` is "qubit" (su2 rotations, initial angle theta) or "qutrit"
    (so3 rotations from [1, 0, 1]/sqrt(2); theta is reported as pi).
    """
    if model not in ("qubit", "qutrit"):
        raise ValueError(f"model must be 'qubit' or 'qutrit', got {model!r}")
    if len(grid.axes) != 2:
        raise ValueError("gate map expects alpha and beta axes")
    alphas, betas = (ax.values() for ax in grid.axes)
    records = []
    if model == "qubit":
        p = QubitParams(theta=theta, omega=omega, u_max=u_max)
        theta_out = theta
    else:
        theta_out = math.pi
    for a in alphas:
        for b in betas:
            g = GateParams(alpha=float(a), beta=float(b))
            if model == "qubit":
                t_star = qubit_gate_time_bound(p, g)
            else:
                t_star = qutrit_gate_time_bound(omega, u_max, g)
            records.append(
                ReachRecord(
                    coords={
                        "model": model,
                        "theta": theta_out,
                        "alpha": float(a),
                        "beta": float(b),
                    },
                    horizons=grid.horizons,
                    t_star=t_star,
                    reachable=tuple(t_star <= T for T in grid.horizons),
                )
            )
    return records


def bell_sweep(gamma_axis: GridAxis, T: float) -> list[ReachRecord]:
    """Largest reachable radius per Bell state versus decay rate gamma."""
    if T <= 0:
        raise ValueError("T must be > 0")
    records = []
    for label in BELL_LABELS:
        for g in gamma_axis.values():
            coeffs = bell_coefficients(label, float(g))
            lam = qsl.max_reachable_radius(coeffs, T)
            records.append(
                ReachRecord(
                    coords={"state": label, "gamma": float(g)},
                    horizons=(T,),
                    lambda_max=(lam,),
                )
            )
    return records


def draw_random_system(seed: int, dim: int, trial: int) -> SystemSpec:
    """Seeded random system: Gaussian-entry Hermitian H and unconstrained M,
    each scaled to unit Frobenius norm times a strength drawn from [0, 2],
    plus a Haar-like random pure state.

    The stream order is H entries (real then imaginary), H strength,
    M entries, M strength, state amplitudes.
    """
    rng = np.random.default_rng([seed, dim, trial])
    x = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    h = (x + x.conj().T) / 2
    nrm = np.linalg.norm(h)
    if nrm > 0:
        h = h / nrm * rng.uniform(0.0, 2.0)
    y = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    m = y / np.linalg.norm(y) * rng.uniform(0.0, 2.0)
    psi = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    psi = psi / np.linalg.norm(psi)
    return SystemSpec(psi0=psi, h_drift=h, lindblad_ops=(m,))


def verify_bound(
    seed: int,
    n_trials: int,
    dims=(2, 3, 4),
    T: float = 0.5,
    dt: float = 1e-3,
) -> list[VerifyRecord]:
    """Integrate ``n_trials`` random systems per dimension and check that the
    simulated evolution respects T >= T*(lambda), recording the margin and
    the worst rate-check excess for each trial."""
    if n_trials < 1:
        raise ValueError("n_trials must be >= 1")
    records = []
    for dim in dims:
        for k in range(n_trials):
            spec = draw_random_system(seed, dim, k)
            traj = integrate(spec, T, dt)
            theta_t = float(traj.thetas[-1])
            lam = measured_radius(theta_t)
            coeffs = qsl.generic_coefficients(spec)
            t_star = qsl.qsl_time(coeffs, lam)
            samples = theta_rate_check(traj, coeffs)
            rate_excess = max((l - r for _, l, r in samples), default=-math.inf)
            hn = np.linalg.norm(spec.h_drift)
            mn = np.linalg.norm(spec.lindblad_ops[0])
            records.append(
                VerifyRecord(
                    trial=k,
                    seed=seed,
                    dim=dim,
                    T=T,
                    theta_T=theta_t,
                    lam=lam,
                    t_star=t_star,
                    margin=T - t_star,
                    rate_excess=rate_excess,
                    summary=f"dim={dim} |H|={hn:.3g} |M|={mn:.3g}",
                )
            )
    return records


def violations(records: list[VerifyRecord]) -> list[VerifyRecord]:
    return [r for r in records if r.violated]


# ---------------------------------------------------------------------------
# Tabular output.  Floats are rendered with 9 significant digits; an
# unreachable bound serializes as the literal "inf".

def _f(x: float) -> str:
    return f"{x:.9g}"


def lambda_sweep_rows(records: list[ReachRecord]) -> list[dict]:
    rows = []
    for r in records:
        for T, lam in zip(r.horizons, r.lambda_max):
            rows.append(
                {
                    "theta": r.coords["theta"],
                    "gamma": r.coords["gamma"],
                    "omega": r.coords["omega"],
                    "T": T,
                    "lambda_max": lam,
                }
            )
    return rows


def gate_map_rows(records: list[ReachRecord]) -> list[dict]:
    rows = []
    for r in records:
        row = {
            "model": r.coords["model"],
            "theta": r.coords["theta"],
            "alpha": r.coords["alpha"],
            "beta": r.coords["beta"],
            "t_star": r.t_star,
        }
        for i, flag in enumerate(r.reachable, start=1):
            row[f"reach_T{i}"] = int(flag)
        rows.append(row)
    return rows


def bell_sweep_rows(records: list[ReachRecord]) -> list[dict]:
    return [
        {
            "state": r.coords["state"],
            "gamma": r.coords["gamma"],
            "T": r.horizons[0],
            "lambda_max": r.lambda_max[0],
        }
        for r in records
    ]


def verify_rows(records: list[VerifyRecord]) -> list[dict]:
    return [
        {
            "trial": r.trial,
            "seed": r.seed,
            "dim": r.dim,
            "T": r.T,
            "theta_T": r.theta_T,
            "lambda": r.lam,
            "t_star": r.t_star,
            "margin": r.margin,
        }
        for r in records
    ]


def write_rows_csv(rows: list[dict], path) -> None:
    """Write dict rows as CSV in insertion order, floats at 9 significant
    digits, booleans/ints verbatim, +inf as "inf".  ``path`` may be a file
    path or an open text stream."""
    if not rows:
        raise ValueError("no rows to write")
    cols = list(rows[0].keys())

    def _write(fh):
        fh.write(",".join(cols) + "\n")
        for row in rows:
            cells = []
            for c in cols:
                v = row[c]
                cells.append(_f(v) if isinstance(v, float) else str(v))
            fh.write(",".join(cells) + "\n")

    if hasattr(path, "write"):
        _write(path)
    else:
        with open(path, "w", newline="\n") as fh:
            _write(fh)


def write_lambda_sweep_csv(records: list[ReachRecord], path) -> None:
    write_rows_csv(lambda_sweep_rows(records), path)


def write_gate_map_csv(records: list[ReachRecord], path) -> None:
    write_rows_csv(gate_map_rows(records), path)


def write_bell_sweep_csv(records: list[ReachRecord], path) -> None:
    write_rows_csv(bell_sweep_rows(records), path)


#: Fixed provenance note for verify output; parsers should skip '#' lines.
VERIFY_CSV_COMMENT = (
    "# random systems: rng([seed, dim, trial]); Gaussian entries; "
    "H = (X+X^dag)/2 and M each scaled to unit Frobenius norm times a "
    "strength drawn from U[0, 2]; psi0 normalized Gaussian"
)


def write_verify_csv(records: list[VerifyRecord], path) -> None:
    rows = verify_rows(records)
    if hasattr(path, "write"):
        path.write(VERIFY_CSV_COMMENT + "\n")
        write_rows_csv(rows, path)
    else:
        with open(path, "w", newline="\n") as fh:
            fh.write(VERIFY_CSV_COMMENT + "\n")
            write_rows_csv(rows, fh)
