"""Concrete systems: single qubit, Bell pairs under collective decay, qutrit.

Conventions follow the Bloch parametrization with |0> the excited state and
|1> the ground state, so the energy-decay operator is sigma_- = |1><0|.
Each model comes with closed-form bound coefficients or gate bounds that
can be cross-checked against the generic pipeline in :mod:`qslreach.qsl`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import qsl
from .dynamics import SystemSpec

_SQ2 = math.sqrt(2.0)

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
SIGMA_MINUS = np.array([[0, 0], [1, 0]], dtype=complex)  # |1><0|, decay |0> -> |1>
SIGMA_PLUS = np.array([[0, 1], [0, 0]], dtype=complex)

SPIN1_X = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=complex) / _SQ2
SPIN1_Y = np.array([[0, -1j, 0], [1j, 0, -1j], [0, 1j, 0]], dtype=complex) / _SQ2
SPIN1_Z = np.array([[1, 0, 0], [0, 0, 0], [0, 0, -1]], dtype=complex)

BELL_LABELS = ("phi-plus", "phi-minus", "psi-plus", "psi-minus")

_ANGLE_SLACK = 1e-9


def pauli(axis: str) -> np.ndarray:
    """Pauli matrix along 'x', 'y', or 'z'."""
    try:
        return {"x": PAULI_X, "y": PAULI_Y, "z": PAULI_Z}[axis].copy()
    except KeyError:
        raise ValueError(f"axis must be 'x', 'y', or 'z', got {axis!r}") from None


def spin1(axis: str) -> np.ndarray:
    """Spin-1 angular momentum matrix along 'x', 'y', or 'z'."""
    try:
        return {"x": SPIN1_X, "y": SPIN1_Y, "z": SPIN1_Z}[axis].copy()
    except KeyError:
        raise ValueError(f"axis must be 'x', 'y', or 'z', got {axis!r}") from None


@dataclass(frozen=True)
class QubitParams:
    """Initial-state angles and rates for the qubit models.

    theta, phi parametrize |psi0> = [cos(theta), e^{i phi} sin(theta)];
    omega is the drive frequency, gamma the decay rate, u_max the control
    amplitude bound.
    """

    theta: float
    phi: float = 0.0
    omega: float = 1.0
    gamma: float = 0.0
    u_max: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi + _ANGLE_SLACK:
            raise ValueError(f"theta must lie in [0, pi], got {self.theta!r}")
        if not 0.0 <= self.phi <= math.pi + _ANGLE_SLACK:
            raise ValueError(f"phi must lie in [0, pi], got {self.phi!r}")
        if self.omega <= 0.0:
            raise ValueError(f"omega must be > 0, got {self.omega!r}")
        if self.gamma < 0.0:
            raise ValueError(f"gamma must be >= 0, got {self.gamma!r}")
        if self.u_max < 0.0:
            raise ValueError(f"u_max must be >= 0, got {self.u_max!r}")


@dataclass(frozen=True)
class GateParams:
    """Rotation angles (alpha, beta, delta) of a target gate."""

    alpha: float
    beta: float
    delta: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 2 * math.pi + _ANGLE_SLACK:
            raise ValueError(f"alpha must lie in [0, 2pi], got {self.alpha!r}")
        if not 0.0 <= self.beta <= math.pi + _ANGLE_SLACK:
            raise ValueError(f"beta must lie in [0, pi], got {self.beta!r}")
        if not 0.0 <= self.delta <= 4 * math.pi + _ANGLE_SLACK:
            raise ValueError(f"delta must lie in [0, 4pi], got {self.delta!r}")


@dataclass(frozen=True)
class BellState:
    label: str
    vector: np.ndarray


def qubit_state(p: QubitParams) -> np.ndarray:
    """|psi0> = [cos(theta), e^{i phi} sin(theta)]."""
    return np.array(
        [math.cos(p.theta), np.exp(1j * p.phi) * math.sin(p.theta)], dtype=complex
    )


def qubit_spec(p: QubitParams, with_control: bool = False) -> SystemSpec:
    """Qubit system.

    Without control: H = omega sigma_z with decay M = sqrt(gamma) sigma_-.
    With control (gate analysis, no decoherence): drift omega sigma_x,
    control sigma_z bounded by u_max.
    """
    psi0 = qubit_state(p)
    if with_control:
        return SystemSpec(
            psi0=psi0,
            h_drift=p.omega * PAULI_X,
            h_control=PAULI_Z,
            u_max=p.u_max,
        )
    ops = (math.sqrt(p.gamma) * SIGMA_MINUS,) if p.gamma > 0 else ()
    return SystemSpec(psi0=psi0, h_drift=p.omega * PAULI_Z, lindblad_ops=ops)


def qubit_closed_form_coeffs(p: QubitParams) -> qsl.QslCoefficients:
    """Closed-form coefficients for the driven, decaying qubit:

    A = sqrt(2 g^2 cos^2(2 th) + (4 w^2 + g^2 / 4) sin^2(2 th)),
    E = g cos^4(th).
    """
    g, w, th = p.gamma, p.omega, p.theta
    s2, c2 = math.sin(2 * th), math.cos(2 * th)
    a = math.sqrt(2 * g * g * c2 * c2 + (4 * w * w + g * g / 4) * s2 * s2)
    e = g * math.cos(th) ** 4
    return qsl.QslCoefficients(a, e, "closed_form")


def su2_gate(g: GateParams) -> np.ndarray:
    """G(alpha, beta, delta) = Rz(alpha) Ry(beta) Rz(delta) on a qubit."""
    rz_a = np.array(
        [[np.exp(-0.5j * g.alpha), 0], [0, np.exp(0.5j * g.alpha)]], dtype=complex
    )
    ry = np.array(
        [
            [math.cos(g.beta / 2), -math.sin(g.beta / 2)],
            [math.sin(g.beta / 2), math.cos(g.beta / 2)],
        ],
        dtype=complex,
    )
    rz_d = np.array(
        [[np.exp(-0.5j * g.delta), 0], [0, np.exp(0.5j * g.delta)]], dtype=complex
    )
    return rz_a @ ry @ rz_d


def gate_fidelity(psi0: np.ndarray, gate: np.ndarray) -> float:
    """|<psi0| G |psi0>|^2."""
    psi0 = np.asarray(psi0, dtype=complex)
    gate = np.asarray(gate)
    if gate.shape[0] != psi0.shape[0]:
        raise ValueError(f"dimension mismatch: {gate.shape[0]} vs {psi0.shape[0]}")
    return min(abs(np.vdot(psi0, gate @ psi0)) ** 2, 1.0)


def qubit_gate_radius(theta: float, g: GateParams) -> float:
    """Closed form of sqrt(1 - fidelity) for the su2 gate family at phi = 0:

    sqrt(1 - cos^2(a/2) cos^2(b/2) - sin^2(a/2) cos^2(2 th + b/2)).
    """
    ca, sa = math.cos(g.alpha / 2), math.sin(g.alpha / 2)
    cb = math.cos(g.beta / 2)
    cmix = math.cos(2 * theta + g.beta / 2)
    return math.sqrt(max(1.0 - ca * ca * cb * cb - sa * sa * cmix * cmix, 0.0))


def qubit_gate_time_bound(p: QubitParams, g: GateParams) -> float:
    """Minimum time to implement G(alpha, beta) with drift omega sigma_x and
    control |u| <= u_max:

        T* = qubit_gate_radius / (omega |cos 2th| + u_max |sin 2th|).
    """
    if p.phi != 0.0:
        raise ValueError("the closed-form gate bound assumes phi = 0")
    if g.delta != 0.0:
        raise ValueError("the closed-form gate bound assumes delta = 0")
    denom = p.omega * abs(math.cos(2 * p.theta)) + p.u_max * abs(math.sin(2 * p.theta))
    if denom < 1e-12:
        raise ValueError("zero denominator: both drive terms vanish at this theta")
    return qubit_gate_radius(p.theta, g) / denom


def bell_state(label: str) -> BellState:
    """One of the four maximally entangled two-qubit states."""
    s = 1.0 / _SQ2
    vectors = {
        "phi-plus": np.array([s, 0, 0, s], dtype=complex),
        "phi-minus": np.array([s, 0, 0, -s], dtype=complex),
        "psi-plus": np.array([0, s, s, 0], dtype=complex),
        "psi-minus": np.array([0, -s, s, 0], dtype=complex),
    }
    if label not in vectors:
        raise ValueError(f"label must be one of {BELL_LABELS}, got {label!r}")
    return BellState(label=label, vector=vectors[label])


def collective_decay(gamma: float) -> np.ndarray:
    """Collective lowering operator sqrt(gamma) (sigma_- x I + I x sigma_-)."""
    if gamma < 0:
        raise ValueError(f"gamma must be >= 0, got {gamma!r}")
    eye = np.eye(2, dtype=complex)
    return math.sqrt(gamma) * (np.kron(SIGMA_MINUS, eye) + np.kron(eye, SIGMA_MINUS))


def bell_spec(label: str, gamma: float) -> SystemSpec:
    """Bell state evolving under collective decay alone (H = 0)."""
    return SystemSpec(
        psi0=bell_state(label).vector,
        h_drift=np.zeros((4, 4), dtype=complex),
        lindblad_ops=(collective_decay(gamma),),
    )


def bell_coefficients(label: str, gamma: float) -> qsl.QslCoefficients:
    """Generic-pipeline coefficients for a Bell state under collective decay."""
    return qsl.generic_coefficients(bell_spec(label, gamma))


def bell_time_bound(label: str, gamma: float, lam: float) -> float:
    """Minimum time for a Bell state to reach radius lambda under collective
    decay; +inf for psi-minus, which the noise cannot move."""
    return qsl.qsl_time(bell_coefficients(label, gamma), lam)


def qutrit_state(theta: float, varphi: float) -> np.ndarray:
    """Real three-level state
    [sin(th/2) cos(ph/2), cos(th/2), sin(th/2) sin(ph/2)]."""
    if not 0.0 <= theta <= math.pi + _ANGLE_SLACK:
        raise ValueError(f"theta must lie in [0, pi], got {theta!r}")
    if not 0.0 <= varphi <= math.pi + _ANGLE_SLACK:
        raise ValueError(f"varphi must lie in [0, pi], got {varphi!r}")
    return np.array(
        [
            math.sin(theta / 2) * math.cos(varphi / 2),
            math.cos(theta / 2),
            math.sin(theta / 2) * math.sin(varphi / 2),
        ],
        dtype=complex,
    )


#: The worked qutrit initial state [1, 0, 1]/sqrt(2) (theta = pi, phi = pi/2).
QUTRIT_PSI0 = np.array([1.0, 0.0, 1.0], dtype=complex) / _SQ2


def qutrit_spec(omega: float, u_max: float, psi0: np.ndarray | None = None) -> SystemSpec:
    """Qutrit with drift omega S_x and control S_z bounded by u_max."""
    if omega <= 0:
        raise ValueError(f"omega must be > 0, got {omega!r}")
    if u_max < 0:
        raise ValueError(f"u_max must be >= 0, got {u_max!r}")
    return SystemSpec(
        psi0=QUTRIT_PSI0 if psi0 is None else psi0,
        h_drift=omega * SPIN1_X,
        h_control=SPIN1_Z.copy(),
        u_max=u_max,
    )


def so3_gate(g: GateParams) -> np.ndarray:
    """Three-dimensional rotation G(alpha, beta, delta) = Rz(delta) Rx(alpha) Ry(beta).

    Rx, Ry, Rz are the standard 3x3 rotation blocks about the x, y, z axes.
    Ry is applied first; this composition reproduces the closed-form gate
    fidelity of :func:`qutrit_gate_fidelity` and the displayed special
    gates, which the more obvious Ry-then-Rx order does not.
    """
    ca, sa = math.cos(g.alpha), math.sin(g.alpha)
    cb, sb = math.cos(g.beta), math.sin(g.beta)
    cd, sd = math.cos(g.delta), math.sin(g.delta)
    rx = np.array([[ca, -sa, 0], [sa, ca, 0], [0, 0, 1]], dtype=complex)
    ry = np.array([[cb, 0, sb], [0, 1, 0], [-sb, 0, cb]], dtype=complex)
    rz = np.array([[1, 0, 0], [0, cd, -sd], [0, sd, cd]], dtype=complex)
    return rz @ rx @ ry


def qutrit_gate_fidelity(g: GateParams) -> float:
    """Closed-form cos(Theta_T) for the qutrit gate family from [1,0,1]/sqrt(2):

    (cos a cos b + cos a sin b + cos b - sin b)^2 / 4.
    """
    ca, cb = math.cos(g.alpha), math.cos(g.beta)
    sb = math.sin(g.beta)
    val = 0.25 * (ca * cb + ca * sb + cb - sb) ** 2
    return min(val, 1.0)


def qutrit_gate_time_bound(omega: float, u_max: float, g: GateParams) -> float:
    """Minimum time to implement the qutrit rotation G(alpha, beta):

        T* = sqrt(1 - cos Theta_T) / (omega + u_max).
    """
    if omega <= 0:
        raise ValueError(f"omega must be > 0, got {omega!r}")
    if u_max < 0:
        raise ValueError(f"u_max must be >= 0, got {u_max!r}")
    if g.delta != 0.0:
        raise ValueError("the closed-form gate bound assumes delta = 0")
    return qsl.radius_from_fidelity(qutrit_gate_fidelity(g)) / (omega + u_max)
