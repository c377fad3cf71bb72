"""Product-formula time evolution for Hamiltonians linear in the generators.

A Hamiltonian H(t) = eta_plus(t) T+ + eta_c(t) Tc + eta_minus(t) T- generates
a time-evolution operator that is approximated by slicing [0, t_final] into N
equal steps, disentangling each short exponential exp(-i tau H(t_j)) into
normal-ordered coordinates, and folding the steps in time order.  The result
is exact for constant coefficients and first-order accurate otherwise, with
the step coefficients sampled at the right endpoint by default.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from .algebra import AlgebraKind, ExponentParams, GroupElement, identity_element
from .compose import compose_pair, disentangle
from .errors import InvalidFrequency, SingularDecomposition

__all__ = [
    "EtaTriple",
    "HamiltonianSchedule",
    "EvolutionResult",
    "step_element",
    "evolve",
    "default_checkpoint_stride",
    "oscillator_schedule",
]

EtaTriple = tuple[complex, complex, complex]


@dataclass(frozen=True)
class HamiltonianSchedule:
    """Generator coefficients of H(t) on [0, t_final], as a pure function of t.

    ``eta`` maps a time to the (eta_plus, eta_c, eta_minus) triple; it must be
    evaluable everywhere on the interval and free of hidden state, since the
    evolution loop samples it at times the caller never sees.
    """

    algebra: AlgebraKind
    eta: Callable[[float], EtaTriple]
    t_final: float


@dataclass(frozen=True)
class EvolutionResult:
    """Final composed element plus the discretization that produced it."""

    element: GroupElement
    steps: int
    tau: float
    trajectory: Optional[tuple] = None


def step_element(algebra: AlgebraKind, eta_j, tau: float) -> GroupElement:
    """Normal-ordered element of one short exponential exp(-i tau H_j)."""
    eta_plus, eta_c, eta_minus = (complex(v) for v in eta_j)
    lam = ExponentParams(-1j * tau * eta_plus, -1j * tau * eta_c, -1j * tau * eta_minus)
    return disentangle(algebra, lam).element


def default_checkpoint_stride(steps: int) -> int:
    """Trajectory thinning that bounds stored checkpoints to about 100."""
    return max(1, steps // 100)


def evolve(
    schedule: HamiltonianSchedule,
    steps: int,
    checkpoint_every: Optional[int] = None,
    midpoint: bool = False,
) -> EvolutionResult:
    """Fold N per-step elements into the evolution operator over [0, t_final].

    Steps are applied in time order, each new one acting after the running
    product; the fold is the same floating-point path as composing the step
    elements as a sequence.  ``checkpoint_every`` = k records the running
    element every k steps (plus the start and the end) in the trajectory.
    ``midpoint`` samples eta at interval midpoints instead of right
    endpoints; that is a second-order variant beyond the plain product
    formula and is off by default.
    """
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    if not schedule.t_final > 0:
        raise ValueError(f"t_final must be positive, got {schedule.t_final}")
    if checkpoint_every is not None and checkpoint_every < 1:
        raise ValueError(f"checkpoint stride must be >= 1, got {checkpoint_every}")

    tau = schedule.t_final / steps
    trajectory = None
    if checkpoint_every is not None:
        trajectory = [(0.0, identity_element(schedule.algebra))]

    acc = None
    for j in range(1, steps + 1):
        t_right = j * tau
        t_sample = t_right - 0.5 * tau if midpoint else t_right
        try:
            g = step_element(schedule.algebra, schedule.eta(t_sample), tau)
            acc = g if acc is None else compose_pair(g, acc)
        except SingularDecomposition as exc:
            raise SingularDecomposition(
                f"evolution singular at step {j} of {steps} (t = {t_right:.6g})",
                denominator_abs=exc.denominator_abs,
                step=j,
                time=t_right,
            ) from exc
        if trajectory is not None and (j % checkpoint_every == 0 or j == steps):
            trajectory.append((t_right, acc))

    return EvolutionResult(
        element=acc,
        steps=steps,
        tau=tau,
        trajectory=tuple(trajectory) if trajectory is not None else None,
    )


def oscillator_schedule(
    omega0: float,
    omega_of_t: Callable[[float], float],
    t_final: float,
) -> HamiltonianSchedule:
    """su(1,1) schedule of a harmonic oscillator with drifting frequency.

    The Hamiltonian p^2/2 + omega(t)^2 q^2/2 is expanded in the generators
    built at a fixed reference frequency omega0, giving

        eta_plus = eta_minus = (omega(t)^2 - omega0^2) / (2 omega0),
        eta_c = (omega(t)^2 + omega0^2) / omega0.

    At omega = omega0 the coupling terms vanish and H reduces to
    2 omega0 Tc, the static oscillator.
    """
    omega0 = float(omega0)
    if not (math.isfinite(omega0) and omega0 > 0):
        raise InvalidFrequency(f"reference frequency must be positive, got {omega0}")
    if not float(t_final) > 0:
        raise ValueError(f"t_final must be positive, got {t_final}")

    def eta(t: float):
        omega = float(omega_of_t(t))
        if not (math.isfinite(omega) and omega > 0):
            raise InvalidFrequency(f"omega({t:.6g}) = {omega} is not positive")
        coupling = (omega * omega - omega0 * omega0) / (2.0 * omega0)
        cartan = (omega * omega + omega0 * omega0) / omega0
        return (complex(coupling), complex(cartan), complex(coupling))

    return HamiltonianSchedule(AlgebraKind.SU11, eta, float(t_final))
