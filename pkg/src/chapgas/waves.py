"""Exact Riemann solution: fan construction and evaluation.

Every wave rides a parabola x(t) = c t + beta t^2 / 2; the fan types below
store the drift-free coefficients c, never closures, so two problems that
differ only in beta produce identical stored coefficients. Evaluation
reports the physical velocity u = v + beta t.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import ClassVar, Union

import numpy as np

from .delta import DeltaShockWave, make_delta_wave
from .errors import NegativeTime, OutsideFan, PressurelessNotApplicable, RegionMismatch
from .states import (
    GasParams,
    ParabolicPath,
    PrimState,
    Region,
    RiemannProblem,
    classify_region,
    pressureless_case,
    validate_problem,
)


@dataclass(frozen=True)
class TwoContactsVacuum:
    """Pressureless expansion: vacuum opens between two contacts."""

    variant: ClassVar[str] = "two_contacts_vacuum"
    problem: RiemannProblem
    x_left: ParabolicPath
    x_right: ParabolicPath


@dataclass(frozen=True)
class SingleContact:
    """Equal-velocity data: one contact carrying the density jump."""

    variant: ClassVar[str] = "single_contact"
    problem: RiemannProblem
    x_c: ParabolicPath


@dataclass(frozen=True)
class RarefactionContact:
    """Rarefaction (edges x1m, x1p) followed by a contact at x2."""

    variant: ClassVar[str] = "rarefaction_contact"
    problem: RiemannProblem
    star: PrimState
    x1m: ParabolicPath
    x1p: ParabolicPath
    x2: ParabolicPath


@dataclass(frozen=True)
class ShockContact:
    """1-shock at x1, intermediate plateau, contact at x2."""

    variant: ClassVar[str] = "shock_contact"
    problem: RiemannProblem
    star: PrimState
    x1: ParabolicPath
    x2: ParabolicPath


@dataclass(frozen=True)
class DeltaShock:
    """Single weighted Dirac measure separating the data states."""

    variant: ClassVar[str] = "delta_shock"
    problem: RiemannProblem
    delta: DeltaShockWave


WaveFan = Union[TwoContactsVacuum, SingleContact, RarefactionContact, ShockContact, DeltaShock]


def intermediate_state(p: RiemannProblem) -> PrimState:
    """Star state joining the 1-wave through the left state to the contact.

    Solves v* - A/rho***alpha = w_l with v* = u_r. Defined for regions I and
    II (and degenerately on the contact boundary); compressive region III
    data have no classical intermediate state.
    """
    region = classify_region(p)
    if region in (Region.III, Region.OnSdelta):
        raise RegionMismatch(f"no intermediate state in region {region.value}")
    g = p.params
    # chap(rho_star) must equal u_r - u_l + chap(rho_l), positive here
    gap = p.right.v - p.left.v + g.chap(p.left.rho)
    rho_star = (g.A / gap) ** (1.0 / g.alpha)
    return PrimState(rho=rho_star, v=p.right.v)


def rarefaction_state(xi: float, t: float, left: PrimState, g: GasParams) -> PrimState:
    """State inside the rarefaction fan at characteristic speed xi, time t.

    xi is the lambda_1 value of the sought state at time t, so the state
    satisfies eigenvalues(state, g, t)[0] == xi. The fan spans
    lambda_1(left, t) <= xi; the caller bounds xi above by the fan tail.
    """
    if g.pressureless:
        raise PressurelessNotApplicable("rarefaction waves require A > 0")
    q_l = g.chap(left.rho)
    w_l = left.v - q_l
    xs = xi - g.beta * t
    head = left.v - g.alpha * q_l
    if xs < head:
        raise OutsideFan(f"xi = {xi} lies left of the fan head at time {t}")
    rho = (g.A * (1.0 - g.alpha) / (xs - w_l)) ** (1.0 / g.alpha)
    v = (xs - g.alpha * w_l) / (1.0 - g.alpha)
    return PrimState(rho=rho, v=v)


def solve(p: RiemannProblem) -> WaveFan:
    """Construct the exact wave fan for the Riemann problem."""
    validate_problem(p)
    g = p.params
    beta = g.beta
    u_l, u_r = p.left.v, p.right.v

    if g.pressureless:
        case = pressureless_case(p)
        if case == "expansion":
            return TwoContactsVacuum(
                p, x_left=ParabolicPath(u_l, beta), x_right=ParabolicPath(u_r, beta)
            )
        if case == "contact":
            return SingleContact(p, x_c=ParabolicPath(u_l, beta))
        return DeltaShock(p, delta=make_delta_wave(p))

    region = classify_region(p)
    if region is Region.OnJ:
        return SingleContact(p, x_c=ParabolicPath(u_l, beta))
    if region is Region.I:
        star = intermediate_state(p)
        head = u_l - g.alpha * g.chap(p.left.rho)
        tail = star.v - g.alpha * g.chap(star.rho)
        return RarefactionContact(
            p,
            star=star,
            x1m=ParabolicPath(head, beta),
            x1p=ParabolicPath(tail, beta),
            x2=ParabolicPath(u_r, beta),
        )
    if region is Region.II:
        star = intermediate_state(p)
        shock = (star.rho * star.v - p.left.rho * u_l) / (star.rho - p.left.rho)
        return ShockContact(
            p,
            star=star,
            x1=ParabolicPath(shock, beta),
            x2=ParabolicPath(u_r, beta),
        )
    return DeltaShock(p, delta=make_delta_wave(p))


def wave_paths(fan: WaveFan):
    """Labelled trajectories of every wave in the fan, left to right."""
    if isinstance(fan, TwoContactsVacuum):
        return (("J1", fan.x_left), ("J2", fan.x_right))
    if isinstance(fan, SingleContact):
        return (("J", fan.x_c),)
    if isinstance(fan, RarefactionContact):
        return (("R1.head", fan.x1m), ("R1.tail", fan.x1p), ("J", fan.x2))
    if isinstance(fan, ShockContact):
        return (("S1", fan.x1), ("J", fan.x2))
    if isinstance(fan, DeltaShock):
        return (("Sdelta", fan.delta.path),)
    raise TypeError(f"not a wave fan: {fan!r}")


def wave_positions(fan: WaveFan, t: float):
    """Labelled wave positions at time t."""
    return [(label, path.position(t)) for label, path in wave_paths(fan)]


def rh_residual(left: PrimState, right: PrimState, path: ParabolicPath, g: GasParams, t: float):
    """Rankine-Hugoniot residuals across a bounded discontinuity at time t.

    Returns (mass, momentum) defects [flux] - sigma(t) [density] for the
    conservative drift-frame pair (rho, rho(v + P)) with flux factor
    v + beta t. Both vanish for shocks and contacts of the fan.
    """
    sigma = path.speed(t)
    ut_l = left.v + g.beta * t
    ut_r = right.v + g.beta * t
    mom_l = left.rho * (left.v - g.chap(left.rho))
    mom_r = right.rho * (right.v - g.chap(right.rho))
    e1 = (right.rho * ut_r - left.rho * ut_l) - sigma * (right.rho - left.rho)
    e2 = (mom_r * ut_r - mom_l * ut_l) - sigma * (mom_r - mom_l)
    return e1, e2


def _profile(fan: WaveFan, x, t):
    """Vectorized classical part (rho, u) of the solution at points (x, t).

    Vacuum reports rho = 0 with u = 0 (any quadrature weight multiplies by
    rho); points exactly on a delta trajectory report the right state. Use
    evaluate() for flagged scalar samples.
    """
    x_in = np.asarray(x, dtype=float)
    t_in = np.asarray(t, dtype=float)
    if np.any(t_in <= 0.0):
        raise NegativeTime("profile evaluation requires t > 0")
    xb, tb = np.broadcast_arrays(x_in, t_in)
    shape = xb.shape
    x = xb.reshape(-1)
    t = tb.reshape(-1)
    p = fan.problem
    g = p.params
    bt = g.beta * t
    half = 0.5 * g.beta * t * t
    u_l = p.left.v + bt
    u_r = p.right.v + bt
    rho = np.empty(x.shape, dtype=float)
    u = np.empty(x.shape, dtype=float)

    if isinstance(fan, SingleContact):
        on_left = x < fan.x_c.c * t + half
        rho[:] = np.where(on_left, p.left.rho, p.right.rho)
        u[:] = np.where(on_left, u_l, u_r)

    elif isinstance(fan, TwoContactsVacuum):
        xl = fan.x_left.c * t + half
        xr = fan.x_right.c * t + half
        left = x <= xl
        right = x >= xr
        rho[:] = np.where(left, p.left.rho, np.where(right, p.right.rho, 0.0))
        u[:] = np.where(left, u_l, np.where(right, u_r, 0.0))

    elif isinstance(fan, DeltaShock):
        on_left = x < fan.delta.v_delta * t + half
        rho[:] = np.where(on_left, p.left.rho, p.right.rho)
        u[:] = np.where(on_left, u_l, u_r)

    elif isinstance(fan, ShockContact):
        x1 = fan.x1.c * t + half
        x2 = fan.x2.c * t + half
        left = x < x1
        star = ~left & (x < x2)
        rho[:] = np.where(left, p.left.rho, np.where(star, fan.star.rho, p.right.rho))
        u[:] = np.where(left, u_l, np.where(star, fan.star.v + bt, u_r))

    elif isinstance(fan, RarefactionContact):
        x1m = fan.x1m.c * t + half
        x1p = fan.x1p.c * t + half
        x2 = fan.x2.c * t + half
        left = x <= x1m
        interior = ~left & (x < x1p)
        star = ~left & ~interior & (x < x2)
        rho[:] = np.where(left, p.left.rho, np.where(star, fan.star.rho, p.right.rho))
        u[:] = np.where(left, u_l, np.where(star | interior, fan.star.v + bt, u_r))
        if np.any(interior):
            q_l = g.chap(p.left.rho)
            w_l = p.left.v - q_l
            xs = (x[interior] - half[interior]) / t[interior]
            rho[interior] = (g.A * (1.0 - g.alpha) / (xs - w_l)) ** (1.0 / g.alpha)
            u[interior] = (xs - g.alpha * w_l) / (1.0 - g.alpha) + bt[interior]

    else:
        raise TypeError(f"not a wave fan: {fan!r}")

    return rho.reshape(shape), u.reshape(shape)


class SampleKind:
    REGULAR = "regular"
    VACUUM = "vacuum"
    ON_DELTA = "delta"


@dataclass(frozen=True)
class SolutionSample:
    """Pointwise solution value; rho/u for regular points, weight/u_delta on
    the delta trajectory, neither in a vacuum."""

    kind: str
    rho: float | None = None
    u: float | None = None
    weight: float | None = None
    u_delta: float | None = None


def evaluate(fan: WaveFan, x: float, t: float, loc_tol: float | None = None) -> SolutionSample:
    """Sample the solution at (x, t), t > 0.

    Points within loc_tol of a delta trajectory report the running weight
    w(t) and the delta velocity; loc_tol defaults to 1e-9 * max(1, |x|).
    """
    if t <= 0.0:
        raise NegativeTime(f"evaluation requires t > 0, got t = {t}")
    if loc_tol is None:
        loc_tol = 1e-9 * max(1.0, abs(x))

    if isinstance(fan, DeltaShock):
        xd = fan.delta.position(t)
        if abs(x - xd) <= loc_tol:
            return SolutionSample(
                kind=SampleKind.ON_DELTA,
                weight=fan.delta.weight(t),
                u_delta=fan.delta.u_delta(t),
            )
    if isinstance(fan, TwoContactsVacuum):
        if fan.x_left.position(t) < x < fan.x_right.position(t):
            return SolutionSample(kind=SampleKind.VACUUM)

    rho, u = _profile(fan, x, t)
    return SolutionSample(kind=SampleKind.REGULAR, rho=float(rho), u=float(u))
