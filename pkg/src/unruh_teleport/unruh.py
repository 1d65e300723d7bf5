"""Uniform-acceleration channel acting on the receiver's qubit.

The receiver's qubit is re-expressed in the coordinates natural to a
uniformly accelerated observer. Its two logical states embed into a pair of
modes, one accessible and one causally disconnected:

    |0>  ->  cos(r) |0>|0>  +  sin(r) |1>|1>
    |1>  ->  qr |1>|0>  +  ql |0>|1>,        |qr|^2 + |ql|^2 = 1,

and tracing out the disconnected mode degrades the shared channel. The
acceleration parameter r lies in [0, pi/4]: r = 0 is the inertial limit and
r = pi/4 the infinite-acceleration limit, via tan(r) = exp(-pi*omega*c/a).

Two implementations are kept deliberately independent. ``accelerate``
produces the eight closed-form coefficients b1..b8 of the degraded state,
while ``bogoliubov_oracle`` builds the embedding isometry explicitly and
performs the partial trace; their agreement is part of the verification
suite.
"""

from __future__ import annotations

import math
from dataclasses import InitVar, dataclass

import numpy as np

from ._linalg import IDENTITY_2, partial_trace
from .channels import CorrelationDyadic, dyadic_to_density
from .errors import DomainError

R_MAX = math.pi / 4
WEIGHT_NORM_TOL = 1e-12
CHANNEL_TOL = 1e-12

MODE_NAMES = ("wsma", "bsma")
# wsma: excitation purely in the right-moving mode (single-mode approximation).
# bsma: equal right/left mixing (beyond the single-mode approximation).
MODE_WEIGHTS: dict[str, tuple[complex, complex]] = {
    "wsma": (1.0 + 0.0j, 0.0j),
    "bsma": (complex(1.0 / math.sqrt(2.0)), complex(1.0 / math.sqrt(2.0))),
}


@dataclass(frozen=True)
class UnruhParams:
    """Acceleration parameter r plus the complex mode weights (qr, ql)."""

    r: float
    qr: complex = 1.0 + 0.0j
    ql: complex = 0.0j

    def __post_init__(self) -> None:
        if not (math.isfinite(self.r) and 0.0 <= self.r <= R_MAX):
            raise DomainError(f"r must lie in [0, pi/4], got {self.r}")
        norm = abs(self.qr) ** 2 + abs(self.ql) ** 2
        if abs(norm - 1.0) > WEIGHT_NORM_TOL:
            raise DomainError(
                f"|qr|^2 + |ql|^2 must equal 1 within {WEIGHT_NORM_TOL}, got {norm}"
            )


def mode_params(r: float, mode: str = "wsma") -> UnruhParams:
    """UnruhParams for one of the named mode presets."""
    if mode not in MODE_WEIGHTS:
        raise DomainError(f"unknown mode preset {mode!r}, expected one of {MODE_NAMES}")
    qr, ql = MODE_WEIGHTS[mode]
    return UnruhParams(r, qr, ql)


def r_from_acceleration(omega: float, accel: float, c: float) -> float:
    """Acceleration parameter r = arctan(exp(-pi*omega*c/accel)).

    ``omega`` is the mode frequency (rad/s), ``accel`` the proper
    acceleration (m/s^2), ``c`` the speed of light (m/s). accel = 0 maps to
    the inertial value r = 0; accel -> infinity approaches r = pi/4.
    """
    if not omega > 0:
        raise DomainError(f"omega must be positive, got {omega}")
    if not c > 0:
        raise DomainError(f"c must be positive, got {c}")
    if accel < 0:
        raise DomainError(f"accel must be non-negative, got {accel}")
    if accel == 0:
        return 0.0
    return math.atan(math.exp(-math.pi * omega * c / accel))


@dataclass(frozen=True)
class AcceleratedChannel:
    """The eight coefficients of the degraded two-qubit state.

    Layout in the (sender, receiver) computational basis:
    b1 -> (00,00), b2 -> (00,11), b3 -> (11,00), b4 -> (01,01),
    b5 -> (10,10), b6 -> (10,01), b7 -> (01,10), b8 -> (11,11).
    """

    b1: complex
    b2: complex
    b3: complex
    b4: complex
    b5: complex
    b6: complex
    b7: complex
    b8: complex
    validate: InitVar[bool] = True

    def __post_init__(self, validate: bool) -> None:
        if not validate:
            return
        trace = self.b1 + self.b4 + self.b5 + self.b8
        if abs(trace - 1.0) > CHANNEL_TOL:
            raise DomainError(f"diagonal coefficients must sum to 1, got {trace}")
        if abs(self.b3 - self.b2.conjugate()) > CHANNEL_TOL:
            raise DomainError("b3 must equal conj(b2)")
        if abs(self.b7 - self.b6.conjugate()) > CHANNEL_TOL:
            raise DomainError("b7 must equal conj(b6)")
        for name in ("b1", "b4", "b5", "b8"):
            value = getattr(self, name)
            if abs(value.imag) > CHANNEL_TOL or value.real < -CHANNEL_TOL:
                raise DomainError(f"{name} must be real and non-negative, got {value}")

    def as_tuple(self) -> tuple[complex, ...]:
        return (self.b1, self.b2, self.b3, self.b4, self.b5, self.b6, self.b7, self.b8)


def accelerate(d: CorrelationDyadic, u: UnruhParams) -> AcceleratedChannel:
    """Closed-form coefficients of the channel after accelerating Bob's qubit.

    The four auxiliary combinations are a1 = (1+c33)/4, a2 = (1-c33)/4,
    a3 = (c11+c22)/4 and a4 = (c11-c22)/4. Hermiticity requires
    b7 = conj(b6), which fixes the roles of a3 and a4 in b7; the broken
    alternative that swaps them is kept in :func:`accelerate_swapped_b7`
    purely so the verification report can show the size of the violation.
    """
    a1 = (1.0 + d.c33) / 4.0
    a2 = (1.0 - d.c33) / 4.0
    a3 = (d.c11 + d.c22) / 4.0
    a4 = (d.c11 - d.c22) / 4.0
    cr, sr = math.cos(u.r), math.sin(u.r)
    big_r, big_l = abs(u.qr) ** 2, abs(u.ql) ** 2
    qrc, qlc = u.qr.conjugate(), u.ql.conjugate()
    return AcceleratedChannel(
        b1=a1 * cr * cr + a2 * big_l,
        b2=a4 * qrc * cr + a3 * u.ql * sr,
        b3=a3 * qlc * sr + a4 * u.qr * cr,
        b4=a1 * sr * sr + a2 * big_r,
        b5=a2 * cr * cr + a1 * big_l,
        b6=a3 * qrc * cr + a4 * u.ql * sr,
        b7=a3 * u.qr * cr + a4 * qlc * sr,
        b8=a2 * sr * sr + a1 * big_r,
    )


def accelerate_swapped_b7(d: CorrelationDyadic, u: UnruhParams) -> AcceleratedChannel:
    """Variant with the (01,10) coefficient copied from the (11,00) one.

    This plausible transcription slip breaks b7 = conj(b6) whenever the
    symmetric and antisymmetric correlation combinations differ. It is never
    used by any computation path; the verification report and the mutation
    tests exercise it to demonstrate the cross-checks catch it.
    """
    good = accelerate(d, u)
    a3 = (d.c11 + d.c22) / 4.0
    a4 = (d.c11 - d.c22) / 4.0
    cr, sr = math.cos(u.r), math.sin(u.r)
    swapped = a3 * u.ql.conjugate() * sr + a4 * u.qr * cr
    return AcceleratedChannel(
        good.b1, good.b2, good.b3, good.b4, good.b5, good.b6, swapped, good.b8,
        validate=False,
    )


def accelerated_density(ch: AcceleratedChannel) -> np.ndarray:
    """Dense 4x4 matrix with b1..b8 placed per the class docstring."""
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = ch.b1
    m[0, 3] = ch.b2
    m[3, 0] = ch.b3
    m[1, 1] = ch.b4
    m[2, 2] = ch.b5
    m[2, 1] = ch.b6
    m[1, 2] = ch.b7
    m[3, 3] = ch.b8
    return m


def bogoliubov_isometry(u: UnruhParams) -> np.ndarray:
    """4x2 isometry embedding the receiver's qubit into the two-mode space.

    Columns are the images of |0> and |1>; rows are ordered |00>, |01>,
    |10>, |11> over (accessible mode, disconnected mode).
    """
    v = np.zeros((4, 2), dtype=complex)
    v[0, 0] = math.cos(u.r)
    v[3, 0] = math.sin(u.r)
    v[2, 1] = u.qr
    v[1, 1] = u.ql
    return v


def bogoliubov_oracle(d: CorrelationDyadic, u: UnruhParams) -> np.ndarray:
    """Accelerated channel computed by explicit embedding and partial trace.

    Independent of :func:`accelerate`: applies (I x V) rho (I x V)^dagger on
    the three-factor space (sender, accessible mode, disconnected mode) and
    traces out the last factor.
    """
    rho = dyadic_to_density(d)
    embed = np.kron(IDENTITY_2, bogoliubov_isometry(u))
    big = embed @ rho @ embed.conj().T
    return partial_trace(big, (2, 2, 2), keep=(0, 1))
