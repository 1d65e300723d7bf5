"""Initial two-qubit communication channels.

Every channel handled here is diagonal in the Pauli correlation sense,

    rho = (I + c11 sx.sx + c22 sy.sy + c33 sz.sz) / 4,

written in the computational basis |00>, |01>, |10>, |11> with the first
qubit held by the sender (Alice) and the second by the receiver (Bob).
The Bell states, Werner states and diagonal X-states are all of this form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ._linalg import PAULIS
from .errors import DomainError

PRESET_NAMES = ("bell-phi-plus", "bell-psi-minus", "werner", "x-state")

EIGENVALUE_TOL = 1e-12


@dataclass(frozen=True)
class CorrelationDyadic:
    """Diagonal correlation coefficients (c11, c22, c33) of a two-qubit state."""

    c11: float
    c22: float
    c33: float

    def __post_init__(self) -> None:
        for name in ("c11", "c22", "c33"):
            value = getattr(self, name)
            if not (math.isfinite(value) and -1.0 <= value <= 1.0):
                raise DomainError(f"{name} must lie in [-1, 1], got {value}")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.c11, self.c22, self.c33)


class PhysicalityCheck(NamedTuple):
    physical: bool
    min_eigenvalue: float


def preset_dyadic(
    preset: str,
    *,
    fidelity: float | None = None,
    c11: float | None = None,
    c22: float | None = None,
    c33: float | None = None,
) -> CorrelationDyadic:
    """Expand a named channel preset to its correlation triple.

    ``werner`` requires ``fidelity`` in [0, 1] and maps to (-F, -F, -F);
    ``x-state`` requires all three coefficients explicitly.
    """
    if preset == "bell-phi-plus":
        return CorrelationDyadic(1.0, -1.0, 1.0)
    if preset == "bell-psi-minus":
        return CorrelationDyadic(-1.0, -1.0, -1.0)
    if preset == "werner":
        if fidelity is None:
            raise DomainError("werner preset requires the fidelity parameter")
        if not (math.isfinite(fidelity) and 0.0 <= fidelity <= 1.0):
            raise DomainError(f"fidelity must lie in [0, 1], got {fidelity}")
        return CorrelationDyadic(-fidelity, -fidelity, -fidelity)
    if preset == "x-state":
        if c11 is None or c22 is None or c33 is None:
            raise DomainError("x-state preset requires c11, c22 and c33")
        return CorrelationDyadic(c11, c22, c33)
    raise DomainError(f"unknown channel preset {preset!r}, expected one of {PRESET_NAMES}")


def dyadic_to_density(d: CorrelationDyadic) -> np.ndarray:
    """Dense 4x4 density matrix of the correlation triple.

    Hermitian with unit trace by construction; positivity depends on the
    coefficients and is checked by :func:`validate_physical`.
    """
    m = np.eye(4, dtype=complex)
    for c, sigma in zip(d.as_tuple(), PAULIS):
        m += c * np.kron(sigma, sigma)
    return m / 4.0


def validate_physical(d: CorrelationDyadic, tol: float = EIGENVALUE_TOL) -> PhysicalityCheck:
    """Report whether the induced density matrix is positive semidefinite.

    Returns a verdict plus the minimum eigenvalue; never raises. The ``tol``
    slack absorbs eigensolver noise on rank-deficient states.
    """
    eigenvalues = np.linalg.eigvalsh(dyadic_to_density(d))
    smallest = float(eigenvalues[0])
    return PhysicalityCheck(smallest >= -tol, smallest)
