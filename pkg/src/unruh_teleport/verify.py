"""Self-verification: every closed form checked against its independent oracle.

The report is plain text, deterministic for a given (trials, seed) pair, and
contains six sections: channel oracle equivalence, teleportation oracle
equivalence, agreement of the two branch-state forms, derivative
cross-validation, the module invariant suite, and an informational
measurement of how badly the swapped-b7 variant violates Hermiticity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._linalg import hermiticity_gap, min_eigenvalue
from .channels import CorrelationDyadic, dyadic_to_density, preset_dyadic, validate_physical
from .errors import DomainError
from .fisher import bloch_partial, bloch_teleported, fisher, fisher_from_bloch
from .sampling import sample_dyadic, sample_input, sample_unruh
from .teleport import (
    InputState,
    bloch_of,
    teleport_analytic,
    teleport_circuit_oracle,
    teleport_closed_form,
)
from .unruh import (
    R_MAX,
    UnruhParams,
    accelerate,
    accelerate_swapped_b7,
    accelerated_density,
    bogoliubov_isometry,
    bogoliubov_oracle,
    mode_params,
)

EQUIV_TOL = 1e-12
DERIV_TOL = 1e-6
DERIV_FLOOR = 1e-3
FISHER_TOL = 1e-9


@dataclass(frozen=True)
class Check:
    section: int
    name: str
    max_error: float
    tolerance: float | None  # None marks an informational entry
    passed: bool


@dataclass(frozen=True)
class VerifyReport:
    trials: int
    seed: int
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def render(self) -> str:
        lines = [f"verification report: trials={self.trials} seed={self.seed}"]
        section_titles = {
            1: "[1] accelerated channel: closed form vs isometry oracle",
            2: "[2] teleported branch: coefficient form vs circuit oracle",
            3: "[3] teleported branch: coefficient form vs angle closed form",
            4: "[4] bloch partials: analytic vs central difference",
            5: "[5] invariant suite",
            6: "[6] swapped-b7 variant (informational)",
        }
        current = 0
        for check in self.checks:
            if check.section != current:
                current = check.section
                lines.append(section_titles[current])
            if check.tolerance is None:
                lines.append(f"    {check.name:<52} max {check.max_error:.3e}")
            else:
                status = "PASS" if check.passed else "FAIL"
                lines.append(
                    f"    {check.name:<52} max err {check.max_error:.3e}"
                    f"  tol {check.tolerance:.0e}  {status}"
                )
        gated = [c for c in self.checks if c.tolerance is not None]
        verdict = "PASS" if self.passed else "FAIL"
        lines.append(f"result: {verdict} ({len(gated)} gated checks)")
        return "\n".join(lines) + "\n"


def _check(section: int, name: str, max_error: float, tolerance: float | None) -> Check:
    passed = True if tolerance is None else max_error <= tolerance
    return Check(section, name, float(max_error), tolerance, passed)


def verify(trials: int = 1000, seed: int = 42) -> VerifyReport:
    """Run every oracle cross-check and invariant suite with seeded draws."""
    if trials < 1:
        raise DomainError(f"trials must be >= 1, got {trials}")
    rng = np.random.default_rng(seed)
    checks: list[Check] = []

    # Shared draw set: (input state, physical dyadic, acceleration params).
    draws = [
        (sample_input(rng), sample_dyadic(rng), sample_unruh(rng)) for _ in range(trials)
    ]

    # [1] closed-form coefficients against the embedding-isometry oracle.
    err = 0.0
    for _, d, u in draws:
        closed = accelerated_density(accelerate(d, u))
        oracle = bogoliubov_oracle(d, u)
        err = max(err, float(np.max(np.abs(closed - oracle))))
    checks.append(_check(1, "max elementwise difference", err, EQUIV_TOL))

    # [2] coefficient-form branch state against the three-qubit circuit.
    err = 0.0
    for state, d, u in draws:
        analytic = teleport_analytic(state, accelerate(d, u))
        circuit = teleport_circuit_oracle(state, bogoliubov_oracle(d, u))
        err = max(err, float(np.max(np.abs(analytic.rho - circuit.rho))))
    checks.append(_check(2, "max elementwise difference", err, EQUIV_TOL))

    # [3] coefficient form against the explicit angle form.
    err = 0.0
    for state, d, u in draws:
        a = teleport_analytic(state, accelerate(d, u))
        b = teleport_closed_form(state, d, u)
        err = max(err, float(np.max(np.abs(a.rho - b.rho))))
    checks.append(_check(3, "max elementwise difference", err, EQUIV_TOL))

    # [4] analytic partials against central differences (relative error,
    # counted only where the derivative is not degenerate).
    err = 0.0
    for state, d, u in draws:
        for mode in ("normalized", "as-published"):
            for param in ("theta", "phi", "r"):
                analytic = bloch_partial(state, d, u, param, mode, "analytic")
                scale = float(np.linalg.norm(analytic))
                if scale <= DERIV_FLOOR:
                    continue
                numeric = bloch_partial(state, d, u, param, mode, "fd")
                err = max(err, float(np.linalg.norm(analytic - numeric)) / scale)
    checks.append(_check(4, "max relative difference", err, DERIV_TOL))

    checks.extend(_invariant_suite(draws))

    # [6] size of the Hermiticity violation if b7 were assembled with the
    # correlation combinations swapped. Informational only.
    err = 0.0
    for _, d, u in draws:
        swapped = accelerate_swapped_b7(d, u)
        err = max(err, abs(swapped.b7 - swapped.b6.conjugate()))
    checks.append(_check(6, "hermiticity gap |b7 - conj(b6)|", err, None))

    return VerifyReport(trials=trials, seed=seed, checks=tuple(checks))


def _invariant_suite(
    draws: list[tuple[InputState, CorrelationDyadic, UnruhParams]],
) -> list[Check]:
    checks: list[Check] = []

    # Named presets build Hermitian, unit-trace, physical states.
    err_herm = err_trace = err_psd = 0.0
    presets = [
        preset_dyadic("bell-phi-plus"),
        preset_dyadic("bell-psi-minus"),
        preset_dyadic("werner", fidelity=0.0),
        preset_dyadic("werner", fidelity=0.5),
        preset_dyadic("werner", fidelity=1.0),
        preset_dyadic("x-state", c11=-0.9, c22=-0.8, c33=-0.7),
    ]
    for d in presets:
        m = dyadic_to_density(d)
        err_herm = max(err_herm, hermiticity_gap(m))
        err_trace = max(err_trace, abs(float(np.trace(m).real) - 1.0))
        err_psd = max(err_psd, max(0.0, -validate_physical(d).min_eigenvalue))
    checks.append(_check(5, "preset states hermitian", err_herm, EQUIV_TOL))
    checks.append(_check(5, "preset states unit trace", err_trace, EQUIV_TOL))
    checks.append(_check(5, "preset states positive", err_psd, EQUIV_TOL))

    # Eigenvalues of any dyadic-induced matrix sum to 1 (9x9x9 grid).
    err = 0.0
    grid = np.linspace(-1.0, 1.0, 9)
    for c11 in grid:
        for c22 in grid:
            for c33 in grid:
                eig = np.linalg.eigvalsh(dyadic_to_density(CorrelationDyadic(c11, c22, c33)))
                err = max(err, abs(float(eig.sum()) - 1.0))
    checks.append(_check(5, "dyadic grid eigenvalue sum", err, EQUIV_TOL))

    # Accelerated channels: trace, hermiticity, positivity, inertial identity.
    err_trace = err_herm = err_psd = err_id = err_iso = 0.0
    for _, d, u in draws:
        m = accelerated_density(accelerate(d, u))
        err_trace = max(err_trace, abs(float(np.trace(m).real) - 1.0))
        err_herm = max(err_herm, hermiticity_gap(m))
        err_psd = max(err_psd, max(0.0, -min_eigenvalue(m)))
        inertial = accelerated_density(accelerate(d, mode_params(0.0, "wsma")))
        err_id = max(err_id, float(np.max(np.abs(inertial - dyadic_to_density(d)))))
        v = bogoliubov_isometry(u)
        err_iso = max(err_iso, float(np.max(np.abs(v.conj().T @ v - np.eye(2)))))
    checks.append(_check(5, "accelerated channel unit trace", err_trace, EQUIV_TOL))
    checks.append(_check(5, "accelerated channel hermitian", err_herm, EQUIV_TOL))
    checks.append(_check(5, "accelerated channel positive", err_psd, EQUIV_TOL))
    checks.append(_check(5, "identity channel at r=0 wsma", err_id, EQUIV_TOL))
    checks.append(_check(5, "isometry columns orthonormal", err_iso, EQUIV_TOL))

    # Branch states: probability exactly 1/4, Hermitian, positive.
    err_prob = err_herm = err_psd = 0.0
    for state, d, u in draws:
        bob = teleport_analytic(state, accelerate(d, u))
        err_prob = max(err_prob, abs(bob.outcome_prob - 0.25))
        err_herm = max(err_herm, hermiticity_gap(bob.rho))
        err_psd = max(err_psd, max(0.0, -min_eigenvalue(bob.rho_normalized)))
    checks.append(_check(5, "branch probability equals 1/4", err_prob, EQUIV_TOL))
    checks.append(_check(5, "branch state hermitian", err_herm, EQUIV_TOL))
    checks.append(_check(5, "branch state positive", err_psd, EQUIV_TOL))

    # Bloch vectors stay inside the physical ball in both modes.
    err_norm = err_quarter = 0.0
    for state, d, u in draws:
        s_n = bloch_teleported(state, d, u, "normalized")
        s_p = bloch_teleported(state, d, u, "as-published")
        err_norm = max(err_norm, max(0.0, float(np.linalg.norm(s_n)) - 1.0))
        err_quarter = max(err_quarter, max(0.0, float(np.linalg.norm(s_p)) - 0.25))
    checks.append(_check(5, "normalized bloch norm <= 1", err_norm, EQUIV_TOL))
    checks.append(_check(5, "as-published bloch norm <= 1/4", err_quarter, EQUIV_TOL))

    # Fisher values: finite and non-negative for every estimand and mode.
    worst = 0.0
    for state, d, u in draws:
        for mode in ("normalized", "as-published"):
            for param in ("theta", "phi", "r"):
                value = fisher(state, d, u, param, mode=mode).value
                worst = max(worst, math.inf if not math.isfinite(value) else -value)
    checks.append(_check(5, "fisher finite and non-negative", max(0.0, worst), FISHER_TOL))

    # Reflection invariance: negating one fixed Bloch component everywhere
    # leaves the Fisher value unchanged.
    err = 0.0
    flip = np.array([1.0, -1.0, 1.0])
    for state, d, u in draws:
        s = bloch_teleported(state, d, u, "normalized")
        ds = bloch_partial(state, d, u, "theta", "normalized", "analytic")
        a = fisher_from_bloch(s, ds).value
        b = fisher_from_bloch(s * flip, ds * flip).value
        err = max(err, abs(a - b))
    checks.append(_check(5, "fisher invariant under s_y reflection", err, 1e-15))

    # Closed-form anchor: weight-angle information equals cos(r)^2 for the
    # (1,-1,1) Bell channel in the single-mode limit.
    err = 0.0
    phi_plus = preset_dyadic("bell-phi-plus")
    for theta in np.linspace(0.0, math.pi, 7):
        for phi in np.linspace(0.0, 2.0 * math.pi, 7):
            for r in np.linspace(0.0, R_MAX, 7):
                value = fisher(
                    InputState(float(theta), float(phi)),
                    phi_plus,
                    mode_params(float(r), "wsma"),
                    "theta",
                ).value
                err = max(err, abs(value - math.cos(float(r)) ** 2))
    checks.append(_check(5, "anchor: weight information = cos(r)^2", err, FISHER_TOL))

    # Mode scaling at r=0 for maximally entangled channels: the
    # as-published value is exactly 1/16 of the normalized one.
    err = 0.0
    for preset in ("bell-phi-plus", "bell-psi-minus"):
        d = preset_dyadic(preset)
        u = mode_params(0.0, "wsma")
        for theta, phi in ((0.3, 0.7), (1.2, 2.5), (2.4, 4.9)):
            state = InputState(theta, phi)
            for param in ("theta", "phi", "r"):
                f_n = fisher(state, d, u, param, mode="normalized").value
                f_p = fisher(state, d, u, param, mode="as-published").value
                err = max(err, abs(f_p - f_n / 16.0))
    checks.append(_check(5, "mode scaling 1/16 at r=0", err, FISHER_TOL))

    # Mixed-branch value stays continuous as the pure shell is approached.
    state = InputState(1.0, 0.3)
    f_near = fisher(state, phi_plus, mode_params(1e-4, "wsma"), "theta")
    err = abs(f_near.value - 1.0) if not f_near.pure_branch else math.inf
    checks.append(_check(5, "continuity near the pure shell", err, 1e-3))

    return checks
