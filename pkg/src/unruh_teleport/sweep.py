"""Parameter-grid sweeps, figure dataset presets and CSV/JSON emission."""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping

import numpy as np

from .channels import CorrelationDyadic, validate_physical
from .errors import DomainError
from .fisher import METHOD_NAMES, MODE_NAMES, PARAM_NAMES, fisher
from .teleport import InputState
from .unruh import MODE_WEIGHTS, R_MAX, UnruhParams

VARIABLES = ("theta", "phi", "r")
VARIABLE_DOMAINS: dict[str, tuple[float, float]] = {
    "theta": (0.0, math.pi),
    "phi": (0.0, 2.0 * math.pi),
    "r": (0.0, R_MAX),
}

DEFAULT_GRID = 64


@dataclass(frozen=True)
class Axis:
    """One swept variable with an inclusive, evenly spaced grid."""

    name: str
    start: float
    stop: float
    count: int

    def __post_init__(self) -> None:
        if self.name not in VARIABLES:
            raise DomainError(f"unknown sweep variable {self.name!r}, expected one of {VARIABLES}")
        if self.count < 2:
            raise DomainError(f"axis {self.name} needs count >= 2, got {self.count}")
        lo, hi = VARIABLE_DOMAINS[self.name]
        if not (lo <= self.start < self.stop <= hi):
            raise DomainError(
                f"axis {self.name} range [{self.start}, {self.stop}] must be increasing "
                f"and lie inside [{lo}, {hi}]"
            )

    def points(self) -> np.ndarray:
        # linspace places interior points at start + i*(stop-start)/(count-1)
        # and pins both endpoints exactly.
        return np.linspace(self.start, self.stop, self.count)


@dataclass(frozen=True)
class SweepRow:
    coords: tuple[float, ...]
    fisher: float
    pure_branch: bool


@dataclass(frozen=True)
class SweepSpec:
    """A fully resolved sweep: estimand, channel, mode weights, grid."""

    estimand: str
    norm: str
    method: str
    dyadic: CorrelationDyadic
    qr: complex
    ql: complex
    axes: tuple[Axis, ...]
    fixed: tuple[tuple[str, float], ...]
    channel_preset: str | None = None
    unruh_mode: str | None = None
    figure: str | None = None

    def __post_init__(self) -> None:
        if self.estimand not in PARAM_NAMES:
            raise DomainError(f"unknown estimand {self.estimand!r}")
        if self.norm not in MODE_NAMES:
            raise DomainError(f"unknown normalization mode {self.norm!r}")
        if self.method not in METHOD_NAMES:
            raise DomainError(f"unknown derivative method {self.method!r}")
        if isinstance(self.fixed, Mapping):
            object.__setattr__(
                self,
                "fixed",
                tuple((name, float(self.fixed[name])) for name in VARIABLES if name in self.fixed),
            )
        object.__setattr__(self, "axes", tuple(self.axes))
        if not 1 <= len(self.axes) <= 2:
            raise DomainError(f"a sweep takes 1 or 2 axes, got {len(self.axes)}")
        swept = [axis.name for axis in self.axes]
        fixed_names = [name for name, _ in self.fixed]
        if sorted(swept + fixed_names) != sorted(VARIABLES):
            raise DomainError(
                f"swept {swept} and fixed {fixed_names} must partition {set(VARIABLES)}"
            )
        for name, value in self.fixed:
            lo, hi = VARIABLE_DOMAINS[name]
            if not lo <= value <= hi:
                raise DomainError(f"fixed {name} = {value} outside [{lo}, {hi}]")
        # Mode-weight normalization is enforced by UnruhParams construction.
        UnruhParams(0.0, self.qr, self.ql)

    @property
    def axis_names(self) -> tuple[str, ...]:
        return tuple(axis.name for axis in self.axes)


def run_sweep(spec: SweepSpec) -> list[SweepRow]:
    """Evaluate the Fisher information on every grid point of the spec.

    Points iterate with the first axis outermost; the channel is rejected
    up front if its initial state is unphysical.
    """
    check = validate_physical(spec.dyadic)
    if not check.physical:
        raise DomainError(
            f"channel dyadic {spec.dyadic.as_tuple()} is unphysical "
            f"(min eigenvalue {check.min_eigenvalue:.3e})"
        )
    values = dict(spec.fixed)
    grids = [axis.points() for axis in spec.axes]
    names = spec.axis_names
    rows: list[SweepRow] = []
    for coords in itertools.product(*grids):
        for name, value in zip(names, coords):
            values[name] = float(value)
        result = fisher(
            InputState(values["theta"], values["phi"]),
            spec.dyadic,
            UnruhParams(values["r"], spec.qr, spec.ql),
            spec.estimand,
            mode=spec.norm,
            method=spec.method,
        )
        rows.append(
            SweepRow(
                coords=tuple(float(c) for c in coords),
                fisher=result.value,
                pure_branch=result.pure_branch,
            )
        )
    return rows


# Named dataset presets with panel-style ids, covering the standard
# two-variable sweeps of this model. Panels that are contour re-renderings
# of a sibling share its data and are not listed separately. Each entry:
# estimand, swept variables (outer first), fixed values, channel preset,
# mode-weight preset.
FIGURE_PRESETS: dict[str, tuple[str, tuple[str, ...], dict[str, float], str, str]] = {
    "1a": ("theta", ("theta", "r"), {"phi": math.pi / 4}, "bell-phi-plus", "wsma"),
    "1b": ("theta", ("theta", "r"), {"phi": math.pi / 4}, "bell-phi-plus", "bsma"),
    "2a": ("theta", ("theta", "phi"), {"r": math.pi / 8}, "bell-phi-plus", "wsma"),
    "2c": ("theta", ("theta", "phi"), {"r": math.pi / 8}, "bell-phi-plus", "bsma"),
    "3a": ("theta", ("theta", "phi"), {"r": math.pi / 8}, "bell-psi-minus", "bsma"),
    "3c": ("theta", ("theta", "phi"), {"r": math.pi / 8}, "x-state", "wsma"),
    "4a": ("phi", ("phi", "r"), {"theta": math.pi / 4}, "bell-phi-plus", "wsma"),
    "4b": ("phi", ("phi", "r"), {"theta": math.pi / 4}, "bell-phi-plus", "bsma"),
    "4c": ("phi", ("phi", "theta"), {"r": math.pi / 8}, "bell-phi-plus", "wsma"),
    "4d": ("phi", ("phi", "theta"), {"r": math.pi / 8}, "bell-phi-plus", "bsma"),
    "5a": ("phi", ("theta", "phi"), {"r": math.pi / 8}, "bell-psi-minus", "bsma"),
    "5c": ("phi", ("theta", "phi"), {"r": math.pi / 8}, "x-state", "wsma"),
    "6a": ("r", ("theta", "r"), {"phi": math.pi / 4}, "bell-phi-plus", "wsma"),
    "6b": ("r", ("theta", "r"), {"phi": math.pi / 4}, "bell-phi-plus", "bsma"),
    "6c": ("r", ("phi", "r"), {"theta": math.pi / 4}, "bell-phi-plus", "wsma"),
    "6d": ("r", ("phi", "r"), {"theta": math.pi / 4}, "bell-phi-plus", "bsma"),
}

FIGURE_IDS = tuple(FIGURE_PRESETS)

X_STATE_PRESET = {"c11": -0.9, "c22": -0.8, "c33": -0.7}


def _preset_dyadic_for_figure(preset: str) -> CorrelationDyadic:
    if preset == "x-state":
        return CorrelationDyadic(**X_STATE_PRESET)
    if preset == "bell-phi-plus":
        return CorrelationDyadic(1.0, -1.0, 1.0)
    return CorrelationDyadic(-1.0, -1.0, -1.0)


def figure_spec(
    fig_id: str,
    grid: int = DEFAULT_GRID,
    norm: str = "as-published",
    method: str = "analytic",
) -> SweepSpec:
    """Expand a figure preset to a sweep over the full variable domains."""
    if fig_id not in FIGURE_PRESETS:
        raise DomainError(f"unknown figure preset {fig_id!r}, expected one of {FIGURE_IDS}")
    estimand, swept, fixed, channel_preset, unruh_mode = FIGURE_PRESETS[fig_id]
    qr, ql = MODE_WEIGHTS[unruh_mode]
    axes = tuple(Axis(name, *VARIABLE_DOMAINS[name], count=grid) for name in swept)
    return SweepSpec(
        estimand=estimand,
        norm=norm,
        method=method,
        dyadic=_preset_dyadic_for_figure(channel_preset),
        qr=qr,
        ql=ql,
        axes=axes,
        fixed=dict(fixed),
        channel_preset=channel_preset,
        unruh_mode=unruh_mode,
        figure=fig_id,
    )


def _fmt(x: float) -> str:
    """Round-trippable decimal form (17 significant digits)."""
    return format(float(x), ".17g")


def spec_to_dict(spec: SweepSpec) -> dict[str, Any]:
    channel: dict[str, Any] = {}
    if spec.channel_preset is not None:
        channel["preset"] = spec.channel_preset
    channel.update(
        c11=spec.dyadic.c11, c22=spec.dyadic.c22, c33=spec.dyadic.c33
    )
    unruh: dict[str, Any] = {}
    if spec.unruh_mode is not None:
        unruh["mode"] = spec.unruh_mode
    unruh.update(qr=[spec.qr.real, spec.qr.imag], ql=[spec.ql.real, spec.ql.imag])
    payload: dict[str, Any] = {
        "estimand": spec.estimand,
        "norm": spec.norm,
        "method": spec.method,
        "channel": channel,
        "unruh": unruh,
        "axes": [
            {"name": a.name, "start": a.start, "stop": a.stop, "count": a.count}
            for a in spec.axes
        ],
        "fixed": dict(spec.fixed),
    }
    if spec.figure is not None:
        payload["figure"] = spec.figure
    return payload


def spec_from_dict(payload: Mapping[str, Any]) -> SweepSpec:
    try:
        channel = payload["channel"]
        unruh = payload["unruh"]
        dyadic = CorrelationDyadic(
            float(channel["c11"]), float(channel["c22"]), float(channel["c33"])
        )
        qr = complex(*unruh["qr"])
        ql = complex(*unruh["ql"])
        axes = tuple(
            Axis(a["name"], float(a["start"]), float(a["stop"]), int(a["count"]))
            for a in payload["axes"]
        )
        return SweepSpec(
            estimand=payload["estimand"],
            norm=payload["norm"],
            method=payload["method"],
            dyadic=dyadic,
            qr=qr,
            ql=ql,
            axes=axes,
            fixed={str(k): float(v) for k, v in payload.get("fixed", {}).items()},
            channel_preset=channel.get("preset"),
            unruh_mode=unruh.get("mode"),
            figure=payload.get("figure"),
        )
    except (KeyError, TypeError) as exc:
        raise DomainError(f"malformed sweep spec: {exc}") from exc


def rows_to_csv(spec: SweepSpec, rows: list[SweepRow]) -> str:
    header = ",".join([*spec.axis_names, "fisher", "pure_branch"])
    lines = [header]
    for row in rows:
        cells = [_fmt(c) for c in row.coords]
        cells.append(_fmt(row.fisher))
        cells.append("true" if row.pure_branch else "false")
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def rows_to_json(spec: SweepSpec, rows: list[SweepRow]) -> str:
    names = spec.axis_names
    payload = {
        "spec": spec_to_dict(spec),
        "rows": [
            {
                **{name: coord for name, coord in zip(names, row.coords)},
                "fisher": row.fisher,
                "pure_branch": row.pure_branch,
            }
            for row in rows
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def parse_csv_rows(text: str) -> list[SweepRow]:
    lines = text.strip("\n").split("\n")
    columns = lines[0].split(",")
    coord_count = len(columns) - 2
    rows = []
    for line in lines[1:]:
        cells = line.split(",")
        rows.append(
            SweepRow(
                coords=tuple(float(c) for c in cells[:coord_count]),
                fisher=float(cells[coord_count]),
                pure_branch=cells[coord_count + 1] == "true",
            )
        )
    return rows


def parse_json_rows(text: str) -> list[SweepRow]:
    payload = json.loads(text)
    names = [axis["name"] for axis in payload["spec"]["axes"]]
    return [
        SweepRow(
            coords=tuple(float(entry[name]) for name in names),
            fisher=float(entry["fisher"]),
            pure_branch=bool(entry["pure_branch"]),
        )
        for entry in payload["rows"]
    ]


def render_rows(spec: SweepSpec, rows: list[SweepRow], fmt: str) -> str:
    if fmt == "csv":
        return rows_to_csv(spec, rows)
    if fmt == "json":
        return rows_to_json(spec, rows)
    raise DomainError(f"unknown output format {fmt!r}, expected csv or json")


def emit(spec: SweepSpec, rows: list[SweepRow], fmt: str, destination: str | Path) -> None:
    """Write the rendered sweep to ``destination`` (UTF-8, trailing newline)."""
    if not rows:
        raise DomainError("refusing to emit an empty sweep")
    text = render_rows(spec, rows, fmt)
    Path(destination).write_text(text, encoding="utf-8")
