import itertools
import json
import math

import numpy as np
import pytest

from unruh_teleport import (
    Axis,
    CorrelationDyadic,
    DomainError,
    SweepSpec,
    emit,
    figure_spec,
    run_sweep,
)
from unruh_teleport.sweep import (
    FIGURE_PRESETS,
    parse_csv_rows,
    parse_json_rows,
    rows_to_csv,
    rows_to_json,
    spec_from_dict,
    spec_to_dict,
)

PHI_PLUS = CorrelationDyadic(1.0, -1.0, 1.0)


def basic_spec(**overrides):
    kwargs = dict(
        estimand="theta",
        norm="normalized",
        method="analytic",
        dyadic=PHI_PLUS,
        qr=1.0 + 0.0j,
        ql=0.0j,
        axes=(Axis("theta", 0.0, math.pi, 5), Axis("r", 0.0, math.pi / 4, 5)),
        fixed={"phi": math.pi / 4},
        channel_preset="bell-phi-plus",
        unruh_mode="wsma",
    )
    kwargs.update(overrides)
    return SweepSpec(**kwargs)


class TestAxis:
    def test_unknown_variable(self):
        with pytest.raises(DomainError):
            Axis("gamma", 0.0, 1.0, 4)

    def test_count_too_small(self):
        with pytest.raises(DomainError):
            Axis("theta", 0.0, 1.0, 1)

    def test_range_outside_domain(self):
        with pytest.raises(DomainError):
            Axis("r", 0.0, 1.0, 4)  # r tops out at pi/4
        with pytest.raises(DomainError):
            Axis("theta", 0.5, 0.2, 4)

    def test_endpoints_exact(self):
        points = Axis("theta", 0.1, 0.3, 3).points()
        assert points[0] == 0.1
        assert points[-1] == 0.3


class TestSpecValidation:
    def test_partition_enforced(self):
        with pytest.raises(DomainError, match="partition"):
            basic_spec(fixed={})
        with pytest.raises(DomainError, match="partition"):
            basic_spec(fixed={"theta": 0.5, "phi": 0.5})

    def test_fixed_value_in_domain(self):
        with pytest.raises(DomainError):
            basic_spec(fixed={"phi": 7.0})

    def test_bad_estimand(self):
        with pytest.raises(DomainError):
            basic_spec(estimand="psi")

    def test_weight_normalization_checked(self):
        with pytest.raises(DomainError):
            basic_spec(qr=1.0 + 0.0j, ql=1.0 + 0.0j)


class TestRunSweep:
    def test_closed_form_rows(self):
        rows = run_sweep(basic_spec())
        assert len(rows) == 25
        for row in rows:
            theta, r = row.coords
            assert abs(row.fisher - math.cos(r) ** 2) < 1e-9

    def test_two_point_axis(self):
        spec = basic_spec(axes=(Axis("r", 0.0, math.pi / 4, 2),), fixed={"theta": 1.0, "phi": 0.5})
        rows = run_sweep(spec)
        assert len(rows) == 2
        assert rows[0].coords == (0.0,)
        assert rows[1].coords == (math.pi / 4,)

    def test_lexicographic_ordering_outer_axis_first(self):
        rows = run_sweep(basic_spec())
        thetas = np.linspace(0.0, math.pi, 5)
        rs = np.linspace(0.0, math.pi / 4, 5)
        expected = list(itertools.product(thetas, rs))
        assert [row.coords for row in rows] == [(float(t), float(r)) for t, r in expected]

    def test_unphysical_channel_rejected(self):
        spec = basic_spec(dyadic=CorrelationDyadic(1.0, 1.0, 1.0), channel_preset=None)
        with pytest.raises(DomainError, match="unphysical"):
            run_sweep(spec)

    def test_deterministic(self):
        assert run_sweep(basic_spec()) == run_sweep(basic_spec())


class TestFigurePresets:
    # Independent copy of the preset table.
    EXPECTED = {
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

    CHANNEL_TRIPLES = {
        "bell-phi-plus": (1.0, -1.0, 1.0),
        "bell-psi-minus": (-1.0, -1.0, -1.0),
        "x-state": (-0.9, -0.8, -0.7),
    }

    def test_expansion_table(self):
        assert set(FIGURE_PRESETS) == set(self.EXPECTED)
        for fig_id, (estimand, swept, fixed, channel, mode) in self.EXPECTED.items():
            spec = figure_spec(fig_id, grid=8)
            assert spec.estimand == estimand
            assert spec.axis_names == swept
            assert dict(spec.fixed) == fixed
            assert spec.channel_preset == channel
            assert spec.unruh_mode == mode
            assert spec.dyadic.as_tuple() == self.CHANNEL_TRIPLES[channel]
            assert spec.norm == "as-published"

    def test_default_grid_row_count(self):
        spec = figure_spec("1a")
        rows = run_sweep(spec)
        assert len(rows) == 64 * 64
        values = np.array([row.fisher for row in rows])
        assert np.all(np.isfinite(values))

    def test_unknown_figure(self):
        with pytest.raises(DomainError):
            figure_spec("7a")


class TestEmission:
    def test_csv_line_count(self):
        spec = basic_spec(axes=(Axis("r", 0.0, math.pi / 4, 2),), fixed={"theta": 1.0, "phi": 0.5})
        rows = run_sweep(spec)
        text = rows_to_csv(spec, rows)
        assert text.endswith("\n")
        assert text.count("\n") == 3
        assert text.split("\n")[0] == "r,fisher,pure_branch"

    def test_csv_roundtrip_bit_exact(self):
        spec = basic_spec()
        rows = run_sweep(spec)
        assert parse_csv_rows(rows_to_csv(spec, rows)) == rows

    def test_json_roundtrip_bit_exact(self):
        spec = basic_spec()
        rows = run_sweep(spec)
        assert parse_json_rows(rows_to_json(spec, rows)) == rows

    def test_json_spec_block_resolves_channel(self):
        spec = figure_spec("3c", grid=4)
        payload = json.loads(rows_to_json(spec, run_sweep(spec)))
        channel = payload["spec"]["channel"]
        assert channel["preset"] == "x-state"
        assert (channel["c11"], channel["c22"], channel["c33"]) == (-0.9, -0.8, -0.7)
        assert payload["spec"]["figure"] == "3c"
        assert payload["spec"]["unruh"]["qr"] == [1.0, 0.0]

    def test_spec_dict_roundtrip(self):
        spec = figure_spec("4d", grid=16)
        assert spec_from_dict(spec_to_dict(spec)) == spec

    def test_emit_writes_file(self, tmp_path):
        spec = basic_spec(axes=(Axis("r", 0.0, math.pi / 4, 2),), fixed={"theta": 1.0, "phi": 0.5})
        rows = run_sweep(spec)
        target = tmp_path / "sweep.csv"
        emit(spec, rows, "csv", target)
        assert parse_csv_rows(target.read_text(encoding="utf-8")) == rows

    def test_emit_rejects_empty(self, tmp_path):
        spec = basic_spec()
        with pytest.raises(DomainError):
            emit(spec, [], "csv", tmp_path / "nothing.csv")

    def test_unknown_format(self):
        from unruh_teleport.sweep import render_rows

        spec = basic_spec()
        rows = run_sweep(spec)
        with pytest.raises(DomainError):
            render_rows(spec, rows, "parquet")
