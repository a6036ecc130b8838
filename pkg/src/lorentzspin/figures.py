"""Curve data for the three figures: mean-spin length against boost velocity."""
from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .kinematics import Boost, MomentumSpec
from .scenario import Scenario
from .spinmap import erasable_polarization, transform_state

VECTOR_COLUMNS = tuple(f"{name}_{c}" for name in ("w1r1", "w2r2", "mean") for c in "xyz")


@dataclass(frozen=True, eq=False)
class CurveTable:
    columns: tuple[str, ...]
    rows: np.ndarray

    def __post_init__(self):
        rows = np.asarray(self.rows, dtype=float).reshape(-1, len(self.columns))
        if self.columns[0] != "v":
            raise ValidationError("first column must be v")
        if len(rows) > 1 and np.any(np.diff(rows[:, 0]) <= 0):
            raise ValidationError("v must be strictly increasing")
        mags = rows[:, [i for i, c in enumerate(self.columns) if c.startswith("magnitude")]]
        if mags.size and (mags.min() < 0.0 or mags.max() > 1.0 + 1e-12):
            raise ValidationError("magnitudes must lie in [0, 1]")
        object.__setattr__(self, "rows", rows)

    def column(self, name: str) -> np.ndarray:
        return self.rows[:, self.columns.index(name)]


def velocity_grid(n: int, vmax: float) -> np.ndarray:
    return np.linspace(0.0, vmax, n)


def dot_label(dot: float) -> str:
    return f"magnitude_dot_{dot:g}"


def partner_momentum(p1: MomentumSpec, dot: float) -> MomentumSpec:
    """Momentum ``dot * p1``, on the same line as ``p1``."""
    return MomentumSpec.from_momentum(dot * np.sinh(p1.rapidity) * p1.direction)


def run_figure(which: int, scenario: Scenario) -> CurveTable:
    """Sample the figure's curve on a uniform velocity grid.

    Figures 1 and 2 transform the scenario's state and report ``|r1' + r2'|``
    together with the arrow vectors. Figure 3 reports the erasable
    polarization ``|W1 r1 - W2 r1|`` for every ``p1.p2/|p1|^2`` in
    ``scenario.dots``, with ``p2`` placed on the line of ``p1``.
    """
    direction = scenario.boost.direction
    grid = velocity_grid(scenario.samples, scenario.vmax)
    if which in (1, 2):
        state = scenario.state
        rows = []
        for v in grid:
            t = transform_state(Boost.from_velocity(v, direction), state)
            mean = t.r1 + t.r2
            rows.append([v, np.linalg.norm(mean), *t.r1, *t.r2, *mean])
        return CurveTable(("v", "magnitude") + VECTOR_COLUMNS, np.array(rows))
    if which == 3:
        p1 = scenario.p1
        r1 = np.array(scenario.r1)
        partners = [partner_momentum(p1, d) for d in scenario.dots]
        rows = []
        for v in grid:
            b = Boost.from_velocity(v, direction)
            rows.append([v] + [np.linalg.norm(erasable_polarization(b, p1, p2, r1)) for p2 in partners])
        return CurveTable(("v",) + tuple(dot_label(d) for d in scenario.dots), np.array(rows))
    raise ValueError(f"unknown figure {which}; expected 1, 2 or 3")


def _fmt(x: float) -> str:
    s = f"{x:.9f}"
    return "0.000000000" if s == "-0.000000000" else s


def format_csv(table: CurveTable) -> str:
    lines = [",".join(table.columns)]
    lines += [",".join(_fmt(x) for x in row) for row in table.rows]
    return "\n".join(lines) + "\n"


def emit_csv(table: CurveTable, destination) -> None:
    """Write ``table`` as CSV to a binary stream."""
    data = format_csv(table).encode("ascii")
    if isinstance(destination, io.TextIOBase):
        destination = destination.buffer
    destination.write(data)
