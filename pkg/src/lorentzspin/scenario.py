"""Line-based scenario files.

Format: one ``key = value`` pair per line, ``#`` starts a comment, vectors are
three whitespace-separated reals, ``figure.dots`` is a whitespace-separated
list. Example::

    boost.velocity = 0
    boost.direction = 0 1 0
    p1.rapidity = 2.99822295029797
    p1.direction = 1 0 0
    state.r1 = 0.5 0 0
"""
from __future__ import annotations

import math
from dataclasses import dataclass, fields

import numpy as np

from .errors import ParseError, ValidationError
from .kinematics import MAX_RAPIDITY, Boost, MomentumSpec
from .spinmap import TwoMomentumSpinState

Vec = tuple[float, float, float]

_SCALARS = {
    "boost.rapidity": "boost_rapidity",
    "boost.velocity": "boost_velocity",
    "p1.rapidity": "p1_rapidity",
    "p2.rapidity": "p2_rapidity",
    "state.q": "q",
    "figure.vmax": "vmax",
}
_VECTORS = {
    "boost.direction": "boost_direction",
    "p1.direction": "p1_direction",
    "p2.direction": "p2_direction",
    "state.r1": "r1",
    "state.r2": "r2",
}
_INTS = {"figure.samples": "samples"}
_LISTS = {"figure.dots": "dots"}
KEYS = {**_SCALARS, **_VECTORS, **_INTS, **_LISTS}


@dataclass(frozen=True)
class Scenario:
    boost_rapidity: float | None = None
    boost_velocity: float | None = None
    boost_direction: Vec = (0.0, 1.0, 0.0)
    p1_rapidity: float = 0.0
    p1_direction: Vec = (1.0, 0.0, 0.0)
    p2_rapidity: float = 0.0
    p2_direction: Vec = (1.0, 0.0, 0.0)
    q: float = 0.5
    r1: Vec = (0.0, 0.0, 0.0)
    r2: Vec = (0.0, 0.0, 0.0)
    samples: int = 200
    vmax: float = 0.999
    dots: tuple[float, ...] = (-1.0,)

    @property
    def boost(self) -> Boost:
        direction = _unit(self.boost_direction)
        if self.boost_velocity is not None:
            return Boost.from_velocity(self.boost_velocity, direction)
        return Boost(self.boost_rapidity, direction)

    @property
    def p1(self) -> MomentumSpec:
        return MomentumSpec(self.p1_rapidity, _unit(self.p1_direction))

    @property
    def p2(self) -> MomentumSpec:
        return MomentumSpec(self.p2_rapidity, _unit(self.p2_direction))

    @property
    def state(self) -> TwoMomentumSpinState:
        return TwoMomentumSpinState(self.q, np.array(self.r1), np.array(self.r2), self.p1, self.p2)

    def validate(self) -> "Scenario":
        if (self.boost_rapidity is None) == (self.boost_velocity is None):
            raise ValidationError("exactly one of boost.rapidity and boost.velocity must be given")
        if self.boost_velocity is not None and not (0.0 <= self.boost_velocity < 1.0):
            raise ValidationError(f"boost.velocity must lie in [0, 1), got {self.boost_velocity}")
        for key, value in (
            ("boost.rapidity", self.boost_rapidity),
            ("p1.rapidity", self.p1_rapidity),
            ("p2.rapidity", self.p2_rapidity),
        ):
            if value is not None and not (0.0 <= value <= MAX_RAPIDITY):
                raise ValidationError(f"{key} must lie in [0, {MAX_RAPIDITY}], got {value}")
        for key in ("boost.direction", "p1.direction", "p2.direction"):
            if np.linalg.norm(getattr(self, KEYS[key])) == 0.0:
                raise ValidationError(f"{key} must be nonzero")
        if self.samples < 1:
            raise ValidationError(f"figure.samples must be positive, got {self.samples}")
        if not (0.0 < self.vmax < 1.0):
            raise ValidationError(f"figure.vmax must lie in (0, 1), got {self.vmax}")
        if not self.dots:
            raise ValidationError("figure.dots must not be empty")
        try:
            self.state
            self.boost
        except ValueError as exc:
            raise ValidationError(str(exc)) from exc
        return self


def _unit(v) -> np.ndarray:
    v = np.array(v, dtype=float)
    return v / np.linalg.norm(v)


def _real(text, lineno, key):
    try:
        x = float(text)
    except ValueError:
        raise ParseError(f"{key}: not a real number: {text!r}", lineno) from None
    if not math.isfinite(x):
        raise ParseError(f"{key}: value must be finite", lineno)
    return x


def parse_scenario(text) -> Scenario:
    """Parse and validate scenario text (a string or an iterable of lines)."""
    lines = text.splitlines() if isinstance(text, str) else list(text)
    values = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep:
            raise ParseError(f"expected 'key = value', got {line!r}", lineno)
        if key not in KEYS:
            raise ParseError(f"unknown key {key!r}", lineno)
        if KEYS[key] in values:
            raise ParseError(f"duplicate key {key!r}", lineno)
        parts = value.split()
        if key in _SCALARS:
            if len(parts) != 1:
                raise ParseError(f"{key}: expected one real number", lineno)
            parsed = _real(parts[0], lineno, key)
        elif key in _VECTORS:
            if len(parts) != 3:
                raise ParseError(f"{key}: expected three real numbers, got {len(parts)}", lineno)
            parsed = tuple(_real(p, lineno, key) for p in parts)
        elif key in _INTS:
            try:
                (parsed,) = (int(p) for p in parts)
            except ValueError:
                raise ParseError(f"{key}: expected one integer", lineno) from None
        else:
            parsed = tuple(_real(p, lineno, key) for p in parts)
        values[KEYS[key]] = parsed
    return Scenario(**values).validate()


def load_scenario(path) -> Scenario:
    with open(path, encoding="utf-8") as fh:
        return parse_scenario(fh.read())


def dump_scenario(sc: Scenario) -> str:
    """Canonical text form; ``parse_scenario(dump_scenario(sc)) == sc``."""
    by_field = {v: k for k, v in KEYS.items()}
    out = []
    for f in fields(sc):
        value = getattr(sc, f.name)
        if value is None:
            continue
        if isinstance(value, tuple):
            text = " ".join(repr(float(x)) for x in value)
        elif isinstance(value, int):
            text = str(value)
        else:
            text = repr(float(value))
        out.append(f"{by_field[f.name]} = {text}")
    return "\n".join(out) + "\n"
