"""Four-momenta, pure boosts and the Wigner rotation of a massive spin-1/2 particle.

Units: particle mass m = 1 and c = 1. Metric signature (+, -, -, -).
Everything is parametrized by rapidity; velocities only appear at the edges
(``Boost.from_velocity`` and ``Boost.velocity``).

Two independent routes to the Wigner rotation are provided:

* :func:`wigner_halpern` evaluates Halpern's closed formula for a pure boost.
* :func:`wigner_oracle` composes ``L(Lambda p)^-1 Lambda L(p)`` as 4x4 matrices
  in extended precision and reads the rotation off the spatial block.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
import numpy as np

from .errors import MetricViolationError, NotARotationError, OffShellError
from .rotor import Rotation, _from_coeffs, rot_from_matrix, su2_from_rotation, vec3

ETA = np.diag([1.0, -1.0, -1.0, -1.0])
MAX_RAPIDITY = 300.0
REST = np.array([1.0, 0.0, 0.0, 0.0])
MP_DPS = 60


def _unit(direction, what):
    d = vec3(direction)
    if abs(np.linalg.norm(d) - 1.0) > 1e-12:
        raise ValueError(f"{what} must be a unit vector, |d| = {np.linalg.norm(d)!r}")
    return d


def _check_rapidity(x, what):
    x = float(x)
    if not math.isfinite(x) or x < 0.0:
        raise ValueError(f"{what} must be finite and >= 0, got {x}")
    if x > MAX_RAPIDITY:
        raise ValueError(f"{what} {x} exceeds the supported cap {MAX_RAPIDITY}")
    return x


@dataclass(frozen=True, eq=False)
class MomentumSpec:
    """On-shell momentum ``(cosh b, sinh b * direction)`` for rapidity b."""

    rapidity: float
    direction: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "rapidity", _check_rapidity(self.rapidity, "momentum rapidity"))
        d = _unit(self.direction, "momentum direction")
        d.setflags(write=False)
        object.__setattr__(self, "direction", d)

    @classmethod
    def from_momentum(cls, p3) -> "MomentumSpec":
        """Spec for spatial momentum ``p3`` (in units of m)."""
        p3 = vec3(p3)
        size = float(np.linalg.norm(p3))
        if size == 0.0:
            return cls(0.0, np.array([0.0, 0.0, 1.0]))
        return cls(math.asinh(size), p3 / size)

    def __repr__(self):
        d = ", ".join(f"{c:.12g}" for c in self.direction)
        return f"MomentumSpec(rapidity={self.rapidity:.15g}, direction=({d}))"


@dataclass(frozen=True, eq=False)
class Boost:
    """Pure boost with rapidity ``rapidity`` along unit ``direction``."""

    rapidity: float
    direction: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "rapidity", _check_rapidity(self.rapidity, "boost rapidity"))
        d = _unit(self.direction, "boost direction")
        d.setflags(write=False)
        object.__setattr__(self, "direction", d)

    @classmethod
    def from_velocity(cls, v: float, direction) -> "Boost":
        v = float(v)
        if not (0.0 <= v < 1.0):
            raise ValueError(f"velocity must lie in [0, 1), got {v}")
        return cls(math.atanh(v), direction)

    @property
    def velocity(self) -> float:
        return math.tanh(self.rapidity)

    def inverse(self) -> "Boost":
        return Boost(self.rapidity, -self.direction)

    def __repr__(self):
        d = ", ".join(f"{c:.12g}" for c in self.direction)
        return f"Boost(rapidity={self.rapidity:.15g}, direction=({d}))"


def minkowski_norm2(p) -> float:
    p = np.asarray(p, dtype=float)
    return float(p[0] ** 2 - p[1:] @ p[1:])


def is_on_shell(p, tol: float = 1e-9) -> bool:
    p = np.asarray(p, dtype=float)
    scale = max(1.0, float(p[0]) ** 2)
    return bool(p[0] >= 1.0 - tol and abs(minkowski_norm2(p) - 1.0) <= tol * scale)


def is_lorentz(m, tol: float = 1e-9) -> bool:
    """Proper orthochronous check; the metric residual is taken relative to ``max|M|^2``."""
    m = np.asarray(m, dtype=float)
    if m.shape != (4, 4) or not np.all(np.isfinite(m)):
        return False
    scale = max(1.0, float(np.abs(m).max()) ** 2)
    if np.abs(m.T @ ETA @ m - ETA).max() > tol * scale:
        return False
    return bool(m[0, 0] >= 1.0 - tol * scale and abs(np.linalg.det(m) - 1.0) <= tol * scale**2)


def four_momentum(spec: MomentumSpec, dtype=float) -> np.ndarray:
    b = dtype(spec.rapidity)
    f = spec.direction.astype(dtype)
    return np.concatenate(([np.cosh(b)], np.sinh(b) * f / np.sqrt(f @ f)))


def momentum_spec(p) -> MomentumSpec:
    """Inverse of :func:`four_momentum` for an on-shell ``p``."""
    p = np.asarray(p, dtype=float)
    if not is_on_shell(p, 1e-6):
        raise OffShellError(f"momentum {p} is off the mass shell")
    return MomentumSpec.from_momentum(p[1:])


def _boost_from(rapidity, direction, dtype=float):
    a = dtype(rapidity)
    e = np.asarray(direction, dtype=dtype)
    # float64 unit vectors are unit only to ~1e-16; re-normalize at working precision
    e = e / np.sqrt(e @ e)
    m = np.eye(4, dtype=dtype)
    m[0, 0] = np.cosh(a)
    m[0, 1:] = m[1:, 0] = np.sinh(a) * e
    m[1:, 1:] += (np.cosh(a) - 1) * np.outer(e, e)
    return m


def boost_matrix(b: Boost, dtype=float) -> np.ndarray:
    """4x4 boost; pass ``dtype=np.longdouble`` to feed :func:`wigner_oracle` exact-er input."""
    return _boost_from(b.rapidity, b.direction, dtype=dtype)


def rotation_lorentz(r: Rotation) -> np.ndarray:
    """Embed a rotation as a 4x4 Lorentz matrix."""
    m = np.eye(4)
    m[1:, 1:] = r.matrix()
    return m


def lorentz_compose(a, b) -> np.ndarray:
    """``a @ b``: ``b`` acts first."""
    m = np.asarray(a, dtype=float) @ np.asarray(b, dtype=float)
    if not is_lorentz(m, 1e-8):
        raise MetricViolationError("composition drifted off the Lorentz group")
    return m


def lorentz_apply(m, p) -> np.ndarray:
    return np.asarray(m, dtype=float) @ np.asarray(p, dtype=float)


def lorentz_inverse(m) -> np.ndarray:
    m = np.asarray(m)
    return ETA @ m.T @ ETA


def _standard_boost_parts(p):
    size = np.sqrt(p[1:] @ p[1:])
    if size == 0:
        return 0, np.array([0, 0, 1], dtype=p.dtype)
    return np.arcsinh(size), p[1:] / size


def standard_boost(p) -> np.ndarray:
    """Rotation-free boost taking the rest momentum to the on-shell ``p``."""
    p = np.asarray(p, dtype=float)
    if not is_on_shell(p, 1e-6):
        raise OffShellError(f"momentum {p} is off the mass shell")
    return _boost_from(*_standard_boost_parts(p))


def _boost_mp(rapidity, direction):
    e = [mpmath.mpf(x) for x in direction]
    norm = mpmath.sqrt(sum(x * x for x in e))
    e = [x / norm for x in e]
    a = mpmath.mpf(rapidity)
    ch, sh = mpmath.cosh(a), mpmath.sinh(a)
    m = mpmath.eye(4)
    m[0, 0] = ch
    for i in range(3):
        m[0, i + 1] = m[i + 1, 0] = sh * e[i]
        for j in range(3):
            m[i + 1, j + 1] += (ch - 1) * e[i] * e[j]
    return m


def boost_matrix_mp(b: Boost) -> mpmath.matrix:
    """Boost matrix at ``MP_DPS`` digits, for oracle checks at very large rapidity."""
    with mpmath.workdps(MP_DPS):
        return _boost_mp(b.rapidity, b.direction)


def four_momentum_mp(spec: MomentumSpec) -> mpmath.matrix:
    with mpmath.workdps(MP_DPS):
        f = [mpmath.mpf(x) for x in spec.direction]
        norm = mpmath.sqrt(sum(x * x for x in f))
        b = mpmath.mpf(spec.rapidity)
        return mpmath.matrix([mpmath.cosh(b)] + [mpmath.sinh(b) * x / norm for x in f])


def _wigner_oracle_mp(m, p) -> Rotation:
    with mpmath.workdps(MP_DPS):
        def std_boost(q):
            size = mpmath.sqrt(q[1] ** 2 + q[2] ** 2 + q[3] ** 2)
            if size == 0:
                return mpmath.eye(4)
            return _boost_mp(mpmath.asinh(size), [q[i] / size for i in (1, 2, 3)])

        eta = mpmath.diag([1, -1, -1, -1])
        lmp = std_boost(m * p)
        w = eta * lmp.T * eta * m * std_boost(p)
        block = np.array([[float(w[i, j]) for j in range(4)] for i in range(4)])
    if abs(block[0, 0] - 1) > 1e-8 or np.abs(block[0, 1:]).max() > 1e-8 or np.abs(block[1:, 0]).max() > 1e-8:
        raise NotARotationError("composed transformation does not fix the rest frame")
    return rot_from_matrix(block[1:, 1:])


def wigner_oracle(m, p) -> Rotation:
    """Wigner rotation ``L(m p)^-1 m L(p)`` by explicit matrix composition.

    ``m`` may be any proper orthochronous Lorentz matrix. The products are
    formed in ``np.longdouble`` because the entries grow like
    ``cosh(alpha) cosh(beta)`` while the result is O(1). Rounding of float64
    inputs is amplified the same way, so ``m`` and ``p`` may be given as
    ``np.longdouble`` arrays and are then used without truncation. Beyond
    combined rapidities of about 8 pass ``mpmath`` inputs from
    :func:`boost_matrix_mp` and :func:`four_momentum_mp` instead.
    """
    if isinstance(m, mpmath.matrix):
        return _wigner_oracle_mp(m, p)
    ld = np.longdouble
    mx = np.asarray(m).astype(ld)
    px = np.asarray(p).astype(ld)
    m = mx.astype(float)
    p = px.astype(float)
    if not is_lorentz(m):
        raise MetricViolationError("not a proper orthochronous Lorentz matrix")
    if not is_on_shell(p, 1e-6):
        raise OffShellError(f"momentum {p} is off the mass shell")
    lp = _boost_from(*_standard_boost_parts(px), dtype=ld)
    lmp = _boost_from(*_standard_boost_parts(mx @ px), dtype=ld)
    w = lorentz_inverse(lmp) @ (mx @ lp)
    if abs(w[0, 0] - 1) > 1e-8 or np.abs(w[0, 1:]).max() > 1e-8 or np.abs(w[1:, 0]).max() > 1e-8:
        raise NotARotationError("composed transformation does not fix the rest frame")
    return rot_from_matrix(np.asarray(w[1:, 1:], dtype=float))


def halpern_coefficients(b: Boost, spec: MomentumSpec) -> tuple[float, np.ndarray]:
    """``(cos(phi/2), sin(phi/2) n)`` of the Wigner rotation from Halpern's formula."""
    a, be = b.rapidity, spec.rapidity
    e, f = b.direction, spec.direction
    ef = float(e @ f)
    den = math.sqrt(0.5 + 0.5 * math.cosh(a) * math.cosh(be) + 0.5 * math.sinh(a) * math.sinh(be) * ef)
    ch = math.cosh(0.5 * a) * math.cosh(0.5 * be)
    sh = math.sinh(0.5 * a) * math.sinh(0.5 * be)
    return (ch + sh * ef) / den, sh * np.cross(e, f) / den


def wigner_halpern(b: Boost, spec: MomentumSpec) -> tuple[Rotation, np.ndarray]:
    """Wigner rotation of momentum ``spec`` under the pure boost ``b``.

    Returns the rotation and its spinor matrix ``D``. Collinear boost and
    momentum give the identity.
    """
    c, sv = halpern_coefficients(b, spec)
    r = _from_coeffs(c, sv)
    return r, su2_from_rotation(r)


def wigner_rotation(b: Boost, spec: MomentumSpec) -> Rotation:
    return wigner_halpern(b, spec)[0]


def boost_momentum(b: Boost, spec: MomentumSpec) -> MomentumSpec:
    """Momentum spec of ``Lambda p`` for the boost ``b``."""
    p = lorentz_apply(boost_matrix(b), four_momentum(spec))
    return MomentumSpec.from_momentum(p[1:])
