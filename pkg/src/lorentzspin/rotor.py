"""SO(3) rotations and their SU(2) spinor representatives.

Conventions (checked against the 4x4 Wigner-rotation oracle in
``kinematics``):

* A :class:`Rotation` with unit axis ``n`` and angle ``phi`` is represented on
  spin states by ``D = cos(phi/2) I + i sin(phi/2) (n . sigma)``.
* The rotation acts on 3-vectors through ``D^dag sigma_j D = sum_k M_jk sigma_k``,
  which makes ``M`` the right-handed Rodrigues matrix for angle ``-phi``.
  In words: a positive angle turns vectors clockwise when viewed from the tip
  of the axis. ``rot_apply(Rz(pi/2), x) == -y``.
* ``D(a) @ D(b)`` represents ``rot_compose(a, b)`` (``b`` applied first).

Internally a rotation is carried as the four real coefficients ``(w, v)`` of
``D = w I + i v . sigma``; these never appear in the public signatures.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NotSpecialUnitaryError, ZeroAxisError

SIGMA_1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_3 = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = np.stack([SIGMA_1, SIGMA_2, SIGMA_3])
IDENTITY_2 = np.eye(2, dtype=complex)

Z_AXIS = (0.0, 0.0, 1.0)
IDENTITY_ANGLE_TOL = 1e-12
_AXIS_ZERO_TOL = 1e-15


def vec3(v) -> np.ndarray:
    """Coerce ``v`` to a finite float array of shape (3,)."""
    arr = np.array(v, dtype=float).reshape(-1)
    if arr.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {np.shape(v)}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"non-finite vector components: {arr}")
    return arr


def _reduce_angle(angle: float) -> float:
    # into (-pi, pi]
    a = math.remainder(angle, 2.0 * math.pi)
    if a <= -math.pi:
        a += 2.0 * math.pi
    return a


@dataclass(frozen=True, eq=False)
class Rotation:
    """A proper rotation stored as unit axis and angle in (-pi, pi]."""

    axis: np.ndarray = field(default_factory=lambda: np.array(Z_AXIS))
    angle: float = 0.0

    def __post_init__(self):
        axis = vec3(self.axis)
        if abs(np.linalg.norm(axis) - 1.0) > 1e-12:
            raise ValueError("Rotation axis must be a unit vector; use rot_from_axis_angle")
        if not (-math.pi < self.angle <= math.pi):
            raise ValueError(f"angle {self.angle} outside (-pi, pi]")
        axis.setflags(write=False)
        object.__setattr__(self, "axis", axis)
        object.__setattr__(self, "angle", float(self.angle))

    @classmethod
    def identity(cls) -> "Rotation":
        return cls(np.array(Z_AXIS), 0.0)

    @property
    def is_identity(self) -> bool:
        return abs(self.angle) < IDENTITY_ANGLE_TOL

    @property
    def coeffs(self) -> tuple[float, np.ndarray]:
        half = 0.5 * self.angle
        return math.cos(half), math.sin(half) * self.axis

    def matrix(self) -> np.ndarray:
        """3x3 matrix acting on column vectors."""
        w, v = self.coeffs
        return _matrix_from_coeffs(w, v)

    def __repr__(self):
        ax = ", ".join(f"{c:.12g}" for c in self.axis)
        return f"Rotation(axis=({ax}), angle={self.angle:.15g})"


def _matrix_from_coeffs(w, v):
    # right-handed quaternion of M is (w, -v)
    u = -np.asarray(v, dtype=float)
    ux = np.array([[0.0, -u[2], u[1]], [u[2], 0.0, -u[0]], [-u[1], u[0], 0.0]])
    return (w * w - u @ u) * np.eye(3) + 2.0 * np.outer(u, u) + 2.0 * w * ux


def _from_coeffs(w: float, v) -> Rotation:
    v = np.asarray(v, dtype=float)
    norm = math.hypot(w, *v)
    w, v = w / norm, v / norm
    if w < 0.0:
        w, v = -w, -v
    s = float(np.linalg.norm(v))
    angle = 2.0 * math.atan2(s, w)
    if angle < IDENTITY_ANGLE_TOL or s == 0.0:
        return Rotation.identity()
    return Rotation(v / s, min(angle, math.pi))


def rot_from_axis_angle(axis, angle: float) -> Rotation:
    axis = vec3(axis)
    if not math.isfinite(angle):
        raise ValueError("rotation angle must be finite")
    reduced = _reduce_angle(angle)
    norm = float(np.linalg.norm(axis))
    if norm < _AXIS_ZERO_TOL:
        if abs(reduced) < IDENTITY_ANGLE_TOL:
            return Rotation.identity()
        raise ZeroAxisError(f"zero rotation axis with nonzero angle {angle}")
    if abs(reduced) < IDENTITY_ANGLE_TOL:
        return Rotation.identity()
    return Rotation(axis / norm, reduced)


def rot_from_matrix(m) -> Rotation:
    """Rotation whose :meth:`Rotation.matrix` is the proper orthogonal ``m``."""
    m = np.asarray(m, dtype=float)
    tr = m[0, 0] + m[1, 1] + m[2, 2]
    diag = np.diag(m)
    # Shepperd's branch selection keeps the pivot away from zero
    if tr >= diag.max():
        qw = 0.5 * math.sqrt(max(1.0 + tr, 0.0))
        qu = np.array([m[2, 1] - m[1, 2], m[0, 2] - m[2, 0], m[1, 0] - m[0, 1]]) / (4.0 * qw)
    else:
        i = int(np.argmax(diag))
        j, k = (i + 1) % 3, (i + 2) % 3
        qi = 0.5 * math.sqrt(max(1.0 + m[i, i] - m[j, j] - m[k, k], 0.0))
        qu = np.empty(3)
        qu[i] = qi
        qu[j] = (m[j, i] + m[i, j]) / (4.0 * qi)
        qu[k] = (m[k, i] + m[i, k]) / (4.0 * qi)
        qw = (m[k, j] - m[j, k]) / (4.0 * qi)
    return _from_coeffs(qw, -qu)


def rot_compose(a: Rotation, b: Rotation) -> Rotation:
    """Rotation that applies ``b`` first, then ``a``."""
    w1, v1 = a.coeffs
    w2, v2 = b.coeffs
    w = w1 * w2 - v1 @ v2
    v = w1 * v2 + w2 * v1 - np.cross(v1, v2)
    return _from_coeffs(w, v)


def rot_inverse(r: Rotation) -> Rotation:
    if r.is_identity:
        return Rotation.identity()
    if r.angle == math.pi:
        return r
    return Rotation(r.axis.copy(), -r.angle)


def rot_apply(r: Rotation, v) -> np.ndarray:
    v = vec3(v)
    n, phi = r.axis, r.angle
    c, s = math.cos(phi), math.sin(phi)
    return c * v - s * np.cross(n, v) + (1.0 - c) * (n @ v) * n


def rotation_distance(x: Rotation, y: Rotation) -> float:
    """Angle of ``x y^-1``; zero iff the two rotations coincide."""
    w1, v1 = x.coeffs
    w2, v2 = y.coeffs
    # coefficients of D(x) D(y)^dag, computed without building a Rotation
    w = w1 * w2 + v1 @ v2
    v = -w1 * v2 + w2 * v1 + np.cross(v1, v2)
    return 2.0 * math.atan2(float(np.linalg.norm(v)), abs(w))


def su2_from_rotation(r: Rotation) -> np.ndarray:
    w, v = r.coeffs
    return w * IDENTITY_2 + 1j * np.einsum("k,kij->ij", v, PAULI)


def rotation_from_su2(d) -> Rotation:
    d = np.asarray(d, dtype=complex)
    if d.shape != (2, 2) or not np.all(np.isfinite(d)):
        raise NotSpecialUnitaryError(f"expected a finite 2x2 matrix, got shape {d.shape}")
    if np.abs(d.conj().T @ d - IDENTITY_2).max() > 1e-9 or abs(np.linalg.det(d) - 1.0) > 1e-9:
        raise NotSpecialUnitaryError("matrix is not special unitary")
    w = 0.5 * np.trace(d).real
    # tr(sigma_k D) = 2i v_k
    v = np.array([(0.5 * np.trace(s @ d) / 1j).real for s in PAULI])
    return _from_coeffs(w, v)


def pauli_expand(h) -> np.ndarray:
    """Real coefficients ``(c0, c1, c2, c3)`` with ``h = c0 I + c . sigma`` for Hermitian ``h``."""
    h = np.asarray(h, dtype=complex)
    return np.array([0.5 * np.trace(h).real] + [0.5 * np.trace(s @ h).real for s in PAULI])
