"""Lorentz-induced maps of spin density matrices for two momentum values.

A state is described by two weighted spin blocks ``rho_1 = (q + r1.sigma)/2``
and ``rho_2 = (1 - q + r2.sigma)/2`` attached to momenta ``p1`` and ``p2``.
A boost rotates the two blocks by their own Wigner rotations ``W1`` and
``W2``. At the level of the mean spin ``s = r1 + r2`` this is the affine map

    s -> (W1 + W2) s / 2 + (W1 - W2) a / 2,     a = r1 - r2,

which is only meaningful for ``s`` compatible with ``a`` (see
:func:`compat_check`) and is completely positive only when ``W1 a = W2 a``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import DomainError, RadiusTooLargeError, ValidationError
from .kinematics import Boost, MomentumSpec, boost_momentum, wigner_halpern
from .rotor import (
    IDENTITY_2,
    PAULI,
    Rotation,
    rot_apply,
    rot_compose,
    rot_inverse,
    su2_from_rotation,
    vec3,
)

SLACK = 1e-12
CP_TOL = 1e-10
CHOI_TOL = 1e-10


def density_matrix(weight: float, bloch) -> np.ndarray:
    """``(weight I + bloch . sigma) / 2``."""
    bloch = vec3(bloch)
    return 0.5 * (weight * IDENTITY_2 + np.einsum("k,kij->ij", bloch, PAULI))


def bloch_vector(rho) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    return np.array([np.trace(s @ rho).real for s in PAULI])


def is_positive(weight: float, bloch, slack: float = SLACK) -> bool:
    return float(np.linalg.norm(bloch)) <= weight + slack


@dataclass(frozen=True, eq=False)
class TwoMomentumSpinState:
    q: float
    r1: np.ndarray
    r2: np.ndarray
    p1: MomentumSpec
    p2: MomentumSpec

    def __post_init__(self):
        q = float(self.q)
        if not (0.0 <= q <= 1.0):
            raise ValidationError(f"q must lie in [0, 1], got {q}")
        r1, r2 = vec3(self.r1), vec3(self.r2)
        if not is_positive(q, r1):
            raise ValidationError(f"|r1| = {np.linalg.norm(r1):.6g} exceeds q = {q:.6g}")
        if not is_positive(1.0 - q, r2):
            raise ValidationError(f"|r2| = {np.linalg.norm(r2):.6g} exceeds 1 - q = {1 - q:.6g}")
        for r in (r1, r2):
            r.setflags(write=False)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "r1", r1)
        object.__setattr__(self, "r2", r2)

    @property
    def correlation(self) -> np.ndarray:
        """``<Sigma Xi_1> = r1 - r2``, the fixed vector of the induced map."""
        return self.r1 - self.r2


def rho_tilde_pair(s: TwoMomentumSpinState) -> tuple[np.ndarray, np.ndarray]:
    return density_matrix(s.q, s.r1), density_matrix(1.0 - s.q, s.r2)


def spin_density(s: TwoMomentumSpinState) -> np.ndarray:
    rho1, rho2 = rho_tilde_pair(s)
    return rho1 + rho2


def mean_spin(s: TwoMomentumSpinState) -> np.ndarray:
    return s.r1 + s.r2


@dataclass(frozen=True, eq=False)
class SpinMap:
    """Affine Bloch-vector map fixed by ``W1``, ``W2`` and ``a = r1 - r2``."""

    w1: Rotation
    w2: Rotation
    a: np.ndarray

    def __post_init__(self):
        a = vec3(self.a)
        if np.linalg.norm(a) > 1.0 + SLACK:
            raise ValidationError(f"|a| = {np.linalg.norm(a):.6g} exceeds 1")
        a.setflags(write=False)
        object.__setattr__(self, "a", a)

    @cached_property
    def rel(self) -> Rotation:
        """``W1^-1 W2``."""
        return rot_compose(rot_inverse(self.w1), self.w2)

    @property
    def degenerate(self) -> bool:
        return self.rel.is_identity

    @property
    def z_axis(self) -> np.ndarray:
        return self.rel.axis

    @property
    def z_prime(self) -> np.ndarray:
        return rot_apply(self.w1, self.z_axis)

    @property
    def a_perp(self) -> np.ndarray:
        """Component of ``a`` perpendicular to the relative axis (zero when degenerate)."""
        if self.degenerate:
            return np.zeros(3)
        z = self.z_axis
        return self.a - (self.a @ z) * z

    def translation(self) -> np.ndarray:
        """``(W1 a - W2 a) / 2``; only ``a_perp`` contributes."""
        ap = self.a_perp
        return 0.5 * (rot_apply(self.w1, ap) - rot_apply(self.w2, ap))

    def linear_part(self) -> np.ndarray:
        return 0.5 * (self.w1.matrix() + self.w2.matrix())


def build_map(b: Boost, s: TwoMomentumSpinState) -> SpinMap:
    w1 = wigner_halpern(b, s.p1)[0]
    w2 = wigner_halpern(b, s.p2)[0]
    return SpinMap(w1, w2, s.correlation)


def transform_state(b: Boost, s: TwoMomentumSpinState) -> TwoMomentumSpinState:
    w1 = wigner_halpern(b, s.p1)[0]
    w2 = wigner_halpern(b, s.p2)[0]
    return TwoMomentumSpinState(
        s.q,
        rot_apply(w1, s.r1),
        rot_apply(w2, s.r2),
        boost_momentum(b, s.p1),
        boost_momentum(b, s.p2),
    )


def transform_density(b: Boost, s: TwoMomentumSpinState) -> np.ndarray:
    """Spin density matrix after the boost, by conjugating each block with ``D(W)``."""
    rho1, rho2 = rho_tilde_pair(s)
    d1 = wigner_halpern(b, s.p1)[1]
    d2 = wigner_halpern(b, s.p2)[1]
    return d1 @ rho1 @ d1.conj().T + d2 @ rho2 @ d2.conj().T


def domain_margin(m: SpinMap, sv) -> float:
    """``2 sqrt(1 - s_z^2) - (d1 + d2)``; nonnegative inside the compatibility domain.

    ``d1`` and ``d2`` are the distances from the projection of ``sv`` onto the
    plane perpendicular to the relative axis to the foci ``+-a_perp``.
    """
    sv = vec3(sv)
    z = m.z_axis
    sz = float(sv @ z)
    s_perp = sv - sz * z
    ap = m.a_perp
    d1 = float(np.linalg.norm(s_perp - ap))
    d2 = float(np.linalg.norm(s_perp + ap))
    return 2.0 * math.sqrt(max(0.0, 1.0 - sz * sz)) - (d1 + d2)


def compat_check(m: SpinMap, sv) -> bool:
    sv = vec3(sv)
    if np.linalg.norm(sv) > 1.0 + SLACK:
        return False
    if m.degenerate:
        return True
    return domain_margin(m, sv) >= -SLACK


def apply_map(m: SpinMap, sv) -> np.ndarray:
    sv = vec3(sv)
    if not compat_check(m, sv):
        raise DomainError(f"mean spin {sv} is outside the compatibility domain of the map")
    out = 0.5 * (rot_apply(m.w1, sv) + rot_apply(m.w2, sv))
    if not m.degenerate:
        out = out + m.translation()
    return out


def exists_state_oracle(sv, a_perp, z_axis, n_grid: int = 2001) -> bool:
    """Brute-force compatibility test.

    Searches for a parallel component ``t`` of the correlation vector,
    ``a = a_perp + t z``, such that ``r1 = (sv + a)/2`` and ``r2 = (sv - a)/2``
    satisfy ``|r1| + |r2| <= 1``, i.e. some ``q`` makes both blocks positive.
    ``t`` is scanned on a uniform grid over [-1, 1]; the stationary point of
    ``|sv + a| + |sv - a|`` in ``t`` is added to the candidates.
    """
    sv, ap, z = vec3(sv), vec3(a_perp), vec3(z_axis)
    z = z / np.linalg.norm(z)
    if abs(ap @ z) > 1e-10:
        raise ValueError("a_perp must be perpendicular to the axis")
    ts = np.linspace(-1.0, 1.0, n_grid)
    sz = float(sv @ z)
    # |sv + a| = hypot(|sv_perp + a_perp|, sz + t); |sv - a| likewise with minus signs
    s_perp = sv - sz * z
    u = float(np.linalg.norm(s_perp + ap))
    w = float(np.linalg.norm(s_perp - ap))
    if u + w > 0.0:
        # equal slopes: (sz + t)/u = (sz - t)/w
        ts = np.append(ts, np.clip(sz * (u - w) / (u + w), -1.0, 1.0))
    a = ap[None, :] + ts[:, None] * z[None, :]
    total = 0.5 * (np.linalg.norm(sv + a, axis=1) + np.linalg.norm(sv - a, axis=1))
    return bool(total.min() <= 1.0 + SLACK)


def is_cp_criterion(m: SpinMap) -> bool:
    if m.degenerate:
        return True
    return float(np.linalg.norm(rot_apply(m.w1, m.a) - rot_apply(m.w2, m.a))) <= CP_TOL


def choi_matrix(m: SpinMap) -> np.ndarray:
    """Choi matrix ``sum_ij E_ij (x) Phi(E_ij)`` of the trace-preserving matrix map.

    ``Phi(x0 I + x.sigma) = x0 I + (T x + x0 t).sigma`` with
    ``T = (W1 + W2)/2`` and ``t = (W1 - W2) a_perp / 2``, so that
    ``Phi((I + s.sigma)/2)`` has Bloch vector ``apply_map(m, s)``.
    """
    lin = m.linear_part()
    t = m.translation() if not m.degenerate else np.zeros(3)

    def phi(x):
        x0 = 0.5 * np.trace(x)
        xv = np.array([0.5 * np.trace(s @ x) for s in PAULI])
        yv = lin @ xv + x0 * t
        return x0 * IDENTITY_2 + np.einsum("k,kij->ij", yv, PAULI)

    choi = np.zeros((4, 4), dtype=complex)
    for i in range(2):
        for j in range(2):
            e = np.zeros((2, 2), dtype=complex)
            e[i, j] = 1.0
            choi += np.kron(e, phi(e))
    return choi


def choi_min_eigenvalue(m: SpinMap) -> float:
    c = choi_matrix(m)
    return float(np.linalg.eigvalsh(0.5 * (c + c.conj().T)).min())


def choi_cp_oracle(m: SpinMap) -> bool:
    return choi_min_eigenvalue(m) >= -CHOI_TOL


def inverse_map(m: SpinMap, sv) -> SpinMap:
    """Map of the inverse boost acting on the transformed state.

    The fixed vector of the inverse map is ``W1 r1 - W2 r2`` of the
    transformed state, which depends on the mean spin ``sv`` the forward map
    was applied to (``r1 = (sv + a)/2``, ``r2 = (sv - a)/2``).
    """
    sv = vec3(sv)
    r1, r2 = 0.5 * (sv + m.a), 0.5 * (sv - m.a)
    a_new = rot_apply(m.w1, r1) - rot_apply(m.w2, r2)
    return SpinMap(rot_inverse(m.w1), rot_inverse(m.w2), a_new)


def domain_quantities(m: SpinMap, sv) -> tuple[float, float, float, float]:
    """``(|r1|, |r2|, z1, z2)`` entering the domain inequality for mean spin ``sv``."""
    sv = vec3(sv)
    r1, r2 = 0.5 * (sv + m.a), 0.5 * (sv - m.a)
    z = m.z_axis
    return float(np.linalg.norm(r1)), float(np.linalg.norm(r2)), float(r1 @ z), float(r2 @ z)


def erasable_polarization(b: Boost, p1: MomentumSpec, p2: MomentumSpec, r1) -> np.ndarray:
    """``W1 r1 - W2 r1``: a polarization the inverse boost maps to zero.

    It is the boosted mean spin of the unpolarized state with
    ``r2 = -r1`` and ``q = 1/2``.
    """
    r1 = vec3(r1)
    if np.linalg.norm(r1) > 0.5 + SLACK:
        raise RadiusTooLargeError(f"|r1| = {np.linalg.norm(r1):.6g} exceeds 1/2")
    w1 = wigner_halpern(b, p1)[0]
    w2 = wigner_halpern(b, p2)[0]
    return rot_apply(w1, r1) - rot_apply(w2, r1)


def coplanar_magnitude(r1: float, r2: float, chi: float, phi1: float, phi2: float) -> float:
    """Length of ``W1 r1 + W2 r2`` when both rotations share one axis and the vectors lie in its plane.

    ``chi`` is the angle from r1 to r2 and ``phi1``, ``phi2`` the signed
    rotation angles about the common axis, all measured in the sense in which
    a positive rotation angle turns vectors.
    """
    if r1 < 0 or r2 < 0:
        raise ValueError("lengths must be nonnegative")
    val = r1 * r1 + r2 * r2 + 2.0 * r1 * r2 * math.cos(chi + phi2 - phi1)
    return math.sqrt(max(val, 0.0))


def signed_angle(r: Rotation, axis) -> float:
    """Angle of ``r`` about ``axis`` with sign, assuming ``r`` is about ``+-axis``."""
    axis = vec3(axis)
    if r.is_identity:
        return 0.0
    return r.angle * float(np.sign(r.axis @ axis))


def unpolarized_state(r1, p1: MomentumSpec, p2: MomentumSpec) -> TwoMomentumSpinState:
    """State with ``r2 = -r1`` and ``q = 1/2``: zero mean spin, correlation ``2 r1``."""
    r1 = vec3(r1)
    return TwoMomentumSpinState(0.5, r1, -r1, p1, p2)


