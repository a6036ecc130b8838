"""Exit criteria of the build, one test per criterion.

Each test records a PASS/FAIL line that is printed in the terminal summary.
"""
import io
import math
import time
from pathlib import Path

import mpmath
import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES, random_unit
from lorentzspin.cli import dispatch
from lorentzspin.figures import run_figure
from lorentzspin.kinematics import (
    MP_DPS,
    Boost,
    MomentumSpec,
    boost_matrix,
    boost_matrix_mp,
    four_momentum,
    four_momentum_mp,
    wigner_halpern,
    wigner_oracle,
)
from lorentzspin.rotor import PAULI, pauli_expand, rot_compose, rot_from_axis_angle, rotation_distance, su2_from_rotation
from lorentzspin.scenario import load_scenario
from lorentzspin.spinmap import (
    SpinMap,
    apply_map,
    choi_cp_oracle,
    compat_check,
    coplanar_magnitude,
    domain_margin,
    domain_quantities,
    erasable_polarization,
    exists_state_oracle,
    inverse_map,
    is_cp_criterion,
    mean_spin,
    signed_angle,
    transform_state,
    unpolarized_state,
)

SCENARIOS = Path(__file__).resolve().parents[1] / "scenarios"
LD = np.longdouble
BETA10 = math.asinh(10.0)


def record(number, title, ok, detail):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] AC{number:02d} {title}: {detail}")
    assert ok, detail


def random_rotation(rng):
    return rot_from_axis_angle(random_unit(rng), rng.uniform(-math.pi, math.pi))


def ball(rng, radius=1.0):
    return random_unit(rng) * radius * rng.uniform() ** (1 / 3)


def phi_limit(beta=BETA10):
    """Wigner angle for e.f = 0 at alpha = 20, where it has converged to its alpha -> inf value."""
    r = wigner_halpern(Boost(20.0, [0, 1, 0]), MomentumSpec(beta, [1, 0, 0]))[0]
    return abs(r.angle)


@pytest.fixture
def rng():
    return np.random.default_rng(7)


def test_ac01_wigner_oracle_equivalence(rng):
    cases = [(Boost(rng.uniform(0, 5), random_unit(rng)), MomentumSpec(rng.uniform(0, 5), random_unit(rng)))
             for _ in range(1000)]
    start = time.perf_counter()
    worst = max(
        rotation_distance(wigner_halpern(b, s)[0], wigner_oracle(boost_matrix(b, LD), four_momentum(s, LD)))
        for b, s in cases
    )
    elapsed = time.perf_counter() - start
    record(1, "Halpern vs matrix oracle", worst < 1e-9 and elapsed < 1.0,
           f"max distance {worst:.2e} (< 1e-9), {elapsed:.2f} s (< 1 s)")


def test_ac02_conjugation_identity(rng):
    worst = 0.0
    for _ in range(1000):
        r = random_rotation(rng)
        d = su2_from_rotation(r)
        m = np.array([pauli_expand(d.conj().T @ s @ d)[1:] for s in PAULI])
        worst = max(worst, float(np.abs(m - r.matrix()).max()))
    record(2, "D^dag Sigma D = W(Sigma)", worst < 1e-12, f"max entry deviation {worst:.2e} (< 1e-12)")


def test_ac03_cocycle(rng):
    worst = 0.0
    for _ in range(500):
        b1 = Boost(rng.uniform(0, 5), random_unit(rng))
        b2 = Boost(rng.uniform(0, 5), random_unit(rng))
        spec = MomentumSpec(rng.uniform(0, 5), random_unit(rng))
        with mpmath.workdps(MP_DPS):
            l1, l2, p = boost_matrix_mp(b1), boost_matrix_mp(b2), four_momentum_mp(spec)
            lhs = wigner_oracle(l2 * l1, p)
            rhs = rot_compose(wigner_oracle(l2, l1 * p), wigner_oracle(l1, p))
        worst = max(worst, rotation_distance(lhs, rhs))
    record(3, "cocycle law", worst < 1e-9, f"max distance {worst:.2e} (< 1e-9)")


def test_ac04_figure1():
    table = run_figure(1, load_scenario(SCENARIOS / "fig1.scn"))
    v, mag = table.column("v"), table.column("magnitude")
    limit = abs(math.cos(phi_limit()))
    start_ok = abs(mag[0] - 1.0) <= 1e-12 and v[0] == 0.0
    mono_ok = bool(np.all(np.diff(mag) <= 0.0))
    end_ok = v[-1] == pytest.approx(0.999) and abs(mag[-1] - limit) <= 0.01
    record(4, "figure 1 curve", start_ok and mono_ok and end_ok,
           f"start {mag[0]:.12f}, nonincreasing {mono_ok}, "
           f"|m(0.999) - |cos phi_inf|| = |{mag[-1]:.4f} - {limit:.4f}| = {abs(mag[-1] - limit):.4f} (<= 0.01)")


def test_ac05_figure3():
    sc = load_scenario(SCENARIOS / "fig3.scn")
    table = run_figure(3, sc)
    mag = table.column("magnitude_dot_-1")
    limit = 2 * 0.5 * abs(math.sin(phi_limit()))
    mono_ok = bool(np.all(np.diff(mag) >= 0.0))
    end_ok = abs(mag[-1] - limit) <= 0.01
    record(5, "figure 3 curve (dot = -1)", mono_ok and end_ok,
           f"nondecreasing {mono_ok}, |m(0.999) - {limit:.4f}| = {abs(mag[-1] - limit):.4f} (<= 0.01)")


def test_ac06_cp_equivalence(rng):
    maps = [SpinMap(random_rotation(rng), random_rotation(rng), ball(rng)) for _ in range(500)]
    constructed = []
    for i in range(100):
        w1, w2 = random_rotation(rng), random_rotation(rng)
        axis = SpinMap(w1, w2, np.zeros(3)).z_axis
        if i % 4 == 0:
            constructed.append(SpinMap(w1, w2, np.zeros(3)))
        elif i % 4 == 1:
            constructed.append(SpinMap(w1, w1, ball(rng)))
        else:
            constructed.append(SpinMap(w1, w2, rng.uniform(-1, 1) * axis))
    disagree = sum(is_cp_criterion(m) != choi_cp_oracle(m) for m in maps + constructed)
    n_cp = sum(is_cp_criterion(m) for m in constructed)
    record(6, "CP criterion vs Choi", disagree == 0 and n_cp == 100,
           f"{disagree} disagreements over 600 maps; {n_cp}/100 constructed maps CP")


def test_ac07_domain_oracle(rng):
    axis = np.linspace(-1.0, 1.0, 21)
    grid = np.array([[x, y, z] for x in axis for y in axis for z in axis])
    grid = grid[np.linalg.norm(grid, axis=1) <= 1.0]
    compared = skipped = mismatches = 0
    for _ in range(20):
        m0 = SpinMap(random_rotation(rng), random_rotation(rng), np.zeros(3))
        z = m0.z_axis
        ap = np.cross(z, random_unit(rng))
        ap *= rng.uniform(0, 1) / np.linalg.norm(ap)
        az = rng.uniform(-1, 1) * math.sqrt(1 - ap @ ap)
        m = SpinMap(m0.w1, m0.w2, ap + az * z)
        for sv in grid:
            if abs(domain_margin(m, sv)) < 1e-3:
                skipped += 1
                continue
            compared += 1
            mismatches += compat_check(m, sv) != exists_state_oracle(sv, m.a_perp, z)
    record(7, "ellipse domain vs brute force", mismatches == 0,
           f"{mismatches} mismatches over {compared} points ({skipped} in boundary band)")


def test_ac08_inverse_round_trip(rng):
    worst_sv = worst_q = 0.0
    done = 0
    while done < 1000:
        # in-domain pairs come from physical states: |r1| <= q, |r2| <= 1 - q
        q = rng.uniform()
        r1, r2 = ball(rng, q), ball(rng, 1 - q)
        m = SpinMap(random_rotation(rng), random_rotation(rng), r1 - r2)
        if m.degenerate:
            continue
        sv = r1 + r2
        out = apply_map(m, sv)
        inv = inverse_map(m, sv)
        worst_sv = max(worst_sv, float(np.abs(apply_map(inv, out) - sv).max()))
        n1, n2, z1, z2 = domain_quantities(m, sv)
        k1, k2, y1, y2 = domain_quantities(inv, out)
        # the inverse axis is z' up to orientation
        sign = float(np.sign(inv.z_axis @ m.z_prime))
        diffs = (n1 - k1, n2 - k2, z1 - sign * y1, z2 - sign * y2, np.linalg.norm(inv.z_axis - sign * m.z_prime))
        worst_q = max(worst_q, max(abs(x) for x in diffs))
        done += 1
    record(8, "inverse map round trip", worst_sv < 1e-12 and worst_q < 1e-12,
           f"max |sv error| {worst_sv:.2e}, max domain-quantity change {worst_q:.2e} (< 1e-12)")


def test_ac09_erasure(rng):
    worst = 0.0
    for _ in range(100):
        b = Boost(rng.uniform(0, 5), random_unit(rng))
        p1 = MomentumSpec(rng.uniform(0, 5), random_unit(rng))
        p2 = MomentumSpec(rng.uniform(0, 5), random_unit(rng))
        r1 = ball(rng, 0.5)
        sv = erasable_polarization(b, p1, p2, r1)
        boosted = transform_state(b, unpolarized_state(r1, p1, p2))
        assert np.abs(mean_spin(boosted) - sv).max() < 1e-12
        back = transform_state(b.inverse(), boosted)
        worst = max(worst, float(np.linalg.norm(mean_spin(back))))
    record(9, "polarization erasure", worst < 1e-12, f"max residual mean spin {worst:.2e} (< 1e-12)")


def test_ac10_coplanar_formula(rng):
    worst = 0.0
    for _ in range(1000):
        e = random_unit(rng)
        f = np.cross(e, random_unit(rng))
        f /= np.linalg.norm(f)
        z = np.cross(e, f)
        b = Boost.from_velocity(rng.uniform(0, 0.999), e)
        p1 = MomentumSpec(rng.uniform(0, 5), f)
        p2 = MomentumSpec(rng.uniform(0, 5), f if rng.uniform() < 0.5 else -f)
        q = rng.uniform()
        t1, t2 = rng.uniform(-math.pi, math.pi, 2)
        l1, l2 = q * rng.uniform(), (1 - q) * rng.uniform()
        r1 = l1 * (math.cos(t1) * f + math.sin(t1) * e)
        r2 = l2 * (math.cos(t2) * f + math.sin(t2) * e)
        w1, w2 = wigner_halpern(b, p1)[0], wigner_halpern(b, p2)[0]
        vector_path = float(np.linalg.norm(w1.matrix() @ r1 + w2.matrix() @ r2))
        # chi in the rotation sense: clockwise about z
        chi = -math.atan2(np.cross(r1, r2) @ z, r1 @ r2)
        scalar = coplanar_magnitude(l1, l2, chi, signed_angle(w1, z), signed_angle(w2, z))
        worst = max(worst, abs(vector_path - scalar))
    record(10, "coplanar magnitude formula", worst < 1e-10, f"max |vector - scalar| {worst:.2e} (< 1e-10)")


def test_ac11_csv_determinism(tmp_path):
    outputs = []
    for name in ("a.csv", "b.csv"):
        target = tmp_path / name
        code = dispatch(["figure", "--which", "1", "--scenario", str(SCENARIOS / "fig1.scn"), "--out", str(target)],
                        io.StringIO(), io.StringIO())
        assert code == 0
        outputs.append(target.read_bytes())
    record(11, "CSV determinism", outputs[0] == outputs[1] and len(outputs[0]) > 0,
           f"{len(outputs[0])} bytes, identical {outputs[0] == outputs[1]}")
