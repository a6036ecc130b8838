"""Approach of the Wigner angle to its large-rapidity limit for a perpendicular boost."""
import argparse
import math

from lorentzspin.kinematics import Boost, MomentumSpec, wigner_halpern


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--momentum", type=float, default=10.0, help="|p|/m of the particle")
    args = parser.parse_args()
    beta = math.asinh(args.momentum)
    limit = 2 * math.acos(math.cosh(beta / 2) / math.sqrt(math.cosh(beta)))
    print(f"closed-form limit: phi = {limit:.6f}, |cos phi| = {abs(math.cos(limit)):.6f}, |sin phi| = {abs(math.sin(limit)):.6f}")
    print("v, alpha, |phi|, |cos phi|, |sin phi|")
    for v in (0.5, 0.9, 0.99, 0.999, 0.9999, 0.99999):
        b = Boost.from_velocity(v, [0, 1, 0])
        phi = abs(wigner_halpern(b, MomentumSpec(beta, [1, 0, 0]))[0].angle)
        print(f"{v}, {b.rapidity:.4f}, {phi:.6f}, {abs(math.cos(phi)):.6f}, {abs(math.sin(phi)):.6f}")


if __name__ == "__main__":
    main()
