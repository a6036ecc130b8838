"""Wigner rotations of a massive spin-1/2 particle and the spin maps they induce."""
from .kinematics import Boost, MomentumSpec, wigner_halpern, wigner_oracle
from .rotor import Rotation, rot_apply, rot_compose, rot_from_axis_angle, rot_inverse
from .spinmap import SpinMap, TwoMomentumSpinState, apply_map, build_map, transform_state

__all__ = [
    "Boost",
    "MomentumSpec",
    "Rotation",
    "SpinMap",
    "TwoMomentumSpinState",
    "apply_map",
    "build_map",
    "rot_apply",
    "rot_compose",
    "rot_from_axis_angle",
    "rot_inverse",
    "transform_state",
    "wigner_halpern",
    "wigner_oracle",
]
