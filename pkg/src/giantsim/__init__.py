"""giantsim: kinematic simulator and teleoperation stack for a six-legged
crank-link walker."""

from ._kernels import BACKEND as KERNEL_BACKEND
from .analysis import fit_polynomial, savitzky_golay
from .gait import GaitConfig, GaitState, advance, apply_command, stance_set
from .linkage import DEFAULT_GEOMETRY, FootPoint, LinkageGeometry, foot_position
from .profile import LiftProfile, derive_period, lift_height
from .protocol import Command, UnknownByte, decode, decode_stream, encode, wire_table
from .robot import LEG_ORDER, LegId, Rank, RobotSpec, Side
from .sim import (RobotState, TelemetrySnapshot, World, make_world, run_script,
                  static_stability, tick)
from .terrain import (Difficulty, LoadConfig, LoadVerdict, Posture, TerrainFeature,
                      climb_class, climb_envelope, load_capacity, max_step_reach)

__version__ = "0.1.0"
