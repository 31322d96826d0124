import pytest

from giantsim.gait import GaitConfig
from giantsim.linkage import DEFAULT_GEOMETRY
from giantsim.profile import LiftProfile
from giantsim.robot import RobotSpec


@pytest.fixture(scope="session")
def profile():
    return LiftProfile()


@pytest.fixture(scope="session")
def spec():
    return RobotSpec()


@pytest.fixture(scope="session")
def geometry():
    return DEFAULT_GEOMETRY


@pytest.fixture(scope="session")
def gait_cfg():
    return GaitConfig()
