import numpy as np
import pytest

from slitembed.families import BoxFactor, ParamBox
from slitembed.geometry import SlitFamilyConfig


@pytest.fixture
def cfg_single():
    """Normalized single slit [-1, 0], one-point parameter grid."""
    box = ParamBox((BoxFactor(0.0, 0.0, 1.0, 1.0),), ((1, 1, 1),))
    return SlitFamilyConfig(box=box, angles=())


@pytest.fixture
def cfg_two():
    """Normalized first slit plus one raised slit with a 3-point length grid."""
    box = ParamBox(
        (BoxFactor(0.0, 0.0, 1.0, 1.0), BoxFactor(2.0 + 0.6j, 0.0, 0.5, 0.8)),
        ((1, 1, 1), (1, 1, 3)),
    )
    return SlitFamilyConfig(box=box, angles=(np.pi,))


@pytest.fixture
def cfg_three():
    """Three slits at distinct heights, single grid point."""
    box = ParamBox(
        (BoxFactor(0.0, 0.0, 1.0, 1.0),
         BoxFactor(1.5 + 0.8j, 0.0, 0.6, 0.6),
         BoxFactor(-0.5 - 1.1j, 0.0, 0.7, 0.7)),
        ((1, 1, 1), (1, 1, 1), (1, 1, 1)),
    )
    return SlitFamilyConfig(box=box, angles=(2.0, 4.0))
