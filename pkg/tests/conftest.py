import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

from rtilde.coxeter import CoxeterGroup, CoxeterMatrix, SymmetricGroup  # noqa: E402


@pytest.fixture(scope="session")
def s3():
    return SymmetricGroup(3)


@pytest.fixture(scope="session")
def s4():
    return SymmetricGroup(4)


@pytest.fixture(scope="session")
def s4_generic():
    return CoxeterGroup(CoxeterMatrix.type_A(3))
