import pytest

from pcmatroid import Partition, Universe


@pytest.fixture
def u3():
    return Universe(3)


@pytest.fixture
def u4():
    return Universe(4)


@pytest.fixture
def p01_23():
    return Partition.from_indices(4, [[0, 1], [2, 3]])


@pytest.fixture
def p01_2():
    return Partition.from_indices(3, [[0, 1], [2]])
