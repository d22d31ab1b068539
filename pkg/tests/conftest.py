import pytest

from katospec.bits import mask_of
from katospec.monoid import validate_monoid
from katospec.space import BasedSpace, from_open_family


def sets(*groups):
    return [mask_of(g) for g in groups]


@pytest.fixture
def sierpinski():
    # point 0 is the generic-side point g (in every nonempty open), point 1 is s
    return from_open_family(2, sets({0}))


@pytest.fixture
def discrete2():
    return from_open_family(2, sets({0}, {1}))


@pytest.fixture
def semilattice2():
    return validate_monoid(2, 0, [[0, 1], [1, 1]])


@pytest.fixture
def group2():
    return validate_monoid(2, 0, [[0, 1], [1, 0]])


@pytest.fixture
def z6():
    return validate_monoid(6, 1, [[(a * b) % 6 for b in range(6)] for a in range(6)])


@pytest.fixture
def point_full_base():
    return BasedSpace.generated(1, [0, 1])


@pytest.fixture
def point_top_base():
    return BasedSpace.generated(1, [1])
