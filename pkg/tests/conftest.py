import pytest

from fintop import space


@pytest.fixture
def sierpinski():
    # opens {∅, {1}, {0,1}}
    return space(2, [0b00, 0b10, 0b11])


@pytest.fixture
def mirror_sierpinski():
    # opens {∅, {0}, {0,1}}
    return space(2, [0b00, 0b01, 0b11])


@pytest.fixture
def three_point():
    # opens {∅, {0}, {0,1}, {0,1,2}} — a nested (chain) topology on 3 points
    return space(3, [0b000, 0b001, 0b011, 0b111])
