from itertools import product

import pytest

from smdt.pattern import Pattern


def binary_patterns(m_min, m_max):
    for m in range(m_min, m_max + 1):
        for syms in product((0, 1), repeat=m):
            yield Pattern(syms)


@pytest.fixture
def P():
    return Pattern.parse
