import itertools

import pytest

from tcell import finmon
from tcell.cellcore import MonoidCategory
from tcell.finmon import ElementMap

M = finmon.builtin


def ctx_of(*names, sources=None):
    return MonoidCategory([M(n) for n in names], None if sources is None else [M(n) for n in sources])


def emap(A, B, images):
    return ElementMap(M(A) if isinstance(A, str) else A, M(B) if isinstance(B, str) else B, tuple(images))


def hom_oracle(A, B, images):
    """Independent hom test: unit, then every pair."""
    if images[A.identity] != B.identity:
        return False
    return all(images[A.table[x][y]] == B.table[images[x]][images[y]]
               for x, y in itertools.product(range(A.size), repeat=2))


@pytest.fixture
def chain3():
    return M("chain3")


@pytest.fixture
def z2():
    return M("Z2")
