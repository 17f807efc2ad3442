import pytest

from schubert_ic.geometry import validate
from schubert_ic.partitions import Partition


def all_partitions(n, max_part=None):
    """Every partition of n, independent of the library's box enumeration."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in all_partitions(n - first, first):
            yield Partition((first,) + tuple(rest))


def P(*parts):
    return Partition(parts)


@pytest.fixture
def worked():
    return validate(2, 5, 4, 8)


@pytest.fixture
def odd_delta():
    return validate(3, 5, 5, 8)
