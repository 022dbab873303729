# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import logging
from itertools import product
from typing import List, Sequence, Tuple

import numpy as np

from ..semigroup.core import FiniteSemigroup
from ..semigroup.errors import BudgetExceededError, ConstructionError

logger = logging.getLogger(__name__)


def is_homomorphism(T: FiniteSemigroup, S: FiniteSemigroup, image: Sequence[int]) -> bool:
    f = np.asarray(image, dtype=np.int64)
    if f.shape != (T.order,) or np.any(f < 0) or np.any(f >= S.order):
        return False
    return bool(np.array_equal(f[T.table], S.table[np.ix_(f, f)]))


class HomomorphismMap:
    """A homomorphism T -> S given by the image of every element of T; multiplicativity is checked on construction."""

    def __init__(self, source: FiniteSemigroup, target: FiniteSemigroup, image: Sequence[int]):
        image = tuple(int(t) for t in image)
        if not is_homomorphism(source, target, image):
            raise ConstructionError(f"map {image} is not a homomorphism")
        self._source = source
        self._target = target
        self._image = image

    @property
    def source(self) -> FiniteSemigroup:
        return self._source

    @property
    def target(self) -> FiniteSemigroup:
        return self._target

    @property
    def source_order(self) -> int:
        return self._source.order

    @property
    def image(self) -> Tuple[int, ...]:
        return self._image

    def __call__(self, x: int) -> int:
        return self._image[x]

    def separates(self, x: int, y: int) -> bool:
        return self._image[x] != self._image[y]

    def format(self, k: int) -> str:
        pairs = " ".join(f"{self._source.name(t)}->{self._target.name(s)}" for t, s in enumerate(self._image))
        return f"HOM {k}: {pairs}"

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomomorphismMap):
            return NotImplemented
        return self._image == other._image and self._source == other._source and self._target == other._target

    def __hash__(self) -> int:
        return hash(self._image)

    def __repr__(self) -> str:
        return f"HomomorphismMap({list(self._image)})"


def assignment_order(T: FiniteSemigroup) -> List[int]:
    """Elements by descending number of occurrences in the table, so constrained elements are tried first."""
    counts = np.bincount(T.table.ravel(), minlength=T.order)
    return sorted(range(T.order), key=lambda x: (-int(counts[x]), x))


def enumerate_homs(T: FiniteSemigroup, S: FiniteSemigroup, cap: int = 20) -> List[HomomorphismMap]:
    """
    All homomorphisms T -> S by backtracking. Every product constraint is checked as soon as its two
    factors and its value have images. The result is sorted by image tuple.
    """
    if T.order > cap:
        raise BudgetExceededError(f"homomorphism enumeration is capped at source order {cap}, got {T.order}")

    order = assignment_order(T)
    t_table = T.table.tolist()
    s_table = S.table.tolist()
    preimages = [[] for _ in range(T.order)]
    for u in range(T.order):
        for v in range(T.order):
            preimages[t_table[u][v]].append((u, v))

    f = [-1] * T.order
    assigned: List[int] = []
    found: List[Tuple[int, ...]] = []

    def consistent(x: int) -> bool:
        for y in assigned:
            for u, v in ((x, y), (y, x)):
                p = t_table[u][v]
                if f[p] >= 0 and f[p] != s_table[f[u]][f[v]]:
                    return False
        for u, v in preimages[x]:
            if f[u] >= 0 and f[v] >= 0 and s_table[f[u]][f[v]] != f[x]:
                return False
        return True

    def search(depth: int):
        if depth == len(order):
            found.append(tuple(f))
            return
        x = order[depth]
        for s in range(S.order):
            f[x] = s
            assigned.append(x)
            if consistent(x):
                search(depth + 1)
            assigned.pop()
            f[x] = -1

    search(0)
    found.sort()
    logger.debug(f"{len(found)} homomorphisms from a semigroup of order {T.order} to one of order {S.order}")
    return [HomomorphismMap(T, S, image) for image in found]


def naive_homs(T: FiniteSemigroup, S: FiniteSemigroup, budget: int = 3**8) -> List[HomomorphismMap]:
    """Filter all |S|^|T| maps; only for cross-checking the backtracking search on small inputs."""
    total = S.order**T.order
    if total > budget:
        raise BudgetExceededError(f"naive enumeration of {total} maps exceeds the budget of {budget}")
    return [HomomorphismMap(T, S, image) for image in product(range(S.order), repeat=T.order) if is_homomorphism(T, S, image)]
