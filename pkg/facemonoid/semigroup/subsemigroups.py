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
from itertools import combinations
from typing import FrozenSet, Iterable, List

import numpy as np

from .core import FiniteSemigroup
from .errors import BudgetExceededError, NotClosedError

logger = logging.getLogger(__name__)


def subsemigroup_closure(S: FiniteSemigroup, seed: Iterable[int]) -> FrozenSet[int]:
    members = set(int(x) for x in seed)
    for x in members:
        if not 0 <= x < S.order:
            raise ValueError(f"element {x} is not in a semigroup of order {S.order}")
    while members:
        block = sorted(members)
        products = set(int(p) for p in np.unique(S.table[np.ix_(block, block)]))
        if products <= members:
            break
        members |= products
    return frozenset(members)


def is_closed(S: FiniteSemigroup, subset: Iterable[int]) -> bool:
    subset = set(subset)
    block = sorted(subset)
    return all(int(p) in subset for p in np.unique(S.table[np.ix_(block, block)]))


def _product_masks(S: FiniteSemigroup) -> List[List[int]]:
    return [[1 << int(S.table[x, y]) for y in range(S.order)] for x in range(S.order)]


def _close_mask(mask: int, masks: List[List[int]], n: int) -> int:
    while True:
        members = [x for x in range(n) if mask >> x & 1]
        grown = mask
        for x in members:
            row = masks[x]
            for y in members:
                grown |= row[y]
        if grown == mask:
            return mask
        mask = grown


def all_subsemigroups(S: FiniteSemigroup, cap: int = 20) -> List[FrozenSet[int]]:
    """
    Every non-empty subsemigroup of S, in lectic order of their element sets.

    Closed sets are enumerated with Ganter's next-closure scheme, so the cost is proportional to
    the number of subsemigroups rather than to 2^order; the order cap still applies because that
    number can itself be 2^order (left zero semigroups).
    """
    n = S.order
    if n > cap:
        raise BudgetExceededError(f"subsemigroup enumeration is capped at order {cap}, got {n}")

    masks = _product_masks(S)
    full = (1 << n) - 1
    current = _close_mask(0, masks, n)
    found = [current] if current else []
    while current != full:
        for i in reversed(range(n)):
            bit = 1 << i
            if current & bit:
                current &= ~bit
                continue
            candidate = _close_mask(current | bit, masks, n)
            # the new elements must all come after i
            if (candidate & ~current) & (bit - 1) == 0:
                current = candidate
                found.append(current)
                break

    logger.debug(f"found {len(found)} subsemigroups in a semigroup of order {n}")
    return [frozenset(x for x in range(n) if mask >> x & 1) for mask in found]


def restrict(S: FiniteSemigroup, subset: Iterable[int]) -> FiniteSemigroup:
    """The subsemigroup on ``subset``, re-indexed in increasing index order with the original names."""
    elements = sorted(set(int(x) for x in subset))
    if not elements:
        raise NotClosedError("cannot restrict to an empty subset")
    if not is_closed(S, elements):
        escaped = sorted(subsemigroup_closure(S, elements) - set(elements))
        raise NotClosedError(
            f"subset is not closed under multiplication, products escape to {[S.name(x) for x in escaped]}"
        )
    position = np.full(S.order, -1, dtype=np.int64)
    position[elements] = np.arange(len(elements))
    table = position[S.table[np.ix_(elements, elements)]]
    return FiniteSemigroup(table, [S.name(x) for x in elements])


def maximal_subsemigroups(S: FiniteSemigroup) -> List[FrozenSet[int]]:
    """
    All maximal proper non-empty subsemigroups.

    A removed set R is grown until S minus R is closed: whenever y·z lands in R with y, z kept, one of
    y or z has to go too. Branches whose remainder already sits inside a closed set found earlier
    cannot produce anything new and are cut.
    """
    n = S.order
    everything = frozenset(range(n))
    candidates: List[FrozenSet[int]] = []
    visited = set()

    def escape(kept: FrozenSet[int], removed: FrozenSet[int]):
        for y in sorted(kept):
            for z in sorted(kept):
                if int(S.table[y, z]) in removed:
                    return y, z
        return None

    def search(removed: FrozenSet[int]):
        if removed in visited:
            return
        visited.add(removed)
        kept = everything - removed
        if not kept or any(kept <= found for found in candidates):
            return
        pair = escape(kept, removed)
        if pair is None:
            candidates.append(kept)
            return
        y, z = pair
        search(removed | {y})
        if z != y:
            search(removed | {z})

    for x in range(n):
        search(frozenset([x]))

    maximal = [M for M in candidates if not any(M < other for other in candidates)]
    maximal = sorted(set(maximal), key=lambda M: sorted(M))
    logger.debug(f"{len(maximal)} maximal subsemigroups from {len(visited)} search nodes")
    return maximal


def minimal_generating_set(S: FiniteSemigroup) -> FrozenSet[int]:
    """
    A smallest generating set. Elements whose removal leaves a subsemigroup belong to every generating
    set; the rest is found by trying larger and larger additions in lexicographic order.
    """
    everything = frozenset(range(S.order))
    indispensable = frozenset(x for x in range(S.order) if S.order == 1 or is_closed(S, everything - {x}))
    if subsemigroup_closure(S, indispensable) == everything:
        return indispensable

    others = sorted(everything - indispensable)
    for size in range(1, len(others) + 1):
        for extra in combinations(others, size):
            generators = indispensable | set(extra)
            if subsemigroup_closure(S, generators) == everything:
                return frozenset(generators)
    return everything
