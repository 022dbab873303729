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

from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

import numpy as np
from networkx.utils import UnionFind

from .core import FiniteSemigroup, Partition
from .errors import NotACongruenceError


@dataclass(frozen=True)
class CongruenceCheck:
    holds: bool
    # (x, x', y, y') with x ~ x', y ~ y' but xy and x'y' in different blocks
    witness: Optional[Tuple[int, int, int, int]] = None

    def __bool__(self) -> bool:
        return self.holds


def is_congruence(S: FiniteSemigroup, P: Partition) -> CongruenceCheck:
    if not P.covers(S.order):
        raise ValueError("partition must cover every element of the semigroup")
    labels = P.labels()
    table = S.table
    for block in P.blocks:
        if len(block) < 2:
            continue
        x = block[0]
        for x_prime in block[1:]:
            # right multiplication: xy ~ x'y for every y
            bad = np.flatnonzero(labels[table[x]] != labels[table[x_prime]])
            if len(bad) > 0:
                y = int(bad[0])
                return CongruenceCheck(False, (x, x_prime, y, y))
            # left multiplication: yx ~ yx' for every y
            bad = np.flatnonzero(labels[table[:, x]] != labels[table[:, x_prime]])
            if len(bad) > 0:
                y = int(bad[0])
                return CongruenceCheck(False, (y, y, x, x_prime))
    return CongruenceCheck(True)


def quotient(S: FiniteSemigroup, P: Partition) -> FiniteSemigroup:
    """
    The quotient semigroup S/P. Blocks become elements in the partition's block order; a singleton
    block keeps its member's name and a larger block is named by its sorted member names in braces.
    """
    check = is_congruence(S, P)
    if not check:
        raise NotACongruenceError(check.witness, list(S.names))

    labels = P.labels()
    representatives = [block[0] for block in P.blocks]
    table = labels[S.table[np.ix_(representatives, representatives)]]
    names = []
    for block in P.blocks:
        if len(block) == 1:
            names.append(S.name(block[0]))
        else:
            names.append("{" + ",".join(sorted(S.name(x) for x in block)) + "}")
    return FiniteSemigroup(table, names)


def congruence_closure(S: FiniteSemigroup, pairs: Iterable[Tuple[int, int]]) -> Partition:
    """The least congruence on S identifying every given pair."""
    classes = UnionFind(range(S.order))
    pending = []
    for x, y in pairs:
        if classes[x] != classes[y]:
            classes.union(x, y)
            pending.append((x, y))

    table = S.table
    while pending:
        x, y = pending.pop()
        for z in range(S.order):
            for u, v in ((table[x, z], table[y, z]), (table[z, x], table[z, y])):
                u, v = int(u), int(v)
                if classes[u] != classes[v]:
                    classes.union(u, v)
                    pending.append((u, v))
    return Partition(classes.to_sets())


def kernel(S: FiniteSemigroup, image: Iterable[int]) -> Partition:
    """The partition of S induced by a map given as a sequence of images."""
    return Partition.from_labels(list(image))
