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
from typing import FrozenSet, List, Optional, Tuple

import networkx as nx
import numpy as np

from ..semigroup.core import ElementPair, FiniteSemigroup
from ..semigroup.green import r_order_matrix

UP = "up"
DOWN = "down"

REAL = "real"
COMPLEX = "complex"


def s_ab(S: FiniteSemigroup, p: ElementPair) -> FrozenSet[int]:
    """{s : sa = sb}"""
    a, b = p
    return frozenset(int(s) for s in np.flatnonzero(S.table[:, a] == S.table[:, b]))


def generates_on_left(S: FiniteSemigroup, a: int) -> np.ndarray:
    """``mask[s]`` is True iff a lies in Ss, scanning x·s over x in S without adjoining an identity."""
    return np.any(S.table == a, axis=0)


def s_ab_prime(S: FiniteSemigroup, p: ElementPair) -> FrozenSet[int]:
    """{s in S_{a,b} : a in Ss}"""
    a, b = p
    mask = (S.table[:, a] == S.table[:, b]) & generates_on_left(S, a)
    return frozenset(int(s) for s in np.flatnonzero(mask))


def arena(S: FiniteSemigroup, p: ElementPair, kind: str) -> FrozenSet[int]:
    if kind == REAL:
        return s_ab(S, p)
    if kind == COMPLEX:
        return s_ab_prime(S, p)
    raise ValueError(f"unknown arena {kind!r}")


@dataclass(frozen=True)
class ZigZagWitness:
    pair: ElementPair
    path: Tuple[int, ...]
    directions: Tuple[str, ...]
    arena: str

    @property
    def edges(self) -> int:
        return len(self.directions)

    def format(self, S: FiniteSemigroup) -> str:
        parts = [S.name(self.path[0])]
        for direction, x in zip(self.directions, self.path[1:]):
            parts.append("<=" if direction == UP else ">=")
            parts.append(S.name(x))
        return " ".join(parts)


def alternate(S: FiniteSemigroup, path: List[int]) -> Tuple[Tuple[int, ...], Tuple[str, ...]]:
    """
    Turn a path of pairwise comparable neighbours into a zig-zag: runs of steps in the same direction
    are shortcut by transitivity, so directions strictly alternate.
    """
    leq = r_order_matrix(S)
    points = [path[0]]
    directions: List[str] = []
    for x in path[1:]:
        direction = UP if leq[points[-1], x] else DOWN
        if directions and directions[-1] == direction:
            points[-1] = x
        else:
            points.append(x)
            directions.append(direction)
    return tuple(points), tuple(directions)


def find_zigzag(graph: nx.Graph, a: int, b: int) -> Optional[List[int]]:
    """A path from a to b found by depth-first search, neighbours visited in increasing index order."""
    if a not in graph or b not in graph:
        return None
    predecessors = nx.dfs_predecessors(graph, source=a)
    if b not in predecessors:
        return None
    path = [b]
    while path[-1] != a:
        path.append(predecessors[path[-1]])
    return path[::-1]


def witness_problems(S: FiniteSemigroup, witness: ZigZagWitness) -> List[str]:
    """Checks a witness from scratch; an empty list means it is valid."""
    problems = []
    a, b = witness.pair
    table = S.table
    if a == b:
        problems.append("pair elements coincide")
    if not (table[a, b] == a and table[b, a] == b):
        problems.append(f"{S.name(a)} and {S.name(b)} are not L-related")
    if not witness.path or witness.path[0] != a or witness.path[-1] != b:
        problems.append("path does not run from a to b")
    if len(witness.directions) != len(witness.path) - 1:
        problems.append("one direction is needed per step")
    allowed = arena(S, ElementPair(a, b), witness.arena)
    for x in witness.path:
        if x not in allowed:
            problems.append(f"{S.name(x)} is outside the {witness.arena} arena")
    for x, y, direction in zip(witness.path, witness.path[1:], witness.directions):
        low, high = (x, y) if direction == UP else (y, x)
        if table[high, low] != low:
            problems.append(f"{S.name(low)} <= {S.name(high)} fails")
    if len(witness.directions) > S.order + 2:
        problems.append(f"path has {len(witness.directions)} steps, more than order + 2")
    return problems
