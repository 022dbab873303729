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
from typing import FrozenSet, Iterable, Optional, Tuple

import networkx as nx
import numpy as np

from .congruence import quotient
from .core import ElementPair, FiniteSemigroup, Partition
from .errors import NotALeftRegularBandError


@dataclass(frozen=True)
class LRBViolation:
    identity: str  # "x^2=x" or "xyx=xy"
    witnesses: Tuple[int, ...]

    def format(self, S: FiniteSemigroup) -> str:
        names = ["x", "y"]
        assignment = " ".join(f"{names[i]}={S.name(w)}" for i, w in enumerate(self.witnesses))
        return f"{self.identity} fails at {assignment}"


def is_left_regular_band(S: FiniteSemigroup) -> Optional[LRBViolation]:
    """Returns None when S satisfies x^2=x and xyx=xy, otherwise the first violation found."""
    table = S.table
    diagonal = np.diagonal(table)
    bad = np.flatnonzero(diagonal != np.arange(S.order))
    if len(bad) > 0:
        return LRBViolation("x^2=x", (int(bad[0]),))

    # xyx[x, y] = table[table[x, y], x]
    xyx = table[table, np.arange(S.order)[:, None]]
    bad = np.argwhere(xyx != table)
    if len(bad) > 0:
        x, y = bad[0]
        return LRBViolation("xyx=xy", (int(x), int(y)))
    return None


def require_lrb(S: FiniteSemigroup) -> None:
    violation = is_left_regular_band(S)
    if violation is not None:
        raise NotALeftRegularBandError(violation.format(S))


def principal_left_ideal(S: FiniteSemigroup, a: int) -> FrozenSet[int]:
    """S^1 a, the left ideal generated by a with an identity adjoined."""
    return frozenset(int(x) for x in S.table[:, a]) | {a}


def green_L_classes(S: FiniteSemigroup) -> Partition:
    groups = {}
    for a in range(S.order):
        groups.setdefault(principal_left_ideal(S, a), []).append(a)
    return Partition(groups.values())


def lrb_L_related(S: FiniteSemigroup, p: ElementPair) -> bool:
    """The left regular band criterion for the L relation: ab = a and ba = b."""
    require_lrb(S)
    a, b = p
    return S.table[a, b] == a and S.table[b, a] == b


def r_order_matrix(S: FiniteSemigroup) -> np.ndarray:
    """``leq[x, y]`` is True iff x <= y in the R-order, i.e. yx = x."""
    return S.table.T == np.arange(S.order)[:, None]


def r_order(S: FiniteSemigroup) -> FrozenSet[Tuple[int, int]]:
    require_lrb(S)
    leq = r_order_matrix(S)
    return frozenset((int(x), int(y)) for x, y in np.argwhere(leq))


def comparability_graph(S: FiniteSemigroup, subset: Optional[Iterable[int]] = None) -> nx.Graph:
    """Undirected graph joining distinct comparable elements of ``subset`` (default: all of S)."""
    nodes = sorted(set(subset)) if subset is not None else list(range(S.order))
    leq = r_order_matrix(S)
    graph = nx.Graph()
    graph.add_nodes_from(nodes)
    for i, x in enumerate(nodes):
        for y in nodes[i + 1 :]:
            if leq[x, y] or leq[y, x]:
                graph.add_edge(x, y)
    return graph


def connected_components(S: FiniteSemigroup, subset: Iterable[int]) -> Partition:
    """Classes of the equivalence generated by the R-order, with zig-zags confined to ``subset``."""
    subset = sorted(set(subset))
    if not subset:
        raise ValueError("connected components need a non-empty subset")
    require_lrb(S)
    graph = comparability_graph(S, subset)
    return Partition(nx.connected_components(graph))


def least_left_zero_quotient(S: FiniteSemigroup) -> Tuple[Partition, FiniteSemigroup]:
    components = connected_components(S, range(S.order))
    return components, quotient(S, components)


def is_left_zero(S: FiniteSemigroup) -> bool:
    return bool(np.all(S.table == np.arange(S.order)[:, None]))


def is_semilattice(S: FiniteSemigroup) -> bool:
    return S.is_commutative() and bool(np.all(np.diagonal(S.table) == np.arange(S.order)))
