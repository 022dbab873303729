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
from dataclasses import dataclass
from typing import Iterator, Optional

import networkx as nx

from ..semigroup.core import ElementPair, FiniteSemigroup
from ..semigroup.errors import ConstructionError
from ..semigroup.green import comparability_graph, require_lrb
from .zigzag import COMPLEX, REAL, ZigZagWitness, alternate, arena, find_zigzag, witness_problems

logger = logging.getLogger(__name__)

CONDITION_TAGS = {REAL: "cc", COMPLEX: "cc'"}


@dataclass(frozen=True)
class CheckResult:
    condition: str  # "cc" or "cc'"
    witness: Optional[ZigZagWitness] = None

    @property
    def satisfied(self) -> bool:
        return self.witness is None

    def __bool__(self) -> bool:
        return self.satisfied

    def format(self, S: FiniteSemigroup) -> str:
        if self.satisfied:
            return f"SATISFIED {self.condition}"
        a, b = self.witness.pair
        return f"VIOLATION {self.condition} {S.name(a)} {S.name(b)} : {self.witness.format(S)}"


def l_related_pairs(S: FiniteSemigroup) -> Iterator[ElementPair]:
    """Ordered pairs a != b with ab = a and ba = b, lexicographically."""
    table = S.table
    for a in range(S.order):
        for b in range(S.order):
            if a != b and table[a, b] == a and table[b, a] == b:
                yield ElementPair(a, b)


def _check(S: FiniteSemigroup, kind: str) -> CheckResult:
    require_lrb(S)
    tag = CONDITION_TAGS[kind]
    graph = comparability_graph(S)
    for pair in l_related_pairs(S):
        nodes = arena(S, pair, kind)
        view = nx.subgraph_view(graph, filter_node=lambda x: x in nodes)
        if not nx.has_path(view, pair.a, pair.b):
            continue
        path = find_zigzag(view, pair.a, pair.b)
        points, directions = alternate(S, path)
        witness = ZigZagWitness(pair, points, directions, kind)
        problems = witness_problems(S, witness)
        if problems:
            raise ConstructionError(f"zig-zag witness failed its own check: {'; '.join(problems)}")
        logger.debug(f"{tag} fails at ({S.name(pair.a)}, {S.name(pair.b)}) with {witness.edges} steps")
        return CheckResult(tag, witness)
    return CheckResult(tag)


def check_cc(S: FiniteSemigroup) -> CheckResult:
    """
    Condition (CC): whenever a L b and a, b are joined by a zig-zag of the R-order inside
    S_{a,b} = {s : sa = sb}, then a = b. Holds exactly for the members of qv(L).
    """
    return _check(S, REAL)


def check_cc_prime(S: FiniteSemigroup) -> CheckResult:
    """Condition (CC'): the same with zig-zags confined to S'_{a,b} = {s in S_{a,b} : a in Ss}; characterizes qv(ZL)."""
    return _check(S, COMPLEX)


@dataclass(frozen=True)
class MembershipVerdict:
    target: str  # "L" or "ZL"
    check: CheckResult

    @property
    def member(self) -> bool:
        return self.check.satisfied

    @property
    def witness(self) -> Optional[ZigZagWitness]:
        return self.check.witness

    def __bool__(self) -> bool:
        return self.member

    def describe(self) -> str:
        kind = "real" if self.target == "L" else "complex"
        verb = "embeds" if self.member else "does not embed"
        return f"{verb} in a {kind} hyperplane face monoid (qv({self.target}))"


def in_qv_L(S: FiniteSemigroup) -> MembershipVerdict:
    return MembershipVerdict("L", check_cc(S))


def in_qv_ZL(S: FiniteSemigroup) -> MembershipVerdict:
    return MembershipVerdict("ZL", check_cc_prime(S))
