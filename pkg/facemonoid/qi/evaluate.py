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
from typing import Dict, List, Optional, Tuple

from ..semigroup.core import FiniteSemigroup
from ..semigroup.errors import BudgetExceededError
from .model import Equation, QuasiIdentity

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EvaluationResult:
    variables: Tuple[str, ...]
    counterexample: Optional[Tuple[int, ...]] = None
    nodes: int = 0

    @property
    def satisfied(self) -> bool:
        return self.counterexample is None

    def __bool__(self) -> bool:
        return self.satisfied

    def assignment(self) -> Dict[str, int]:
        if self.counterexample is None:
            return {}
        return dict(zip(self.variables, self.counterexample))

    def format(self, S: FiniteSemigroup) -> str:
        if self.satisfied:
            return "SATISFIED"
        values = " ".join(f"{v}={S.name(x)}" for v, x in zip(self.variables, self.counterexample))
        return f"COUNTEREXAMPLE {values}"


class _Compiled:
    def __init__(self, equation: Equation, position: Dict[str, int]):
        self.lhs = [position[v] for v in equation.lhs.word]
        self.rhs = [position[v] for v in equation.rhs.word]
        self.last = max(self.lhs + self.rhs)

    def holds(self, table: List[List[int]], values: List[int]) -> bool:
        return _value(table, values, self.lhs) == _value(table, values, self.rhs)


def _value(table: List[List[int]], values: List[int], word: List[int]) -> int:
    result = values[word[0]]
    for k in word[1:]:
        result = table[result][values[k]]
    return result


def evaluate(S: FiniteSemigroup, q: QuasiIdentity, budget: int = 10**8, reverse: bool = False) -> EvaluationResult:
    """
    Look for an assignment of elements of S to the variables of q making every premise true and the
    conclusion false. Variables are bound in their order of first occurrence; each equation is checked
    as soon as its last variable is bound, and a branch is dropped once a premise fails or the
    conclusion holds. The first counterexample in lexicographic order is returned (the last one with
    ``reverse``). ``budget`` bounds the number of bindings tried.
    """
    variables = q.variables
    position = {v: k for k, v in enumerate(variables)}
    premises = [_Compiled(p, position) for p in q.premises]
    conclusion = _Compiled(q.conclusion, position)

    checks: List[List[_Compiled]] = [[] for _ in variables]
    for premise in premises:
        checks[premise.last].append(premise)

    table = S.table.tolist()
    elements = list(range(S.order))
    if reverse:
        elements.reverse()
    values = [-1] * len(variables)
    nodes = 0

    def search(depth: int) -> bool:
        nonlocal nodes
        if depth == len(variables):
            return True
        for x in elements:
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError(f"quasi-identity evaluation exceeded {budget} search nodes")
            values[depth] = x
            if not all(p.holds(table, values) for p in checks[depth]):
                continue
            if conclusion.last == depth and conclusion.holds(table, values):
                continue
            if search(depth + 1):
                return True
        values[depth] = -1
        return False

    found = search(0)
    logger.debug(f"evaluated {len(variables)}-variable quasi-identity on order {S.order} in {nodes} nodes")
    return EvaluationResult(variables, tuple(values) if found else None, nodes)
