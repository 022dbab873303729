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

from typing import Dict

import numpy as np

from ..membership.deciders import check_cc, check_cc_prime
from ..membership.zigzag import witness_problems
from ..semigroup.congruence import is_congruence, quotient
from ..semigroup.core import ElementPair, FiniteSemigroup, associativity_violations
from ..semigroup.green import (
    green_L_classes,
    is_left_regular_band,
    is_left_zero,
    is_semilattice,
    least_left_zero_quotient,
    lrb_L_related,
    r_order,
)


def is_partial_order(relation, order: int) -> bool:
    pairs = set(relation)
    if any((x, x) not in pairs for x in range(order)):
        return False
    if any(x != y and (y, x) in pairs for x, y in pairs):
        return False
    leq = np.zeros((order, order), dtype=bool)
    for x, y in pairs:
        leq[x, y] = True
    composed = (leq.astype(np.int64) @ leq.astype(np.int64)) > 0
    return bool(np.all(~composed | leq))


def structural_properties(S: FiniteSemigroup) -> Dict[str, bool]:
    """The structural facts every left regular band must satisfy, each checked independently."""
    if is_left_regular_band(S) is not None:
        return {"lrb": False}
    classes = green_L_classes(S)
    components, left_zero_quotient = least_left_zero_quotient(S)
    cc = check_cc(S)
    cc_prime = check_cc_prime(S)
    witnesses = [result.witness for result in (cc, cc_prime) if result.witness is not None]
    return {
        "lrb": True,
        "associative": len(associativity_violations(S.table)) == 0,
        "L_semilattice": bool(is_congruence(S, classes)) and is_semilattice(quotient(S, classes)),
        "L_criterion": all(
            lrb_L_related(S, ElementPair(a, b)) == classes.same_block(a, b)
            for a in range(S.order)
            for b in range(S.order)
        ),
        "components_left_zero": bool(is_congruence(S, components)) and is_left_zero(left_zero_quotient),
        "cc_implies_cc_prime": (not cc.satisfied) or cc_prime.satisfied,
        "witnesses_valid": all(not witness_problems(S, w) for w in witnesses),
        "witness_length": all(w.edges <= S.order + 2 for w in witnesses),
        "r_order_partial": is_partial_order(r_order(S), S.order),
    }
