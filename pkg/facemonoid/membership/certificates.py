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

"""
Polynomial-time embedding certificates.

For a left regular band satisfying (CC) (resp. (CC')) every pair of distinct points is split by a
homomorphism into L (resp. ZL), built without any search:

* a pair that is not L-related is split by a semilattice character s -> 0 if us = u, + otherwise;
* an L-related pair x, y with cx != cy for some non-identity c is pushed into the proper
  subsemigroup cS along the homomorphism s -> cs, and split there;
* otherwise the arena S_{x,y} (resp. S'_{x,y}) is everything but the identity (resp. everything but
  the identity and the ideal of elements s with x not in Ss). Its connected component of x goes to +,
  the other components to -, the identity to 0 and the ideal to z.
"""

import logging
from typing import List, Optional

from ..arrangements.monoids import gen_L, gen_ZL
from ..oracle.homs import HomomorphismMap
from ..semigroup.core import ElementPair, FiniteSemigroup
from ..semigroup.errors import ConstructionError, NotAMemberError
from ..semigroup.green import connected_components, require_lrb
from ..semigroup.subsemigroups import restrict
from .deciders import CONDITION_TAGS
from .zigzag import COMPLEX, REAL, arena

logger = logging.getLogger(__name__)

# element indices shared by L and ZL
ZERO, PLUS, MINUS, Z = 0, 1, 2, 3


def _character(S: FiniteSemigroup, u: int) -> List[int]:
    return [ZERO if S.table[u, s] == u else PLUS for s in range(S.order)]


def _separating_image(S: FiniteSemigroup, x: int, y: int, kind: str) -> Optional[List[int]]:
    table = S.table
    if not (table[x, y] == x and table[y, x] == y):
        u = y if table[y, x] != y else x
        return _character(S, u)

    for c in range(S.order):
        if c == S.identity or table[c, x] == table[c, y]:
            continue
        ideal = sorted(set(int(s) for s in table[c]))
        if len(ideal) == S.order:
            raise ConstructionError(f"{S.name(c)} acts as a left identity without being the identity")
        position = {s: i for i, s in enumerate(ideal)}
        inner = _separating_image(restrict(S, ideal), position[int(table[c, x])], position[int(table[c, y])], kind)
        if inner is None:
            return None
        return [inner[position[int(table[c, s])]] for s in range(S.order)]

    nodes = arena(S, ElementPair(x, y), kind)
    components = connected_components(S, nodes)
    if components.same_block(x, y):
        return None
    image = []
    for s in range(S.order):
        if s == S.identity:
            image.append(ZERO)
        elif s in nodes:
            image.append(PLUS if components.same_block(s, x) else MINUS)
        elif kind == COMPLEX:
            image.append(Z)
        else:
            raise ConstructionError(f"{S.name(s)} is neither the identity nor in the arena of ({S.name(x)}, {S.name(y)})")
    return image


def _separating_homs(S: FiniteSemigroup, kind: str) -> List[HomomorphismMap]:
    require_lrb(S)
    target = gen_L() if kind == REAL else gen_ZL()
    if S.order == 1:
        return [HomomorphismMap(S, target, [ZERO])]

    family: List[HomomorphismMap] = []
    for x in range(S.order):
        for y in range(x + 1, S.order):
            if any(hom.separates(x, y) for hom in family):
                continue
            image = _separating_image(S, x, y, kind)
            if image is None:
                raise NotAMemberError(
                    f"condition {CONDITION_TAGS[kind]} fails: {S.name(x)} and {S.name(y)} cannot be separated",
                    (x, y),
                )
            hom = HomomorphismMap(S, target, image)
            if not hom.separates(x, y):
                raise ConstructionError(f"certificate for ({S.name(x)}, {S.name(y)}) does not separate them")
            family.append(hom)
    logger.debug(f"{len(family)} homomorphisms certify membership of a semigroup of order {S.order}")
    return family


def separating_homs_cc(S: FiniteSemigroup) -> List[HomomorphismMap]:
    """Homomorphisms S -> L separating all points; raises NotAMemberError when S fails (CC)."""
    return _separating_homs(S, REAL)


def separating_homs_cc_prime(S: FiniteSemigroup) -> List[HomomorphismMap]:
    """Homomorphisms S -> ZL separating all points; raises NotAMemberError when S fails (CC')."""
    return _separating_homs(S, COMPLEX)
