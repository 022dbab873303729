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
from collections import Counter
from typing import List, Optional, Tuple

import numpy as np

from .core import FiniteSemigroup
from .errors import BudgetExceededError, ConstructionError
from .green import green_L_classes

logger = logging.getLogger(__name__)


def element_signatures(S: FiniteSemigroup) -> List[Tuple[int, ...]]:
    """Isomorphism invariants of each element: idempotency, L-class size, R-order degrees, |xS|, |Sx|."""
    table = S.table
    n = S.order
    elements = np.arange(n)
    classes = green_L_classes(S)
    below = (table.T == elements[:, None]).sum(axis=1)  # #{y : yx = x}
    above = (table == elements[None, :]).sum(axis=1)  # #{y : xy = y}
    signatures = []
    for x in range(n):
        signatures.append(
            (
                int(table[x, x] == x),
                len(classes.block_of(x)),
                int(below[x]),
                int(above[x]),
                len(np.unique(table[x])),
                len(np.unique(table[:, x])),
            )
        )
    return signatures


def is_isomorphic(S: FiniteSemigroup, T: FiniteSemigroup, max_order: int = 64) -> Optional[List[int]]:
    """
    Search for an isomorphism S -> T.

    Returns the bijection as a list (``f[x]`` is the image of x) or None when none exists. Candidates
    are restricted to elements with equal signatures, and every new assignment propagates the images
    of all products it determines.
    """
    if S.order != T.order:
        return None
    n = S.order
    if n > max_order:
        raise BudgetExceededError(f"isomorphism search is capped at order {max_order}, got {n}")
    if S.is_commutative() != T.is_commutative():
        return None

    sig_S = element_signatures(S)
    sig_T = element_signatures(T)
    if Counter(sig_S) != Counter(sig_T):
        return None

    candidates = {x: [t for t in range(n) if sig_T[t] == sig_S[x]] for x in range(n)}
    order = sorted(range(n), key=lambda x: (len(candidates[x]), x))

    def extend(f: np.ndarray, used: np.ndarray, x: int, t: int):
        f = f.copy()
        used = used.copy()
        pending = [(x, t)]
        while pending:
            x, t = pending.pop()
            if f[x] >= 0:
                if f[x] != t:
                    return None
                continue
            if used[t] or sig_S[x] != sig_T[t]:
                return None
            f[x] = t
            used[t] = True
            for y in np.flatnonzero(f >= 0):
                pending.append((int(S.table[x, y]), int(T.table[t, f[y]])))
                pending.append((int(S.table[y, x]), int(T.table[f[y], t])))
        return f, used

    def search(f: np.ndarray, used: np.ndarray):
        unassigned = [x for x in order if f[x] < 0]
        if not unassigned:
            return f
        x = unassigned[0]
        for t in candidates[x]:
            if used[t]:
                continue
            extended = extend(f, used, x, t)
            if extended is None:
                continue
            result = search(*extended)
            if result is not None:
                return result
        return None

    f = search(np.full(n, -1, dtype=np.int64), np.zeros(n, dtype=bool))
    if f is None:
        return None
    if not np.array_equal(f[S.table], T.table[np.ix_(f, f)]):
        raise ConstructionError("isomorphism search returned a map that is not multiplicative")
    logger.debug(f"isomorphism found between semigroups of order {n}")
    return [int(t) for t in f]
