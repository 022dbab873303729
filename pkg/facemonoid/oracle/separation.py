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
from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..semigroup.core import ElementPair, FiniteSemigroup
from ..semigroup.errors import ConstructionError, NotAMemberError
from .homs import HomomorphismMap, enumerate_homs

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SeparationResult:
    """Either a family of homomorphisms separating all points, or the least pair no homomorphism separates."""

    homs: Tuple[HomomorphismMap, ...] = field(default_factory=tuple)
    inseparable: Optional[ElementPair] = None

    @property
    def separable(self) -> bool:
        return self.inseparable is None

    def __bool__(self) -> bool:
        return self.separable

    def format(self, T: FiniteSemigroup) -> str:
        if not self.separable:
            a, b = self.inseparable
            return f"INSEPARABLE {T.name(a)} {T.name(b)}"
        return "\n".join(hom.format(k) for k, hom in enumerate(self.homs, start=1))


def greedy_separating_subfamily(
    T: FiniteSemigroup, homs: Sequence[HomomorphismMap]
) -> Tuple[List[HomomorphismMap], List[ElementPair]]:
    """
    Greedy set cover of the pairs x < y by the homomorphisms separating them, ties going to the
    earlier homomorphism. Returns the chosen family and the pairs nothing separates.
    """
    pairs = list(combinations(range(T.order), 2))
    if not homs:
        return [], [ElementPair(*p) for p in pairs]
    images = np.array([hom.image for hom in homs], dtype=np.int64)
    left = np.array([p[0] for p in pairs], dtype=np.int64)
    right = np.array([p[1] for p in pairs], dtype=np.int64)
    splits = images[:, left] != images[:, right]  # splits[h, p]

    uncovered = np.ones(len(pairs), dtype=bool)
    coverable = splits.any(axis=0)
    chosen: List[HomomorphismMap] = []
    while np.any(uncovered & coverable):
        gains = (splits & uncovered).sum(axis=1)
        best = int(np.argmax(gains))
        chosen.append(homs[best])
        uncovered &= ~splits[best]
    missing = [ElementPair(*pairs[i]) for i in np.flatnonzero(~coverable)]
    return chosen, missing


def separating_family(T: FiniteSemigroup, S: FiniteSemigroup, cap: int = 20) -> SeparationResult:
    homs = enumerate_homs(T, S, cap=cap)
    chosen, missing = greedy_separating_subfamily(T, homs)
    if missing:
        logger.debug(f"{len(missing)} pairs are not separated by any of {len(homs)} homomorphisms")
        return SeparationResult(inseparable=missing[0])
    logger.debug(f"{len(chosen)} of {len(homs)} homomorphisms separate all points")
    return SeparationResult(homs=tuple(chosen))


def in_qv_oracle(T: FiniteSemigroup, S: FiniteSemigroup, cap: int = 20) -> bool:
    return separating_family(T, S, cap=cap).separable


@dataclass(frozen=True)
class PowerEmbedding:
    """The product map T -> S^m of a separating family; element x goes to the tuple of its images."""

    homs: Tuple[HomomorphismMap, ...]

    @property
    def power(self) -> int:
        return len(self.homs)

    def __call__(self, x: int) -> Tuple[int, ...]:
        return tuple(hom(x) for hom in self.homs)

    def images(self) -> List[Tuple[int, ...]]:
        return [self(x) for x in range(self.homs[0].source_order)]


def embed_in_power(T: FiniteSemigroup, S: FiniteSemigroup, cap: int = 20) -> PowerEmbedding:
    result = separating_family(T, S, cap=cap)
    if not result.separable:
        a, b = result.inseparable
        raise NotAMemberError(
            f"no homomorphism to the target separates {T.name(a)} and {T.name(b)}", (a, b)
        )
    homs = result.homs
    if not homs:
        # order 1: any single homomorphism is an embedding
        homs = tuple(enumerate_homs(T, S, cap=cap)[:1])
        if not homs:
            raise NotAMemberError("the target has no idempotent to receive the trivial semigroup")
    embedding = PowerEmbedding(homs)
    images = embedding.images()
    if len(set(images)) != T.order:
        raise ConstructionError("product of the separating family is not injective")
    for x in range(T.order):
        for y in range(T.order):
            expected = embedding(T.mul(x, y))
            actual = tuple(hom.target.mul(s, t) for hom, s, t in zip(homs, images[x], images[y]))
            if expected != actual:
                raise ConstructionError(f"product map is not multiplicative at ({T.name(x)}, {T.name(y)})")
    return embedding
