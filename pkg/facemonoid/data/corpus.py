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
from typing import List, Optional

import numpy as np

from ..arrangements.lines import line_arrangement_faces
from ..arrangements.monoids import coordinate_arrangement_monoid, gen_L, gen_Z, gen_ZL
from ..semigroup.congruence import congruence_closure, quotient
from ..semigroup.core import FiniteSemigroup, direct_power
from ..semigroup.free import free_lrb
from ..semigroup.subsemigroups import restrict, subsemigroup_closure
from ..witness.family import b_n, f_n_prime

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    semigroup: FiniteSemigroup


def named_corpus(include_large: bool = True) -> List[CorpusEntry]:
    """The fixed members of the agreement corpus; ``include_large`` adds L^3 (order 27)."""
    L = gen_L()
    entries = [
        CorpusEntry("L", L),
        CorpusEntry("ZL", gen_ZL()),
        CorpusEntry("Z", gen_Z()),
        CorpusEntry("L^2", direct_power(L, 2)),
        CorpusEntry("free:2", free_lrb(2)),
        CorpusEntry("free:3", free_lrb(3)),
        CorpusEntry("F:2", line_arrangement_faces(2)),
        CorpusEntry("F:3", line_arrangement_faces(3)),
        CorpusEntry("Fp:3", f_n_prime(3)),
        CorpusEntry("B:3", b_n(3)),
        CorpusEntry("B:4", b_n(4)),
    ]
    if include_large:
        entries.insert(4, CorpusEntry("L^3", direct_power(L, 3)))
    return entries


def random_subsemigroup(S: FiniteSemigroup, rng: np.random.Generator, max_generators: int = 4) -> FiniteSemigroup:
    k = int(rng.integers(1, max_generators + 1))
    seed = rng.choice(S.order, size=min(k, S.order), replace=False)
    return restrict(S, subsemigroup_closure(S, seed))


def random_quotient(S: FiniteSemigroup, rng: np.random.Generator, max_pairs: int = 2) -> FiniteSemigroup:
    if S.order == 1:
        return S
    pairs = []
    for _ in range(int(rng.integers(1, max_pairs + 1))):
        x, y = rng.choice(S.order, size=2, replace=False)
        pairs.append((int(x), int(y)))
    return quotient(S, congruence_closure(S, pairs))


def random_corpus(count: int = 200, seed: int = 0, ambient: Optional[FiniteSemigroup] = None) -> List[CorpusEntry]:
    """
    ``count`` random subsemigroups of L^3 (or of ``ambient``), each followed by a random quotient of
    it. Seeded, so the same arguments always give the same corpus.
    """
    rng = np.random.default_rng(seed)
    ambient = ambient if ambient is not None else coordinate_arrangement_monoid(3)
    entries = []
    for i in range(count):
        sub = random_subsemigroup(ambient, rng)
        entries.append(CorpusEntry(f"sub{i}", sub))
        entries.append(CorpusEntry(f"sub{i}/q", random_quotient(sub, rng)))
    logger.info(f"generated {len(entries)} random corpus members from seed {seed}")
    return entries
