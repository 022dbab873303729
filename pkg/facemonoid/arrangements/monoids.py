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
from itertools import product
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..semigroup.core import FiniteSemigroup
from ..semigroup.errors import ConstructionError
from .signs import COMPLEX, COMPLEX_ALPHABET, REAL, REAL_ALPHABET, SignVector

logger = logging.getLogger(__name__)


class FaceMonoid(FiniteSemigroup):
    """A semigroup of faces, each element carrying its sign vector; the product is the face product."""

    def __init__(self, table, names: Sequence[str], sign_vectors: Sequence[SignVector]):
        super().__init__(table, names)
        if len(sign_vectors) != self.order:
            raise ConstructionError(f"expected {self.order} sign vectors, got {len(sign_vectors)}")
        self._sign_vectors = tuple(sign_vectors)

    @classmethod
    def from_sign_vectors(
        cls, vectors: Sequence[SignVector], names: Optional[Sequence[str]] = None
    ) -> "FaceMonoid":
        position = {v: i for i, v in enumerate(vectors)}
        if len(position) != len(vectors):
            raise ConstructionError("sign vectors of distinct faces must be distinct")
        table = np.empty((len(vectors), len(vectors)), dtype=np.int64)
        for x, u in enumerate(vectors):
            for y, v in enumerate(vectors):
                w = u * v
                if w not in position:
                    raise ConstructionError(f"face product {u}·{v} = {w} is not a face of the arrangement")
                table[x, y] = position[w]
        if names is None:
            names = [str(v) for v in vectors]
        return cls(table, names, vectors)

    @property
    def sign_vectors(self) -> Tuple[SignVector, ...]:
        return self._sign_vectors

    def sign_vector(self, x: int) -> SignVector:
        return self._sign_vectors[x]


def _single_letter_monoid(alphabet: Sequence[str], mode: str) -> FaceMonoid:
    vectors = [SignVector((letter,), mode) for letter in alphabet]
    return FaceMonoid.from_sign_vectors(vectors, list(alphabet))


def gen_L() -> FaceMonoid:
    """{0,+,-} with identity 0 and left zeroes + and -: the face monoid of a single real hyperplane."""
    return _single_letter_monoid(REAL_ALPHABET, REAL)


def gen_Z() -> FaceMonoid:
    """{0,+,-,i,j}: L acting on the left zero pair {i,j}, which it fixes from both sides."""
    return _single_letter_monoid(COMPLEX_ALPHABET, COMPLEX)


def gen_ZL() -> FiniteSemigroup:
    """L with a two-sided zero z adjoined."""
    names = ["0", "+", "-", "z"]
    L = gen_L().table
    table = np.full((4, 4), 3, dtype=np.int64)
    table[:3, :3] = L
    return FiniteSemigroup(table, names)


def gen_R() -> FiniteSemigroup:
    """The dual of L: identity 0 and right zeroes a, b. Not a left regular band."""
    return FiniteSemigroup(gen_L().table.T, ["0", "a", "b"])


def semilattice_chain(k: int) -> FiniteSemigroup:
    """The chain 0 > 1 > ... > k-1 under minimum (element 0 is the identity)."""
    if k < 1:
        raise ValueError("a chain needs at least one element")
    elements = np.arange(k)
    return FiniteSemigroup(np.maximum(elements[:, None], elements[None, :]), [f"e{i}" for i in range(k)])


def left_zero(k: int) -> FiniteSemigroup:
    if k < 1:
        raise ValueError("a left zero semigroup needs at least one element")
    return FiniteSemigroup(np.repeat(np.arange(k)[:, None], k, axis=1), [f"l{i}" for i in range(k)])


def cyclic_group(k: int) -> FiniteSemigroup:
    if k < 1:
        raise ValueError("a cyclic group needs at least one element")
    elements = np.arange(k)
    return FiniteSemigroup((elements[:, None] + elements[None, :]) % k, [f"g{i}" for i in range(k)])


def _coordinate_monoid(alphabet: Sequence[str], mode: str, n: int) -> FaceMonoid:
    vectors = [SignVector(entries, mode) for entries in product(alphabet, repeat=n)]
    monoid = FaceMonoid.from_sign_vectors(vectors)
    logger.debug(f"built {mode} coordinate face monoid of rank {n}, order {monoid.order}")
    return monoid


def coordinate_arrangement_monoid(n: int, max_n: int = 4) -> FaceMonoid:
    """L^n, the face monoid of the n coordinate hyperplanes, with sign-vector names."""
    if not 1 <= n <= max_n:
        raise ValueError(f"coordinate arrangement needs 1 <= n <= {max_n}, got {n}")
    return _coordinate_monoid(REAL_ALPHABET, REAL, n)


def complex_coordinate_monoid(n: int, max_n: int = 3) -> FaceMonoid:
    """Z^n, the face monoid of the n complex coordinate hyperplanes."""
    if not 1 <= n <= max_n:
        raise ValueError(f"complex coordinate arrangement needs 1 <= n <= {max_n}, got {n}")
    return _coordinate_monoid(COMPLEX_ALPHABET, COMPLEX, n)


def z_to_zl_separation() -> List[List[int]]:
    """
    Two homomorphisms Z -> ZL which together separate the points of Z: the first collapses the ideal
    {i,j} to z, the second sends 0,+,- to 0 and i,j to +,-. Each is checked to be multiplicative.
    """
    Z, ZL = gen_Z(), gen_ZL()
    collapse = ZL.indices(["0", "+", "-", "z", "z"])
    project = ZL.indices(["0", "0", "0", "+", "-"])
    for image in (collapse, project):
        f = np.array(image)
        if not np.array_equal(f[Z.table], ZL.table[np.ix_(f, f)]):
            raise ConstructionError(f"map {image} from Z to ZL is not a homomorphism")
    return [collapse, project]
