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
from typing import List

from ..semigroup.errors import ConstructionError
from .monoids import FaceMonoid
from .signs import REAL, SignVector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LineArrangement2D:
    """
    n distinct lines through the origin of the plane, line k at angle (k-1)·pi/n.

    Angles are integers in units of pi/(2n), so a full turn is 4n units: line k sits at 2(k-1), ray r_j
    at 2(j-1) and chamber C_j halfway between r_j and r_{j+1}, at 2(j-1)+1.
    """

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"a line arrangement needs at least 2 lines, got {self.n}")

    @property
    def full_turn(self) -> int:
        return 4 * self.n

    def line_angle(self, k: int) -> int:
        return 2 * (k - 1)

    def ray_angle(self, j: int) -> int:
        return 2 * (j - 1)

    def chamber_angle(self, j: int) -> int:
        return 2 * (j - 1) + 1

    def side(self, theta: int, k: int) -> str:
        """Sign of sin(theta - angle of line k)."""
        d = (theta - self.line_angle(k)) % self.full_turn
        half = self.full_turn // 2
        if d == 0 or d == half:
            return "0"
        return "+" if d < half else "-"

    def sign_vector(self, theta: int) -> SignVector:
        return SignVector(tuple(self.side(theta, k) for k in range(1, self.n + 1)), REAL)

    def faces(self):
        """(name, sign vector) for O, the rays r_1..r_2n and the chambers C_1..C_2n, in that order."""
        faces = [("O", SignVector.zero(self.n))]
        faces += [(f"r_{j}", self.sign_vector(self.ray_angle(j))) for j in range(1, 2 * self.n + 1)]
        faces += [(f"C_{j}", self.sign_vector(self.chamber_angle(j))) for j in range(1, 2 * self.n + 1)]
        return faces


def line_arrangement_faces(n: int, min_n: int = 2, max_n: int = 8) -> FaceMonoid:
    """F_n: the face monoid of n lines through the origin, of order 4n+1."""
    if not min_n <= n <= max_n:
        raise ValueError(f"line arrangement needs {min_n} <= n <= {max_n}, got {n}")
    arrangement = LineArrangement2D(n)
    faces = arrangement.faces()
    names: List[str] = [name for name, _ in faces]
    vectors = [vector for _, vector in faces]

    F = FaceMonoid.from_sign_vectors(vectors, names)
    if F.order != 4 * n + 1 or F.identity != 0:
        raise ConstructionError(f"F_{n} came out with order {F.order} and identity {F.identity}")
    logger.debug(f"built F_{n} with {F.order} faces")
    return F
