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
from fractions import Fraction
from typing import Tuple, Union

from ..semigroup.errors import SignVectorError

REAL = "real"
COMPLEX = "complex"

REAL_ALPHABET = ("0", "+", "-")
COMPLEX_ALPHABET = ("0", "+", "-", "i", "j")
ALPHABETS = {REAL: REAL_ALPHABET, COMPLEX: COMPLEX_ALPHABET}

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class RationalComplex:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))


def sign_s(q: Rational) -> str:
    q = Fraction(q)
    if q > 0:
        return "+"
    if q < 0:
        return "-"
    return "0"


def sign_psi(z: RationalComplex) -> str:
    if z.im > 0:
        return "i"
    if z.im < 0:
        return "j"
    return sign_s(z.re)


def entry_product(u: str, v: str) -> str:
    """Product of single entries; on {0,+,-} this is L, on {0,+,-,i,j} it is Z."""
    if u == "0":
        return v
    if u in ("i", "j"):
        return u
    if v in ("i", "j"):
        return v
    return u


@dataclass(frozen=True)
class SignVector:
    entries: Tuple[str, ...]
    mode: str = REAL

    def __post_init__(self):
        if self.mode not in ALPHABETS:
            raise SignVectorError(f"unknown sign vector mode {self.mode!r}")
        object.__setattr__(self, "entries", tuple(self.entries))
        alphabet = ALPHABETS[self.mode]
        for entry in self.entries:
            if entry not in alphabet:
                raise SignVectorError(f"entry {entry!r} is not in the {self.mode} alphabet {''.join(alphabet)}")

    @classmethod
    def zero(cls, length: int, mode: str = REAL) -> "SignVector":
        return cls(("0",) * length, mode)

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "(" + "".join(self.entries) + ")"

    def __mul__(self, other: "SignVector") -> "SignVector":
        return face_product(self, other)


def face_product(u: SignVector, v: SignVector) -> SignVector:
    if u.mode != v.mode:
        raise SignVectorError(f"cannot multiply a {u.mode} sign vector by a {v.mode} one")
    if len(u) != len(v):
        raise SignVectorError(f"sign vectors of length {len(u)} and {len(v)} do not belong to one arrangement")
    return SignVector(tuple(entry_product(a, b) for a, b in zip(u.entries, v.entries)), u.mode)
