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
from typing import Iterable, Tuple


@dataclass(frozen=True)
class Term:
    word: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        if not self.word:
            raise ValueError("a term needs at least one variable")

    @classmethod
    def of(cls, *symbols: str) -> "Term":
        return cls(symbols)

    def __str__(self) -> str:
        return "*".join(self.word)


@dataclass(frozen=True)
class Equation:
    lhs: Term
    rhs: Term

    def symbols(self) -> Tuple[str, ...]:
        return self.lhs.word + self.rhs.word

    def __str__(self) -> str:
        return f"{self.lhs} = {self.rhs}"


@dataclass(frozen=True)
class QuasiIdentity:
    """premise_1 & ... & premise_k => conclusion; variables are ordered by first occurrence."""

    premises: Tuple[Equation, ...]
    conclusion: Equation

    def __post_init__(self):
        object.__setattr__(self, "premises", tuple(self.premises))

    @property
    def variables(self) -> Tuple[str, ...]:
        seen = {}
        for equation in self.premises + (self.conclusion,):
            for symbol in equation.symbols():
                seen.setdefault(symbol, None)
        return tuple(seen)

    def __str__(self) -> str:
        return format_qi(self)


def eq(lhs: Iterable[str], rhs: Iterable[str]) -> Equation:
    """Shorthand: eq("ab", "a") for single-letter variables, eq(["a1", "a"], ["a"]) otherwise."""
    return Equation(Term(tuple(lhs)), Term(tuple(rhs)))


def format_qi(q: QuasiIdentity) -> str:
    premises = " & ".join(str(p) for p in q.premises)
    if premises:
        return f"{premises} => {q.conclusion}"
    return f"=> {q.conclusion}"
