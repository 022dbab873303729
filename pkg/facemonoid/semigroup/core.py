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
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .errors import InvalidSemigroupError

logger = logging.getLogger(__name__)


class ElementPair(NamedTuple):
    a: int
    b: int


class FiniteSemigroup:
    """
    A finite semigroup given by its multiplication table.

    Elements are the indices 0..order-1; ``table[x, y]`` is the product x·y. Names are only used
    for presentation and parsing. The table is read-only, so instances can be shared freely.

    The constructor performs the cheap structural checks (square table, entries in range, distinct
    names) but not associativity; use :func:`validate` for untrusted input.
    """

    def __init__(self, table, names: Optional[Sequence[str]] = None):
        table = _as_table(table)
        errors = _structural_errors(table, names)
        if errors:
            raise InvalidSemigroupError(errors)
        if names is None:
            names = [str(i) for i in range(table.shape[0])]

        table.setflags(write=False)
        self._table = table
        self._names = tuple(names)
        self._index = {name: i for i, name in enumerate(self._names)}
        self._identity = _find_identity(table)

    @property
    def order(self) -> int:
        return self._table.shape[0]

    @property
    def table(self) -> np.ndarray:
        return self._table

    @property
    def names(self) -> Tuple[str, ...]:
        return self._names

    @property
    def identity(self) -> Optional[int]:
        return self._identity

    def __len__(self) -> int:
        return self.order

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.order))

    def mul(self, x: int, y: int) -> int:
        return int(self._table[x, y])

    def product(self, word: Iterable[int]) -> int:
        elements = iter(word)
        result = next(elements)
        for x in elements:
            result = self._table[result, x]
        return int(result)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"no element named {name!r}") from None

    def indices(self, names: Iterable[str]) -> List[int]:
        return [self.index(name) for name in names]

    def name(self, x: int) -> str:
        return self._names[x]

    def rename(self, mapping: Dict[str, str]) -> "FiniteSemigroup":
        return FiniteSemigroup(self._table, [mapping.get(name, name) for name in self._names])

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self._table, self._table.T))

    def idempotents(self) -> List[int]:
        return [x for x in range(self.order) if self._table[x, x] == x]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteSemigroup):
            return NotImplemented
        return self._names == other._names and np.array_equal(self._table, other._table)

    def __hash__(self) -> int:
        return hash((self._names, self._table.tobytes()))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(order={self.order}, names={list(self._names)})"


class Partition:
    """A set partition of a finite set of element indices, normalized so that blocks are sorted."""

    def __init__(self, blocks: Iterable[Iterable[int]]):
        normalized = []
        seen = set()
        for block in blocks:
            members = tuple(sorted(set(int(x) for x in block)))
            if not members:
                raise ValueError("partition blocks must be non-empty")
            overlap = seen.intersection(members)
            if overlap:
                raise ValueError(f"partition blocks overlap on {sorted(overlap)}")
            seen.update(members)
            normalized.append(members)
        normalized.sort()
        self._blocks = tuple(normalized)
        self._ground = frozenset(seen)
        self._block_of = {x: i for i, block in enumerate(self._blocks) for x in block}

    @classmethod
    def discrete(cls, elements: Iterable[int]) -> "Partition":
        return cls([x] for x in elements)

    @classmethod
    def single(cls, elements: Iterable[int]) -> "Partition":
        return cls([list(elements)])

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "Partition":
        groups: Dict[int, List[int]] = {}
        for x, label in enumerate(labels):
            groups.setdefault(int(label), []).append(x)
        return cls(groups.values())

    @property
    def blocks(self) -> Tuple[Tuple[int, ...], ...]:
        return self._blocks

    def block_index(self, x: int) -> int:
        return self._block_of[x]

    def block_of(self, x: int) -> Tuple[int, ...]:
        return self._blocks[self._block_of[x]]

    def same_block(self, x: int, y: int) -> bool:
        return self._block_of[x] == self._block_of[y]

    def labels(self) -> np.ndarray:
        """Block index of every element; requires the ground set to be 0..n-1."""
        n = len(self._ground)
        if not self.covers(n):
            raise ValueError("labels() needs a partition of 0..n-1")
        return np.array([self._block_of[x] for x in range(n)], dtype=np.int64)

    def covers(self, order: int) -> bool:
        return self._ground == frozenset(range(order))

    def refines(self, other: "Partition") -> bool:
        if self._ground != other._ground:
            return False
        return all(len({other.block_index(x) for x in block}) == 1 for block in self._blocks)

    def non_singleton_blocks(self) -> List[Tuple[int, ...]]:
        return [block for block in self._blocks if len(block) > 1]

    def __len__(self) -> int:
        return len(self._blocks)

    def __iter__(self) -> Iterator[Tuple[int, ...]]:
        return iter(self._blocks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self._blocks == other._blocks

    def __hash__(self) -> int:
        return hash(self._blocks)

    def __repr__(self) -> str:
        return f"Partition({[list(block) for block in self._blocks]})"

    def format(self, S: FiniteSemigroup) -> str:
        return " ".join("{" + ",".join(S.name(x) for x in block) + "}" for block in self._blocks)


def _as_table(table) -> np.ndarray:
    try:
        return np.array(table, dtype=np.int64)
    except (TypeError, ValueError):
        raise InvalidSemigroupError(["table rows must all have the same length and hold integers"]) from None


def _structural_errors(table: np.ndarray, names: Optional[Sequence[str]]) -> List[str]:
    if table.ndim != 2 or table.shape[0] != table.shape[1]:
        return [f"table must be square, got shape {table.shape}"]
    n = table.shape[0]
    if n == 0:
        return ["table must have at least one element"]

    errors = []
    if names is not None:
        if len(names) != n:
            errors.append(f"expected {n} names, got {len(names)}")
        for i, name in enumerate(names):
            if not isinstance(name, str) or name == "":
                errors.append(f"name of element {i} must be a non-empty string")
            elif any(c.isspace() for c in name):
                errors.append(f"name {name!r} contains whitespace")
            elif name.startswith("#"):
                errors.append(f"name {name!r} starts with the comment marker #")
        seen = set()
        for name in names:
            if name in seen:
                errors.append(f"duplicate name {name!r}")
            seen.add(name)

    bad = np.argwhere((table < 0) | (table >= n))
    for x, y in bad:
        errors.append(f"entry at row {x}, column {y} is {table[x, y]}, outside [0, {n})")
    return errors


def _find_identity(table: np.ndarray) -> Optional[int]:
    n = table.shape[0]
    column = np.arange(n)
    for e in range(n):
        if np.array_equal(table[e], column) and np.array_equal(table[:, e], column):
            return e
    return None


def associativity_violations(table: np.ndarray) -> np.ndarray:
    """All triples (x, y, z) with (xy)z != x(yz), in lexicographic order."""
    n = table.shape[0]
    left = table[table]  # left[x, y, z] = table[table[x, y], z]
    right = table[np.arange(n)[:, None, None], table[None, :, :]]  # right[x, y, z] = table[x, table[y, z]]
    return np.argwhere(left != right)


def validate(table, names: Optional[Sequence[str]] = None) -> FiniteSemigroup:
    """
    Validate a raw multiplication table.

    Returns the semigroup (with its identity detected) or raises :class:`InvalidSemigroupError`
    listing every structural problem, or every failing associativity triple.
    """
    raw = _as_table(table)
    errors = _structural_errors(raw, names)
    if errors:
        raise InvalidSemigroupError(errors)

    violations = associativity_violations(raw)
    if len(violations) > 0:
        label = list(names) if names is not None else [str(i) for i in range(raw.shape[0])]
        errors = []
        for x, y, z in violations:
            lhs = raw[raw[x, y], z]
            rhs = raw[x, raw[y, z]]
            errors.append(
                f"associativity fails at ({label[x]},{label[y]},{label[z]}): "
                f"(xy)z={label[lhs]} but x(yz)={label[rhs]}"
            )
        raise InvalidSemigroupError(errors)

    S = FiniteSemigroup(raw, names)
    logger.debug(f"validated semigroup of order {S.order}, identity={S.identity}")
    return S


def direct_product(S: FiniteSemigroup, T: FiniteSemigroup) -> FiniteSemigroup:
    """Componentwise product; element (s, t) has index s * |T| + t and name ``(s,t)``."""
    n, m = S.order, T.order
    table = S.table[:, None, :, None] * m + T.table[None, :, None, :]
    names = [f"({s},{t})" for s in S.names for t in T.names]
    return FiniteSemigroup(table.reshape(n * m, n * m), names)


def direct_power(S: FiniteSemigroup, k: int) -> FiniteSemigroup:
    if k < 1:
        raise ValueError("power must be at least 1")
    result = S
    for _ in range(k - 1):
        result = direct_product(result, S)
    return result


def from_function(elements: Sequence, op, names: Optional[Sequence[str]] = None) -> FiniteSemigroup:
    """Tabulate a binary operation on a finite list of hashable elements."""
    position = {x: i for i, x in enumerate(elements)}
    table = [[position[op(x, y)] for y in elements] for x in elements]
    if names is None:
        names = [str(x) for x in elements]
    return FiniteSemigroup(table, names)
