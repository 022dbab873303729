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
from dataclasses import asdict, dataclass, field
from typing import List, Optional, Tuple

import networkx as nx
import tqdm
from omegaconf import OmegaConf

from ..arrangements.lines import line_arrangement_faces
from ..membership.deciders import check_cc, check_cc_prime
from ..membership.zigzag import s_ab
from ..semigroup.congruence import is_congruence, quotient
from ..semigroup.core import ElementPair, FiniteSemigroup, Partition
from ..semigroup.errors import ConstructionError, NotClosedError
from ..semigroup.green import connected_components
from ..semigroup.isomorphism import is_isomorphic
from ..semigroup.subsemigroups import all_subsemigroups, maximal_subsemigroups, minimal_generating_set, restrict
from .hasse import hasse_diagram

logger = logging.getLogger(__name__)

MERGED_CHAMBER = "C"


def _check_n(n: int):
    if n < 3:
        raise ValueError(f"the witness family starts at n = 3, got {n}")


def f_n_prime(n: int) -> FiniteSemigroup:
    """F_n without the origin and the L-class {r_1, r_{n+1}} of the x-axis rays."""
    _check_n(n)
    F = line_arrangement_faces(n)
    removed = {F.index("O"), F.index("r_1"), F.index(f"r_{n + 1}")}
    try:
        return restrict(F, [x for x in range(F.order) if x not in removed])
    except NotClosedError as e:
        raise ConstructionError(f"F_{n}' is not a subsemigroup: {e}") from e


def _merge(S: FiniteSemigroup, first: str, second: str) -> FiniteSemigroup:
    block = (S.index(first), S.index(second))
    partition = Partition([block] + [[x] for x in range(S.order) if x not in block])
    check = is_congruence(S, partition)
    if not check:
        raise ConstructionError(f"identifying {first} with {second} is not a congruence, witness {check.witness}")
    return quotient(S, partition)


def b_n(n: int) -> FiniteSemigroup:
    """F_n' with C_n and C_{n+1} identified; the merged chamber is named C."""
    F_prime = f_n_prime(n)
    B = _merge(F_prime, f"C_{n}", f"C_{n + 1}")
    merged = "{" + ",".join(sorted([f"C_{n}", f"C_{n + 1}"])) + "}"
    return B.rename({merged: MERGED_CHAMBER})


def family_index(B: FiniteSemigroup) -> int:
    n, remainder = divmod(B.order + 3, 4)
    if remainder or n < 3:
        raise ValueError(f"order {B.order} is not of the form 4n-3 with n >= 3")
    return n


def expected_hasse_path(n: int) -> List[str]:
    """C_1 < r_2 > C_2 < ... < r_n > C < r_{n+2} > C_{n+2} < ... < r_{2n} > C_{2n}"""
    path = ["C_1"]
    for j in range(2, n + 1):
        path += [f"r_{j}", f"C_{j}" if j < n else MERGED_CHAMBER]
    for j in range(n + 2, 2 * n + 1):
        path += [f"r_{j}", f"C_{j}"]
    return path


def hasse_is_path(B: FiniteSemigroup) -> Tuple[bool, List[str]]:
    """Whether the Hasse diagram of B_n is the zig-zag path through all its elements; returns the expected path too."""
    n = family_index(B)
    expected = expected_hasse_path(n)
    diagram = hasse_diagram(B)
    try:
        indices = B.indices(expected)
    except KeyError:
        return False, expected

    wanted = set()
    for k, (x, y) in enumerate(zip(indices, indices[1:])):
        # chambers sit at even positions and lie below their neighbouring rays
        wanted.add((x, y) if k % 2 == 0 else (y, x))
    ok = set(diagram.edges) == wanted and nx.is_weakly_connected(diagram)
    return ok, expected


@dataclass
class SweepResult:
    mode: str  # "exhaustive" or "maximal"
    checked: int = 0
    all_in_qv_L: bool = True
    endpoints_separated: bool = True
    failures: List[List[str]] = field(default_factory=list)


def proper_subsemigroup_sweep(
    B: FiniteSemigroup, max_exhaustive_order: int = 13, cap: int = 20, progress: bool = False
) -> SweepResult:
    """
    Run (CC) on proper subsemigroups of B_n. Up to ``max_exhaustive_order`` every proper subsemigroup is
    checked; above it only the maximal ones, which suffices because a subsemigroup of a member of
    qv(L) is a member. Subsemigroups holding both C_1 and C_2n must keep them in different components
    of their arena.
    """
    n = family_index(B)
    if B.order <= max_exhaustive_order:
        everything = frozenset(range(B.order))
        subsets = [T for T in all_subsemigroups(B, cap=cap) if T != everything]
        result = SweepResult("exhaustive")
    else:
        logger.warning(f"B_{n} has order {B.order}, checking maximal subsemigroups only")
        subsets = maximal_subsemigroups(B)
        result = SweepResult("maximal")

    first, last = B.index("C_1"), B.index(f"C_{2 * n}")
    for subset in tqdm.tqdm(subsets, disable=not progress, desc=f"B_{n} sweep"):
        T = restrict(B, subset)
        result.checked += 1
        if not check_cc(T):
            result.all_in_qv_L = False
            result.failures.append([T.name(x) for x in range(T.order)])
        if first in subset and last in subset:
            a, b = T.index("C_1"), T.index(f"C_{2 * n}")
            components = connected_components(T, s_ab(T, ElementPair(a, b)))
            if components.same_block(a, b):
                result.endpoints_separated = False
    logger.info(f"B_{n}: {result.checked} proper subsemigroups checked ({result.mode}), all in qv(L): {result.all_in_qv_L}")
    return result


def quotient_iso_check(n: int) -> bool:
    """B_n with C_1 and C_2n identified is isomorphic to F_{n-1} without its origin."""
    _check_n(n)
    collapsed = _merge(b_n(n), "C_1", f"C_{2 * n}")
    F = line_arrangement_faces(n - 1)
    punctured = restrict(F, [x for x in range(F.order) if x != F.index("O")])
    return is_isomorphic(collapsed, punctured) is not None


@dataclass
class WitnessReport:
    n: int
    order_F: int
    order_F_prime: int
    order_B: int
    cc_prime: str
    witness_pair: Optional[List[str]]
    witness_path: Optional[List[str]]
    witness_edges: int
    hasse_is_path: bool
    hasse_path: List[str]
    rank: int
    sweep_mode: str
    proper_subsemigroups_checked: int
    all_proper_in_qv_L: bool
    endpoints_separated: bool
    quotient_iso_ok: bool

    def to_yaml(self) -> str:
        return OmegaConf.to_yaml(OmegaConf.create(asdict(self)))


def witness_report(n: int, max_exhaustive_order: int = 13, cap: int = 20, progress: bool = False) -> WitnessReport:
    F = line_arrangement_faces(n)
    F_prime = f_n_prime(n)
    B = b_n(n)

    verdict = check_cc_prime(B)
    if verdict.satisfied:
        pair = path = None
        edges = 0
    else:
        pair = [B.name(x) for x in verdict.witness.pair]
        path = [B.name(x) for x in verdict.witness.path]
        edges = verdict.witness.edges
    is_path, hasse_path = hasse_is_path(B)
    sweep = proper_subsemigroup_sweep(B, max_exhaustive_order=max_exhaustive_order, cap=cap, progress=progress)

    report = WitnessReport(
        n=n,
        order_F=F.order,
        order_F_prime=F_prime.order,
        order_B=B.order,
        cc_prime=verdict.format(B),
        witness_pair=pair,
        witness_path=path,
        witness_edges=edges,
        hasse_is_path=is_path,
        hasse_path=hasse_path,
        rank=len(minimal_generating_set(B)),
        sweep_mode=sweep.mode,
        proper_subsemigroups_checked=sweep.checked,
        all_proper_in_qv_L=sweep.all_in_qv_L,
        endpoints_separated=sweep.endpoints_separated,
        quotient_iso_ok=quotient_iso_check(n),
    )
    for order, expected in ((report.order_F, 4 * n + 1), (report.order_F_prime, 4 * n - 2), (report.order_B, 4 * n - 3)):
        if order != expected:
            raise ConstructionError(f"witness family for n = {n} has an element count {order}, expected {expected}")
    return report
