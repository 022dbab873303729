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

import pytest
from omegaconf import OmegaConf

from facemonoid.arrangements.monoids import gen_ZL
from facemonoid.membership.deciders import check_cc_prime
from facemonoid.oracle.separation import separating_family
from facemonoid.semigroup.congruence import is_congruence, quotient
from facemonoid.semigroup.core import Partition
from facemonoid.semigroup.green import least_left_zero_quotient
from facemonoid.semigroup.subsemigroups import minimal_generating_set
from facemonoid.witness.family import (
    b_n,
    expected_hasse_path,
    f_n_prime,
    family_index,
    hasse_is_path,
    proper_subsemigroup_sweep,
    quotient_iso_check,
    witness_report,
)
from facemonoid.witness.hasse import hasse_diagram, hasse_dot

B3_NAMES = ("r_2", "r_3", "r_5", "r_6", "C_1", "C_2", "C", "C_5", "C_6")


def test_f_n_prime():
    F = f_n_prime(3)
    assert F.order == 10
    assert not {"O", "r_1", "r_4"} & set(F.names)
    partition, _ = least_left_zero_quotient(F)
    # removing the x-axis rays splits the upper and lower half-planes
    assert len(partition) == 2


def test_merging_the_middle_chambers_is_a_congruence(B3):
    F = f_n_prime(3)
    block = (F.index("C_3"), F.index("C_4"))
    partition = Partition([block] + [[x] for x in F if x not in block])
    assert is_congruence(F, partition)
    assert quotient(F, partition).rename({"{C_3,C_4}": "C"}) == B3


def test_b_n(B3):
    assert B3.names == B3_NAMES
    assert B3.identity is None
    assert family_index(B3) == 3
    with pytest.raises(ValueError):
        b_n(2)


def test_hasse_path(B3):
    ok, path = hasse_is_path(B3)
    assert ok
    assert path == ["C_1", "r_2", "C_2", "r_3", "C", "r_5", "C_5", "r_6", "C_6"]
    assert expected_hasse_path(4)[-3:] == ["C_7", "r_8", "C_8"]


def test_hasse_diagram_of_L(L):
    diagram = hasse_diagram(L)
    assert set(diagram.edges) == {(1, 0), (2, 0)}
    assert diagram.nodes[1]["label"] == "+"


def test_hasse_dot(B3):
    source = hasse_dot(B3, name="B_3")
    assert "digraph B_3 {" in source
    assert "rankdir=BT" in source
    assert source.count("->") == 8


def test_proper_subsemigroup_sweep_B3(B3):
    result = proper_subsemigroup_sweep(B3)
    assert result.mode == "exhaustive"
    assert result.checked > 0
    assert result.all_in_qv_L
    assert result.endpoints_separated
    assert result.failures == []


def test_sweep_falls_back_to_maximal_subsemigroups(B3):
    result = proper_subsemigroup_sweep(B3, max_exhaustive_order=5)
    assert result.mode == "maximal"
    assert result.all_in_qv_L


@pytest.mark.parametrize("n", [3, 4])
def test_quotient_iso_check(n):
    assert quotient_iso_check(n)


def test_rank_of_B3(B3):
    assert len(minimal_generating_set(B3)) == 4


def test_B3_oracle_and_decider_agree(B3):
    verdict = check_cc_prime(B3)
    result = separating_family(B3, gen_ZL())
    assert verdict.witness.pair == result.inseparable


def test_witness_report_B3():
    report = witness_report(3)
    assert (report.order_F, report.order_F_prime, report.order_B) == (13, 10, 9)
    assert report.witness_pair == ["C_1", "C_6"]
    assert report.witness_edges == 8
    assert report.witness_path == ["C_1", "r_2", "C_2", "r_3", "C", "r_5", "C_5", "r_6", "C_6"]
    assert report.hasse_is_path
    assert report.rank == 4
    assert report.sweep_mode == "exhaustive"
    assert report.all_proper_in_qv_L
    assert report.quotient_iso_ok

    loaded = OmegaConf.create(report.to_yaml())
    assert loaded.n == 3
    assert loaded.witness_pair == ["C_1", "C_6"]


@pytest.mark.slow
def test_witness_report_B4():
    report = witness_report(4)
    assert report.witness_pair == ["C_1", "C_8"]
    assert report.witness_edges == 12
    assert report.sweep_mode == "exhaustive"
    assert report.all_proper_in_qv_L
    assert report.endpoints_separated


@pytest.mark.slow
@pytest.mark.parametrize("n", [5, 6])
def test_witness_report_large_n(n):
    report = witness_report(n)
    assert report.witness_pair == ["C_1", f"C_{2 * n}"]
    assert report.witness_edges == 4 * n - 4
    assert report.hasse_is_path
    assert report.rank == 2 * n - 2
    assert report.sweep_mode == "maximal"
    assert report.all_proper_in_qv_L
    assert report.quotient_iso_ok


@pytest.mark.slow
def test_B4_is_not_in_qv_ZL():
    B4 = b_n(4)
    result = separating_family(B4, gen_ZL())
    assert [B4.name(x) for x in result.inseparable] == ["C_1", "C_8"]
