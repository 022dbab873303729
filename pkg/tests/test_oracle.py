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

from facemonoid.arrangements.monoids import left_zero, semilattice_chain
from facemonoid.membership.deciders import check_cc, check_cc_prime
from facemonoid.oracle.homs import HomomorphismMap, enumerate_homs, is_homomorphism, naive_homs
from facemonoid.oracle.separation import embed_in_power, in_qv_oracle, separating_family
from facemonoid.semigroup.core import ElementPair
from facemonoid.semigroup.errors import BudgetExceededError, ConstructionError, NotAMemberError
from facemonoid.semigroup.free import free_lrb


@pytest.mark.parametrize(
    "source, count",
    [
        (semilattice_chain(1), 3),
        (left_zero(2), 5),
    ],
)
def test_hom_counts_into_L(L, source, count):
    assert len(enumerate_homs(source, L)) == count


def test_endomorphisms_of_L(L):
    homs = enumerate_homs(L, L)
    assert len(homs) == 7
    assert HomomorphismMap(L, L, [0, 1, 2]) in homs
    assert HomomorphismMap(L, L, [0, 2, 1]) in homs


def test_homomorphism_map_checks_multiplicativity(L):
    assert not is_homomorphism(L, L, [1, 0, 0])
    with pytest.raises(ConstructionError):
        HomomorphismMap(L, L, [1, 0, 0])


def test_backtracking_matches_naive_enumeration(L, ZL, Z):
    pairs = [(L, L), (L, ZL), (ZL, L), (ZL, ZL), (Z, ZL), (left_zero(3), L), (semilattice_chain(3), ZL)]
    for T, S in pairs:
        assert enumerate_homs(T, S) == naive_homs(T, S)


def test_naive_enumeration_budget(L):
    with pytest.raises(BudgetExceededError):
        naive_homs(free_lrb(3), L)


def test_source_cap(L):
    with pytest.raises(BudgetExceededError):
        enumerate_homs(left_zero(21), L)


def test_separating_family_of_L(L):
    result = separating_family(L, L)
    assert result.separable
    assert [hom.image for hom in result.homs] == [(0, 1, 2)]
    assert result.format(L) == "HOM 1: 0->0 +->+ -->-"


def test_separating_family_of_left_zero_pair(L):
    result = separating_family(left_zero(2), L)
    assert [hom.image for hom in result.homs] == [(1, 2)]


def test_ZL_is_not_in_qv_L(L, ZL):
    result = separating_family(ZL, L)
    assert not result.separable
    assert result.inseparable == ElementPair(1, 2)
    assert result.format(ZL) == "INSEPARABLE + -"
    assert in_qv_oracle(ZL, ZL)


def test_B3_is_not_in_qv_ZL(B3, ZL, Z):
    result = separating_family(B3, ZL)
    assert [B3.name(x) for x in result.inseparable] == ["C_1", "C_6"]
    assert not in_qv_oracle(B3, Z)


def test_embed_in_power(L):
    embedding = embed_in_power(free_lrb(2), L)
    images = embedding.images()
    assert len(set(images)) == 4
    assert all(len(image) == embedding.power for image in images)


def test_embed_trivial_semigroup(L):
    embedding = embed_in_power(semilattice_chain(1), L)
    assert embedding.power == 1


def test_embed_in_power_rejects_non_members(L, ZL):
    with pytest.raises(NotAMemberError) as e:
        embed_in_power(ZL, L)
    assert e.value.pair == (1, 2)


def test_oracle_agrees_with_deciders(L, ZL, corpus, small_random_corpus):
    for entry in corpus + small_random_corpus:
        S = entry.semigroup
        if S.order > 12:
            continue
        assert in_qv_oracle(S, L) == check_cc(S).satisfied, entry.name
        assert in_qv_oracle(S, ZL) == check_cc_prime(S).satisfied, entry.name


def test_membership_in_qv_L_implies_membership_in_qv_ZL(L, ZL, small_random_corpus):
    for entry in small_random_corpus:
        S = entry.semigroup
        if S.order <= 12 and in_qv_oracle(S, L):
            assert in_qv_oracle(S, ZL), entry.name
