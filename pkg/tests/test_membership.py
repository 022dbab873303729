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

from facemonoid.arrangements.monoids import gen_R, semilattice_chain
from facemonoid.membership.certificates import separating_homs_cc, separating_homs_cc_prime
from facemonoid.membership.deciders import check_cc, check_cc_prime, in_qv_L, in_qv_ZL
from facemonoid.membership.zigzag import DOWN, UP, ZigZagWitness, s_ab, s_ab_prime, witness_problems
from facemonoid.semigroup.core import ElementPair, direct_power
from facemonoid.semigroup.errors import NotALeftRegularBandError, NotAMemberError
from facemonoid.semigroup.free import free_lrb

B3_PATH = "C_1 <= r_2 >= C_2 <= r_3 >= C <= r_5 >= C_5 <= r_6 >= C_6"


def test_s_ab(ZL, B3):
    assert s_ab(ZL, ElementPair(1, 2)) == {1, 2, 3}
    assert s_ab(ZL, ElementPair(0, 0)) == set(range(4))
    pair = ElementPair(B3.index("C_1"), B3.index("C_6"))
    assert s_ab(B3, pair) == set(range(B3.order))


def test_s_ab_prime(ZL, B3):
    assert s_ab_prime(ZL, ElementPair(1, 2)) == {1, 2}
    pair = ElementPair(B3.index("C_1"), B3.index("C_6"))
    assert s_ab_prime(B3, pair) == set(range(B3.order))


def test_check_cc_on_L(L):
    result = check_cc(L)
    assert result.satisfied
    assert result.format(L) == "SATISFIED cc"


def test_check_cc_on_ZL(ZL):
    result = check_cc(ZL)
    assert not result.satisfied
    assert result.witness.pair == ElementPair(1, 2)
    assert result.witness.directions == (DOWN, UP)
    assert result.format(ZL) == "VIOLATION cc + - : + >= z <= -"


def test_check_cc_prime_on_ZL_and_Z(ZL, Z):
    assert check_cc_prime(ZL).satisfied
    assert check_cc_prime(Z).satisfied


def test_check_cc_on_free_lrb():
    assert check_cc(free_lrb(3)).satisfied


def test_check_cc_prime_on_B3(B3):
    result = check_cc_prime(B3)
    assert not result.satisfied
    assert [B3.name(x) for x in result.witness.pair] == ["C_1", "C_6"]
    assert result.witness.edges == 8
    assert result.witness.format(B3) == B3_PATH
    assert result.format(B3) == f"VIOLATION cc' C_1 C_6 : {B3_PATH}"


def test_trivial_semigroup_satisfies_both():
    T = semilattice_chain(1)
    assert check_cc(T).satisfied
    assert check_cc_prime(T).satisfied


def test_deciders_need_a_left_regular_band():
    with pytest.raises(NotALeftRegularBandError):
        check_cc(gen_R())


def test_verdicts(L, ZL):
    assert in_qv_L(L).member
    verdict = in_qv_L(ZL)
    assert not verdict.member
    assert verdict.witness is not None
    assert "does not embed" in verdict.describe()
    assert in_qv_ZL(ZL).member


def test_witness_problems_rejects_a_broken_path(ZL):
    good = check_cc(ZL).witness
    assert witness_problems(ZL, good) == []
    # 0 lies outside S_{+,-} and the step + <= 0 is read with the wrong direction
    bad = ZigZagWitness(good.pair, (1, 0, 2), (DOWN, UP), good.arena)
    assert witness_problems(ZL, bad)


def test_witnesses_are_deterministic(B3):
    assert check_cc_prime(B3) == check_cc_prime(B3)


def test_cc_implies_cc_prime(corpus):
    for entry in corpus:
        if check_cc(entry.semigroup).satisfied:
            assert check_cc_prime(entry.semigroup).satisfied, entry.name


def _assert_separates(S, homs):
    for x in S:
        for y in S:
            if x != y:
                assert any(hom.separates(x, y) for hom in homs)


def test_certificates_for_members(L, ZL, Z):
    _assert_separates(L, separating_homs_cc(L))
    L2 = direct_power(L, 2)
    _assert_separates(L2, separating_homs_cc(L2))
    _assert_separates(free_lrb(3), separating_homs_cc(free_lrb(3)))
    _assert_separates(ZL, separating_homs_cc_prime(ZL))
    _assert_separates(Z, separating_homs_cc_prime(Z))


def test_certificate_targets(L, ZL):
    assert all(hom.target.order == 3 for hom in separating_homs_cc(L))
    assert all(hom.target.order == 4 for hom in separating_homs_cc_prime(ZL))


def test_certificate_of_trivial_semigroup():
    homs = separating_homs_cc(semilattice_chain(1))
    assert len(homs) == 1
    assert homs[0].image == (0,)


def test_certificates_fail_on_non_members(ZL, B3):
    with pytest.raises(NotAMemberError) as e:
        separating_homs_cc(ZL)
    assert e.value.pair == (1, 2)
    with pytest.raises(NotAMemberError):
        separating_homs_cc_prime(B3)


def test_certificates_agree_with_deciders(corpus):
    for entry in corpus:
        S = entry.semigroup
        for check, certify in ((check_cc, separating_homs_cc), (check_cc_prime, separating_homs_cc_prime)):
            if check(S).satisfied:
                _assert_separates(S, certify(S))
            else:
                with pytest.raises(NotAMemberError):
                    certify(S)
