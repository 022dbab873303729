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

from facemonoid.arrangements.monoids import gen_L, gen_R, gen_ZL, left_zero
from facemonoid.data.corpus import named_corpus, random_corpus
from facemonoid.data.properties import is_partial_order, structural_properties
from facemonoid.membership.deciders import check_cc, check_cc_prime
from facemonoid.oracle.homs import enumerate_homs
from facemonoid.oracle.separation import in_qv_oracle
from facemonoid.semigroup.congruence import kernel
from facemonoid.semigroup.green import is_left_regular_band, least_left_zero_quotient


def test_named_corpus():
    names = [entry.name for entry in named_corpus()]
    assert names[:5] == ["L", "ZL", "Z", "L^2", "L^3"]
    assert "L^3" not in [entry.name for entry in named_corpus(include_large=False)]


def test_random_corpus_is_seeded():
    first, second = random_corpus(5, seed=3), random_corpus(5, seed=3)
    assert [entry.name for entry in first] == ["sub0", "sub0/q", "sub1", "sub1/q", "sub2", "sub2/q", "sub3", "sub3/q", "sub4", "sub4/q"]
    assert [entry.semigroup for entry in first] == [entry.semigroup for entry in second]


def test_random_corpus_members_are_left_regular_bands(small_random_corpus):
    assert all(is_left_regular_band(entry.semigroup) is None for entry in small_random_corpus)


def test_is_partial_order():
    assert is_partial_order({(0, 0), (1, 1), (0, 1)}, 2)
    assert not is_partial_order({(0, 0), (1, 1), (0, 1), (1, 0)}, 2)
    assert not is_partial_order({(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)}, 3)
    assert not is_partial_order({(0, 0)}, 2)


def _assert_properties(entries):
    for entry in entries:
        properties = structural_properties(entry.semigroup)
        failed = sorted(key for key, value in properties.items() if not value)
        assert failed == [], f"{entry.name}: {failed}"


def test_structural_properties_named(corpus):
    _assert_properties(corpus)


def test_structural_properties_random(small_random_corpus):
    _assert_properties(small_random_corpus)


def test_non_lrb_is_flagged():
    assert structural_properties(gen_R()) == {"lrb": False}


@pytest.mark.slow
def test_randomized_property_suite():
    entries = random_corpus(500, seed=1247)
    assert len(entries) == 1000
    _assert_properties(entries)
    L, ZL = gen_L(), gen_ZL()
    for entry in entries:
        S = entry.semigroup
        if S.order <= 12:
            assert in_qv_oracle(S, L) == check_cc(S).satisfied, entry.name
            assert in_qv_oracle(S, ZL) == check_cc_prime(S).satisfied, entry.name


def test_components_refine_kernels_onto_left_zero_semigroups(corpus):
    target = left_zero(2)
    for entry in corpus:
        S = entry.semigroup
        if S.order > 10 or is_left_regular_band(S) is not None:
            continue
        components, _ = least_left_zero_quotient(S)
        for hom in enumerate_homs(S, target):
            assert components.refines(kernel(S, hom.image)), entry.name
