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

from facemonoid.arrangements.monoids import gen_L, gen_Z, gen_ZL
from facemonoid.data.corpus import named_corpus, random_corpus
from facemonoid.witness.family import b_n


@pytest.fixture
def L():
    return gen_L()


@pytest.fixture
def ZL():
    return gen_ZL()


@pytest.fixture
def Z():
    return gen_Z()


@pytest.fixture(scope="session")
def B3():
    return b_n(3)


@pytest.fixture(scope="session")
def corpus():
    return named_corpus(include_large=False)


@pytest.fixture(scope="session")
def small_random_corpus():
    return random_corpus(20, seed=7)
