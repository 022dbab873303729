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

from itertools import permutations
from string import ascii_lowercase

from .core import FiniteSemigroup, from_function


def _lrb_word_product(u: str, v: str) -> str:
    return u + "".join(letter for letter in v if letter not in u)


def free_lrb(k: int, max_rank: int = 5) -> FiniteSemigroup:
    """
    The free left regular band on k generators: repetition-free words, multiplied by appending the
    letters of the right factor that the left factor does not already contain.
    Words are ordered by length, then lexicographically.
    """
    if not 1 <= k <= max_rank:
        raise ValueError(f"free left regular band needs 1 <= k <= {max_rank}, got {k}")
    letters = ascii_lowercase[:k]
    words = ["".join(p) for length in range(1, k + 1) for p in permutations(letters, length)]
    return from_function(words, _lrb_word_product)
