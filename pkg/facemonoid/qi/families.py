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

from typing import List

from .model import Equation, QuasiIdentity, eq


def _check_n(n: int):
    if n < 1 or n % 2 == 0:
        raise ValueError(f"zig-zag quasi-identities are generated for odd n >= 1, got {n}")


def _q_premises(n: int) -> List[Equation]:
    a = [f"a{k}" for k in range(1, n + 1)]
    chain = ["a"] + a + ["b"]  # chain[k] is a_k, with a_0 = a and a_{n+1} = b
    premises = [eq(["a", "b"], ["a"]), eq(["b", "a"], ["b"])]
    premises += [eq([ak, "a"], [ak, "b"]) for ak in a]
    for k in range(1, n + 1, 2):
        # a_{k-1} <= a_k >= a_{k+1}
        premises.append(eq([chain[k], chain[k - 1]], [chain[k - 1]]))
        premises.append(eq([chain[k], chain[k + 1]], [chain[k + 1]]))
    return premises


def gen_Q(n: int) -> QuasiIdentity:
    """
    a L b, every a_k in S_{a,b}, and a <= a_1 >= a_2 <= ... <= a_n >= b together imply a = b.
    Variables: a, b, a1..an.
    """
    _check_n(n)
    return QuasiIdentity(tuple(_q_premises(n)), eq(["a"], ["b"]))


def gen_Q_prime(n: int) -> QuasiIdentity:
    """gen_Q(n) with the zig-zag confined to S'_{a,b}: fresh y_k with y_k·a_k = a witness a in S·a_k."""
    _check_n(n)
    premises = _q_premises(n)
    premises += [eq([f"y{k}", f"a{k}"], ["a"]) for k in range(1, n + 1)]
    return QuasiIdentity(tuple(premises), eq(["a"], ["b"]))
