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

"""
Grammar of quasi-identity files:

    qi        := [equation ("&" equation)*] "=>" equation
    equation  := term "=" term
    term      := variable (["*"] variable)*
    variable  := [a-z][a-z0-9]*

Whitespace (newlines included) is free and ``#`` starts a comment running to the end of the line.
"""

import pyparsing as pp

from ..semigroup.errors import QISyntaxError
from .model import Equation, QuasiIdentity, Term

variable = pp.Regex(r"[a-z][a-z0-9]*").set_name("variable")
term = (variable + pp.ZeroOrMore(pp.Optional(pp.Suppress("*")) + variable)).set_name("term")
term.set_parse_action(lambda tokens: Term(tuple(tokens)))

equals = pp.Suppress(pp.Regex(r"=(?!>)").set_name("'='"))
equation = (term + equals + term).set_name("equation")
equation.set_parse_action(lambda tokens: Equation(tokens[0], tokens[1]))

premises = pp.Optional(equation + pp.ZeroOrMore(pp.Suppress("&") + equation))
implies = pp.Suppress(pp.Literal("=>"))
quasi_identity = pp.Group(premises) + implies + equation
quasi_identity.set_parse_action(lambda tokens: QuasiIdentity(tuple(tokens[0]), tokens[1]))
quasi_identity.ignore(pp.pythonStyleComment)


def parse_qi(text: str) -> QuasiIdentity:
    try:
        result = quasi_identity.parse_string(text, parse_all=True)
    except pp.ParseBaseException as e:
        raise QISyntaxError(f"cannot parse quasi-identity: {e.msg}", e.loc, e.lineno, e.col) from None
    return result[0]
