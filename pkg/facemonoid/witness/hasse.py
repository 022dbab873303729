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

import networkx as nx
from graphviz import Digraph

from ..semigroup.core import FiniteSemigroup
from ..semigroup.green import r_order_matrix, require_lrb


def hasse_diagram(S: FiniteSemigroup) -> nx.DiGraph:
    """Covers of the R-order: an edge x -> y whenever y covers x. Nodes carry their names as ``label``."""
    require_lrb(S)
    leq = r_order_matrix(S)
    order = nx.DiGraph()
    for x in range(S.order):
        order.add_node(x)
    for x in range(S.order):
        for y in range(S.order):
            if x != y and leq[x, y]:
                order.add_edge(x, y)
    diagram = nx.transitive_reduction(order)
    diagram.add_nodes_from((x, {"label": S.name(x)}) for x in range(S.order))
    return diagram


def hasse_dot(S: FiniteSemigroup, name: str = "hasse") -> str:
    diagram = hasse_diagram(S)
    dot = Digraph(name=name, comment="covers of the R-order")
    dot.attr(rankdir="BT")
    for x in sorted(diagram.nodes):
        dot.node(str(x), S.name(x))
    for x, y in sorted(diagram.edges):
        dot.edge(str(x), str(y))
    return dot.source
