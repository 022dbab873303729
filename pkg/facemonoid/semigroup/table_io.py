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

from typing import Iterable, Union

from .core import FiniteSemigroup, validate
from .errors import TableFormatError

HEADER = "elements:"


def read_table(source: Union[str, Iterable[str]]) -> FiniteSemigroup:
    """
    Parse the table text format:

        # comment
        elements: 0 + -
        0 + -
        + + +
        - - -

    Row x lists the products x·y in column order. The result is validated, so associativity
    failures surface as InvalidSemigroupError.
    """
    lines = source.splitlines() if isinstance(source, str) else list(source)
    content = [
        (number, line.strip())
        for number, line in enumerate(lines, start=1)
        if line.strip() and not line.strip().startswith("#")
    ]
    if not content:
        raise TableFormatError("empty table, expected an 'elements:' header")

    number, header = content[0]
    if not header.startswith(HEADER):
        raise TableFormatError(f"expected a line starting with {HEADER!r}", number)
    names = header[len(HEADER) :].split()
    if not names:
        raise TableFormatError("no element names in header", number)
    if len(set(names)) != len(names):
        duplicates = sorted({name for name in names if names.count(name) > 1})
        raise TableFormatError(f"duplicate element names {duplicates}", number)
    index = {name: i for i, name in enumerate(names)}

    rows = content[1:]
    if len(rows) != len(names):
        where = rows[len(names)][0] if len(rows) > len(names) else (rows[-1][0] if rows else number)
        raise TableFormatError(f"expected {len(names)} table rows, found {len(rows)}", where)

    table = []
    for number, line in rows:
        entries = line.split()
        if len(entries) != len(names):
            raise TableFormatError(f"expected {len(names)} entries, found {len(entries)}", number)
        row = []
        for entry in entries:
            if entry not in index:
                raise TableFormatError(f"unknown element {entry!r}", number)
            row.append(index[entry])
        table.append(row)

    return validate(table, names)


def write_table(S: FiniteSemigroup) -> str:
    lines = [f"{HEADER} " + " ".join(S.names)]
    for x in range(S.order):
        lines.append(" ".join(S.name(int(y)) for y in S.table[x]))
    return "\n".join(lines) + "\n"
