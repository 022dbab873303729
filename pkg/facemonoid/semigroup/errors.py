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

from typing import List, Optional, Sequence, Tuple


class FaceMonoidError(Exception):
    pass


class InvalidSemigroupError(FaceMonoidError, ValueError):
    def __init__(self, errors: Sequence[str]):
        self.errors = list(errors)
        shown = "; ".join(self.errors[:5])
        more = f" (+{len(self.errors) - 5} more)" if len(self.errors) > 5 else ""
        super().__init__(f"invalid semigroup: {shown}{more}")


class TableFormatError(FaceMonoidError, ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class NotALeftRegularBandError(FaceMonoidError, ValueError):
    def __init__(self, violation):
        self.violation = violation
        super().__init__(f"not a left regular band: {violation}")


class NotACongruenceError(FaceMonoidError, ValueError):
    def __init__(self, quadruple: Tuple[int, int, int, int], names: Optional[List[str]] = None):
        self.quadruple = quadruple
        shown = tuple(names[i] for i in quadruple) if names is not None else quadruple
        super().__init__(f"partition is not a congruence, witness (x, x', y, y') = {shown}")


class NotClosedError(FaceMonoidError, ValueError):
    pass


class BudgetExceededError(FaceMonoidError):
    pass


class ConstructionError(FaceMonoidError):
    pass


class SignVectorError(FaceMonoidError, ValueError):
    pass


class NotAMemberError(FaceMonoidError):
    def __init__(self, message: str, pair: Optional[Tuple[int, int]] = None):
        self.pair = pair
        super().__init__(message)


class QISyntaxError(FaceMonoidError, ValueError):
    def __init__(self, message: str, position: int, line: int, column: int):
        self.position = position
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")
