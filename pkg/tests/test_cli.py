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

import io

import pytest

from facemonoid.arrangements.monoids import gen_L, gen_ZL
from facemonoid.cli import EXIT_ERROR, EXIT_NEGATIVE, EXIT_OK, run
from facemonoid.semigroup.table_io import read_table, write_table


def invoke(argv, stdin=""):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = run(argv, stdin=io.StringIO(stdin), stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


def generated(spec):
    code, out, _ = invoke(["gen", spec])
    assert code == EXIT_OK
    return out


def test_gen():
    assert generated("ZL") == "elements: 0 + - z\n0 + - z\n+ + + z\n- - - z\nz z z z\n"
    assert read_table(generated("B:3")).order == 9
    assert read_table(generated("F:3")).order == 13
    assert read_table(generated("coord:2")).order == 9
    assert read_table(generated("free:2")).order == 4


@pytest.mark.parametrize("spec", ["Q", "F:x", "F:1", "coord:9", "nope:3"])
def test_gen_rejects_unknown_generators(spec):
    code, out, err = invoke(["gen", spec])
    assert code == EXIT_ERROR
    assert out == ""
    assert err.startswith("error: ")


def test_usage_errors():
    assert invoke([])[0] == EXIT_ERROR
    assert invoke(["check", "xx"])[0] == EXIT_ERROR
    assert invoke(["--help"])[0] == EXIT_OK


def test_check():
    code, out, _ = invoke(["check", "cc"], generated("ZL"))
    assert code == EXIT_NEGATIVE
    assert out == "VIOLATION cc + - : + >= z <= -\n"

    code, out, _ = invoke(["check", "cc"], generated("L"))
    assert code == EXIT_OK
    assert out == "SATISFIED cc\n"

    code, out, _ = invoke(["check", "ccp"], generated("ZL"))
    assert code == EXIT_OK
    assert out == "SATISFIED cc'\n"


def test_member_B3_is_not_in_qv_ZL():
    code, out, _ = invoke(["member", "--target", "ZL"], generated("B:3"))
    assert code == EXIT_NEGATIVE
    verdict, result = out.splitlines()
    assert verdict == "NONMEMBER qv(ZL)"
    assert result.startswith("VIOLATION cc' C_1 C_6 : ")


def test_member_oracle():
    code, out, _ = invoke(["member", "--target", "L", "--oracle"], generated("ZL"))
    assert code == EXIT_NEGATIVE
    assert out == "NONMEMBER qv(L)\nINSEPARABLE + -\n"

    code, out, _ = invoke(["member", "--target", "L", "--oracle"], generated("L"))
    assert code == EXIT_OK
    assert out == "MEMBER qv(L)\nHOM 1: 0->0 +->+ -->-\n"


def test_member_certificate():
    code, out, _ = invoke(["member", "--target", "Z", "--certificate"], generated("ZL"))
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[:2] == ["MEMBER qv(Z)", "SATISFIED cc'"]
    assert all(line.startswith("HOM ") for line in lines[2:])
    assert len(lines) > 2


def test_validate():
    code, out, _ = invoke(["validate"], write_table(gen_L()))
    assert code == EXIT_OK
    assert out == "VALID order=3 identity=0\n"

    code, out, _ = invoke(["validate"], "elements: x y\ny y\nx x\n")
    assert code == EXIT_NEGATIVE
    assert out.splitlines()[0] == "INVALID"
    assert "associativity fails at (x,x,x)" in out


def test_malformed_table_is_an_input_error():
    code, out, err = invoke(["check", "cc"], "elements: a\nq\n")
    assert code == EXIT_ERROR
    assert err == "error: line 2: unknown element 'q'\n"


def test_analyze():
    code, out, _ = invoke(["analyze"], generated("L"))
    assert code == EXIT_OK
    assert "L-classes: {0} {+,-}" in out
    assert "components: 1" in out

    code, out, _ = invoke(["analyze"], generated("R"))
    assert code == EXIT_NEGATIVE
    assert "left regular band: no (xyx=xy fails at x=a y=b)" in out


def test_analyze_dot():
    code, out, _ = invoke(["analyze", "--dot"], generated("L"))
    assert code == EXIT_OK
    assert "digraph hasse {" in out


def test_table_file_argument(tmp_path):
    path = tmp_path / "zl.txt"
    path.write_text(write_table(gen_ZL()))
    code, out, _ = invoke(["check", "cc", str(path)])
    assert code == EXIT_NEGATIVE

    code, _, err = invoke(["check", "cc", str(tmp_path / "missing.txt")])
    assert code == EXIT_ERROR
    assert err.startswith("error: cannot read")


def test_qi_gen():
    code, out, _ = invoke(["qi", "gen", "Q:1"])
    assert code == EXIT_OK
    assert out == "a*b = a & b*a = b & a1*a = a1*b & a1*a = a & a1*b = b => a = b\n"
    assert invoke(["qi", "gen", "Q:2"])[0] == EXIT_ERROR
    assert invoke(["qi", "gen", "R:3"])[0] == EXIT_ERROR


def test_qi_eval(tmp_path):
    path = tmp_path / "cancel.qi"
    path.write_text("x*y = x*z => y = z\n")
    code, out, _ = invoke(["qi", "eval", str(path)], generated("L"))
    assert code == EXIT_NEGATIVE
    assert out == "COUNTEREXAMPLE x=+ y=0 z=+\n"

    path.write_text("x*y = x*z =>\n")
    code, _, err = invoke(["qi", "eval", str(path)], generated("L"))
    assert code == EXIT_ERROR
    assert err.startswith("error: cannot parse quasi-identity")


def test_iso(tmp_path):
    first, second, third = tmp_path / "a.txt", tmp_path / "b.txt", tmp_path / "c.txt"
    first.write_text(generated("L"))
    second.write_text(generated("coord:1"))
    third.write_text(generated("ZL"))
    code, out, _ = invoke(["iso", str(first), str(second)])
    assert code == EXIT_OK
    assert out == "ISOMORPHIC 0->(0) +->(+) -->(-)\n"
    assert invoke(["iso", str(first), str(third)]) == (EXIT_NEGATIVE, "NOT ISOMORPHIC\n", "")


def test_witness_report():
    code, out, _ = invoke(["witness-report", "--n", "3"])
    assert code == EXIT_OK
    assert "witness_edges: 8" in out
    assert "quotient_iso_ok: true" in out

    code, out, _ = invoke(["witness-report", "--n", "3", "--dot"])
    assert "digraph B_3 {" in out


def test_output_is_deterministic():
    assert invoke(["check", "ccp"], generated("B:3")) == invoke(["check", "ccp"], generated("B:3"))
