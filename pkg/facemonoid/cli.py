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

import argparse
import logging
import sys
from typing import List, Optional, TextIO

from omegaconf import DictConfig

from .arrangements.lines import line_arrangement_faces
from .arrangements.monoids import (
    complex_coordinate_monoid,
    coordinate_arrangement_monoid,
    gen_L,
    gen_R,
    gen_Z,
    gen_ZL,
)
from .membership.certificates import separating_homs_cc, separating_homs_cc_prime
from .membership.deciders import check_cc, check_cc_prime
from .oracle.separation import separating_family
from .qi.evaluate import evaluate
from .qi.families import gen_Q, gen_Q_prime
from .qi.grammar import parse_qi
from .qi.model import format_qi
from .semigroup.core import FiniteSemigroup
from .semigroup.errors import FaceMonoidError, InvalidSemigroupError
from .semigroup.free import free_lrb
from .semigroup.green import connected_components, green_L_classes, is_left_regular_band
from .semigroup.isomorphism import is_isomorphic
from .semigroup.table_io import read_table, write_table
from .utils.util import exhaustive_max_order, load_config, setup_logging
from .witness.family import b_n, f_n_prime, witness_report
from .witness.hasse import hasse_dot

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2

TARGETS = {"L": gen_L, "ZL": gen_ZL, "Z": gen_Z}


class UsageError(FaceMonoidError):
    pass


def _int_argument(spec: str, text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"generator {spec!r} needs an integer argument") from None


def generate(spec: str, config: DictConfig) -> FiniteSemigroup:
    """Build a semigroup from a generator name: L, ZL, Z, R, coord:n, zcoord:n, F:n, Fp:n, B:n, free:k."""
    fixed = {"L": gen_L, "ZL": gen_ZL, "Z": gen_Z, "R": gen_R}
    if spec in fixed:
        return fixed[spec]()
    kind, _, argument = spec.partition(":")
    if not argument:
        raise UsageError(f"unknown generator {spec!r}")
    n = _int_argument(spec, argument)
    if kind == "coord":
        return coordinate_arrangement_monoid(n, max_n=config.arrangements.coordinate_max_n)
    if kind == "zcoord":
        return complex_coordinate_monoid(n, max_n=config.arrangements.complex_coordinate_max_n)
    if kind == "F":
        return line_arrangement_faces(n, min_n=config.arrangements.lines_min_n, max_n=config.arrangements.lines_max_n)
    if kind == "Fp":
        return f_n_prime(n)
    if kind == "B":
        return b_n(n)
    if kind == "free":
        return free_lrb(n, max_rank=config.semigroup.free_lrb_max_rank)
    raise UsageError(f"unknown generator {spec!r}")


def _read(path: Optional[str], stdin: TextIO) -> FiniteSemigroup:
    if path is None or path == "-":
        return read_table(stdin.read())
    try:
        with open(path) as f:
            return read_table(f.read())
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="facemonoid", description="Embeddability of finite semigroups in hyperplane face monoids"
    )
    parser.add_argument("--config_path", type=str, default=None, help="YAML overriding configs/facemonoid.yaml")
    parser.add_argument("--log_level", type=str, default=None)
    verbs = parser.add_subparsers(dest="verb", required=True)

    gen = verbs.add_parser("gen", help="print the table of a named semigroup")
    gen.add_argument("spec")

    for name, help_text in (("validate", "check a table for associativity"), ("analyze", "structure of a table")):
        verb = verbs.add_parser(name, help=help_text)
        verb.add_argument("table", nargs="?", default=None)
        if name == "analyze":
            verb.add_argument("--dot", action="store_true", help="append the Hasse diagram in DOT")

    check = verbs.add_parser("check", help="decide condition (CC) or (CC')")
    check.add_argument("condition", choices=["cc", "ccp"])
    check.add_argument("table", nargs="?", default=None)

    member = verbs.add_parser("member", help="decide membership in qv(L), qv(ZL) or qv(Z)")
    member.add_argument("--target", choices=sorted(TARGETS), required=True)
    member.add_argument("--oracle", action="store_true", help="use homomorphism enumeration (exponential)")
    member.add_argument("--certificate", action="store_true", help="print separating homomorphisms")
    member.add_argument("table", nargs="?", default=None)

    report = verbs.add_parser("witness-report", help="check the claims about B_n")
    report.add_argument("--n", type=int, required=True)
    report.add_argument("--dot", action="store_true")
    report.add_argument("--progress", action="store_true")

    qi = verbs.add_parser("qi", help="quasi-identity tools")
    qi_verbs = qi.add_subparsers(dest="qi_verb", required=True)
    qi_gen = qi_verbs.add_parser("gen")
    qi_gen.add_argument("spec", help="Q:<n> or Qp:<n>")
    qi_eval = qi_verbs.add_parser("eval")
    qi_eval.add_argument("qi_file")
    qi_eval.add_argument("table", nargs="?", default=None)

    iso = verbs.add_parser("iso", help="test two tables for isomorphism")
    iso.add_argument("first")
    iso.add_argument("second")
    return parser


def _validate(args, config, stdin, stdout) -> int:
    try:
        S = _read(args.table, stdin)
    except InvalidSemigroupError as e:
        stdout.write("INVALID\n")
        for error in e.errors:
            stdout.write(f"{error}\n")
        return EXIT_NEGATIVE
    identity = S.name(S.identity) if S.identity is not None else "none"
    stdout.write(f"VALID order={S.order} identity={identity}\n")
    return EXIT_OK


def _analyze(args, config, stdin, stdout) -> int:
    S = _read(args.table, stdin)
    identity = S.name(S.identity) if S.identity is not None else "none"
    stdout.write(f"order: {S.order}\nidentity: {identity}\n")
    violation = is_left_regular_band(S)
    if violation is not None:
        stdout.write(f"left regular band: no ({violation.format(S)})\n")
        return EXIT_NEGATIVE
    stdout.write("left regular band: yes\n")
    stdout.write(f"L-classes: {green_L_classes(S).format(S)}\n")
    stdout.write(f"components: {len(connected_components(S, range(S.order)))}\n")
    if args.dot:
        stdout.write(hasse_dot(S))
    return EXIT_OK


def _check(args, config, stdin, stdout) -> int:
    S = _read(args.table, stdin)
    result = check_cc(S) if args.condition == "cc" else check_cc_prime(S)
    stdout.write(result.format(S) + "\n")
    return EXIT_OK if result.satisfied else EXIT_NEGATIVE


def _member(args, config, stdin, stdout) -> int:
    T = _read(args.table, stdin)
    if args.oracle:
        result = separating_family(T, TARGETS[args.target](), cap=config.oracle.source_cap)
        verdict = "MEMBER" if result.separable else "NONMEMBER"
        stdout.write(f"{verdict} qv({args.target})\n{result.format(T)}\n")
        return EXIT_OK if result.separable else EXIT_NEGATIVE

    # qv(Z) = qv(ZL)
    real = args.target == "L"
    result = check_cc(T) if real else check_cc_prime(T)
    verdict = "MEMBER" if result.satisfied else "NONMEMBER"
    stdout.write(f"{verdict} qv({args.target})\n{result.format(T)}\n")
    if result.satisfied and args.certificate:
        homs = separating_homs_cc(T) if real else separating_homs_cc_prime(T)
        for k, hom in enumerate(homs, start=1):
            stdout.write(hom.format(k) + "\n")
    return EXIT_OK if result.satisfied else EXIT_NEGATIVE


def _witness_report(args, config, stdin, stdout) -> int:
    n = args.n
    report = witness_report(
        n,
        max_exhaustive_order=exhaustive_max_order(config),
        cap=config.semigroup.subsemigroup_cap,
        progress=args.progress,
    )
    stdout.write(report.to_yaml())
    if args.dot:
        stdout.write(hasse_dot(b_n(n), name=f"B_{n}"))
    holds = (
        report.witness_pair == ["C_1", f"C_{2 * n}"]
        and report.witness_edges == 4 * n - 4
        and report.hasse_is_path
        and report.all_proper_in_qv_L
        and report.quotient_iso_ok
    )
    return EXIT_OK if holds else EXIT_NEGATIVE


def _qi(args, config, stdin, stdout) -> int:
    if args.qi_verb == "gen":
        kind, _, argument = args.spec.partition(":")
        families = {"Q": gen_Q, "Qp": gen_Q_prime}
        if kind not in families or not argument:
            raise UsageError(f"unknown quasi-identity family {args.spec!r}, expected Q:<n> or Qp:<n>")
        stdout.write(format_qi(families[kind](_int_argument(args.spec, argument))) + "\n")
        return EXIT_OK

    try:
        with open(args.qi_file) as f:
            q = parse_qi(f.read())
    except OSError as e:
        raise UsageError(f"cannot read {args.qi_file}: {e.strerror}") from None
    S = _read(args.table, stdin)
    result = evaluate(S, q, budget=config.qi.budget)
    stdout.write(result.format(S) + "\n")
    return EXIT_OK if result.satisfied else EXIT_NEGATIVE


def _iso(args, config, stdin, stdout) -> int:
    S = _read(args.first, stdin)
    T = _read(args.second, stdin)
    f = is_isomorphic(S, T, max_order=config.semigroup.isomorphism_max_order)
    if f is None:
        stdout.write("NOT ISOMORPHIC\n")
        return EXIT_NEGATIVE
    pairs = " ".join(f"{S.name(x)}->{T.name(y)}" for x, y in enumerate(f))
    stdout.write(f"ISOMORPHIC {pairs}\n")
    return EXIT_OK


HANDLERS = {
    "validate": _validate,
    "analyze": _analyze,
    "check": _check,
    "member": _member,
    "witness-report": _witness_report,
    "qi": _qi,
    "iso": _iso,
}


def run(argv: List[str], stdin: Optional[TextIO] = None, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_ERROR

    try:
        config = load_config(args.config_path)
        setup_logging(args.log_level or config.cli.log_level)
        if args.verb == "gen":
            stdout.write(write_table(generate(args.spec, config)))
            return EXIT_OK
        return HANDLERS[args.verb](args, config, stdin, stdout)
    except (FaceMonoidError, ValueError) as e:
        logger.debug("command failed", exc_info=True)
        stderr.write(f"error: {e}\n")
        return EXIT_ERROR


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
