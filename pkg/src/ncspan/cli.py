"""Command-line front end.

Every subcommand prints a JSON report (``"schema": 1``) and exits with 0 on
any verdict, 1 on a usage error and 2 on an internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field

from . import __version__
from .classifier import DEFAULT_BUDGET, InconsistencyError, classify
from .corpus import run_corpus
from .freealg import NcPolynomial, commutator_witness, cyc_equiv
from .generic import GenericContext, eval_generic, eval_numeric, trace_witness, trace_zero
from .matrices import (
    CanonicalName,
    Involution,
    canonical_names,
    canonical_subspace,
    check_lie_closure,
    classify_subspace,
    congruence_closure,
    lie_ideal_closure,
    parse_matrix,
    skew_ideal_closure,
)
from .parser import ParseError, format_poly, parse_poly

SCHEMA = 1
SUBCOMMANDS = ("classify", "cyc-equiv", "witness", "trace", "eval", "closure", "subspace", "corpus")


class UsageError(Exception):
    pass


@dataclass
class Command:
    tag: str
    polys: list = field(default_factory=list)
    d: int = 2
    inv: str = "none"
    seed: int = 0
    budget: int = DEFAULT_BUDGET
    output: str | None = None
    matrices: list = field(default_factory=list)
    kind: str = "skew"
    name: str | None = None

    def validate(self) -> None:
        if self.tag not in SUBCOMMANDS:
            raise UsageError(f"unknown subcommand {self.tag!r}")
        if self.d < 1:
            raise UsageError("--d must be >= 1")
        if self.budget < 1:
            raise UsageError("--budget must be >= 1")
        try:
            Involution(self.inv).validate(self.d)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        for f in self.polys:
            if self.inv == "none" and self.tag in ("classify", "trace", "eval") and not f.is_star_free():
                raise UsageError("starred variables need --inv transpose, symplectic or unitary")
            if self.inv != "unitary" and f.has_gaussian_coefficients() and self.tag in ("classify", "trace", "eval"):
                raise UsageError("the Gaussian unit i is only allowed with --inv unitary")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--d", type=int, default=2, help="matrix size (default 2)")
    common.add_argument("--inv", choices=("none", "transpose", "symplectic", "unitary"), default="none")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="maximum number of value samples")
    common.add_argument("--json", dest="output", metavar="PATH", help="also write the report to PATH")

    p = _Parser(prog="ncspan", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"ncspan {__version__}")
    sub = p.add_subparsers(dest="tag", required=True, parser_class=_Parser)

    s = sub.add_parser("classify", parents=[common], help="classify the span of the values of a polynomial")
    s.add_argument("poly")
    s = sub.add_parser("cyc-equiv", parents=[common], help="decide cyclic equivalence of two polynomials")
    s.add_argument("f")
    s.add_argument("g")
    s = sub.add_parser("witness", parents=[common], help="write a polynomial as a sum of commutators")
    s.add_argument("poly")
    s = sub.add_parser("trace", parents=[common], help="symbolic trace-zero certificate")
    s.add_argument("poly")
    s = sub.add_parser("eval", parents=[common], help="evaluate on generic or given matrices")
    s.add_argument("poly")
    s.add_argument("--at", action="append", default=[], metavar="MATRIX", help="numeric matrix for x1, x2, ... in order")
    s = sub.add_parser("closure", parents=[common], help="closure of a set of matrices")
    s.add_argument("--kind", choices=("skew", "lie", "congruence"), default="skew")
    s.add_argument("matrices", nargs="*", metavar="MATRIX")
    s = sub.add_parser("subspace", parents=[common], help="print canonical subspace bases")
    s.add_argument("name", nargs="?", choices=[n.value for n in CanonicalName if n is not CanonicalName.OTHER])
    sub.add_parser("corpus", parents=[common], help="run the bundled regression fixtures")
    return p


def parse_command(argv: list[str]) -> Command:
    ns = build_parser().parse_args(argv)
    cmd = Command(ns.tag, d=ns.d, inv=ns.inv, seed=ns.seed, budget=ns.budget, output=ns.output)
    try:
        if ns.tag == "cyc-equiv":
            cmd.polys = [parse_poly(ns.f), parse_poly(ns.g)]
        elif ns.tag in ("classify", "witness", "trace", "eval"):
            cmd.polys = [parse_poly(ns.poly)]
        if ns.tag == "eval":
            cmd.matrices = [parse_matrix(m) for m in ns.at]
        if ns.tag == "closure":
            cmd.kind = ns.kind
            cmd.matrices = [parse_matrix(m) for m in ns.matrices]
        if ns.tag == "subspace":
            cmd.name = ns.name
    except (ParseError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    if any(m.d != cmd.d for m in cmd.matrices):
        raise UsageError(f"matrices must be {cmd.d}x{cmd.d} (set --d)")
    cmd.validate()
    return cmd


def _matrix_json(m) -> list[list[str]]:
    return [[str(x) for x in row] for row in m.rows()]


def run(cmd: Command) -> tuple[dict, int]:
    report: dict = {"schema": SCHEMA, "command": cmd.tag}
    code = 0
    if cmd.tag == "classify":
        r = classify(cmd.polys[0], cmd.d, cmd.inv, seed=cmd.seed, budget=cmd.budget)
        report.update(r.to_json())
    elif cmd.tag == "cyc-equiv":
        f, g = cmd.polys
        report.update({"f": format_poly(f), "g": format_poly(g), "cyc_equiv": cyc_equiv(f, g)})
    elif cmd.tag == "witness":
        f = cmd.polys[0]
        w = commutator_witness(f)
        report["polynomial"] = format_poly(f)
        report["witness"] = None if w is None else [[format_poly(a), format_poly(b)] for a, b in w.pairs]
    elif cmd.tag == "trace":
        f = cmd.polys[0]
        ctx = GenericContext.for_poly(f, cmd.d, cmd.inv)
        cert = trace_zero(f, ctx)
        report.update({"polynomial": format_poly(f), "d": cmd.d, "involution": cmd.inv, "trace_zero": cert.verdict})
        report["certificate"] = cert.to_json()
        if not cert.verdict:
            found = trace_witness(f, ctx, random.Random(cmd.seed))
            if found is not None:
                mats, val = found
                report["witness"] = {"matrices": [str(m) for m in mats], "trace": str(val)}
        report["seed"] = cmd.seed
    elif cmd.tag == "eval":
        f = cmd.polys[0]
        report.update({"polynomial": format_poly(f), "d": cmd.d, "involution": cmd.inv})
        if cmd.matrices:
            value = eval_numeric(f, cmd.matrices, cmd.inv)
            report["value"] = str(value)
        else:
            ctx = GenericContext.for_poly(f, cmd.d, cmd.inv)
            report["generic"] = _matrix_json(eval_generic(f, ctx))
    elif cmd.tag == "closure":
        if cmd.kind == "skew":
            if cmd.inv == "none":
                raise UsageError("skew-ideal closure needs --inv")
            space = skew_ideal_closure(cmd.matrices, cmd.inv, cmd.d)
        elif cmd.kind == "lie":
            space = lie_ideal_closure(cmd.matrices, cmd.d)
        else:
            if cmd.inv not in ("none", "transpose"):
                raise UsageError("congruence closure is defined for the transpose")
            space = congruence_closure(cmd.matrices, cmd.d)
        inv = "none" if cmd.kind == "lie" else ("transpose" if cmd.kind == "congruence" else cmd.inv)
        report.update({"kind": cmd.kind, "d": cmd.d, "involution": inv})
        report["subspace"] = space.to_json()
        report["class"] = str(classify_subspace(space, inv))
        report["closed"] = check_lie_closure(space, inv)
    elif cmd.tag == "subspace":
        names = [CanonicalName(cmd.name)] if cmd.name else canonical_names(cmd.inv)
        out = {}
        for n in names:
            try:
                out[str(n)] = canonical_subspace(cmd.d, cmd.inv, n).to_json()
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        report.update({"d": cmd.d, "involution": cmd.inv, "subspaces": out})
    elif cmd.tag == "corpus":
        results = run_corpus(seed=cmd.seed, budget=cmd.budget)
        report["results"] = results
        report["passed"] = all(r["passed"] for r in results)
        code = 0 if report["passed"] else 2
    return report, code


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cmd = parse_command(argv)
        report, code = run(cmd)
    except UsageError as exc:
        print(f"ncspan: error: {exc}", file=sys.stderr)
        return 1
    except InconsistencyError as exc:
        print(f"ncspan: internal inconsistency: {exc}", file=sys.stderr)
        return 2
    except (ValueError, IndexError) as exc:
        print(f"ncspan: error: {exc}", file=sys.stderr)
        return 1
    text = json.dumps(report, indent=2)
    print(text)
    if cmd.output:
        with open(cmd.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
