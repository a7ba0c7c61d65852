"""Command line: ``macdaha apply`` acts with one operator, ``macdaha suite`` runs checks.

Exit status is 0 when everything passes, 1 when any check fails or errors,
and 2 for usage and parse errors.
"""
from __future__ import annotations

import argparse
import ast
import json
import os
import re
import sys
from dataclasses import dataclass
from typing import Callable

from . import asmdet, currents, daha, macops, shuffle
from .coeff import ONE, Rat, render, x_monomial
from .polyx import elementary, gen_schur, is_symmetric, monomial_sym, power_sum, render_sym
from .report import Report, Verifier

SEED_ENV = "MACDAHA_SEED"


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    N: int = 2
    window: tuple[int, int] | None = None
    K: int | None = None
    n: int | None = None
    mode: str = "exact"
    seed: int = 0
    output: str = "text"

    def __post_init__(self):
        if not 1 <= self.N <= 4:
            raise UsageError("N must be between 1 and 4")
        if self.window is not None and self.window[0] > self.window[1]:
            raise UsageError("window must satisfy n_min <= n_max")

    def win(self, default: tuple[int, int]) -> tuple[int, int]:
        return self.window if self.window is not None else default

    def verifier(self) -> Verifier:
        # exact mode never draws random points, so the seed is irrelevant there
        return Verifier(self.mode, self.seed if self.mode == "probabilistic" else 0)


# -- expression mini-language ---------------------------------------------------

_NAME_RE = re.compile(r"x\^\[")


def _ints(node) -> list[int]:
    elts = node.elts if isinstance(node, ast.Tuple) else [node]
    out = []
    for e in elts:
        v = ast.literal_eval(e)
        if not isinstance(v, int):
            raise UsageError("indices must be integers")
        out.append(v)
    return out


def parse_expr(text: str, N: int) -> Rat:
    """Evaluate e[j], p[k], m[lam], s[a,...], x^[nu] with integer arithmetic."""
    src = _NAME_RE.sub("X[", text).replace("^", "**")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise UsageError(f"cannot parse {text!r}: {exc.msg}") from None

    def pad(idx):
        if len(idx) > N:
            raise UsageError(f"{idx} has more than N = {N} entries")
        return tuple(idx) + (0,) * (N - len(idx))

    def ev(node) -> Rat:
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return Rat(node.value)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                k = ast.literal_eval(node.right)
                if not isinstance(k, int) or k < 0:
                    raise UsageError("exponents must be non-negative integers")
                return ev(node.left) ** k
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
        if isinstance(node, ast.Name) and (m := re.fullmatch(r"([ep])(\d+)", node.id)):
            # shorthand p1 == p[1]
            k = int(m.group(2))
            return elementary(k, N) if m.group(1) == "e" else power_sum(k, N)
        if isinstance(node, ast.Subscript) and isinstance(node.value, ast.Name):
            idx = _ints(node.slice)
            name = node.value.id
            if name == "e" and len(idx) == 1:
                return elementary(idx[0], N)
            if name == "p" and len(idx) == 1:
                return power_sum(idx[0], N)
            if name == "m":
                if any(a < b for a, b in zip(idx, idx[1:])):
                    raise UsageError("m[...] needs a weakly decreasing index")
                return monomial_sym(pad(idx), N)
            if name == "s":
                return gen_schur(pad(idx))
            if name == "X":
                return x_monomial(pad(idx))
        raise UsageError(f"unsupported expression in {text!r}")

    return ev(tree.body)


def parse_op(spec: str, N: int) -> tuple[macops.SymShiftOp, int]:
    """Returns the operator and its alpha (used for the alpha > N note)."""
    parts = spec.split(":")
    kind, args = parts[0], parts[1:]
    try:
        if kind == "M" and len(args) == 2:
            a, n = int(args[0]), int(args[1])
            return macops.build_M(a, n, N), a
        if kind == "D" and len(args) == 2:
            a = int(args[0])
            return macops.build_D(a, parse_expr(args[1], max(a, 1)), N), a
        if kind == "Mschur" and len(args) == 1:
            a = tuple(int(v) for v in args[0].split(","))
            return macops.build_M_schur(a, N), len(a)
        if kind == "Mtinf" and len(args) == 2:
            a, n = int(args[0]), int(args[1])
            return macops.build_M_tinf(a, n, N), a
        if kind == "dual" and len(args) == 2:
            a, n = int(args[0]), int(args[1])
            return macops.dual_M(a, n, N), a
    except ValueError as exc:
        raise UsageError(f"bad operator {spec!r}: {exc}") from None
    raise UsageError(f"unknown operator spec {spec!r}")


def render_result(f: Rat, N: int, basis: str) -> str:
    if f.is_zero():
        return "0"
    if basis in ("s", "m") and is_symmetric(f, N):
        try:
            return render_sym(f, N, basis)
        except ValueError:
            pass
    return render(f)


def cmd_apply(op_spec: str, f_spec: str, N: int, basis: str = "s") -> str:
    op, alpha = parse_op(op_spec, N)
    f = parse_expr(f_spec, N)
    if alpha > N:
        print(f"note: alpha = {alpha} exceeds N = {N}; the operator is zero", file=sys.stderr)
    return render_result(op.act(f), N, basis)


# -- suites ---------------------------------------------------------------------

Runner = Callable[[RunConfig, Verifier], list[Report]]


def _need(N: int, lo: int, name: str):
    if N < lo:
        raise UsageError(f"suite {name} needs N >= {lo}")


def _rng(w):
    return range(w[0], w[1] + 1)


def _eigen_lams(N: int):
    base = ((0, 0), (1, 0), (2, 0), (1, 1), (2, 1))
    return tuple(tuple(l[:N]) + (0,) * max(0, N - 2) for l in base if all(v == 0 for v in l[N:]))


def _merge(name: str, reports: list[Report], **params) -> list[Report]:
    out = Report(name, params)
    for r in reports:
        out.checks.extend(r.checks)
        out.timing += r.timing
    return [out]


SUITES: dict[str, Runner] = {
    "daha": lambda c, v: (_need(c.N, 2, "daha"), [daha.daha_relation_suite(c.N, v, c.win((-2, 2)))])[1],
    "genmac": lambda c, v: [daha.genmac_suite(c.N, c.win((-1, 2)), verifier=v)]
    + ([macops.ct_form_suite(c.N, verifier=v)] if c.N >= 2 else []),
    "exchange": lambda c, v: [currents.check_exchange(c.win((-2, 3)), c.N, v)],
    "ef": lambda c, v: [currents.check_ef_commutator(c.win((-2, 2)), c.K or 4, c.N, v)],
    "psi-e": lambda c, v: [currents.check_psi_e(c.win((-2, 2)), c.K or 3, c.N, v)],
    "psi-f": lambda c, v: [currents.check_psi_f(c.win((-2, 2)), c.K or 3, c.N, v)],
    "psi-pf": lambda c, v: [currents.psi_partial_fraction_check(c.N, v),
                            currents.psi_invariant_checks(c.N, c.K or 3, v),
                            currents.normalization_checks(c.N, c.win((-2, 2)), v)],
    "serre": lambda c, v: [currents.check_serre(c.win((-1, 1)), c.N, v)],
    "plethysm": lambda c, v: _merge("plethysm", [currents.check_plethysm_commutator(k, n, c.N, v)
                                                 for k in (1, 2) for n in _rng(c.win((-1, 1)))],
                                    N=c.N, window=list(c.win((-1, 1))), mode=v.mode),
    "commuting": lambda c, v: [currents.commuting_family_check(c.N, v, c.win((-1, 1)))],
    "shuffle": lambda c, v: [shuffle.shuffle_identity_suite(c.win((-2, 2)), (0, 1), v)],
    "morphism": lambda c, v: [shuffle.morphism_suite(c.N, seed=c.seed, verifier=v)],
    "mtwopol": lambda c, v: (_need(c.N, 2, "mtwopol"), [asmdet.mtwopol_suite(c.N, verifier=v)])[1],
    "quadratic": lambda c, v: (_need(c.N, 2, "quadratic"),
                               [asmdet.quadratic_identity_suite(c.win((-1, 1)), (0, 1), c.N, v),
                                asmdet.qt_determinant_instances(c.win((-1, 1)), c.N, v)])[1],
    "eha": lambda c, v: (_need(c.N, 2, "eha"),
                         _merge("eha", [asmdet.eha_poly_check(n, c.N, v) for n in _rng(c.win((-1, 1)))],
                                N=c.N, window=list(c.win((-1, 1))), mode=v.mode))[1],
    "asm": lambda c, v: [asmdet.asm_suite(c.n or 4, v)],
    "lambdadet": lambda c, v: _merge("lambdadet", [asmdet.lambda_det_check(n, v)
                                                   for n in range(1, min(c.n or 4, 4) + 1)],
                                     n_max=min(c.n or 4, 4), mode=v.mode),
    "qdet": lambda c, v: [asmdet.qdet_suite(c.N, *c.win((-1, 2)), verifier=v)],
    "msystem": lambda c, v: [asmdet.msystem_suite(c.N, c.win((-1, 2)), v)],
    "dofm": lambda c, v: [asmdet.dofm_suite(c.N, c.win((-1, 2)), v)],
    "eigen": lambda c, v: [macops.eigen_suite(c.N, _eigen_lams(c.N), v)],
}


def run_suites(names: list[str], cfg: RunConfig) -> list[Report]:
    if "all" in names:
        names = list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s): {', '.join(unknown)}")
    reports = []
    for name in names:
        reports.extend(r.sorted() for r in SUITES[name](cfg, cfg.verifier()))
    return reports


def format_reports(reports: list[Report], output: str) -> str:
    if output == "json":
        return json.dumps([r.to_dict() for r in reports], sort_keys=True, indent=1)
    lines = []
    for r in reports:
        lines.extend(r.summary_lines())
    return "\n".join(lines)


# -- argument handling ------------------------------------------------------------

def _window(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(-?\d+):(-?\d+)", text)
    if not m:
        raise argparse.ArgumentTypeError("window must look like a:b")
    return int(m.group(1)), int(m.group(2))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="macdaha", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--N", type=int, default=2)
    common.add_argument("--output", choices=("text", "json"), default="text")

    ap = sub.add_parser("apply", parents=[common], help="act with an operator on a symmetric function")
    ap.add_argument("--op", required=True, help="M:a:n, D:a:P, Mschur:a1,a2,..., Mtinf:a:n or dual:a:n")
    ap.add_argument("--f", default="1", help="e[j], p[k], m[lam], s[a,...], x^[nu] and integer arithmetic")
    ap.add_argument("--basis", choices=("s", "m", "x"), default="s")

    sp = sub.add_parser("suite", parents=[common], help="run verification suites")
    sp.add_argument("names", nargs="+", metavar="NAME", help=f"one of {', '.join(SUITES)} or all")
    sp.add_argument("--window", type=_window)
    sp.add_argument("--K", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--mode", choices=("exact", "probabilistic"), default="exact")
    sp.add_argument("--seed", type=int, default=None)
    return p


def _glue_window(argv: list[str]) -> list[str]:
    # "--window -2:3" would otherwise be read as an unknown option
    out, i = [], 0
    while i < len(argv):
        if argv[i] == "--window" and i + 1 < len(argv):
            out.append(f"--window={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(_glue_window(argv))
        if args.command == "apply":
            RunConfig(N=args.N)
            out = cmd_apply(args.op, args.f, args.N, args.basis)
            print(json.dumps({"N": args.N, "op": args.op, "f": args.f, "result": out})
                  if args.output == "json" else out)
            return 0
        seed = args.seed if args.seed is not None else int(os.environ.get(SEED_ENV, "0"))
        cfg = RunConfig(N=args.N, window=args.window, K=args.K, n=args.n, mode=args.mode,
                        seed=seed, output=args.output)
        reports = run_suites(args.names, cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(format_reports(reports, cfg.output))
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
