"""Command line front end.

Subcommands::

    dims        dimensions of the Specht module and of the tabloid space
    criterion   arithmetic verdict for a relation family
    verify      verdict plus brute-force quotient dimension
    gl coker    cokernel of the GL(n) map behind a relation family
    gl scalars  scalars of Phi_t on each Pieri summand, empirical and closed form
    scan        exhaustive sweep over partitions, one JSON object per line
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
import warnings
from fractions import Fraction
from multiprocessing import Pool
from typing import Iterator, Optional, Sequence

from . import __version__
from .combinat import (as_partition, conjugate, exchange_vectors, hook_dim, max_exchange_vector,
                       min_exchange_vector, parse_parts, partitions_of, tabloid_count,
                       validate_exchange_vector)
from .criteria import c_scalar, classic_verdict, gr_verdict, multirow_coker_verdict, psi_coeffs, sgr_verdict
from .exactla import rank
from .exalg import MapDescriptor, basis_size, column_pair_map
from .schur import schur_model, summand_scalar_empirical
from .specht import RelationFamily, relation_vectors

WORKERS_ENV = "SCHURSPECHT_WORKERS"
DEFAULT_MAX_SIZE = 50000

SCHEMA = ("command", "lambda", "mu", "k", "n", "mode", "j_range", "verdict", "witnesses",
          "dim_specht", "dim_tabloid", "dim_quotient", "rank", "agree", "elapsed_ms", "version")


class UsageError(Exception):
    pass


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def make_report(command: str, **fields) -> dict:
    report = {key: None for key in SCHEMA}
    report["command"] = command
    report["version"] = __version__
    report.update(fields)
    return _jsonable(report)


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=False, separators=(", ", ": "))


# -- shared evaluation ----------------------------------------------------------

def _criterion(lam, mode: str, k, j_range: str):
    if mode == "classic":
        return classic_verdict(lam)
    if mode == "sgr":
        return sgr_verdict(lam, k, j_range)
    return gr_verdict(lam, k)


def _family(mode: str, k) -> RelationFamily:
    return RelationFamily({"sgr": "SGR", "gr": "GR", "classic": "CLASSIC"}[mode], k)


def _is_iff(lam, mode: str) -> bool:
    # two columns: the verdicts are exact characterizations; otherwise only sufficient
    return mode != "classic" and len(conjugate(lam)) == 2


def _rank_method(certify: bool, modular: bool) -> tuple[str, bool]:
    return ("modular" if modular or certify else "exact"), certify


def evaluate_case(lam, mode: str, k, j_range: str, brute: bool, certify: bool = False,
                  modular: bool = False, max_size: int = DEFAULT_MAX_SIZE, timing: bool = False,
                  command: str = "verify") -> dict:
    """Criterion verdict and, optionally, the brute-force quotient for one case."""
    start = time.perf_counter()
    lam = as_partition(lam)
    mu = conjugate(lam)
    if mode == "classic":
        k = min_exchange_vector(lam)
    k = validate_exchange_vector(lam, k)
    rep = _criterion(lam, mode, k, j_range)
    fields = dict(
        **{"lambda": list(lam)}, mu=list(mu), k=list(k), mode=mode,
        j_range=j_range if mode == "sgr" else None,
        verdict="pass" if rep.verdict else "fail",
        witnesses=rep.as_dict()["witnesses"],
        dim_specht=hook_dim(lam), dim_tabloid=tabloid_count(lam),
        iff=_is_iff(lam, mode),
    )
    if rep.extra:
        fields.update(rep.extra)
    if brute:
        if tabloid_count(lam) > max_size:
            fields["skipped"] = f"tabloid space larger than --max-size {max_size}"
        else:
            method, cert = _rank_method(certify, modular)
            rk = rank(relation_vectors(lam, _family(mode, k)), method, certify=cert)
            q = tabloid_count(lam) - rk
            specht = q == hook_dim(lam)
            agree = (rep.verdict == specht) if fields["iff"] else (specht or not rep.verdict)
            fields.update(rank=rk, dim_quotient=q, agree=agree)
    if timing:
        fields["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return make_report(command, **fields)


def _scan_worker(args):
    return evaluate_case(*args)


def scan(r_max: int, mode: str, k_policy: str = "max", j_range: str = "full", brute: bool = False,
         certify: bool = False, modular: bool = False, max_size: int = DEFAULT_MAX_SIZE,
         timing: bool = False, workers: Optional[int] = None) -> Iterator[dict]:
    """Yield one report per partition of size ``<= r_max`` and exchange vector."""
    ranges = ("full", "short") if j_range == "both" else (j_range,)
    cases = []
    for r in range(1, r_max + 1):
        for lam in partitions_of(r):
            if mode == "classic" or k_policy == "min":
                ks = [min_exchange_vector(lam)]
            elif k_policy == "max":
                ks = [max_exchange_vector(lam)]
            else:
                ks = list(exchange_vectors(lam))
            for k in ks:
                for jr in (ranges if mode == "sgr" else ("full",)):
                    cases.append((lam, mode, k, jr, brute, certify, modular, max_size, timing, "scan"))
    workers = workers if workers is not None else int(os.environ.get(WORKERS_ENV, "1") or 1)
    if workers > 1 and len(cases) > 1:
        with Pool(workers) as pool:
            yield from pool.imap(_scan_worker, cases)
    else:
        for case in cases:
            yield _scan_worker(case)


def gl_coker(mu, mode: str, k, n: Optional[int], certify=False, modular=False,
             max_size: int = DEFAULT_MAX_SIZE, timing: bool = False) -> dict:
    start = time.perf_counter()
    mu = as_partition(mu)
    n = n if n is not None else mu.size
    lam = conjugate(mu)
    if mode == "classic":
        k = min_exchange_vector(lam)
    k = validate_exchange_vector(lam, k)
    size = basis_size(mu, n)
    if size > max_size:
        raise UsageError(f"Λ^mu has {size} basis vectors, above --max-size {max_size}")
    kind = {"sgr": "psi", "gr": "gamma", "classic": "theta"}[mode]
    m = column_pair_map(mu, kind, k, n=n)
    method, cert = _rank_method(certify, modular)
    rk = rank(m.matrix, method, certify=cert)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        dim_l = schur_model(tuple(mu), n).dimension
    fields = dict(mu=list(mu), **{"lambda": list(lam)}, k=list(k), n=n, mode=mode, rank=rk,
                  dim_coker=size - rk, dim_schur=dim_l, dim_tensor=size,
                  faithful=n >= mu.size, agree=None)
    if mode == "sgr" and len(mu) >= 2:
        rep = multirow_coker_verdict(mu, lambda c, a, b: psi_coeffs(b, k[c - 1]))
    else:
        rep = _criterion(lam, mode, k, "full")
    fields["verdict"] = "pass" if rep.verdict else "fail"
    fields["witnesses"] = rep.as_dict()["witnesses"]
    if rep.verdict:
        fields["agree"] = size - rk == dim_l
    if timing:
        fields["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return make_report("gl coker", **fields)


def gl_scalars(mu, n: Optional[int], timing: bool = False) -> dict:
    start = time.perf_counter()
    mu = as_partition(mu)
    if len(mu) != 2:
        raise UsageError("gl scalars needs a two-part --mu a,b")
    a, b = mu
    n = n if n is not None else a + b
    if n < a + b:
        raise UsageError(f"need n >= a+b = {a + b} for the probe to be nonzero")
    table, agree = [], True
    for t in range(b + 1):
        phi = MapDescriptor("PhiT", a=a, b=b, t=t, n=n)
        for j in range(b + 1):
            emp = summand_scalar_empirical(phi, a, b, j, n)
            formula = c_scalar(a, b, t, j)
            agree &= emp == formula
            table.append({"t": t, "j": j, "empirical": emp, "formula": formula})
    fields = dict(mu=list(mu), n=n, scalars=table, agree=agree)
    if timing:
        fields["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return make_report("gl scalars", **fields)


def dims(lam, timing: bool = False) -> dict:
    start = time.perf_counter()
    lam = as_partition(lam)
    fields = dict(**{"lambda": list(lam)}, mu=list(conjugate(lam)), dim_specht=hook_dim(lam),
                  dim_tabloid=tabloid_count(lam), specht=hook_dim(lam), tabloid=tabloid_count(lam))
    if timing:
        fields["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return make_report("dims", **fields)


# -- argument parsing ---------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def _parts(text: str):
    try:
        return parse_parts(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _ints(text: str):
    try:
        return tuple(int(s) for s in text.split(",") if s.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the JSON report")
    common.add_argument("--out", help="also write the report(s) to this file")
    common.add_argument("--timing", action="store_true", help="fill elapsed_ms (breaks byte-identical output)")
    common.add_argument("--certify", action="store_true", help="modular ranks re-verified exactly")
    common.add_argument("--modular", action="store_true", help="use the modular rank fast path")
    common.add_argument("--max-size", type=int, default=DEFAULT_MAX_SIZE)

    shape = _Parser(add_help=False)
    g = shape.add_mutually_exclusive_group()
    g.add_argument("--lambda", dest="lam", type=_parts, help="partition, e.g. 2,2,1")
    g.add_argument("--mu", type=_parts, help="conjugate partition (column lengths)")

    crit = _Parser(add_help=False)
    crit.add_argument("--mode", choices=("sgr", "gr", "classic"), default="sgr")
    crit.add_argument("--k", type=_ints, help="exchange vector, one entry per column pair")
    crit.add_argument("--j-range", choices=("full", "short"), default="full")

    parser = _Parser(prog="schurspecht", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.add_parser("dims", parents=[common, shape])
    sub.add_parser("criterion", parents=[common, shape, crit])
    sub.add_parser("verify", parents=[common, shape, crit])

    gl = sub.add_parser("gl")
    glsub = gl.add_subparsers(dest="gl_command", parser_class=_Parser)
    coker = glsub.add_parser("coker", parents=[common, crit])
    coker.add_argument("--mu", type=_parts, required=True)
    coker.add_argument("--n", type=int)
    scal = glsub.add_parser("scalars", parents=[common])
    scal.add_argument("--mu", type=_parts, required=True)
    scal.add_argument("--n", type=int)

    sc = sub.add_parser("scan", parents=[common])
    sc.add_argument("--r-max", type=int, required=True)
    sc.add_argument("--mode", choices=("sgr", "gr", "classic"), default="sgr")
    sc.add_argument("--k-policy", choices=("max", "min", "all"), default="max")
    sc.add_argument("--j-range", choices=("full", "short", "both"), default="full")
    sc.add_argument("--brute", action="store_true", help="compare with the brute-force quotient")
    return parser


def _lambda(args):
    if args.lam is not None:
        return args.lam
    if args.mu is not None:
        return conjugate(args.mu)
    raise UsageError("one of --lambda/--mu is required")


def _default_k(lam, args):
    if args.k is not None:
        return args.k
    if args.mode == "classic":
        return min_exchange_vector(lam)
    raise UsageError("--k is required for modes sgr and gr")


def run(argv: Sequence[str]) -> tuple[list[dict], int]:
    """Parse ``argv`` and execute; returns the reports and the exit code."""
    args = build_parser().parse_args(list(argv))
    if args.command is None:
        raise UsageError(build_parser().format_usage())
    cmd = args.command
    if cmd == "dims":
        return [dims(_lambda(args), args.timing)], 0
    if cmd in ("criterion", "verify"):
        lam = _lambda(args)
        report = evaluate_case(lam, args.mode, _default_k(lam, args), args.j_range, cmd == "verify",
                               args.certify, args.modular, args.max_size, args.timing, cmd)
        if cmd == "verify" and report.get("skipped"):
            raise UsageError(report["skipped"])
        return [report], 1 if report["agree"] is False else 0
    if cmd == "gl":
        if args.gl_command == "coker":
            k = args.k if args.k is not None else (min_exchange_vector(conjugate(args.mu)) if args.mode == "classic" else None)
            if k is None:
                raise UsageError("--k is required for modes sgr and gr")
            report = gl_coker(args.mu, args.mode, k, args.n, args.certify, args.modular, args.max_size, args.timing)
            return [report], 1 if report["agree"] is False else 0
        if args.gl_command == "scalars":
            report = gl_scalars(args.mu, args.n, args.timing)
            return [report], 0 if report["agree"] else 1
        raise UsageError("gl needs a subcommand: coker or scalars")
    if cmd == "scan":
        reports = list(scan(args.r_max, args.mode, args.k_policy, args.j_range, args.brute,
                            args.certify, args.modular, args.max_size, args.timing))
        return reports, 1 if any(r["agree"] is False for r in reports) else 0
    raise UsageError(f"unknown command {cmd}")


def _human(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if value is None or key == "version":
            continue
        if key == "scalars":
            lines.append("   t   j  empirical  formula")
            lines.extend(f"{row['t']:4d}{row['j']:4d}{row['empirical']:>11}{row['formula']:>9}" for row in value)
            continue
        if isinstance(value, list):
            value = ",".join(str(v) for v in value) if all(not isinstance(v, dict) for v in value) else \
                "; ".join(" ".join(f"{k}={v}" for k, v in w.items()) for w in value)
        lines.append(f"{key:14s} {value}")
    return "\n".join(lines)


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        reports, code = run(argv)
    except UsageError as exc:
        print(str(exc).rstrip(), file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"schurspecht: error: {exc}", file=sys.stderr)
        return 2
    args = build_parser().parse_args(list(argv))
    as_json = args.json or args.command == "scan"
    text = "\n".join(dumps(r) if as_json else _human(r) for r in reports)
    if text:
        print(text)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write("\n".join(dumps(r) for r in reports) + "\n")
    return code
