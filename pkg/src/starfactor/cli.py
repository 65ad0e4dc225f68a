"""Command-line interface.

Exit codes: 0 member/success, 2 not a member, 3 vacuous (no
star-factors), 4 factor cap exceeded, 1 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence, TextIO

from . import __version__
from .census import MAX_BUILTIN_N, cross_validate, report
from .classifier import Verdict, classification_to_json, classify
from .factors import (
    DEFAULT_CAP,
    CapExceeded,
    VacuousGraph,
    edge_count_spectrum,
    enumerate_star_factors,
)
from .graph import Graph, GraphError, girth, parse_edge_list, parse_graph6
from .solver import OracleVerdict, omega_oracle

EXIT_MEMBER = 0
EXIT_USAGE = 1
EXIT_NOT_MEMBER = 2
EXIT_VACUOUS = 3
EXIT_CAP = 4


class CliError(Exception):
    pass


def _default_cap() -> int:
    env = os.environ.get("STARFACTOR_CAP")
    if env is not None:
        try:
            cap = int(env)
            if cap >= 1:
                return cap
        except ValueError:
            pass
        raise CliError(f"invalid STARFACTOR_CAP value {env!r}")
    return DEFAULT_CAP


def _read_input(path: str, stdin: TextIO) -> str:
    if path == "-":
        return stdin.read()
    try:
        with open(path, "r", encoding="ascii") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc


def _load_graph(path: str, fmt: str | None, stdin: TextIO) -> Graph:
    text = _read_input(path, stdin)
    if fmt is None:
        fmt = "graph6" if path.endswith((".g6", ".graph6")) else "edgelist"
    if fmt == "graph6":
        return parse_graph6(text.strip().splitlines()[0] if text.strip() else "")
    return parse_edge_list(text)


def _parse_range(spec: str) -> list[int]:
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        ns = list(range(int(lo), int(hi) + 1))
    else:
        ns = [int(spec)]
    for n in ns:
        if not (1 <= n <= MAX_BUILTIN_N):
            raise CliError(f"built-in census supports n in 1..{MAX_BUILTIN_N}, got {n}")
    return ns


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starfactor",
        description="Decide whether a graph admits a uniform star-factor weighting.",
    )
    parser.add_argument("--version", action="version", version=f"starfactor {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", help="input file, or '-' for stdin")
        p.add_argument("--format", choices=("edgelist", "graph6"), default=None)
        p.add_argument("--cap", type=int, default=None)
        p.add_argument("--output", choices=("text", "json"), default="text")
        return p

    add_graph_command("girth", "print the girth")
    add_graph_command("factors", "list and count star-factors")
    add_graph_command("oracle", "brute-force membership decision")
    add_graph_command("classify", "structural classification (oracle fallback)")
    add_graph_command("witness", "classify and print the witness weighting only")

    c = sub.add_parser("census", help="cross-validate classifier vs oracle")
    c.add_argument("-n", dest="nrange", default=None, help="size range MIN..MAX (built-in, n <= 7)")
    c.add_argument("--girth-min", type=int, default=None)
    c.add_argument("--graph6-file", default=None, help="extra graphs, one graph6 per line")
    c.add_argument("--cap", type=int, default=None)
    c.add_argument("--workers", type=int, default=0, help="0 = available parallelism")
    c.add_argument("--output", choices=("text", "json", "tsv"), default="text")
    return parser


def _verdict_exit(verdict: str) -> int:
    return {
        "Member": EXIT_MEMBER,
        "NotMember": EXIT_NOT_MEMBER,
        "Vacuous": EXIT_VACUOUS,
        "CapExceeded": EXIT_CAP,
    }[verdict]


def run(
    argv: Sequence[str],
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
    stdin: TextIO | None = None,
) -> int:
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    inp = stdin if stdin is not None else sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        cap = args.cap if getattr(args, "cap", None) else _default_cap()
        if cap < 1:
            raise CliError("cap must be >= 1")
        if args.command == "census":
            return _run_census(args, cap, out)
        g = _load_graph(args.input, args.format, inp)
        if args.command == "girth":
            print(girth(g), file=out)
            return 0
        if args.command == "factors":
            return _run_factors(g, cap, args.output, out)
        if args.command == "oracle":
            return _run_oracle(g, cap, args.output, out)
        if args.command in ("classify", "witness"):
            return _run_classify(g, cap, args.output, out, witness_only=args.command == "witness")
        raise CliError(f"unknown command {args.command}")
    except (CliError, GraphError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE


def _run_factors(g: Graph, cap: int, output: str, out: TextIO) -> int:
    try:
        factors = enumerate_star_factors(g, cap=cap)
    except VacuousGraph:
        print("Vacuous (isolated vertex: no star-factors)", file=out)
        return EXIT_VACUOUS
    except CapExceeded:
        print(f"CapExceeded (more than {cap} star-factors)", file=out)
        return EXIT_CAP
    if output == "json":
        payload = {
            "count": len(factors),
            "spectrum": sorted(edge_count_spectrum(factors).items()),
            "factors": [
                {
                    "edges": [list(g.edges[i]) for i in sorted(f.edge_set)],
                    "stars": [
                        {"center": c, "leaves": sorted(ls)} for c, ls in f.stars
                    ],
                }
                for f in factors
            ],
        }
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        plural = "" if len(factors) == 1 else "s"
        print(f"{len(factors)} star-factor{plural}", file=out)
        for f in factors:
            edges = " ".join(f"{g.edges[i][0]}-{g.edges[i][1]}" for i in sorted(f.edge_set))
            print(f"  {edges}", file=out)
    return EXIT_MEMBER


def _run_oracle(g: Graph, cap: int, output: str, out: TextIO) -> int:
    result = omega_oracle(g, cap=cap)
    verdict = result.verdict.value
    if output == "json":
        payload: dict = {"verdict": verdict, "factorCount": result.factor_count}
        if result.witness is not None:
            integral = result.witness.weighting.integral
            payload["witness"] = [
                {"u": u, "v": v, "weight": integral[i]} for i, (u, v) in enumerate(g.edges)
            ]
        if result.refutation is not None:
            payload["refutation"] = {
                "coeffs": [
                    [i, str(c)] for i, c in enumerate(result.refutation.coeffs) if c != 0
                ],
                "forcedZero": [str(x) for x in result.refutation.forced_zero],
            }
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        print(verdict, file=out)
        if result.witness is not None:
            integral = result.witness.weighting.integral
            detail = " ".join(
                f"{u}-{v}:{integral[i]}" for i, (u, v) in enumerate(g.edges)
            )
            print(f"  witness: {detail}", file=out)
    return _verdict_exit(verdict)


def _run_classify(g: Graph, cap: int, output: str, out: TextIO, witness_only: bool) -> int:
    try:
        cls = classify(g, cap=cap)
    except CapExceeded:
        print(f"CapExceeded (more than {cap} star-factors)", file=out)
        return EXIT_CAP
    if witness_only:
        if cls.witness is None:
            print(cls.verdict.value, file=out)
        else:
            integral = cls.witness.integral
            for i, (u, v) in enumerate(g.edges):
                print(f"{u} {v} {integral[i]}", file=out)
        return _verdict_exit(cls.verdict.value)
    if output == "json":
        json.dump(classification_to_json(g, cls), out, indent=2)
        out.write("\n")
    else:
        tag = f" ({cls.case_tag.value})" if cls.case_tag is not None else ""
        print(f"{cls.verdict.value}{tag}", file=out)
        if cls.witness is not None:
            integral = cls.witness.integral
            detail = " ".join(
                f"{u}-{v}:{integral[i]}" for i, (u, v) in enumerate(g.edges)
            )
            print(f"  witness: {detail}", file=out)
    return _verdict_exit(cls.verdict.value)


def _run_census(args: argparse.Namespace, cap: int, out: TextIO) -> int:
    ns = _parse_range(args.nrange) if args.nrange else []
    lines: list[str] = []
    if args.graph6_file:
        try:
            with open(args.graph6_file, "r", encoding="ascii") as fh:
                lines = fh.read().splitlines()
        except OSError as exc:
            raise CliError(f"cannot read {args.graph6_file}: {exc}") from exc
    if not ns and not lines:
        raise CliError("census needs -n MIN..MAX and/or --graph6-file")
    workers = args.workers if args.workers > 0 else (os.cpu_count() or 1)
    result = cross_validate(
        ns=ns, girth_min=args.girth_min, cap=cap, workers=workers, graph6_lines=lines
    )
    out.write(report(result, fmt=args.output, cap=cap))
    return EXIT_NOT_MEMBER if result.disagreements else 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
