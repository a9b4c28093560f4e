"""Command-line interface.

Exit codes: 0 success, 2 unreadable input, 3 precondition violation
(not KE / not bipartite / no perfect matching), 4 graph too large for the
oracle, 5 verify found a disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Callable, Sequence

from . import fixtures
from .core import MODES, alpha_ke, compute_core, unique_mis
from .errors import KECoreError, ParseError, PreconditionError, TooLargeError
from .generator import FLAVORS, GenSpec, format_generated
from .graph import Graph, format_graph, induced_delete, is_independent, parse_graph
from .ke_test import is_ke
from .matching import maximum_matching
from .oracle import (
    brute_mu,
    enumerate_mis,
    validate_structure,
    verify_theorem_th,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_TOO_LARGE = 4
EXIT_MISMATCH = 5


def read_graph(source: str, stdin=None) -> Graph:
    """Load a graph from a path, ``-`` (stdin) or ``fixture:NAME``."""
    if source == "-":
        return parse_graph((stdin or sys.stdin).read())
    if source.startswith("fixture:"):
        try:
            return parse_graph(fixtures.fixture_text(source[len("fixture:"):]))
        except KeyError as exc:
            raise ParseError(str(exc.args[0])) from None
    try:
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {source}: {exc.strerror}") from None
    return parse_graph(text)


def _render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, sort_keys=True) + "\n"
    lines = []
    for key in sorted(doc):
        value = doc[key]
        if isinstance(value, list):
            value = " ".join(
                "-" if x is None else json.dumps(x, sort_keys=True) if isinstance(x, dict) else str(x)
                for x in value
            )
        elif isinstance(value, dict):
            value = json.dumps(value, sort_keys=True)
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def cmd_core(g: Graph, args) -> tuple[int, dict]:
    result = compute_core(g, args.mode, args.workers)
    return EXIT_OK, {
        "n": g.n,
        "m": g.m,
        "mu": result.mu,
        "alpha": result.alpha,
        "is_ke": True,
        "algorithm": result.algorithm,
        "core": result.sorted_core(),
        "c": list(result.c),
        "ke": list(result.ke),
    }


def cmd_is_ke(g: Graph, args) -> tuple[int, dict]:
    verdict = is_ke(g)
    doc = {"n": g.n, "m": g.m, "mu": verdict.mu, "is_ke": verdict.is_ke}
    if verdict.is_ke:
        doc["witness"] = sorted(verdict.witness)
    else:
        doc["reason"] = verdict.reason
    return EXIT_OK, doc


def cmd_matching(g: Graph, args) -> tuple[int, dict]:
    matching = maximum_matching(g)
    return EXIT_OK, {
        "n": g.n,
        "m": g.m,
        "mu": matching.size,
        "perfect": 2 * matching.size == g.n,
        "edges": [list(e) for e in matching.edges],
    }


def cmd_alpha(g: Graph, args) -> tuple[int, dict]:
    alpha = alpha_ke(g)
    return EXIT_OK, {"n": g.n, "m": g.m, "mu": g.n - alpha, "alpha": alpha}


def cmd_unique_mis(g: Graph, args) -> tuple[int, dict]:
    result = unique_mis(g, args.workers)
    return EXIT_OK, {
        "n": g.n,
        "unique": result.unique,
        "core": sorted(result.core),
        "mis": sorted(result.mis) if result.mis is not None else None,
    }


def compare_with_oracle(g: Graph, workers: int = 1) -> tuple[list[str], dict]:
    """Run solver and oracle side by side; return (mismatches, report)."""
    problems: list[str] = []
    family = enumerate_mis(g)
    mu_brute = brute_mu(g)
    ke_brute = family.alpha + mu_brute == g.n
    core_brute = family.core()

    matching = maximum_matching(g)
    verdict = is_ke(g)
    if matching.size != mu_brute:
        problems.append(f"matching size {matching.size} != oracle mu {mu_brute}")
    if verdict.is_ke != ke_brute:
        problems.append(f"KE verdict {verdict.is_ke} != oracle {ke_brute}")
    report: dict = {
        "n": g.n,
        "m": g.m,
        "mu": {"solver": matching.size, "oracle": mu_brute},
        "is_ke": {"solver": verdict.is_ke, "oracle": ke_brute},
        "alpha_oracle": family.alpha,
        "mis_count": family.count,
        "core_oracle": sorted(core_brute),
    }
    if verdict.is_ke:
        w = verdict.witness
        if not is_independent(g, w) or len(w) != family.alpha:
            problems.append(f"witness {sorted(w)} is not a maximum independent set")
    if verdict.is_ke and ke_brute:
        cores = {}
        for mode in MODES:
            try:
                result = compute_core(g, mode, workers)
            except PreconditionError:
                continue
            cores[mode] = result.sorted_core()
            if result.core != core_brute:
                problems.append(f"core in mode {mode} {result.sorted_core()} != oracle {sorted(core_brute)}")
            if result.alpha != family.alpha:
                problems.append(f"alpha {result.alpha} != oracle {family.alpha}")
        report["core_solver"] = cores
        theorem = [verify_theorem_th(g, v, core_brute, mu_brute) for v in range(g.n)]
        report["theorem"] = [t.as_dict() for t in theorem]
        problems.extend(f"deletion dichotomy fails at vertex {t.vertex}" for t in theorem if not t.passed)
    structure = validate_structure(g)
    report["structure"] = [c.as_dict() for c in structure.checks]
    problems.extend(
        f"structure check {c.name} fails ({c.detail})" for c in structure.checks if c.applicable and not c.passed
    )
    report["ok"] = not problems
    report["problems"] = problems
    return problems, report


def shrink(g: Graph, failing: Callable[[Graph], bool]) -> Graph:
    """Delete vertices greedily while ``failing`` stays true."""
    changed = True
    while changed:
        changed = False
        for v in range(g.n):
            h = induced_delete(g, v)
            try:
                bad = failing(h)
            except TooLargeError:
                bad = False
            if bad:
                g = h
                changed = True
                break
    return g


def cmd_verify(g: Graph, args) -> tuple[int, dict]:
    problems, report = compare_with_oracle(g, args.workers)
    if problems:
        small = shrink(g, lambda h: bool(compare_with_oracle(h)[0]))
        report["counterexample"] = format_graph(small)
        return EXIT_MISMATCH, report
    return EXIT_OK, report


def cmd_gen(args) -> str:
    spec = GenSpec(n=args.n, mu=args.mu, extra_edge_prob=args.p, seed=args.seed, flavor=args.flavor)
    return format_generated(spec)


COMMANDS = {
    "core": cmd_core,
    "is-ke": cmd_is_ke,
    "matching": cmd_matching,
    "alpha": cmd_alpha,
    "unique-mis": cmd_unique_mis,
    "verify": cmd_verify,
}


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kecore",
        description="König-Egerváry recognition, maximum matching and core(G).",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("input", help="edge-list file, '-' for stdin, or fixture:NAME")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--workers", type=_positive, default=1)
        if name == "core":
            p.add_argument("--mode", choices=MODES, default="auto")
    g = sub.add_parser("gen", help="write a generated KE graph in edge-list format")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--mu", type=int, required=True)
    g.add_argument("--p", type=float, default=0.0)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--flavor", choices=FLAVORS, default="ke")
    return parser


def run(argv: Sequence[str], stdin=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    if args.command == "gen":
        try:
            stdout.write(cmd_gen(args))
        except ValueError as exc:
            print(f"error: {exc}", file=stderr)
            return EXIT_PRECONDITION
        return EXIT_OK
    try:
        graph = read_graph(args.input, stdin)
    except ParseError as exc:
        print(f"parse error: {exc}", file=stderr)
        return EXIT_PARSE
    try:
        code, doc = COMMANDS[args.command](graph, args)
    except PreconditionError as exc:
        print(f"{type(exc).__name__.removesuffix('Error')}: {exc}", file=stderr)
        return EXIT_PRECONDITION
    except TooLargeError as exc:
        print(f"TooLarge: {exc}", file=stderr)
        return EXIT_TOO_LARGE
    except KECoreError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_PRECONDITION
    if code == EXIT_MISMATCH:
        for problem in doc["problems"]:
            print(f"mismatch: {problem}", file=stderr)
        print("minimal counterexample:\n" + doc["counterexample"], file=stderr, end="")
    stdout.write(_render(doc, args.format))
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
