"""Command-line front end.

Graph files are plain text: ``#`` comment lines, a header ``n <count>
<directed|undirected>``, then one ``u v`` edge per line.  Exit codes: 0 ok,
1 usage error, 2 unreadable or malformed input, 3 the analysis refused the
input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import analysis, filters, iterate, primes, walks
from .core import MultiFunction, VertexUniverse, classify, iter_bits
from .errors import MultifunctionError, VertexError
from .structure import EdgeList, GraphKind, from_graph

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_SEMANTIC = 0, 1, 2, 3


class GraphFileError(Exception):
    pass


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def read_graph(path: str) -> tuple[EdgeList, MultiFunction]:
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise GraphFileError(f"cannot read {path}: {exc.strerror}") from None
    header = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 3 or parts[0] != "n" or parts[2] not in ("directed", "undirected"):
                raise GraphFileError(f"{path}:{lineno}: expected 'n <count> <directed|undirected>'")
            try:
                count = int(parts[1])
            except ValueError:
                raise GraphFileError(f"{path}:{lineno}: bad vertex count {parts[1]!r}") from None
            if count < 1:
                raise GraphFileError(f"{path}:{lineno}: vertex count must be positive")
            header = (count, parts[2] == "directed")
            continue
        if len(parts) != 2:
            raise GraphFileError(f"{path}:{lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFileError(f"{path}:{lineno}: vertices must be integers") from None
        if not (0 <= u < header[0] and 0 <= v < header[0]):
            raise GraphFileError(f"{path}:{lineno}: vertex out of range 0..{header[0] - 1}")
        edge = (u, v) if header[1] or u <= v else (v, u)
        if edge in edges:
            raise GraphFileError(f"{path}:{lineno}: duplicate edge {u} {v}")
        edges.append(edge)
    if header is None:
        raise GraphFileError(f"{path}: missing header line")
    count, directed = header
    g = EdgeList(VertexUniverse(count), directed, tuple(edges))
    f = from_graph(g, GraphKind.DIGRAPH if directed else GraphKind.UNDIRECTED)
    return g, f


def _members(bits: int) -> list[int]:
    return list(iter_bits(bits))


def _distance(d):
    return "inf" if d is analysis.INF else d


def _cmd_analyze(args, f: MultiFunction) -> dict:
    report = classify(f)
    result = {
        "vertices": f.universe.size,
        "properties": report.as_dict(),
        "connected": analysis.is_connected(f),
        "components": [_members(c.bits) for c in analysis.components(f)] if report.undirected else None,
        "bipartite": None,
        "partition": None,
    }
    if report.simple_graph and report.strict:
        result["bipartite"] = analysis.is_bipartite_even_iteration(f)
        split = analysis.bipartition(f)
        if split is not None:
            result["partition"] = [_members(split.U.bits), _members(split.W.bits)]
    return result


def _cmd_iterate(args, f: MultiFunction) -> dict:
    power = iterate.power_image(f, args.power)
    result: dict = {"power": args.power}
    if args.seed is not None:
        result["seed"] = args.seed
        result["image"] = _members(power(args.seed).bits)
    elif args.set is not None:
        chosen = f.universe.set(args.set)
        result["set"] = _members(chosen.bits)
        result["image"] = _members(iterate.power_image_set(f, args.power, chosen).bits)
    else:
        result["images"] = [_members(row) for row in power.rows]
    return result


def _cmd_walks(args, f: MultiFunction) -> dict:
    q = walks.WalkQuery(args.start, args.end, args.length)
    result: dict = {"from": q.start, "to": q.end, "length": q.length, "exists": walks.walk_exists(f, q)}
    if args.enumerate:
        result["walks"] = [list(w) for w in walks.enumerate_walks(f, q, cap=args.cap)]
    return result


def _cmd_metric(args, f: MultiFunction) -> dict:
    matrix = analysis.metric(f)
    return {"distances": [[_distance(d) for d in row] for row in matrix.entries]}


def _cmd_filters(args, f: MultiFunction) -> dict:
    name = args.family
    if name in ("neigh", "wall"):
        if args.set is None:
            raise _UsageError(f"filters: error: --family {name} needs --set")
        chosen = f.universe.set(args.set)
        fam = (filters.neigh_family if name == "neigh" else filters.wall_family)(f, chosen)
    else:
        if args.set is not None:
            raise _UsageError(f"filters: error: --family {name} takes no --set")
        chosen = None
        fam = (filters.isol if name == "isol" else filters.build)(f)
    return {
        "family": name,
        "set": None if chosen is None else _members(chosen.bits),
        "size": len(fam),
        "members": fam.as_lists(),
    }


def _cmd_primes(args) -> dict:
    w = primes.PrimeWindow(args.bound)
    if args.leaf is not None:
        return {"leaf": args.leaf, "numbers": sorted(primes.prime_leaf(args.leaf, w))}
    if args.plus is not None:
        desc = primes.SetDescription.parse(args.plus)
        return {"plus": args.plus, "numbers": sorted(primes.prime_plus(desc, w))}
    if args.minus is not None:
        desc = primes.SetDescription.parse(args.minus)
        return {"minus": args.minus, "numbers": sorted(primes.prime_minus(desc, w))}
    desc = primes.SetDescription.parse(args.wall)
    return {"wall": args.wall, "contains": primes.wall_aleph0_contains(desc)}


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="multifun", description="Multifunction analyses of small graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_command(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("graph", help="edge-list file")
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        return p

    graph_command("analyze", "properties, connectivity and bipartiteness")

    p = graph_command("iterate", "images under an integer power")
    p.add_argument("--power", type=int, required=True)
    seed = p.add_mutually_exclusive_group()
    seed.add_argument("--seed", type=int)
    seed.add_argument("--set", type=int, nargs="*")

    p = graph_command("walks", "walk existence and enumeration")
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="end", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--cap", type=int, default=walks.DEFAULT_ENUMERATION_CAP)

    graph_command("metric", "all-pairs walk distances")

    p = graph_command("filters", "neighbour and wall families")
    p.add_argument("--family", choices=("neigh", "wall", "isol", "build"), required=True)
    p.add_argument("--set", type=int, nargs="*")

    p = sub.add_parser("primes", help="the prime-divisor multifunction on 2..bound")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--leaf", type=int, help="powers of a prime inside the window")
    what.add_argument("--plus", metavar="DESC", help="numbers whose prime divisors all lie in DESC")
    what.add_argument("--minus", metavar="DESC", help="numbers with a prime divisor in DESC")
    what.add_argument("--wall", metavar="DESC", help="decide cofinite-wall membership of DESC")
    return parser


_GRAPH_COMMANDS = {
    "analyze": _cmd_analyze,
    "iterate": _cmd_iterate,
    "walks": _cmd_walks,
    "metric": _cmd_metric,
    "filters": _cmd_filters,
}


def _fmt(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        if value and all(isinstance(x, list) for x in value):
            return " | ".join(_fmt(x) for x in value)
        return " ".join(str(x) for x in value)
    if isinstance(value, dict):
        return " ".join(f"{k}={_fmt(v)}" for k, v in value.items())
    return str(value)


def _human(command: str, result: dict) -> str:
    if command == "primes":
        return _fmt(result.get("numbers", result.get("contains"))) + "\n"
    if command == "metric":
        return "".join(" ".join(str(d) for d in row) + "\n" for row in result["distances"])
    if command == "walks" and "walks" in result:
        head = f"exists: {_fmt(result['exists'])}\ncount: {len(result['walks'])}\n"
        return head + "".join(" ".join(map(str, w)) + "\n" for w in result["walks"])
    if command == "filters":
        return f"family: {result['family']}\nsize: {result['size']}\n" + "".join(
            "{" + ", ".join(map(str, m)) + "}\n" for m in result["members"]
        )
    return "".join(f"{key}: {_fmt(value)}\n" for key, value in result.items())


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = _build_parser().parse_args(argv)
    except _UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE

    try:
        if args.command == "primes":
            source = {"bound": args.bound}
            result = _cmd_primes(args)
        else:
            g, f = read_graph(args.graph)
            source = {"file": os.path.basename(args.graph), "vertices": g.universe.size, "directed": g.directed}
            result = _GRAPH_COMMANDS[args.command](args, f)
    except _UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except (GraphFileError, VertexError) as exc:
        err.write(f"multifun: input error: {exc}\n")
        return EXIT_PARSE
    except (MultifunctionError, ValueError) as exc:
        err.write(f"multifun: {type(exc).__name__}: {exc}\n")
        return EXIT_SEMANTIC

    if args.json:
        report = {"input": source, "command": args.command, "result": result}
        out.write(json.dumps(report, indent=2) + "\n")
    else:
        out.write(_human(args.command, result))
    return EXIT_OK


def main() -> int:
    return run()


if __name__ == "__main__":
    sys.exit(main())
