"""Command line front end.

    floparr build "A3:J={1}" --central
    floparr build "A2:J={}" --affine --radius 7/2
    floparr chambers "A2:J={}" --central
    floparr atoms "A2:J={}" --central --from 0 --to 5
    floparr pi1 "A2:J={}" --central
    floparr check "A2:J={}" --central --rep rep.json
    floparr plot "A2:J={}" --window 1 --out picture.svg
    floparr search-figure --lines 6 --max-rank 8

Every command writes canonical JSON (or SVG) to stdout or --out and is
byte deterministic.  ``--window R`` is shorthand for ``--affine
--radius R``.  Arrangements can also come from a JSON file via --in,
which is how arrangements from arbitrary user matrices enter.

Exit codes: 0 success, 1 failed checks, 2 parse failure, 3 empty
surviving set, 4 enumeration overflow, 5 unknown chamber id, 6 plot of
a non rank-2 arrangement.

FLOPARR_CACHE overrides the workspace cache directory used by build.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import warnings
from fractions import Fraction
from pathlib import Path

from .arrangement import (
    arrangement_from_json,
    arrangement_to_json,
    build_affine,
    build_finite,
    dumps,
)
from .chambers import enumerate_chambers, graph_to_json
from .dynkin import DynkinData, DynkinType, parse_data
from .errors import (
    EmptySurvivingSet,
    FloparrError,
    InvalidType,
    NotRankTwo,
    Overflow,
    UnknownChamber,
)
from .galleries import BoundaryContactWarning, atoms, path_to_json, path_touches_boundary
from .perms import parse_perm
from .pi1 import (
    GroupoidEquality,
    check_representation,
    crossing_homomorphism,
    equal_in_groupoid,
    generators,
    relations,
    word_of_path,
    word_to_json,
)
from .svgplot import arrangement_svg

DEFAULT_RADIUS = Fraction(7, 2)


class ParseFailure(Exception):
    """User input that did not parse; mapped to exit code 2."""


def cache_root() -> Path:
    env = os.environ.get("FLOPARR_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "floparr"


def _parse_radius(text: str) -> Fraction:
    try:
        radius = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseFailure(f"cannot parse radius {text!r}") from exc
    if radius <= 0:
        raise ParseFailure(f"radius must be positive, got {text!r}")
    return radius


def _parse_data(text: str) -> DynkinData:
    try:
        return parse_data(text)
    except InvalidType as exc:
        raise ParseFailure(str(exc)) from exc


def _resolve_arrangement(args):
    """Arrangement from a data string plus kind flags, or from --in JSON."""
    if getattr(args, "infile", None):
        try:
            obj = json.loads(Path(args.infile).read_text())
            return arrangement_from_json(obj)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise ParseFailure(f"cannot load arrangement from {args.infile}: {exc}") from exc
    if not args.data:
        raise ParseFailure("need a Dynkin data string or --in FILE")
    data = _parse_data(args.data)
    if args.window is not None:
        return build_affine(data, _parse_radius(args.window))
    if args.affine:
        return build_affine(data, _parse_radius(args.radius))
    return build_finite(data)


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_build(args) -> int:
    if getattr(args, "infile", None):
        arr = _resolve_arrangement(args)
        _emit(args, dumps(arrangement_to_json(arr)))
        return 0
    data = _parse_data(args.data)
    if args.window is not None:
        kind, radius = "affine", _parse_radius(args.window)
    elif args.affine:
        kind, radius = "affine", _parse_radius(args.radius)
    else:
        kind, radius = "central", None
    key = hashlib.sha256(f"{data}|{kind}|{radius}".encode()).hexdigest()[:24]
    cached = cache_root() / f"arr-{key}.json"
    if cached.is_file():
        _emit(args, cached.read_text())
        return 0
    arr = build_affine(data, radius) if kind == "affine" else build_finite(data)
    text = dumps(arrangement_to_json(arr))
    cached.parent.mkdir(parents=True, exist_ok=True)
    cached.write_text(text)
    _emit(args, text)
    return 0


def cmd_chambers(args) -> int:
    graph = enumerate_chambers(_resolve_arrangement(args))
    body = graph_to_json(graph)
    report = {
        "count": len(graph.chambers),
        "boundary_count": sum(1 for c in graph.chambers if c.boundary),
        "chambers": body["chambers"],
        "edges": body["edges"],
    }
    _emit(args, dumps(report))
    return 0


def cmd_atoms(args) -> int:
    graph = enumerate_chambers(_resolve_arrangement(args))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", BoundaryContactWarning)
        found = atoms(graph, args.source, args.target, cap=args.cap)
    report = {
        "from": args.source,
        "to": args.target,
        "count": len(found),
        "length": len(found[0].edges) if found else None,
        "boundary_touching": sum(1 for p in found if path_touches_boundary(graph, p)),
        "atoms": [path_to_json(p) for p in found],
    }
    _emit(args, dumps(report))
    return 0


def cmd_pi1(args) -> int:
    graph = enumerate_chambers(_resolve_arrangement(args))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", BoundaryContactWarning)
        gens = generators(graph, max_atoms_per_chamber=args.cap)
        rels = relations(graph, length_cap=args.length_cap)
    report = {
        "generator_count": len(gens),
        "relation_count": len(rels),
        "generators": [
            {
                "atom": path_to_json(g.atom),
                "wall": g.wall,
                "loop": word_to_json(g.loop),
                "crossing": list(crossing_homomorphism(graph, g.loop)),
            }
            for g in gens
        ],
        "relations": [{"p": path_to_json(r.p), "q": path_to_json(r.q)} for r in rels],
    }
    _emit(args, dumps(report))
    return 0


def cmd_check(args) -> int:
    graph = enumerate_chambers(_resolve_arrangement(args))
    try:
        table = json.loads(Path(args.rep).read_text())
        assignment = {int(k): parse_perm(v) for k, v in table.items()}
    except (OSError, ValueError, TypeError, AttributeError) as exc:
        raise ParseFailure(f"cannot load representation from {args.rep}: {exc}") from exc
    degree = max((len(p.images) for p in assignment.values()), default=0)
    assignment = {k: p.extend(degree) for k, p in assignment.items()}
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", BoundaryContactWarning)
        rels = relations(graph, length_cap=args.length_cap)
    report_obj = check_representation(graph, assignment, rels)
    report = {
        "relations": report_obj.checked,
        "failures": list(report_obj.failures),
        "ok": report_obj.ok,
    }
    if args.depth is not None:
        proven = []
        for rel in rels:
            verdict = equal_in_groupoid(
                graph, rels, word_of_path(rel.p), word_of_path(rel.q), args.depth
            )
            proven.append(verdict is GroupoidEquality.PROVEN_EQUAL)
        report["rewrite_depth"] = args.depth
        report["rewrite_proven"] = proven
    _emit(args, dumps(report))
    return 0 if report_obj.ok else 1


def cmd_plot(args) -> int:
    arr = _resolve_arrangement(args)
    graph = enumerate_chambers(arr) if args.chambers else None
    _emit(args, arrangement_svg(arr, graph))
    return 0


def all_rank_two_data(max_rank: int):
    types = [DynkinType("A", n) for n in range(2, max_rank + 1)]
    types += [DynkinType("D", n) for n in range(4, max_rank + 1)]
    types += [DynkinType("E", n) for n in (6, 7, 8) if n <= max_rank]
    for delta in types:
        nodes = range(delta.rank)
        for i in nodes:
            for j in nodes:
                if i < j:
                    contracted = frozenset(nodes) - {i, j}
                    yield DynkinData(delta, contracted)


def cmd_search_figure(args) -> int:
    matches = []
    for data in all_rank_two_data(args.max_rank):
        count = len(build_finite(data).hyperplanes)
        if count == args.lines:
            matches.append({"data": str(data), "hyperplanes": count})
    _emit(args, dumps({"target": args.lines, "matches": matches}))
    return 0


def _add_input_args(parser, with_kind=True):
    parser.add_argument("data", nargs="?", help='Dynkin data such as "A3:J={1}"')
    parser.add_argument("--in", dest="infile", metavar="FILE", help="arrangement JSON file")
    if with_kind:
        group = parser.add_mutually_exclusive_group()
        group.add_argument("--central", action="store_true", help="finite arrangement (default)")
        group.add_argument("--affine", action="store_true", help="integer translates in a window")
        parser.add_argument("--radius", default=str(DEFAULT_RADIUS), metavar="p/q", help="window half-width")
        parser.add_argument("--window", metavar="p/q", help="shorthand for --affine --radius p/q")
    parser.add_argument("--out", metavar="FILE", help="write here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="floparr",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="emit the arrangement JSON")
    _add_input_args(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("chambers", help="enumerate chambers and wall-crossing edges")
    _add_input_args(p)
    p.set_defaults(func=cmd_chambers)

    p = sub.add_parser("atoms", help="minimal positive paths between two chambers")
    _add_input_args(p)
    p.add_argument("--from", dest="source", type=int, required=True, metavar="N")
    p.add_argument("--to", dest="target", type=int, required=True, metavar="N")
    p.add_argument("--cap", type=int, default=10**6, help="atom count cap")
    p.set_defaults(func=cmd_atoms)

    p = sub.add_parser("pi1", help="loop generators and atom-pair relations")
    _add_input_args(p)
    p.add_argument("--cap", type=int, default=10**6, help="atoms per chamber cap")
    p.add_argument("--length-cap", type=int, default=None, help="skip relations above this atom length")
    p.set_defaults(func=cmd_pi1)

    p = sub.add_parser("check", help="evaluate the relations in a permutation representation")
    _add_input_args(p)
    p.add_argument("--rep", required=True, metavar="FILE", help="JSON edge id -> cycle notation")
    p.add_argument("--length-cap", type=int, default=None)
    p.add_argument("--depth", type=int, default=None, help="also re-prove relations by rewriting")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("plot", help="SVG of a rank-2 arrangement")
    _add_input_args(p)
    p.add_argument("--chambers", action="store_true", help="overlay chamber witness dots")
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("search-figure", help="rank-2 contractions with a given line count")
    p.add_argument("--lines", type=int, required=True, metavar="N")
    p.add_argument("--max-rank", type=int, default=8, metavar="N")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_search_figure)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseFailure as exc:
        print(f"floparr: {exc}", file=sys.stderr)
        return 2
    except EmptySurvivingSet as exc:
        print(f"floparr: {exc}", file=sys.stderr)
        return 3
    except Overflow as exc:
        print(f"floparr: {exc}", file=sys.stderr)
        return 4
    except UnknownChamber as exc:
        print(f"floparr: {exc}", file=sys.stderr)
        return 5
    except NotRankTwo as exc:
        print(f"floparr: {exc}", file=sys.stderr)
        return 6
    except FloparrError as exc:
        print(f"floparr: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
