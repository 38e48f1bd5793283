"""Command-line interface: document checks, conversions, enumeration,
verification sweeps, SVG rendering, and the wire service."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .collection import (
    WSCollection,
    apply_mutation,
    extend_to_maximal,
    mutation_sites,
    validate,
)
from .documents import (
    necklace_to_doc,
    parse,
    permutation_to_doc,
    serialize,
    tiling_to_doc,
)
from .errors import ParseError, WorkbenchError
from .graph import PlabicGraph, check_reduced, face_labels
from .positroid import (
    DecoratedPermutation,
    GrassmannNecklace,
    Positroid,
    decorated_to_necklace,
    necklace_to_decorated,
    positroid_bases,
    uniform_necklace,
)
from .collection import enumerate_maximal
from .svg import render_graph_svg, render_tiling_svg
from .tiling import build_tiling, embed_tiling
from .verify import VERIFIERS

USAGE_ERROR = 2
VIOLATION = 1


def _load(path: str):
    try:
        return parse(Path(path).read_text())
    except FileNotFoundError:
        raise ParseError(f"no such file: {path}")


def _site_to_dict(site) -> dict:
    return {
        "S": list(site.S.members),
        "a": site.a,
        "b": site.b,
        "c": site.c,
        "d": site.d,
        "removes": list(site.removes.members),
        "adds": list(site.adds.members),
    }


def _resolve_anchor(args) -> GrassmannNecklace:
    if args.uniform:
        if args.n <= 0:
            raise ParseError("--uniform needs -n and -k")
        return uniform_necklace(args.n, args.k)
    if not args.anchor:
        raise ParseError("provide --anchor FILE or --uniform -n N -k K")
    obj = _load(args.anchor)
    if isinstance(obj, GrassmannNecklace):
        return obj
    if isinstance(obj, DecoratedPermutation):
        return decorated_to_necklace(obj)
    if isinstance(obj, WSCollection) and obj.anchor is not None:
        return obj.anchor
    raise ParseError("anchor document must be a necklace, permutation, or anchored collection")


def cmd_check(args) -> int:
    obj = _load(args.file)
    if isinstance(obj, WSCollection):
        report = validate(obj, obj.anchor)
        if report.ok:
            print(f"ok: collection with {len(obj)} sets, n={obj.ground.n}, k={obj.k}")
            return 0
        print(report.summary())
        return VIOLATION
    if isinstance(obj, PlabicGraph):
        verdict = check_reduced(obj)
        if verdict.reduced:
            labeling, rank = face_labels(obj)
            print(f"ok: reduced plabic graph, rank {rank}, {len(labeling.labels)} faces")
            return 0
        print(f"not reduced: {verdict.violation.condition} witness {verdict.violation.witness}")
        return VIOLATION
    print(f"ok: {type(obj).__name__} parsed")
    return 0


def cmd_necklace(args) -> int:
    obj = _load(args.file)
    if isinstance(obj, DecoratedPermutation):
        print(serialize(necklace_to_doc(decorated_to_necklace(obj))), end="")
        return 0
    if isinstance(obj, GrassmannNecklace):
        print(serialize(permutation_to_doc(necklace_to_decorated(obj))), end="")
        return 0
    raise ParseError("necklace conversion needs a permutation or necklace document")


def cmd_bases(args) -> int:
    anchor = _resolve_anchor(args)
    bases = positroid_bases(Positroid(anchor))
    print(json.dumps([list(b.members) for b in bases]))
    return 0


def cmd_maximalize(args) -> int:
    obj = _load(args.file)
    if not isinstance(obj, WSCollection) or obj.anchor is None:
        raise ParseError("maximalize needs an anchored collection document")
    print(serialize(extend_to_maximal(obj)), end="")
    return 0


def cmd_mutations(args) -> int:
    obj = _load(args.file)
    if not isinstance(obj, WSCollection):
        raise ParseError("mutations needs a collection document")
    sites = mutation_sites(obj)
    print(json.dumps([_site_to_dict(s) for s in sites], indent=2))
    return 0


def cmd_mutate(args) -> int:
    obj = _load(args.file)
    if not isinstance(obj, WSCollection):
        raise ParseError("mutate needs a collection document")
    sites = mutation_sites(obj)
    if args.site is None and args.removes is None:
        print("mutate needs --site INDEX or --removes '[...]'", file=sys.stderr)
        return USAGE_ERROR
    if args.site is not None:
        if not 0 <= args.site < len(sites):
            print(f"site index out of range (have {len(sites)})", file=sys.stderr)
            return USAGE_ERROR
        site = sites[args.site]
    else:
        wanted = sorted(json.loads(args.removes))
        match = [s for s in sites if list(s.removes.members) == wanted]
        if not match:
            print(f"no site removes {wanted}", file=sys.stderr)
            return VIOLATION
        site = match[0]
    print(serialize(apply_mutation(obj, site)), end="")
    return 0


def cmd_enumerate(args) -> int:
    anchor = _resolve_anchor(args)
    collections = enumerate_maximal(anchor, args.mode)
    if args.count:
        print(len(collections))
        return 0
    print(json.dumps([[list(s.members) for s in c.sets] for c in collections]))
    return 0


def cmd_verify(args) -> int:
    fn = VERIFIERS[args.suite]
    kwargs = {}
    if args.suite in ("winding", "hull", "connectedness", "positroid", "duality") and args.n:
        kwargs["n_max"] = args.n
    if args.suite == "purity" and args.n:
        kwargs["pairs"] = ((args.n, args.k),)
    report = fn(**kwargs)
    if args.json:
        print(json.dumps(report.to_doc(), indent=2, sort_keys=True))
    else:
        print(report.render())
    return 0 if report.passed else VIOLATION


def cmd_render(args) -> int:
    obj = _load(args.file)
    if isinstance(obj, WSCollection):
        svg = render_tiling_svg(embed_tiling(build_tiling(obj)))
    elif isinstance(obj, PlabicGraph):
        svg = render_graph_svg(obj)
    else:
        raise ParseError("render needs a collection or plabic-graph document")
    if args.out:
        Path(args.out).write_text(svg)
        print(f"wrote {args.out}")
    else:
        print(svg, end="")
    return 0


def cmd_tiling(args) -> int:
    obj = _load(args.file)
    if not isinstance(obj, WSCollection):
        raise ParseError("tiling needs a collection document")
    print(serialize(tiling_to_doc(embed_tiling(build_tiling(obj)))), end="")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plabic",
        description="Weakly separated collections, positroids, plabic graphs and tilings.",
    )
    parser.add_argument("--version", action="version", version=f"plabic {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a collection or graph document")
    p.add_argument("file")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("necklace", help="convert permutation <-> necklace")
    p.add_argument("file")
    p.set_defaults(fn=cmd_necklace)

    for name, fn in (("bases", cmd_bases), ("enumerate", cmd_enumerate)):
        p = sub.add_parser(name, help=f"{name} for an anchored positroid")
        p.add_argument("--anchor", help="necklace/permutation/collection document")
        p.add_argument("--uniform", action="store_true", help="use the uniform necklace")
        p.add_argument("-n", type=int, default=0)
        p.add_argument("-k", type=int, default=0)
        if name == "enumerate":
            p.add_argument("--mode", choices=("closure", "bruteforce"), default="closure")
            p.add_argument("--count", action="store_true")
        p.set_defaults(fn=fn)

    p = sub.add_parser("maximalize", help="extend a collection to a maximal one")
    p.add_argument("file")
    p.set_defaults(fn=cmd_maximalize)

    p = sub.add_parser("mutations", help="list mutation sites of a collection")
    p.add_argument("file")
    p.set_defaults(fn=cmd_mutations)

    p = sub.add_parser("mutate", help="apply one mutation")
    p.add_argument("file")
    p.add_argument("--site", type=int, default=None, help="site index from 'mutations'")
    p.add_argument("--removes", default=None, help="JSON list naming the removed set")
    p.set_defaults(fn=cmd_mutate)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("suite", choices=sorted(VERIFIERS))
    p.add_argument("-n", type=int, default=0, help="size bound where applicable")
    p.add_argument("-k", type=int, default=0, help="rank, for 'verify purity -n N -k K'")
    p.add_argument("--json", action="store_true", help="emit a report document")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("render", help="render a document to SVG")
    p.add_argument("file")
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(fn=cmd_render)

    p = sub.add_parser("tiling", help="embed a collection's tiling and print it")
    p.add_argument("file")
    p.set_defaults(fn=cmd_tiling)

    p = sub.add_parser("serve", help="start the JSON wire service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8642)
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return VIOLATION
    except WorkbenchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return VIOLATION


if __name__ == "__main__":
    sys.exit(main())
