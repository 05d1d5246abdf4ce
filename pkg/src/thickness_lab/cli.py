"""Command-line front end.

Exit codes: 0 valid, 1 invalid, 2 usage error, 3 solver refusal.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO

from . import bounds, construction
from .graph import Graph, path_edges, read_graph
from .planarity import CensusPreconditionError, embed_edges, face_census
from .solver import SolverRefusal, thickness_exact

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_REFUSED = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse exits 2 already; keep usage on stderr
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


_SCALAR_LIST = re.compile(r"\[\s*([^\[\]{}]*?)\s*\]", re.S)


def _dump(obj: object, out: TextIO) -> None:
    text = json.dumps(obj, indent=2)
    # keep lists of scalars (edges, lengths) on one line
    text = _SCALAR_LIST.sub(lambda mt: "[" + re.sub(r"\s*\n\s*", " ", mt.group(1)) + "]", text)
    out.write(text + "\n")


def _emit(text: str, out_path: Optional[str], stdout: TextIO) -> None:
    if out_path:
        Path(out_path).write_text(text)
    else:
        stdout.write(text)


def _load_json(path: str) -> dict:
    return json.loads(Path(path).read_text())


def cmd_generate(args: argparse.Namespace, stdout: TextIO) -> int:
    dec = construction.build_decomposition(args.m)
    if args.format == "json":
        text = construction.dump_decomposition(dec.to_dict())
    elif args.format == "graph6":
        text = construction.parts_to_graph6(dec.n_vertices, dec.parts)
    else:
        text = construction.to_dot(dec.n_vertices, dec.parts, name=f"K8xP{args.m}")
    _emit(text, args.out, stdout)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, stdout: TextIO) -> int:
    host, parts = construction.load_decomposition(_load_json(args.file))
    report = construction.verify_decomposition(host, parts)
    out = report.to_dict()
    out["n_parts"] = len(parts)
    out["max_parts"] = args.k
    _dump(out, stdout)
    return EXIT_OK if report.valid and len(parts) <= args.k else EXIT_INVALID


def cmd_bounds(args: argparse.Namespace, stdout: TextIO) -> int:
    report = bounds.thickness_bounds(args.n, args.m)
    out = {"n": args.n, "m": args.m, **report.to_dict()}
    if args.m == 2 and args.n >= 2:
        out["euler_lower_bound"] = bounds.euler_lower_bound_kn_p2(args.n)
        out["face_upper_bound"] = bounds.face_upper_bound(args.n)
    _dump(out, stdout)
    return EXIT_OK


def _read_solver_input(path: str) -> Graph:
    text = Path(path).read_text()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        host, _ = construction.load_decomposition({"parts": [], **json.loads(text)})
        return host
    return read_graph(text)


def cmd_solve(args: argparse.Namespace, stdout: TextIO) -> int:
    g = _read_solver_input(args.file)
    try:
        result = thickness_exact(
            g, args.k_max, max_edges=args.max_edges, node_cap=args.node_cap, parallel=args.parallel
        )
    except SolverRefusal as exc:
        _dump({"refused": True, "reason": str(exc)}, stdout)
        return EXIT_REFUSED
    _dump(result.to_dict(graph=g), stdout)
    return EXIT_OK


def cmd_gadgets(args: argparse.Namespace, stdout: TextIO) -> int:
    kinds = [construction.GadgetKind(args.kind.upper())] if args.kind else list(construction.GadgetKind)
    _dump({k.value: [list(e) for e in construction.gadget_edges(k)] for k in kinds}, stdout)
    return EXIT_OK


def cmd_census(args: argparse.Namespace, stdout: TextIO) -> int:
    data = _load_json(args.file)
    if data.get("m") != 2 or "n" not in data:
        print("census needs a decomposition of K_n x P_2 (keys n and m=2)", file=sys.stderr)
        return EXIT_USAGE
    n = int(data["n"])
    host, parts = construction.load_decomposition(data)
    report = construction.verify_decomposition(host, parts)
    if not report.valid:
        _dump({"error": "not a planar decomposition", "report": report.to_dict()}, stdout)
        return EXIT_INVALID
    if args.normalize:
        parts = construction.normalize_decomposition(parts, host.n_vertices)
    embeddings = [embed_edges(host.n_vertices, p) for p in parts]
    try:
        census = face_census(embeddings, path_edges(n, 2))
    except CensusPreconditionError as exc:
        _dump({"error": str(exc)}, stdout)
        return EXIT_INVALID
    out = census.to_dict()
    out["euler_lower_bound"] = bounds.euler_lower_bound_kn_p2(n)
    out["n_parts"] = len(parts)
    _dump(out, stdout)
    return EXIT_OK if census.ok else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="thickness-lab", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", help="biplanar decomposition of K8 x Pm")
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--format", choices=["json", "graph6", "dot"], default="json")
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="check a decomposition file")
    v.add_argument("--file", required=True)
    v.add_argument("--k", type=int, default=2, help="largest accepted number of parts (default 2)")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bounds", help="thickness of K_n, K_n x P2 or K_n x Pm")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--m", type=int)
    b.set_defaults(func=cmd_bounds)

    s = sub.add_parser("solve", help="exact thickness of a small graph")
    s.add_argument("--file", required=True, help="graph6, edge list, or decomposition JSON")
    s.add_argument("--k-max", type=int, default=6)
    s.add_argument("--max-edges", type=int, default=36)
    s.add_argument("--node-cap", type=int, help="overrides THICKNESS_LAB_NODE_CAP")
    s.add_argument("--parallel", action="store_true")
    s.set_defaults(func=cmd_solve)

    gd = sub.add_parser("gadgets", help="gadget edge lists")
    gd.add_argument("--kind", choices=["h1", "h2", "i1", "i2", "H1", "H2", "I1", "I2"])
    gd.set_defaults(func=cmd_gadgets)

    c = sub.add_parser("census", help="face census of a K_n x P2 decomposition")
    c.add_argument("--file", required=True)
    c.add_argument("--normalize", action="store_true", help="give every part two edges first")
    c.set_defaults(func=cmd_census)
    return p


def run(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for name in ("m", "n", "k_max"):
        val = getattr(args, name, None)
        if val is not None and val < 1:
            parser.print_usage(sys.stderr)
            print(f"--{name.replace('_', '-')} must be >= 1", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args, stdout)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
