"""Command line front end.

Subcommands:
  factorize  compute a greedy ordinal factorization, write the JSON document
  lattice    concept lattice stats / debug dump
  rank       rank objects by selection distance against a document
  position   per-factor supported positions of objects in a document
  plot2d     object coordinates in the two leading factors
  serve      serve a document plus the browser UI over local HTTP
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import factorize as fz
from . import interface, lattice as lt
from .context import FORMAT_CSV, FORMAT_CXT, parse_context


def _read_context(path: str, fmt: str):
    data = Path(path).read_bytes()
    if fmt == "auto":
        fmt = FORMAT_CSV if path.lower().endswith(".csv") else FORMAT_CXT
    return parse_context(data, fmt)


def _read_document(path: str) -> interface.FactorizationDocument:
    return interface.import_factorization(Path(path).read_bytes())


def _parse_selection(spec: str, n_factors: int) -> list[int]:
    """Parse 'f1=3,f2=0' into a full position vector (unset factors are 0)."""
    sel = [0] * n_factors
    if not spec:
        return sel
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        key, _, value = part.partition("=")
        if not key.startswith("f") or not value:
            raise ValueError(f"bad selection entry {part!r}, expected fN=POS")
        try:
            idx = int(key[1:])
            pos = int(value)
        except ValueError:
            raise ValueError(f"bad selection entry {part!r}, expected fN=POS") from None
        if not 1 <= idx <= n_factors:
            raise ValueError(f"factor f{idx} out of range 1..{n_factors}")
        sel[idx - 1] = pos
    return sel


def _cmd_factorize(args) -> int:
    ctx = _read_context(args.input, args.format)
    lat = lt.build_lattice(ctx, args.max_concepts)
    algo = fz.ordifind if args.algorithm == "ordifind" else fz.factorize_naive
    factorization = algo(ctx, lat)
    doc = interface.export_factorization(
        ctx,
        factorization,
        concept_count=len(lat),
        include_incidence=not args.no_incidence,
    )
    out = Path(args.out) if args.out else Path(args.input).with_suffix(".factors.json")
    out.write_bytes(doc)
    print(f"factors: {factorization.width}")
    for i, factor in enumerate(factorization.factors, start=1):
        noun = "incidence" if factor.new_coverage == 1 else "incidences"
        print(
            f"factor {i}: covers {factor.new_coverage} new {noun}, "
            f"{len(factor.ticks)} ticks"
        )
    print(f"wrote {out}")
    return 0


def _cmd_lattice(args) -> int:
    ctx = _read_context(args.input, args.format)
    lat = lt.build_lattice(ctx, args.max_concepts)
    print(f"concepts: {len(lat)}")
    if args.stats:
        n_covers = sum(len(u) for u in lat.upper_covers)
        print(f"cover edges: {n_covers}")
        print(f"objects: {ctx.n_objects}")
        print(f"attributes: {ctx.n_attributes}")
        print(f"incidences: {len(ctx.incidence)}")
    if args.dump:
        Path(args.dump).write_text(
            json.dumps(lt.lattice_debug_json(ctx, lat), indent=2, ensure_ascii=False)
            + "\n",
            encoding="utf-8",
        )
        print(f"wrote {args.dump}")
    return 0


def _cmd_rank(args) -> int:
    doc = _read_document(args.document)
    sel = _parse_selection(args.select, len(doc.factors))
    for name, dist in doc.rank(sel):
        print(f"{name}\t{dist}")
    return 0


def _cmd_position(args) -> int:
    doc = _read_document(args.document)
    names = [args.object] if args.object else list(doc.objects)
    for name in names:
        if name not in doc.objects:
            raise ValueError(f"unknown object {name!r}")
        g = doc.objects.index(name)
        positions = doc.positions(g)
        if args.object:
            for i, pos in enumerate(positions, start=1):
                print(f"f{i}\t{pos}")
        else:
            print(name + "\t" + "\t".join(str(p) for p in positions))
    return 0


def _cmd_plot2d(args) -> int:
    doc = _read_document(args.document)
    for g, name in enumerate(doc.objects):
        x = doc.object_position(0, g) if len(doc.factors) >= 1 else 0
        y = doc.object_position(1, g) if len(doc.factors) >= 2 else 0
        print(f"{name}\t{x}\t{y}")
    return 0


def _cmd_serve(args) -> int:
    data = Path(args.document).read_bytes()
    interface.import_factorization(data)  # validate before serving
    ui_dir = Path(args.ui_dir) if args.ui_dir else interface.packaged_ui_dir()
    server = interface.create_server(data, args.host, args.port, ui_dir)
    host, port = server.server_address[:2]
    print(f"serving on http://{host}:{port} (ctrl-c to stop)")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordifind",
        description="Greedy ordinal factorization of binary datasets",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_context_opts(p):
        p.add_argument("input", help="context file (.cxt or .csv)")
        p.add_argument(
            "--format",
            choices=["auto", FORMAT_CXT, "cxt", FORMAT_CSV],
            default="auto",
        )
        p.add_argument(
            "--max-concepts",
            type=int,
            default=interface.max_concepts_from_env(),
            help="abort if the lattice grows beyond this many concepts",
        )

    p = sub.add_parser("factorize", help="compute a greedy ordinal factorization")
    add_context_opts(p)
    p.add_argument("--out", help="output document path (default: INPUT.factors.json)")
    p.add_argument(
        "--algorithm",
        choices=["ordifind", "naive"],
        default="ordifind",
        help="incremental (default) or repeated-full-search reference",
    )
    p.add_argument(
        "--no-incidence",
        action="store_true",
        help="omit the incidence from the document (ranking needs it)",
    )
    p.set_defaults(func=_cmd_factorize)

    p = sub.add_parser("lattice", help="concept lattice statistics")
    add_context_opts(p)
    p.add_argument("--stats", action="store_true", help="print extended statistics")
    p.add_argument("--dump", help="write a JSON debug dump of concepts and covers")
    p.set_defaults(func=_cmd_lattice)

    p = sub.add_parser("rank", help="rank objects by selection distance")
    p.add_argument("document", help="factorization document (.factors.json)")
    p.add_argument(
        "--select",
        default="",
        help="per-factor positions, e.g. f1=3,f2=0 (unset factors are 0)",
    )
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("position", help="supported positions of objects")
    p.add_argument("document")
    p.add_argument("--object", help="single object name (default: all objects)")
    p.set_defaults(func=_cmd_position)

    p = sub.add_parser("plot2d", help="coordinates in the two leading factors")
    p.add_argument("document")
    p.set_defaults(func=_cmd_plot2d)

    p = sub.add_parser("serve", help="serve a document and the UI over HTTP")
    p.add_argument("document")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8137)
    p.add_argument("--ui-dir", help="directory with UI assets (default: bundled)")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except (ValueError, OSError, lt.ConceptLimitError) as exc:
        # argparse usage errors exit(2) on their own before reaching here
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
