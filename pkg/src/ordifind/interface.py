"""Factorization exchange documents, plot data, and the static file server.

The JSON document is the contract between the factorization pipeline and
the browser UI: it carries the context, the factors as per-tick attribute
deltas, and summary stats, and is self-contained enough to recompute
positions, selection distances, and rankings without the core library.
Field names are stable: ``version``, ``objects``, ``attributes``,
``incidence``, ``factors[].ticks[].gained``, ``factors[].new_coverage``,
``stats``.
"""

from __future__ import annotations

import json
import mimetypes
import os
from dataclasses import dataclass
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from typing import Sequence

from .bitsets import set_of
from .context import FormalContext
from .factorize import Factorization
from .lattice import DEFAULT_MAX_CONCEPTS
from .metrics import position

DOCUMENT_VERSION = 1

MAX_CONCEPTS_ENV = "ORDIFIND_MAX_CONCEPTS"


class DocumentError(ValueError):
    """The bytes do not form a valid factorization document."""


@dataclass(frozen=True)
class DocumentFactor:
    """One factor as stored in a document: tick deltas plus coverage."""

    gained: tuple[frozenset[int], ...]
    new_coverage: int

    @property
    def tick_count(self) -> int:
        return len(self.gained)

    def cumulative(self) -> list[frozenset[int]]:
        sets = []
        acc: frozenset[int] = frozenset()
        for g in self.gained:
            acc = acc | g
            sets.append(acc)
        return sets


@dataclass(frozen=True)
class FactorizationDocument:
    """Parsed document; ``incidence`` is None when it was exported dropped."""

    objects: tuple[str, ...]
    attributes: tuple[str, ...]
    incidence: tuple[frozenset[int], ...] | None
    factors: tuple[DocumentFactor, ...]
    concepts: int | None
    incidence_count: int

    def require_incidence(self) -> tuple[frozenset[int], ...]:
        if self.incidence is None:
            raise DocumentError("document carries no incidence data")
        return self.incidence

    def to_context(self) -> FormalContext:
        rows = self.require_incidence()
        return FormalContext.from_rows(self.objects, self.attributes, rows)

    def object_position(self, factor_index: int, g: int) -> int:
        row = self.require_incidence()[g]
        pos = 0
        for i, cum in enumerate(self.factors[factor_index].cumulative(), start=1):
            if not cum <= row:
                break
            pos = i
        return pos

    def positions(self, g: int) -> list[int]:
        return [self.object_position(i, g) for i in range(len(self.factors))]

    def selection_distance(self, g: int, sel: Sequence[int]) -> int:
        row = self.require_incidence()[g]
        return len(self._demanded(sel) - row)

    def rank(self, sel: Sequence[int]) -> list[tuple[str, int]]:
        rows = self.require_incidence()
        demanded = self._demanded(sel)
        ranked = [
            (self.objects[g], len(demanded - rows[g]))
            for g in range(len(self.objects))
        ]
        ranked.sort(key=lambda item: item[1])
        return ranked

    def _demanded(self, sel: Sequence[int]) -> frozenset[int]:
        if len(sel) != len(self.factors):
            raise DocumentError(
                f"selection has {len(sel)} positions, document has {len(self.factors)} factors"
            )
        demanded: frozenset[int] = frozenset()
        for p, factor in zip(sel, self.factors):
            if not 0 <= p <= factor.tick_count:
                raise DocumentError(f"position {p} out of range 0..{factor.tick_count}")
            cum = factor.cumulative()
            if p:
                demanded = demanded | cum[p - 1]
        return demanded


def export_factorization(
    ctx: FormalContext,
    factorization: Factorization,
    concept_count: int | None = None,
    include_incidence: bool = True,
) -> bytes:
    """Serialize a factorization to deterministic document bytes."""
    doc = FactorizationDocument(
        objects=ctx.objects,
        attributes=ctx.attributes,
        incidence=tuple(set_of(mask) for mask in ctx.row_masks)
        if include_incidence
        else None,
        factors=tuple(
            DocumentFactor(
                gained=tuple(t.gained for t in f.ticks),
                new_coverage=f.new_coverage,
            )
            for f in factorization.factors
        ),
        concepts=concept_count,
        incidence_count=len(ctx.incidence),
    )
    return document_to_bytes(doc)


def document_to_bytes(doc: FactorizationDocument) -> bytes:
    payload = {
        "version": DOCUMENT_VERSION,
        "objects": list(doc.objects),
        "attributes": list(doc.attributes),
        "incidence": None
        if doc.incidence is None
        else [sorted(row) for row in doc.incidence],
        "factors": [
            {
                "ticks": [
                    {"position": i + 1, "gained": sorted(g)}
                    for i, g in enumerate(f.gained)
                ],
                "new_coverage": f.new_coverage,
            }
            for f in doc.factors
        ],
        "stats": {
            "concepts": doc.concepts,
            "factors": len(doc.factors),
            "incidences": doc.incidence_count,
        },
    }
    return (json.dumps(payload, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def import_factorization(data: bytes | str) -> FactorizationDocument:
    """Parse and validate document bytes."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from None
    if not isinstance(payload, dict):
        raise DocumentError("document root must be an object")
    if payload.get("version") != DOCUMENT_VERSION:
        raise DocumentError(f"unsupported document version {payload.get('version')!r}")

    objects = _string_list(payload, "objects")
    attributes = _string_list(payload, "attributes")
    n_attrs = len(attributes)

    raw_incidence = payload.get("incidence")
    incidence: tuple[frozenset[int], ...] | None
    if raw_incidence is None:
        incidence = None
    else:
        if not isinstance(raw_incidence, list) or len(raw_incidence) != len(objects):
            raise DocumentError("incidence must list one attribute array per object")
        incidence = tuple(
            frozenset(_index_list(row, n_attrs, f"incidence[{g}]"))
            for g, row in enumerate(raw_incidence)
        )

    raw_factors = payload.get("factors")
    if not isinstance(raw_factors, list):
        raise DocumentError("factors must be an array")
    factors = []
    for fi, rf in enumerate(raw_factors):
        if not isinstance(rf, dict):
            raise DocumentError(f"factors[{fi}] must be an object")
        ticks = rf.get("ticks")
        if not isinstance(ticks, list):
            raise DocumentError(f"factors[{fi}].ticks must be an array")
        gained = []
        for ti, tick in enumerate(ticks):
            if not isinstance(tick, dict) or tick.get("position") != ti + 1:
                raise DocumentError(
                    f"factors[{fi}].ticks[{ti}] must carry position {ti + 1}"
                )
            delta = frozenset(
                _index_list(tick.get("gained"), n_attrs, f"factors[{fi}].ticks[{ti}].gained")
            )
            if not delta:
                raise DocumentError(f"factors[{fi}].ticks[{ti}] has an empty delta")
            gained.append(delta)
        coverage = rf.get("new_coverage")
        if not isinstance(coverage, int) or coverage < 0:
            raise DocumentError(f"factors[{fi}].new_coverage must be a non-negative integer")
        factors.append(DocumentFactor(gained=tuple(gained), new_coverage=coverage))

    stats = payload.get("stats")
    if not isinstance(stats, dict):
        raise DocumentError("stats must be an object")
    concepts = stats.get("concepts")
    if concepts is not None and not isinstance(concepts, int):
        raise DocumentError("stats.concepts must be an integer or null")
    incidences = stats.get("incidences")
    if not isinstance(incidences, int):
        raise DocumentError("stats.incidences must be an integer")

    return FactorizationDocument(
        objects=tuple(objects),
        attributes=tuple(attributes),
        incidence=incidence,
        factors=tuple(factors),
        concepts=concepts,
        incidence_count=incidences,
    )


def _string_list(payload: dict, key: str) -> list[str]:
    value = payload.get(key)
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise DocumentError(f"{key} must be an array of strings")
    return value


def _index_list(value, bound: int, where: str) -> list[int]:
    if not isinstance(value, list) or not all(
        isinstance(v, int) and 0 <= v < bound for v in value
    ):
        raise DocumentError(f"{where} must be an array of indices below {bound}")
    return value


def plot2d(
    ctx: FormalContext, factorization: Factorization
) -> list[tuple[str, int, int]]:
    """Object coordinates in the two leading factors (y=0 with one factor).

    The greedy order puts the largest factor first, so the leading two
    factors are the two largest ones.
    """
    factors = factorization.factors
    coords = []
    for g, name in enumerate(ctx.objects):
        x = position(ctx, factors[0], g) if len(factors) >= 1 else 0
        y = position(ctx, factors[1], g) if len(factors) >= 2 else 0
        coords.append((name, x, y))
    return coords


def max_concepts_from_env(default: int = DEFAULT_MAX_CONCEPTS) -> int:
    """Lattice size cap, overridable via ORDIFIND_MAX_CONCEPTS."""
    raw = os.environ.get(MAX_CONCEPTS_ENV)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{MAX_CONCEPTS_ENV} must be an integer, got {raw!r}") from None


_FALLBACK_PAGE = b"""<!doctype html>
<html><head><meta charset="utf-8"><title>ordinal factors</title></head>
<body><p>No UI assets bundled. The factorization document is at
<a href="/factorization.json">/factorization.json</a>.</p></body></html>
"""


def packaged_ui_dir() -> Path | None:
    """Directory with built UI assets, if the package ships them."""
    static = Path(__file__).parent / "static"
    if (static / "index.html").is_file():
        return static
    return None


class _DocumentHandler(BaseHTTPRequestHandler):
    server_version = "ordifind"
    document: bytes = b"{}"
    ui_dir: Path | None = None

    def log_message(self, *args):  # quiet by default
        pass

    def do_GET(self):
        path = self.path.split("?", 1)[0]
        if path == "/factorization.json":
            self._send(200, "application/json; charset=utf-8", self.document)
            return
        if path == "/":
            path = "/index.html"
        if self.ui_dir is None:
            if path == "/index.html":
                self._send(200, "text/html; charset=utf-8", _FALLBACK_PAGE)
            else:
                self._send(404, "text/plain; charset=utf-8", b"not found\n")
            return
        target = (self.ui_dir / path.lstrip("/")).resolve()
        if not target.is_relative_to(self.ui_dir.resolve()) or not target.is_file():
            self._send(404, "text/plain; charset=utf-8", b"not found\n")
            return
        ctype = mimetypes.guess_type(str(target))[0] or "application/octet-stream"
        self._send(200, ctype, target.read_bytes())

    def _send(self, status: int, ctype: str, body: bytes):
        self.send_response(status)
        self.send_header("Content-Type", ctype)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)


def create_server(
    document: bytes,
    host: str = "127.0.0.1",
    port: int = 0,
    ui_dir: Path | None = None,
) -> ThreadingHTTPServer:
    """HTTP server for one document plus static UI assets; caller serves/closes."""
    handler = type(
        "_BoundHandler", (_DocumentHandler,), {"document": document, "ui_dir": ui_dir}
    )
    return ThreadingHTTPServer((host, port), handler)
