"""Formal contexts: binary object/attribute datasets and their derivation operators.

A context couples an ordered list of object names, an ordered list of
attribute names, and an incidence relation over (object index, attribute
index). Contexts are immutable after construction; every operation here is
pure, so a context can be shared freely across threads.

Supported file formats are the Burmeister ``.cxt`` layout and a simple CSV
layout (header row of attribute names, first column of object names, cells
in ``{0, 1, x, X, ""}``).
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .bitsets import bits, set_of

FORMAT_CXT = "burmeister-cxt"
FORMAT_CSV = "csv"

_FORMAT_ALIASES = {
    "burmeister-cxt": FORMAT_CXT,
    "cxt": FORMAT_CXT,
    "csv": FORMAT_CSV,
}


class ParseError(ValueError):
    """Malformed context file; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class FormalContext:
    """An immutable (objects, attributes, incidence) triple.

    ``incidence`` holds (object index, attribute index) pairs. Object and
    attribute names must be pairwise distinct within their lists; all other
    code refers to objects and attributes positionally.
    """

    objects: tuple[str, ...]
    attributes: tuple[str, ...]
    incidence: frozenset[tuple[int, int]]

    def __post_init__(self):
        if len(set(self.objects)) != len(self.objects):
            raise ValueError("duplicate object names")
        if len(set(self.attributes)) != len(self.attributes):
            raise ValueError("duplicate attribute names")
        n, m = len(self.objects), len(self.attributes)
        for g, a in self.incidence:
            if not (0 <= g < n and 0 <= a < m):
                raise ValueError(f"incidence pair {(g, a)} out of range")

    @classmethod
    def from_rows(
        cls,
        objects: Iterable[str],
        attributes: Iterable[str],
        rows: Iterable[Iterable[int]],
    ) -> "FormalContext":
        """Build a context from per-object lists of attribute indices."""
        pairs = frozenset(
            (g, a) for g, row in enumerate(rows) for a in row
        )
        return cls(tuple(objects), tuple(attributes), pairs)

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def n_attributes(self) -> int:
        return len(self.attributes)

    # Row-major and column-major bitmask views of the incidence. Both are
    # kept so each derivation operator is a plain intersection loop.
    @cached_property
    def row_masks(self) -> tuple[int, ...]:
        rows = [0] * len(self.objects)
        for g, a in self.incidence:
            rows[g] |= 1 << a
        return tuple(rows)

    @cached_property
    def col_masks(self) -> tuple[int, ...]:
        cols = [0] * len(self.attributes)
        for g, a in self.incidence:
            cols[a] |= 1 << g
        return tuple(cols)

    @property
    def all_objects_mask(self) -> int:
        return (1 << len(self.objects)) - 1

    @property
    def all_attributes_mask(self) -> int:
        return (1 << len(self.attributes)) - 1

    def object_index(self, name: str) -> int:
        try:
            return self.objects.index(name)
        except ValueError:
            raise KeyError(f"unknown object {name!r}") from None

    def attribute_index(self, name: str) -> int:
        try:
            return self.attributes.index(name)
        except ValueError:
            raise KeyError(f"unknown attribute {name!r}") from None


def derive_extent(ctx: FormalContext, objects: Iterable[int]) -> frozenset[int]:
    """Attributes shared by all given objects (the empty set derives to all)."""
    mask = ctx.all_attributes_mask
    for g in objects:
        if not 0 <= g < ctx.n_objects:
            raise ValueError(f"object index {g} out of range")
        mask &= ctx.row_masks[g]
    return set_of(mask)


def derive_intent(ctx: FormalContext, attributes: Iterable[int]) -> frozenset[int]:
    """Objects having all given attributes (the empty set derives to all)."""
    mask = ctx.all_objects_mask
    for a in attributes:
        if not 0 <= a < ctx.n_attributes:
            raise ValueError(f"attribute index {a} out of range")
        mask &= ctx.col_masks[a]
    return set_of(mask)


def _normalize_format(fmt: str) -> str:
    try:
        return _FORMAT_ALIASES[fmt]
    except KeyError:
        raise ValueError(f"unknown context format {fmt!r}") from None


def parse_context(data: bytes | str, fmt: str = FORMAT_CXT) -> FormalContext:
    """Parse a context from ``.cxt`` or CSV bytes/text."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    fmt = _normalize_format(fmt)
    if fmt == FORMAT_CXT:
        return _parse_cxt(text)
    return _parse_csv(text)


def serialize_context(ctx: FormalContext, fmt: str = FORMAT_CXT) -> bytes:
    """Serialize a context; round-trips through parse_context."""
    fmt = _normalize_format(fmt)
    if fmt == FORMAT_CXT:
        return _serialize_cxt(ctx)
    return _serialize_csv(ctx)


def _parse_cxt(text: str) -> FormalContext:
    # Layout: "B", blank, |G|, |M|, blank, object names, attribute names,
    # then |G| rows of '.'/'X' (lowercase 'x' accepted).
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    lines = [ln.rstrip("\r") for ln in lines]

    def need(idx: int, what: str) -> str:
        if idx >= len(lines):
            raise ParseError(f"unexpected end of file, expected {what}", len(lines) + 1)
        return lines[idx]

    if need(0, "magic line 'B'").strip() != "B":
        raise ParseError("expected Burmeister magic line 'B'", 1)
    if need(1, "blank line") .strip() != "":
        raise ParseError("expected blank line after magic", 2)
    try:
        n_objects = int(need(2, "object count").strip())
        n_attributes = int(need(3, "attribute count").strip())
    except ValueError:
        raise ParseError("object/attribute counts must be integers", 3) from None
    if n_objects < 0 or n_attributes < 0:
        raise ParseError("object/attribute counts must be non-negative", 3)
    if need(4, "blank line").strip() != "":
        raise ParseError("expected blank line after counts", 5)

    base = 5
    objects = []
    for i in range(n_objects):
        objects.append(need(base + i, "object name"))
    attributes = []
    for i in range(n_attributes):
        attributes.append(need(base + n_objects + i, "attribute name"))

    _check_names(objects, "object", base + 1)
    _check_names(attributes, "attribute", base + n_objects + 1)

    rows_base = base + n_objects + n_attributes
    pairs = set()
    for g in range(n_objects):
        line_no = rows_base + g + 1
        row = need(rows_base + g, "incidence row")
        if len(row) != n_attributes:
            raise ParseError(
                f"incidence row has {len(row)} cells, expected {n_attributes}", line_no
            )
        for a, ch in enumerate(row):
            if ch in "Xx":
                pairs.add((g, a))
            elif ch != ".":
                raise ParseError(f"invalid incidence character {ch!r}", line_no)
    return FormalContext(tuple(objects), tuple(attributes), frozenset(pairs))


def _check_names(names: list[str], kind: str, first_line: int) -> None:
    seen: dict[str, int] = {}
    for offset, name in enumerate(names):
        if name in seen:
            raise ParseError(f"duplicate {kind} name {name!r}", first_line + offset)
        seen[name] = offset


def _serialize_cxt(ctx: FormalContext) -> bytes:
    out = ["B", "", str(ctx.n_objects), str(ctx.n_attributes), ""]
    out.extend(ctx.objects)
    out.extend(ctx.attributes)
    for row_mask in ctx.row_masks:
        out.append(
            "".join("X" if row_mask >> a & 1 else "." for a in range(ctx.n_attributes))
        )
    return ("\n".join(out) + "\n").encode("utf-8")


_CSV_TRUE = {"1", "x", "X"}
_CSV_FALSE = {"0", ""}


def _parse_csv(text: str) -> FormalContext:
    reader = csv.reader(io.StringIO(text))
    rows = [row for row in reader]
    if not rows:
        raise ParseError("empty CSV input", 1)
    header = rows[0]
    if not header:
        raise ParseError("missing header row", 1)
    attributes = header[1:]
    _check_names(attributes, "attribute", 1)

    objects = []
    pairs = set()
    for g, row in enumerate(rows[1:]):
        line_no = g + 2
        if len(row) != len(header):
            raise ParseError(
                f"row has {len(row)} cells, expected {len(header)}", line_no
            )
        objects.append(row[0])
        for a, cell in enumerate(row[1:]):
            cell = cell.strip()
            if cell in _CSV_TRUE:
                pairs.add((g, a))
            elif cell not in _CSV_FALSE:
                raise ParseError(f"invalid cell value {cell!r}", line_no)
    _check_names(objects, "object", 2)
    return FormalContext(tuple(objects), tuple(attributes), frozenset(pairs))


def _serialize_csv(ctx: FormalContext) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([""] + list(ctx.attributes))
    for g, row_mask in enumerate(ctx.row_masks):
        writer.writerow(
            [ctx.objects[g]]
            + ["1" if row_mask >> a & 1 else "0" for a in range(ctx.n_attributes)]
        )
    return buf.getvalue().encode("utf-8")


def row_set(ctx: FormalContext, g: int) -> frozenset[int]:
    """The attribute set of one object (its row)."""
    if not 0 <= g < ctx.n_objects:
        raise ValueError(f"object index {g} out of range")
    return set_of(ctx.row_masks[g])


def incidence_from_rows(row_masks: Iterable[int]) -> frozenset[tuple[int, int]]:
    """Expand per-object attribute masks into incidence pairs."""
    return frozenset(
        (g, a) for g, mask in enumerate(row_masks) for a in bits(mask)
    )


def rows_from_pairs(pairs: Iterable[tuple[int, int]], n_objects: int, n_attributes: int) -> list[int]:
    """Pack incidence pairs into per-object attribute masks, validating ranges."""
    rows = [0] * n_objects
    for g, a in pairs:
        if not (0 <= g < n_objects and 0 <= a < n_attributes):
            raise ValueError(f"pair {(g, a)} out of range for {n_objects}x{n_attributes} grid")
        rows[g] |= 1 << a
    return rows
