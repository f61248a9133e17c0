"""Comparison tables, placement listings and profile diffs."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .benefits import ALL_BENEFITS, CATEGORIES, BenefitClass, Rating, SchemeProfile
from .catalog import Catalog
from .placement import Placement, combine_markers, place

FORMATS = ("text", "csv", "markdown")
_FORMAT_ALIASES = {"md": "markdown"}

SYMBOLS = {Rating.FULL: "●", Rating.PARTIAL: "○", Rating.ABSENT: ""}
ASCII_SYMBOLS = {Rating.FULL: "*", Rating.PARTIAL: "o", Rating.ABSENT: ""}


@dataclass(frozen=True)
class TableSpec:
    format: str = "text"
    ascii: bool = False

    def __post_init__(self) -> None:
        fmt = _FORMAT_ALIASES.get(self.format, self.format)
        if fmt not in FORMATS:
            raise ValueError(f"unknown table format {self.format!r}")
        object.__setattr__(self, "format", fmt)

    def cell(self, rating: Rating) -> str:
        if self.format == "csv":
            return rating.word
        return (ASCII_SYMBOLS if self.ascii else SYMBOLS)[rating]


def _ordered(profiles: list[SchemeProfile]) -> list[SchemeProfile]:
    return sorted(profiles, key=lambda p: (CATEGORIES.index(p.category), p.id))


def table_rows(catalog: Catalog) -> list[SchemeProfile]:
    """Base schemes first, then combined, each ordered by category then id."""
    return _ordered(catalog.base_profiles()) + _ordered(catalog.combined_profiles())


def render_table(catalog: Catalog, spec: TableSpec = TableSpec()) -> str:
    rows = table_rows(catalog)
    header = [b.name for b in ALL_BENEFITS]
    if spec.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["id", "name", *header])
        for p in rows:
            writer.writerow([p.id, p.name, *(spec.cell(r) for r in p.vector.ratings)])
        return buf.getvalue()
    if spec.format == "markdown":
        lines = ["| Scheme | " + " | ".join(header) + " |"]
        lines.append("|---|" + "|".join(":-:" for _ in header) + "|")
        for p in rows:
            cells = " | ".join(spec.cell(r) for r in p.vector.ratings)
            lines.append(f"| {p.name.replace('|', '/')} | {cells} |")
        return "\n".join(lines) + "\n"
    return _text_table(rows, spec)


def _text_table(rows: list[SchemeProfile], spec: TableSpec) -> str:
    id_width = max([len("id"), *(len(p.id) for p in rows)])
    widths = [max(3, len(b.name)) for b in ALL_BENEFITS]

    def line(first: str, cells: list[str]) -> str:
        parts = [first.ljust(id_width)]
        prev = None
        for b, w, c in zip(ALL_BENEFITS, widths, cells):
            # class groups: usability | deployability | security (incl. mimicry)
            group = b.benefit_class if b.benefit_class is not BenefitClass.MIMICRY else BenefitClass.SECURITY
            if group is not prev:
                parts.append("|")
                prev = group
            parts.append(c.center(w))
        return " ".join(parts).rstrip()

    out = [line("id", [b.name for b in ALL_BENEFITS])]
    for p in rows:
        out.append(line(p.id, [spec.cell(r) for r in p.vector.ratings]))
    return "\n".join(out) + "\n"


def expectation_status(catalog: Catalog, scheme_id: str, placement: Placement) -> str:
    exp = catalog.expectations.get(scheme_id)
    if exp is None:
        return "-"
    if placement.vseg is not exp.vsegment or placement.hseg is not exp.hsegment:
        return "mismatch"
    if (exp.x is not None and exp.x != placement.x) or (exp.y is not None and exp.y != placement.y):
        return "mismatch"
    return "errata" if exp.errata else "ok"


_PLACEMENT_COLUMNS = ("id", "vseg", "vsub", "hseg", "hsub", "x", "y", "status")


def placement_rows(catalog: Catalog) -> list[tuple[str, ...]]:
    rows = []
    for p in _ordered(catalog.base_profiles()):
        pl = place(p)
        rows.append(_placement_cells(p.id, pl, expectation_status(catalog, p.id, pl)))
    for p in _ordered(catalog.combined_profiles()):
        pl = place(p)
        parts = [place(catalog.schemes[pid]) for pid in catalog.combined[p.id].parts]
        mx, my = combine_markers(*parts)
        cells = _placement_cells(p.id, pl, expectation_status(catalog, p.id, pl))
        rows.append(cells + (f"vector rule; marker rule x={mx:g} y={my:g}",))
    return rows


def _placement_cells(sid: str, pl: Placement, status: str) -> tuple[str, ...]:
    return (
        sid, pl.vseg.name, str(pl.vsub), pl.hseg.token, str(pl.hsub),
        f"x={pl.x:g}", f"y={pl.y:g}", status,
    )


def render_placements(catalog: Catalog, scheme: str | None = None) -> str:
    rows = placement_rows(catalog)
    if scheme is not None:
        rows = [r for r in rows if r[0] == scheme]
    header = _PLACEMENT_COLUMNS
    widths = [max(len(header[i]), *(len(r[i]) for r in rows)) if rows else len(header[i])
              for i in range(len(header))]

    def fmt(cells: tuple[str, ...]) -> str:
        text = "  ".join(c.ljust(w) for c, w in zip(cells, widths))
        if len(cells) > len(widths):
            text += "  " + "  ".join(cells[len(widths):])
        return text.rstrip()

    return "\n".join([fmt(header), *(fmt(r) for r in rows)]) + "\n"


def diff_entries(a: SchemeProfile, b: SchemeProfile) -> list[tuple[str, Rating, Rating]]:
    return [
        (benefit.name, ra, rb)
        for benefit, ra, rb in zip(ALL_BENEFITS, a.vector.ratings, b.vector.ratings)
        if ra != rb
    ]


def render_diff(a: SchemeProfile, b: SchemeProfile) -> str:
    return "".join(f"{name}: {ra.word} → {rb.word}\n" for name, ra, rb in diff_entries(a, b))
