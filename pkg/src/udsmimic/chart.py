"""SVG rendering of the exposure-resistance vs mimicry-resistance chart."""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from xml.sax.saxutils import escape, quoteattr

from .catalog import Catalog
from .placement import HorizontalSegment, VerticalSegment, place

SEGMENT = 6


@dataclass(frozen=True)
class ChartConfig:
    size: float = 640
    margin: float = 60
    axis_max: float = 19
    band_radii: tuple[float, ...] = (6, 12, 18)
    # innermost (darkest) first
    band_fills: tuple[str, ...] = ("#d9d9d9", "#e8e8e8", "#f5f5f5")
    grid_positions: tuple[float, ...] = (6, 12, 18)
    marker_radius: float = 4
    font_size: float = 10
    captions: bool = True
    include_combined: bool = False
    ascii_labels: bool = False

    def __post_init__(self) -> None:
        if list(self.band_radii) != sorted(self.band_radii):
            raise ValueError("band radii must be ascending")
        if len(self.band_fills) != len(self.band_radii):
            raise ValueError("need one fill per band")
        if self.axis_max < max(self.band_radii):
            raise ValueError("axis range must cover the outermost band")

    @property
    def scale(self) -> float:
        return (self.size - 2 * self.margin) / self.axis_max

    def to_px(self, x: float, y: float) -> tuple[float, float]:
        return (self.margin + x * self.scale, self.size - self.margin - y * self.scale)


def _num(v: float) -> str:
    return f"{round(v, 3):g}"


def _ascii(text: str) -> str:
    text = text.replace("●", "*").replace("○", "o").replace("→", "->")
    return unicodedata.normalize("NFKD", text).encode("ascii", "ignore").decode("ascii")


def marker_groups(catalog: Catalog, config: ChartConfig = ChartConfig()) -> list[tuple[str, tuple[float, float], list[str]]]:
    """(kind, point, labels) per distinct computed point, in a stable order."""
    groups: dict[tuple[str, tuple[float, float]], list[str]] = {}
    for p in catalog.base_profiles():
        groups.setdefault(("base", place(p).point), []).append(p.label)
    if config.include_combined:
        for p in catalog.combined_profiles():
            groups.setdefault(("combined", place(p).point), []).append(p.label)
    ordered = sorted(groups.items(), key=lambda kv: (kv[0][0] != "base", kv[0][1][1], kv[0][1][0]))
    return [(kind, point, sorted(labels, key=_natural)) for (kind, point), labels in ordered]


def _natural(label: str) -> tuple:
    head = label.rstrip("0123456789")
    tail = label[len(head):]
    return (head.lower(), int(tail) if tail else -1, label)


def render_svg(catalog: Catalog, config: ChartConfig = ChartConfig()) -> str:
    c = config
    ox, oy = c.to_px(0, 0)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_num(c.size)}" '
        f'height="{_num(c.size)}" viewBox="0 0 {_num(c.size)} {_num(c.size)}" '
        f'font-family="sans-serif" font-size="{_num(c.font_size)}">',
        f'<rect x="0" y="0" width="{_num(c.size)}" height="{_num(c.size)}" fill="white"/>',
    ]

    # Outermost band first so the darker inner bands paint over it.
    for radius, fill in sorted(zip(c.band_radii, c.band_fills), reverse=True):
        r = radius * c.scale
        out.append(
            f'<path class="band" d="M {_num(ox)} {_num(oy)} L {_num(ox + r)} {_num(oy)} '
            f'A {_num(r)} {_num(r)} 0 0 0 {_num(ox)} {_num(oy - r)} Z" fill="{fill}"/>'
        )

    for pos in c.grid_positions:
        x1, y1 = c.to_px(pos, 0)
        x2, y2 = c.to_px(pos, 18)
        out.append(_grid_line(x1, y1, x2, y2))
    for pos in c.grid_positions:
        x1, y1 = c.to_px(0, pos)
        x2, y2 = c.to_px(18, pos)
        out.append(_grid_line(x1, y1, x2, y2))

    xend, _ = c.to_px(c.axis_max, 0)
    _, yend = c.to_px(0, c.axis_max)
    out.append(f'<line class="axis" x1="{_num(ox)}" y1="{_num(oy)}" x2="{_num(xend)}" y2="{_num(oy)}" stroke="black"/>')
    out.append(f'<line class="axis" x1="{_num(ox)}" y1="{_num(oy)}" x2="{_num(ox)}" y2="{_num(yend)}" stroke="black"/>')
    out.append(
        f'<text class="axis-label" x="{_num(xend)}" y="{_num(oy + 2.8 * c.font_size)}" '
        f'text-anchor="end">Mimicry Resistance</text>'
    )
    out.append(
        f'<text class="axis-label" x="{_num(ox)}" y="{_num(yend - c.font_size)}" '
        f'text-anchor="start">Exposure Resistance</text>'
    )

    if c.captions:
        for seg in (HorizontalSegment.H1, HorizontalSegment.H2, HorizontalSegment.H3):
            cx, _ = c.to_px(SEGMENT * seg.index + SEGMENT / 2, 0)
            out.append(
                f'<text class="caption" x="{_num(cx)}" y="{_num(oy + 1.3 * c.font_size)}" '
                f'text-anchor="middle" font-size="{_num(c.font_size * 0.8)}">'
                f"{seg.name} {escape(seg.title)}</text>"
            )
        for seg in VerticalSegment:
            _, cy = c.to_px(0, SEGMENT * seg.index + SEGMENT / 2)
            tx = ox - 1.2 * c.font_size
            out.append(
                f'<text class="caption" x="{_num(tx)}" y="{_num(cy)}" text-anchor="middle" '
                f'font-size="{_num(c.font_size * 0.8)}" transform="rotate(-90 {_num(tx)} {_num(cy)})">'
                f"{seg.name} {escape(seg.title)}</text>"
            )

    for kind, (x, y), labels in marker_groups(catalog, c):
        px, py = c.to_px(x, y)
        text = ", ".join(labels)
        if c.ascii_labels:
            text = _ascii(text)
        title = quoteattr(f"({x:g}, {y:g})")
        if kind == "base":
            out.append(
                f'<circle class="marker" cx="{_num(px)}" cy="{_num(py)}" r="{_num(c.marker_radius)}" '
                f'fill="black" data-point={title}/>'
            )
        else:
            r = c.marker_radius * 1.3
            out.append(
                f'<path class="marker combined" d="M {_num(px)} {_num(py - r)} L {_num(px + r)} {_num(py)} '
                f'L {_num(px)} {_num(py + r)} L {_num(px - r)} {_num(py)} Z" fill="none" stroke="black" '
                f'data-point={title}/>'
            )
        out.append(
            f'<text class="marker-label" x="{_num(px + c.marker_radius + 3)}" '
            f'y="{_num(py - c.marker_radius - 2)}">{escape(text)}</text>'
        )

    out.append("</svg>")
    return "\n".join(out) + "\n"


def _grid_line(x1: float, y1: float, x2: float, y2: float) -> str:
    return (
        f'<line class="grid" x1="{_num(x1)}" y1="{_num(y1)}" x2="{_num(x2)}" y2="{_num(y2)}" '
        f'stroke="black" stroke-dasharray="4 3" stroke-opacity="0.4"/>'
    )
