"""Placement of schemes on the exposure-resistance x mimicry-resistance chart.

The vertical axis has three segments (V1 guessable, V2 leakable, V3
leak-resistant), each 6 chart units tall. A scheme enters a segment only by
fully offering every benefit of the segment gates; inside the segment its
sublevel is ranked by how many governing benefits it offers fully (f) and
partially (p), where a single full benefit outranks any number of partials.

The horizontal axis has the on-axis position plus three segments (H1-H3),
each with two sublevels (partial, full) of a single governing benefit.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .benefits import (
    H_GOVERNING,
    S6_MERGED,
    V1_GOVERNING,
    V2_GATE,
    V2_GOVERNING,
    V3_GATE,
    V3_GOVERNING,
    BenefitId,
    BenefitVector,
    Rating,
    SchemeProfile,
    merged_s6,
)

SEGMENT_SPAN = 6


class VerticalSegment(enum.Enum):
    V1 = (0, "Negligible-resistance/Guessable")
    V2 = (1, "Guess-resistant/Leakable")
    V3 = (2, "Leak-resistant")

    @property
    def index(self) -> int:
        return self.value[0]

    @property
    def title(self) -> str:
        return self.value[1]

    @property
    def governing(self) -> tuple:
        return _GOVERNING[self]

    @property
    def sublevels(self) -> int:
        return sublevel_count(len(self.governing))

    def __str__(self) -> str:
        return self.name


_GOVERNING = {
    VerticalSegment.V1: V1_GOVERNING,
    VerticalSegment.V2: V2_GOVERNING,
    VerticalSegment.V3: V3_GOVERNING,
}


class HorizontalSegment(enum.Enum):
    ON_AXIS = (None, "No mimicry resistance")
    H1 = (0, "Infrequent intercept/capture resistant")
    H2 = (1, "Intercept/capture and reuse resistant")
    H3 = (2, "Spoof-resistant")

    @property
    def index(self) -> int | None:
        return self.value[0]

    @property
    def title(self) -> str:
        return self.value[1]

    @property
    def token(self) -> str:
        """Catalog/report token: 'none' for the on-axis position."""
        return "none" if self is HorizontalSegment.ON_AXIS else self.name

    @property
    def rank(self) -> int:
        return -1 if self.index is None else self.index

    @classmethod
    def parse(cls, token: str) -> HorizontalSegment:
        token = token.strip()
        if token.lower() == "none":
            return cls.ON_AXIS
        return cls[token.upper()]

    def __str__(self) -> str:
        return self.token


@dataclass(frozen=True)
class Placement:
    vseg: VerticalSegment
    vsub: int
    hseg: HorizontalSegment
    hsub: int
    x: float
    y: float

    @property
    def point(self) -> tuple[float, float]:
        return (self.x, self.y)

    @property
    def vertical_rank(self) -> tuple[int, int]:
        return (self.vseg.index, self.vsub)

    @property
    def horizontal_rank(self) -> tuple[int, int]:
        return (self.hseg.rank, self.hsub)


def sublevel_count(n_benefits: int) -> int:
    """Number of sublevels for a segment governed by ``n_benefits`` benefits.

    Equal to 2 + 3 + ... + (n + 1).
    """
    if n_benefits < 1:
        raise ValueError("a segment needs at least one governing benefit")
    return (n_benefits + 1) * (n_benefits + 2) // 2 - 1


def sublevel_from_counts(n_benefits: int, full: int, partial: int, top: bool = False) -> int:
    """1-based sublevel for ``full`` fully- and ``partial`` partially-offered benefits.

    Sublevels are grouped in blocks by ``full``; block f holds the
    ``n_benefits + 1 - f`` possible partial counts. All-full would spill into
    the next segment, so it is only accepted for the top segment, where it
    clamps to the highest sublevel.
    """
    if n_benefits < 1:
        raise ValueError("a segment needs at least one governing benefit")
    if full < 0 or partial < 0 or full + partial > n_benefits:
        raise ValueError(f"inconsistent counts: full={full} partial={partial} of {n_benefits}")
    if full == n_benefits:
        if not top:
            raise ValueError("all governing benefits full: scheme belongs to the next segment")
        return sublevel_count(n_benefits)
    return partial + 1 + sum(n_benefits + 1 - k for k in range(full))


def vertical_segment(vector: BenefitVector) -> VerticalSegment:
    if any(vector[b] is not Rating.FULL for b in V2_GATE):
        return VerticalSegment.V1
    if all(vector[b] is Rating.FULL for b in V3_GATE):
        return VerticalSegment.V3
    return VerticalSegment.V2


def _governing_rating(vector: BenefitVector, benefit: BenefitId | str) -> Rating:
    if benefit == S6_MERGED:
        return merged_s6(vector)
    return vector[benefit]


def vertical_sublevel(vector: BenefitVector, vseg: VerticalSegment) -> int:
    ratings = [_governing_rating(vector, b) for b in vseg.governing]
    full = sum(r is Rating.FULL for r in ratings)
    partial = sum(r is Rating.PARTIAL for r in ratings)
    return sublevel_from_counts(len(ratings), full, partial, top=vseg is VerticalSegment.V3)


def horizontal_placement(vector: BenefitVector) -> tuple[HorizontalSegment, int]:
    for seg in (HorizontalSegment.H3, HorizontalSegment.H2, HorizontalSegment.H1):
        rating = vector[H_GOVERNING[seg.name]]
        if rating is not Rating.ABSENT:
            return seg, int(rating)
    return HorizontalSegment.ON_AXIS, 0


def _exact_coordinates(
    vseg: VerticalSegment, vsub: int, hseg: HorizontalSegment, hsub: int
) -> tuple[Fraction, Fraction]:
    if not 1 <= vsub <= vseg.sublevels:
        raise ValueError(f"sublevel {vsub} out of range for {vseg.name}")
    if hseg is HorizontalSegment.ON_AXIS:
        if hsub != 0:
            raise ValueError("on-axis placement has no horizontal sublevel")
        x = Fraction(0)
    else:
        if hsub not in (1, 2):
            raise ValueError(f"horizontal sublevel {hsub} out of range")
        x = Fraction(SEGMENT_SPAN * hseg.index + 2 * hsub)
    step = Fraction(SEGMENT_SPAN, vseg.sublevels + 1)
    y = SEGMENT_SPAN * vseg.index + step * vsub
    return x, y


def coordinates(
    vseg: VerticalSegment, vsub: int, hseg: HorizontalSegment, hsub: int
) -> tuple[float, float]:
    x, y = _exact_coordinates(vseg, vsub, hseg, hsub)
    return float(x), float(y)


def place_vector(vector: BenefitVector) -> Placement:
    vseg = vertical_segment(vector)
    vsub = vertical_sublevel(vector, vseg)
    hseg, hsub = horizontal_placement(vector)
    x, y = coordinates(vseg, vsub, hseg, hsub)
    return Placement(vseg, vsub, hseg, hsub, x, y)


def place(profile: SchemeProfile) -> Placement:
    return place_vector(profile.vector)


def combine_markers(*placements: Placement) -> tuple[float, float]:
    """Chart point of a multi-factor scheme: coordinate-wise max of its factors."""
    if not placements:
        raise ValueError("need at least one placement")
    return (max(p.x for p in placements), max(p.y for p in placements))
