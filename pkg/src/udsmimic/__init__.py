"""Exposure/mimicry evaluation of web-authentication schemes."""

from .benefits import BenefitId, BenefitVector, Rating, SchemeProfile, merged_s6, rating_of
from .catalog import Catalog, CatalogError, parse_catalog, reference_catalog, serialize_catalog
from .combiner import CombinedScheme, Override, combine_profiles
from .placement import (
    HorizontalSegment,
    Placement,
    VerticalSegment,
    combine_markers,
    place,
    sublevel_count,
    sublevel_from_counts,
)
from .validator import LintFinding, validate

__all__ = [
    "BenefitId",
    "BenefitVector",
    "Catalog",
    "CatalogError",
    "CombinedScheme",
    "HorizontalSegment",
    "LintFinding",
    "Override",
    "Placement",
    "Rating",
    "SchemeProfile",
    "VerticalSegment",
    "combine_markers",
    "combine_profiles",
    "merged_s6",
    "parse_catalog",
    "place",
    "rating_of",
    "reference_catalog",
    "serialize_catalog",
    "sublevel_count",
    "sublevel_from_counts",
    "validate",
]
