"""Benefit vectors of multi-factor schemes."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .benefits import (
    SECURITY_MIN_EXCEPTIONS,
    BenefitClass,
    BenefitId,
    BenefitVector,
    Rating,
    SchemeProfile,
    valid_scheme_id,
)


class CombineError(ValueError):
    pass


@dataclass(frozen=True)
class Override:
    benefit: BenefitId
    rating: Rating
    reason: str

    def __post_init__(self) -> None:
        if not self.reason or not self.reason.strip():
            raise CombineError(f"override of {self.benefit} needs a reason")


@dataclass(frozen=True)
class CombinedScheme:
    id: str
    parts: tuple[str, ...]
    name: str | None = None
    overrides: tuple[Override, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if not valid_scheme_id(self.id):
            raise CombineError(f"invalid scheme id {self.id!r}")
        if len(self.parts) < 2:
            raise CombineError(f"combined scheme {self.id} needs at least two parts")


def uses_min(benefit: BenefitId) -> bool:
    """Usability/deployability intersect; security unions except S9 and S11."""
    if benefit.benefit_class in (BenefitClass.USABILITY, BenefitClass.DEPLOYABILITY):
        return True
    return benefit in SECURITY_MIN_EXCEPTIONS


def combine_vectors(vectors: Sequence[BenefitVector]) -> BenefitVector:
    if len(vectors) < 2:
        raise CombineError("combining needs at least two parts")
    out = []
    for benefit in BenefitId:
        ratings = [v[benefit] for v in vectors]
        out.append(min(ratings) if uses_min(benefit) else max(ratings))
    return BenefitVector(tuple(out))


def _combined_category(parts: Sequence[SchemeProfile]) -> str:
    cats = {p.category for p in parts} - {"password"}
    if not cats:
        return "password"
    return cats.pop() if len(cats) == 1 else "other"


def combine_profiles(
    parts: Sequence[SchemeProfile],
    overrides: Sequence[Override] = (),
    *,
    id: str | None = None,
    name: str | None = None,
) -> SchemeProfile:
    """Profile of a scheme requiring every part to authenticate.

    Overrides are applied after the min/max fold.
    """
    if len(parts) < 2:
        raise CombineError("combining needs at least two parts")
    vector = combine_vectors([p.vector for p in parts])
    if overrides:
        vector = vector.replace({o.benefit: o.rating for o in overrides})
    return SchemeProfile(
        id=id or "_".join(p.id for p in parts),
        name=name or " + ".join(p.name for p in parts),
        category=_combined_category(parts),
        vector=vector,
    )
