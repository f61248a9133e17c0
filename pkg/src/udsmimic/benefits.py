"""Benefit vocabulary, rating scale and benefit vectors."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping


class BenefitClass(enum.Enum):
    USABILITY = "U"
    DEPLOYABILITY = "D"
    SECURITY = "S"
    MIMICRY = "M"


class BenefitId(enum.Enum):
    """One of the 31 framework properties, in canonical column order."""

    U1 = "Memorywise-Effortless"
    U2 = "Scalable-for-Users"
    U3 = "Nothing-to-Carry"
    U4 = "Physically-Effortless"
    U5 = "Easy-to-Learn"
    U6 = "Efficient-to-Use"
    U7 = "Infrequent-Errors"
    U8 = "Easy-Recovery-from-Loss"
    U9 = "No-False-Rejects"
    U10 = "Easy-to-Change-Credentials"
    D1 = "Accessible"
    D2 = "Negligible-Cost-per-User"
    D3 = "Server-Compatible"
    D4 = "Browser-Compatible"
    D5 = "Mature"
    D6 = "Non-Proprietary"
    S1 = "Resilient-to-Physical-Observation"
    S2 = "Resilient-to-Targeted-Impersonation"
    S3 = "Resilient-to-Throttled-Guessing"
    S4 = "Resilient-to-Unthrottled-Guessing"
    S5 = "Resilient-to-Internal-Observation"
    S6 = "Resilient-to-Leaks-from-Other-Verifiers"
    S7 = "Resilient-to-Phishing"
    S8 = "Resilient-to-Physical-Theft"
    S9 = "No-Trusted-Third-Party"
    S10 = "Requiring-Explicit-Consent"
    S11 = "Unlinkable"
    M1 = "No-False-Accepts"
    M2 = "Resilient-to-Infrequent-Capture-or-Intercept"
    M3 = "Verifies-Non-Static-Information"
    M4 = "Resilient-to-Spoofing"

    @property
    def display_name(self) -> str:
        return self.value

    @property
    def benefit_class(self) -> BenefitClass:
        return BenefitClass(self.name[0])

    @classmethod
    def parse(cls, token: str) -> BenefitId:
        """Case-insensitive lookup by identifier; raises KeyError if unknown."""
        return cls[token.strip().upper()]

    def __str__(self) -> str:
        return self.name


ALL_BENEFITS: tuple[BenefitId, ...] = tuple(BenefitId)


class Rating(enum.IntEnum):
    """Offering level of a benefit; the integer order gives min/max."""

    ABSENT = 0
    PARTIAL = 1
    FULL = 2

    @property
    def word(self) -> str:
        return self.name.lower()

    @classmethod
    def parse(cls, token: str) -> Rating:
        try:
            return cls[token.strip().upper()]
        except KeyError:
            raise ValueError(f"invalid rating {token.strip()!r}") from None


@dataclass(frozen=True)
class BenefitVector:
    """Total mapping from every BenefitId to a Rating."""

    ratings: tuple[Rating, ...] = (Rating.ABSENT,) * len(ALL_BENEFITS)

    def __post_init__(self) -> None:
        if len(self.ratings) != len(ALL_BENEFITS):
            raise ValueError(f"expected {len(ALL_BENEFITS)} ratings, got {len(self.ratings)}")
        object.__setattr__(self, "ratings", tuple(Rating(r) for r in self.ratings))

    @classmethod
    def from_mapping(cls, mapping: Mapping[BenefitId, Rating]) -> BenefitVector:
        return cls(tuple(mapping.get(b, Rating.ABSENT) for b in ALL_BENEFITS))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[BenefitId, Rating]]) -> BenefitVector:
        return cls.from_mapping(dict(pairs))

    def __getitem__(self, benefit: BenefitId) -> Rating:
        return self.ratings[_INDEX[benefit]]

    def __iter__(self) -> Iterator[BenefitId]:
        return iter(ALL_BENEFITS)

    def items(self) -> Iterator[tuple[BenefitId, Rating]]:
        return zip(ALL_BENEFITS, self.ratings)

    def offered(self) -> dict[BenefitId, Rating]:
        """Sparse form: only non-absent entries, in canonical order."""
        return {b: r for b, r in self.items() if r is not Rating.ABSENT}

    def replace(self, updates: Mapping[BenefitId, Rating]) -> BenefitVector:
        return BenefitVector(tuple(updates.get(b, r) for b, r in self.items()))

    def dominates(self, other: BenefitVector) -> bool:
        """True if every rating is >= the other's."""
        return all(a >= b for a, b in zip(self.ratings, other.ratings))


_INDEX = {b: i for i, b in enumerate(ALL_BENEFITS)}

EMPTY_VECTOR = BenefitVector()

CATEGORIES = ("password", "geolocation", "fingerprinting", "otp", "puf", "other")

_ID_RE = re.compile(r"[a-z0-9_-]+")


def valid_scheme_id(token: str) -> bool:
    return _ID_RE.fullmatch(token) is not None


@dataclass(frozen=True)
class SchemeProfile:
    id: str
    name: str
    category: str
    vector: BenefitVector = EMPTY_VECTOR
    notes: str | None = None

    def __post_init__(self) -> None:
        if not valid_scheme_id(self.id):
            raise ValueError(f"invalid scheme id {self.id!r}")
        if self.category not in CATEGORIES:
            raise ValueError(f"unknown category {self.category!r}")

    @property
    def label(self) -> str:
        """Short chart label: the name up to its first ': ', if any."""
        return self.name.split(": ", 1)[0]


# Segment gates: every benefit listed must be Full.
V2_GATE = frozenset({BenefitId.S3, BenefitId.S4})
V3_GATE = frozenset(
    {BenefitId.S1, BenefitId.S3, BenefitId.S4, BenefitId.S5, BenefitId.S6, BenefitId.S7, BenefitId.S9}
)

# S9 never counts on its own: it is folded into S6 via merged_s6().
S6_MERGED = "S6m"
V1_GOVERNING: tuple[BenefitId, ...] = (BenefitId.S3, BenefitId.S4)
V2_GOVERNING: tuple[BenefitId | str, ...] = (BenefitId.S1, BenefitId.S5, S6_MERGED, BenefitId.S7)
V3_GOVERNING: tuple[BenefitId, ...] = (BenefitId.S2, BenefitId.S8)

H_GOVERNING = {"H1": BenefitId.M2, "H2": BenefitId.M3, "H3": BenefitId.M4}

# Security benefits that combine by intersection rather than union.
SECURITY_MIN_EXCEPTIONS = frozenset({BenefitId.S9, BenefitId.S11})

# Offered but irrelevant to chart placement.
NON_PLACEMENT = frozenset({BenefitId.S10, BenefitId.S11, BenefitId.M1})


def rating_of(profile: SchemeProfile, benefit: BenefitId) -> Rating:
    return profile.vector[benefit]


def merged_s6(vector: BenefitVector) -> Rating:
    """Effective leak-from-verifiers rating: credit only if S6 and S9 both hold."""
    return min(vector[BenefitId.S6], vector[BenefitId.S9])
