"""Scheme catalog files: parsing, canonical serialization, the embedded reference.

File grammar::

    # comment
    [scheme <id>]
    name = <text>
    category = password|geolocation|fingerprinting|otp|puf|other
    notes = <text>                  (optional)
    <BenefitId> = full|partial      (omitted benefits are absent)

    [combined <id>]
    parts = <id>,<id>[,...]
    name = <text>                   (optional)
    override <BenefitId> = full|partial|absent
    reason = <text>                 (covers the overrides above it)

    [expect <id>]
    vsegment = V1|V2|V3
    hsegment = none|H1|H2|H3
    x = <decimal>                   (optional)
    y = <decimal>                   (optional)
    errata = <text>                 (optional)
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources

from .benefits import CATEGORIES, BenefitId, BenefitVector, Rating, SchemeProfile, valid_scheme_id
from .combiner import CombinedScheme, Override, combine_profiles
from .placement import HorizontalSegment, VerticalSegment


class CatalogError(Exception):
    """Raised when catalog text is invalid; carries every problem found."""

    def __init__(self, problems: list[tuple[int, str]], source: str = "<catalog>") -> None:
        self.problems = problems
        self.source = source
        super().__init__("\n".join(f"{source}:{line}: {msg}" for line, msg in problems))


class UnknownSchemeError(KeyError):
    def __str__(self) -> str:
        return f"unknown scheme id {self.args[0]!r}"


@dataclass(frozen=True)
class ExpectedPlacement:
    scheme: str
    vsegment: VerticalSegment
    hsegment: HorizontalSegment
    x: float | None = None
    y: float | None = None
    errata: str | None = None

    segment_severity = "error"
    coordinate_severity = "warning"

    @property
    def asserts_point(self) -> bool:
        return self.x is not None or self.y is not None


@dataclass(frozen=True)
class Catalog:
    schemes: dict[str, SchemeProfile] = field(default_factory=dict)
    combined: dict[str, CombinedScheme] = field(default_factory=dict)
    expectations: dict[str, ExpectedPlacement] = field(default_factory=dict)
    source: str = field(default="<memory>", compare=False)

    def __contains__(self, scheme_id: str) -> bool:
        return scheme_id in self.schemes or scheme_id in self.combined

    def derive(self, entry: CombinedScheme) -> SchemeProfile:
        parts = [self.schemes[p] for p in entry.parts]
        return combine_profiles(parts, entry.overrides, id=entry.id, name=entry.name)

    def profile(self, scheme_id: str) -> SchemeProfile:
        """Base profile, or the derived profile of a combined entry."""
        if scheme_id in self.schemes:
            return self.schemes[scheme_id]
        if scheme_id in self.combined:
            return self.derive(self.combined[scheme_id])
        raise UnknownSchemeError(scheme_id)

    def base_profiles(self) -> list[SchemeProfile]:
        return [self.schemes[k] for k in sorted(self.schemes)]

    def combined_profiles(self) -> list[SchemeProfile]:
        return [self.derive(self.combined[k]) for k in sorted(self.combined)]


_HEADER_RE = re.compile(r"^\[\s*(\S+)\s+(\S+)\s*\]$")
_DECIMAL_RE = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)$")


def _format_number(value: float) -> str:
    return f"{value:g}"


class _Record:
    def __init__(self, kind: str, ident: str, line: int) -> None:
        self.kind = kind
        self.id = ident
        self.line = line
        self.fields: dict[str, tuple[int, str]] = {}
        self.ratings: dict[BenefitId, Rating] = {}
        self.overrides: list[tuple[int, BenefitId, Rating]] = []
        self.reasons: list[str | None] = []


_SCHEME_KEYS = {"name", "category", "notes"}
_COMBINED_KEYS = {"parts", "name"}
_EXPECT_KEYS = {"vsegment", "hsegment", "x", "y", "errata"}


def parse_catalog(text: str, source: str = "<catalog>") -> Catalog:
    problems: list[tuple[int, str]] = []
    records: list[_Record] = []
    current: _Record | None = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("["):
            m = _HEADER_RE.match(line)
            if not m:
                problems.append((lineno, f"malformed section header {line!r}"))
                current = None
                continue
            kind, ident = m.group(1).lower(), m.group(2)
            if kind not in ("scheme", "combined", "expect"):
                problems.append((lineno, f"unknown section kind {kind!r}"))
                current = None
                continue
            if not valid_scheme_id(ident):
                problems.append((lineno, f"invalid id {ident!r}"))
            current = _Record(kind, ident, lineno)
            records.append(current)
            continue
        if current is None:
            problems.append((lineno, "line outside of any section"))
            continue
        if "=" not in line:
            problems.append((lineno, f"expected 'key = value', got {line!r}"))
            continue
        key, value = (part.strip() for part in line.split("=", 1))
        _parse_body_line(current, key, value, lineno, problems)

    catalog = _build(records, problems)
    if problems:
        problems.sort(key=lambda p: p[0])
        raise CatalogError(problems, source)
    return Catalog(catalog[0], catalog[1], catalog[2], source=source)


def _parse_body_line(
    rec: _Record, key: str, value: str, lineno: int, problems: list[tuple[int, str]]
) -> None:
    lkey = key.lower()
    if rec.kind == "combined" and lkey.startswith("override"):
        token = key[len("override"):].strip()
        try:
            benefit = BenefitId.parse(token)
        except KeyError:
            problems.append((lineno, f"unknown benefit id {token!r}"))
            return
        try:
            rating = Rating.parse(value)
        except ValueError as exc:
            problems.append((lineno, str(exc)))
            return
        rec.overrides.append((lineno, benefit, rating))
        rec.reasons.append(None)
        return
    if rec.kind == "combined" and lkey == "reason":
        pending = [i for i, r in enumerate(rec.reasons) if r is None]
        if not pending:
            problems.append((lineno, "reason without a preceding override"))
        elif not value:
            problems.append((lineno, "empty reason"))
        for i in pending:
            rec.reasons[i] = value
        return

    allowed = {"scheme": _SCHEME_KEYS, "combined": _COMBINED_KEYS, "expect": _EXPECT_KEYS}[rec.kind]
    if lkey in allowed:
        if lkey in rec.fields:
            problems.append((lineno, f"duplicate key {lkey!r}"))
        rec.fields[lkey] = (lineno, value)
        return
    if rec.kind == "scheme":
        try:
            benefit = BenefitId.parse(key)
        except KeyError:
            problems.append((lineno, f"unknown benefit id {key!r}"))
            return
        if value.lower() not in ("full", "partial"):
            problems.append((lineno, f"invalid rating {value!r} (expected full or partial)"))
            return
        if benefit in rec.ratings:
            problems.append((lineno, f"duplicate rating for {benefit}"))
        rec.ratings[benefit] = Rating.parse(value)
        return
    problems.append((lineno, f"unknown key {key!r} in [{rec.kind}] section"))


def _require(rec: _Record, key: str, problems: list[tuple[int, str]]) -> tuple[int, str] | None:
    if key not in rec.fields:
        problems.append((rec.line, f"[{rec.kind} {rec.id}] is missing '{key}'"))
        return None
    return rec.fields[key]


def _build(records: list[_Record], problems: list[tuple[int, str]]):
    schemes: dict[str, SchemeProfile] = {}
    combined: dict[str, CombinedScheme] = {}
    expectations: dict[str, ExpectedPlacement] = {}
    seen: set[str] = set()

    for rec in records:
        if rec.kind == "expect":
            continue
        if rec.id in seen:
            problems.append((rec.line, f"duplicate id {rec.id!r}"))
            continue
        seen.add(rec.id)
        if rec.kind == "scheme":
            name = _require(rec, "name", problems)
            cat = _require(rec, "category", problems)
            if name is None or cat is None:
                continue
            if cat[1] not in CATEGORIES:
                problems.append((cat[0], f"unknown category {cat[1]!r}"))
                continue
            notes = rec.fields.get("notes")
            if valid_scheme_id(rec.id):
                schemes[rec.id] = SchemeProfile(
                    id=rec.id,
                    name=name[1],
                    category=cat[1],
                    vector=BenefitVector.from_mapping(rec.ratings),
                    notes=notes[1] if notes else None,
                )
        else:
            entry = _build_combined(rec, problems)
            if entry is not None:
                combined[rec.id] = entry

    for entry in combined.values():
        rec = next(r for r in records if r.kind == "combined" and r.id == entry.id)
        for part in entry.parts:
            if part not in schemes:
                problems.append((rec.fields["parts"][0], f"dangling part reference {part!r}"))

    for rec in records:
        if rec.kind != "expect":
            continue
        if rec.id in expectations:
            problems.append((rec.line, f"duplicate expectation for {rec.id!r}"))
            continue
        if rec.id not in seen:
            problems.append((rec.line, f"expectation for unknown scheme {rec.id!r}"))
            continue
        exp = _build_expect(rec, problems)
        if exp is not None:
            expectations[rec.id] = exp
    return schemes, combined, expectations


def _build_combined(rec: _Record, problems: list[tuple[int, str]]) -> CombinedScheme | None:
    parts = _require(rec, "parts", problems)
    if parts is None:
        return None
    ids = tuple(p.strip() for p in parts[1].split(","))
    if len(ids) < 2 or not all(ids):
        problems.append((parts[0], "parts needs at least two comma-separated ids"))
        return None
    ok = True
    overrides = []
    for (lineno, benefit, rating), reason in zip(rec.overrides, rec.reasons):
        if reason is None:
            problems.append((lineno, f"override of {benefit} without a reason"))
            ok = False
            continue
        overrides.append(Override(benefit, rating, reason))
    if not ok or not valid_scheme_id(rec.id):
        return None
    name = rec.fields.get("name")
    return CombinedScheme(rec.id, ids, name[1] if name else None, tuple(overrides))


def _build_expect(rec: _Record, problems: list[tuple[int, str]]) -> ExpectedPlacement | None:
    vs = _require(rec, "vsegment", problems)
    hs = _require(rec, "hsegment", problems)
    if vs is None or hs is None:
        return None
    try:
        vseg = VerticalSegment[vs[1].upper()]
    except KeyError:
        problems.append((vs[0], f"invalid vsegment {vs[1]!r}"))
        return None
    try:
        hseg = HorizontalSegment.parse(hs[1])
    except KeyError:
        problems.append((hs[0], f"invalid hsegment {hs[1]!r}"))
        return None
    coords: dict[str, float | None] = {}
    for axis in ("x", "y"):
        item = rec.fields.get(axis)
        if item is None:
            coords[axis] = None
        elif not _DECIMAL_RE.match(item[1]):
            problems.append((item[0], f"invalid decimal {item[1]!r}"))
            return None
        else:
            coords[axis] = float(item[1])
    errata = rec.fields.get("errata")
    return ExpectedPlacement(rec.id, vseg, hseg, coords["x"], coords["y"], errata[1] if errata else None)


def serialize_catalog(catalog: Catalog) -> str:
    out: list[str] = []
    for sid in sorted(catalog.schemes):
        s = catalog.schemes[sid]
        out.append(f"[scheme {s.id}]")
        out.append(f"name = {s.name}")
        out.append(f"category = {s.category}")
        if s.notes:
            out.append(f"notes = {s.notes}")
        for benefit, rating in s.vector.offered().items():
            out.append(f"{benefit} = {rating.word}")
        out.append("")
    for cid in sorted(catalog.combined):
        c = catalog.combined[cid]
        out.append(f"[combined {c.id}]")
        out.append(f"parts = {','.join(c.parts)}")
        if c.name:
            out.append(f"name = {c.name}")
        for o in c.overrides:
            out.append(f"override {o.benefit} = {o.rating.word}")
            out.append(f"reason = {o.reason}")
        out.append("")
    for eid in sorted(catalog.expectations):
        e = catalog.expectations[eid]
        out.append(f"[expect {e.scheme}]")
        out.append(f"vsegment = {e.vsegment.name}")
        out.append(f"hsegment = {e.hsegment.token}")
        if e.x is not None:
            out.append(f"x = {_format_number(e.x)}")
        if e.y is not None:
            out.append(f"y = {_format_number(e.y)}")
        if e.errata:
            out.append(f"errata = {e.errata}")
        out.append("")
    return "\n".join(out)


REFERENCE_NAME = "reference.catalog"


def reference_text() -> str:
    return resources.files("udsmimic.data").joinpath(REFERENCE_NAME).read_text(encoding="utf-8")


def reference_catalog() -> Catalog:
    return parse_catalog(reference_text(), source=f"<builtin:{REFERENCE_NAME}>")


def load_catalog(path: str) -> Catalog:
    with open(path, encoding="utf-8") as fh:
        return parse_catalog(fh.read(), source=path)
