"""Consistency lints for catalogs.

R1 (error)    duplicate or dangling ids
R2 (warning)  mimicry hierarchy broken: not M2 >= M3 >= M4
R3 (error)    computed segment differs from an expectation
   (warning)  computed coordinate differs from an asserted one
R4 (warning)  override that sets a cell to what the operator already yields
R5 (info)     S10/S11/M1 offered; they never affect placement
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .benefits import NON_PLACEMENT, BenefitId, SchemeProfile
from .catalog import Catalog
from .combiner import combine_vectors
from .placement import place

SEVERITY_ORDER = {"error": 0, "warning": 1, "info": 2}


@dataclass(frozen=True, order=True)
class LintFinding:
    rule: str
    scheme: str
    severity: str
    message: str

    def render(self) -> str:
        return f"{self.severity} {self.rule}: {self.scheme}: {self.message}"


def _check_ids(catalog: Catalog) -> Iterable[LintFinding]:
    for sid, profile in catalog.schemes.items():
        if profile.id != sid:
            yield LintFinding("R1", sid, "error", f"keyed as {sid!r} but profile id is {profile.id!r}")
        if sid in catalog.combined:
            yield LintFinding("R1", sid, "error", "id used by both a scheme and a combined entry")
    for cid, entry in catalog.combined.items():
        for part in entry.parts:
            if part not in catalog.schemes:
                yield LintFinding("R1", cid, "error", f"dangling part reference {part!r}")
    for eid in catalog.expectations:
        if eid not in catalog:
            yield LintFinding("R1", eid, "error", "expectation for unknown scheme")


def _check_hierarchy(profile: SchemeProfile) -> Iterable[LintFinding]:
    v = profile.vector
    m2, m3, m4 = v[BenefitId.M2], v[BenefitId.M3], v[BenefitId.M4]
    if not m2 >= m3 >= m4:
        yield LintFinding(
            "R2", profile.id, "warning",
            f"mimicry hierarchy violated: M2={m2.word} M3={m3.word} M4={m4.word}",
        )


def _check_expectation(catalog: Catalog, sid: str) -> Iterable[LintFinding]:
    exp = catalog.expectations[sid]
    p = place(catalog.profile(sid))
    if p.vseg is not exp.vsegment or p.hseg is not exp.hsegment:
        yield LintFinding(
            "R3", sid, exp.segment_severity,
            f"expected ({exp.vsegment.name}, {exp.hsegment.token}), "
            f"computed ({p.vseg.name}, {p.hseg.token})",
        )
        return
    if exp.x is not None and exp.x != p.x or exp.y is not None and exp.y != p.y:
        want = f"({_fmt(exp.x)}, {_fmt(exp.y)})"
        yield LintFinding(
            "R3", sid, exp.coordinate_severity, f"expected {want}, computed ({p.x:g}, {p.y:g})"
        )


def _fmt(value: float | None) -> str:
    return "*" if value is None else f"{value:g}"


def _check_overrides(catalog: Catalog, cid: str) -> Iterable[LintFinding]:
    entry = catalog.combined[cid]
    base = combine_vectors([catalog.schemes[p].vector for p in entry.parts])
    for o in entry.overrides:
        if base[o.benefit] == o.rating:
            yield LintFinding(
                "R4", cid, "warning",
                f"redundant override {o.benefit} = {o.rating.word}: operator already yields it",
            )


def _check_unplaced(profile: SchemeProfile) -> Iterable[LintFinding]:
    offered = [b.name for b in BenefitId if b in NON_PLACEMENT and profile.vector[b]]
    if offered:
        yield LintFinding(
            "R5", profile.id, "info", f"{', '.join(offered)} offered but do not affect placement"
        )


def validate(catalog: Catalog) -> list[LintFinding]:
    findings = list(_check_ids(catalog))
    dangling = {f.scheme for f in findings if f.rule == "R1"}

    profiles = list(catalog.schemes.values())
    for cid in catalog.combined:
        if cid not in dangling:
            profiles.append(catalog.profile(cid))
            findings.extend(_check_overrides(catalog, cid))
    for profile in profiles:
        findings.extend(_check_hierarchy(profile))
        findings.extend(_check_unplaced(profile))
    for sid in catalog.expectations:
        if sid in catalog and sid not in dangling:
            findings.extend(_check_expectation(catalog, sid))
    return sorted(findings, key=lambda f: (f.rule, f.scheme, SEVERITY_ORDER[f.severity], f.message))


def count_errors(findings: Iterable[LintFinding]) -> int:
    return sum(f.severity == "error" for f in findings)
