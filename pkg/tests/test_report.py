import csv
import io

import pytest

from udsmimic.catalog import Catalog
from udsmimic.report import TableSpec, render_diff, render_placements, render_table


def test_csv_table(ref):
    text = render_table(ref, TableSpec("csv"))
    rows = list(csv.reader(io.StringIO(text)))
    header = rows[0]
    assert len(header) == 2 + 31
    assert len(rows) == 1 + 18 + 17
    pw = next(r for r in rows if r[0] == "pw")
    assert pw[header.index("S8")] == "full"
    assert pw[header.index("U1")] == "absent"
    assert "●" not in text and "○" not in text


def test_csv_ignores_ascii_flag(ref):
    assert render_table(ref, TableSpec("csv", ascii=True)) == render_table(ref, TableSpec("csv"))


def test_row_order(ref):
    ids = [r.split(",")[0] for r in render_table(ref, TableSpec("csv")).splitlines()[1:]]
    assert ids[:6] == ["pw", "l1", "l2", "l3", "l4", "fp1"]
    assert ids[17] == "sound_proof"
    assert ids[18:20] == ["l1_pw", "l2_pw"]
    assert ids[-1] == "sound_proof_pw"


def test_empty_catalog_is_header_only():
    for fmt in ("text", "csv", "markdown"):
        lines = render_table(Catalog(), TableSpec(fmt)).splitlines()
        assert len(lines) == (2 if fmt == "markdown" else 1)


def test_markdown_puf2_pw(ref):
    text = render_table(ref, TableSpec("md"))
    header = [c.strip() for c in text.splitlines()[0].strip("|").split("|")]
    row = next(l for l in text.splitlines() if l.startswith("| PUF2 + PW |"))
    cells = [c.strip() for c in row.strip("|").split("|")]
    assert cells[header.index("S9")] == ""
    assert cells[header.index("S8")] == "●"
    ascii_text = render_table(ref, TableSpec("markdown", ascii=True))
    assert "●" not in ascii_text and "*" in ascii_text


def test_text_table_groups(ref):
    text = render_table(ref, TableSpec("text"))
    assert text.splitlines()[0].count("|") == 3
    assert "●" in text and "○" in text


def test_unknown_format():
    with pytest.raises(ValueError):
        TableSpec("html")


@pytest.mark.parametrize("fmt", ["text", "csv", "markdown"])
def test_deterministic(ref, fmt):
    assert render_table(ref, TableSpec(fmt)) == render_table(ref, TableSpec(fmt))


def _placement_row(text, sid):
    return next(l.split() for l in text.splitlines() if l.split()[0] == sid)


@pytest.mark.parametrize(
    "sid,expected",
    [
        ("otp2", ["otp2", "V3", "4", "none", "0", "x=0", "y=16", "ok"]),
        ("fp6", ["fp6", "V1", "1", "H1", "2", "x=4", "y=1", "errata"]),
        ("sound_proof", ["sound_proof", "V2", "11", "H2", "2", "x=10", "y=10.4", "ok"]),
    ],
)
def test_placements(ref, sid, expected):
    assert _placement_row(render_placements(ref), sid) == expected


def test_placements_label_combination_rules(ref):
    row = " ".join(_placement_row(render_placements(ref), "otp2_pw"))
    assert "y=17" in row and "marker rule x=0 y=16" in row


def test_placement_filter(ref):
    lines = render_placements(ref, "l4").splitlines()
    assert len(lines) == 2 and lines[1].startswith("l4 ")


def test_diff(ref):
    s = ref.schemes
    assert render_diff(s["pw"], s["pw"]) == ""
    assert "M4: absent → full" in render_diff(s["l1"], s["l4"]).splitlines()
    otp = render_diff(s["otp1"], s["otp2"]).splitlines()
    assert "S5: absent → full" in otp and "U3: partial → absent" in otp


def test_diff_symmetry(ref):
    s = ref.schemes
    for a in ("pw", "l1", "otp3"):
        for b in ("fp4", "puf2", "sound_proof"):
            fwd = {l.split(":")[0] for l in render_diff(s[a], s[b]).splitlines()}
            back = {l.split(":")[0] for l in render_diff(s[b], s[a]).splitlines()}
            assert fwd == back
