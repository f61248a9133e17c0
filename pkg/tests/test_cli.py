import io
import subprocess
import sys
from pathlib import Path

import pytest

from udsmimic.catalog import reference_text
from udsmimic.cli import run


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_place_single_scheme():
    code, out, _ = invoke("place", "--builtin", "--scheme", "l4")
    assert code == 0
    line = out.splitlines()[1]
    assert line.split()[:7] == ["l4", "V1", "1", "H3", "2", "x=16", "y=1"]


def test_place_unknown_scheme():
    code, _, err = invoke("place", "--builtin", "--scheme", "nope")
    assert code == 1 and "nope" in err


def test_combine():
    code, out, _ = invoke("combine", "--builtin", "--schemes", "pw,otp2")
    assert code == 0
    assert "S5=full" in out.splitlines()
    assert "placement (marker rule): x=0 y=16" in out


def test_combine_emit_record_parses(tmp_path):
    code, out, _ = invoke("combine", "--builtin", "--schemes", "l4,fp4", "--name", "L4 + FP4", "--emit-record")
    assert code == 0
    record = out[out.index("[combined"):]
    path = tmp_path / "c.catalog"
    path.write_text(reference_text() + "\n" + record)
    assert invoke("validate", str(path))[0] == 0


def test_combine_unknown_id():
    assert invoke("combine", "--builtin", "--schemes", "pw,ghost")[0] == 1


def test_validate_builtin():
    code, out, err = invoke("validate", "--builtin")
    assert code == 0
    assert out.startswith("0 error(s), 0 warning(s)")
    assert "info R5: pw:" in err


def test_validate_errors_exit_1(tmp_path):
    path = tmp_path / "bad.catalog"
    path.write_text(reference_text().replace("[expect l4]\nvsegment = V1", "[expect l4]\nvsegment = V2"))
    code, _, err = invoke("validate", str(path))
    assert code == 1
    assert "error R3: l4: expected (V2, H3), computed (V1, H3)" in err


def test_parse_failure_exit_2(tmp_path):
    path = tmp_path / "bad.catalog"
    path.write_text("[scheme a]\nname = A\ncategory = other\nS3 = ful\n")
    code, _, err = invoke("validate", str(path))
    assert code == 2
    assert ":4: invalid rating 'ful'" in err


def test_missing_file_exit_2(tmp_path):
    assert invoke("validate", str(tmp_path / "missing"))[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["place", "--builtin", "--bogus"],
        [],
        ["place"],
        ["table", "--builtin", "--format", "pdf"],
        ["diff", "--builtin", "pw"],
    ],
)
def test_usage_errors(argv, capsys):
    code = run(argv)
    assert code == 2
    assert "usage:" in capsys.readouterr().err


def test_builtin_and_path_conflict(tmp_path):
    path = tmp_path / "x.catalog"
    path.write_text(reference_text())
    assert invoke("place", str(path), "--builtin")[0] == 2


def test_table_formats():
    code, out, _ = invoke("table", "--builtin", "--format", "csv")
    assert code == 0 and out.splitlines()[0].startswith("id,name,U1,")
    code, out, _ = invoke("table", "--builtin", "--format", "md", "--ascii")
    assert code == 0 and "●" not in out


def test_chart_to_file(tmp_path):
    target = tmp_path / "chart.svg"
    code, out, _ = invoke("chart", "--builtin", "-o", str(target), "--ascii-labels")
    assert code == 0 and out == ""
    assert "OTP2, PUF1" in target.read_text()


def test_diff_with_path_and_builtin(tmp_path):
    path = tmp_path / "ref.catalog"
    path.write_text(reference_text())
    a = invoke("diff", str(path), "l1", "l4")
    b = invoke("diff", "--builtin", "l1", "l4")
    assert a == b
    assert "M4: absent → full" in a[1]


def test_stdout_is_byte_identical():
    for argv in (["place", "--builtin"], ["table", "--builtin", "--format", "csv"], ["chart", "--builtin"]):
        assert invoke(*argv)[1] == invoke(*argv)[1]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "udsmimic", "place", "--builtin", "--scheme", "otp2"],
        capture_output=True, text=True, cwd=Path(__file__).parent,
    )
    assert proc.returncode == 0 and "y=16" in proc.stdout
