import io
import json

import pytest

from wrpinv.cli import main

from .conftest import LE10, TREFOIL


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_wrp_string(capsys):
    code, out, _ = run(capsys, "wrp", TREFOIL)
    assert code == 0
    assert out == "{w^6, 2w^3 + 3w^2}\n"


def test_gen_pipe_to_wrp(capsys, monkeypatch):
    code, pd, _ = run(capsys, "gen", "torus2", "4")
    assert code == 0
    code, out, _ = run(capsys, "wrp", "-", stdin=pd, monkeypatch=monkeypatch)
    assert out == "{w^8, 2w^4 + 4w^2}\n"


def test_gen_twist_and_mirror(capsys):
    code, out, _ = run(capsys, "gen", "twist", "3", "--mirror")
    assert code == 0 and out.count("X(") == 5


def test_wrp_file_and_json(capsys, tmp_path):
    f = tmp_path / "k.pd"
    f.write_text(TREFOIL)
    code, out, _ = run(capsys, "wrp", str(f), "--json", "--validate")
    assert code == 0
    report, value = out.strip().split("\n")
    assert json.loads(report)["status"] == "PASS"
    assert json.loads(value)["first"] == [[6, 0, 1]]


def test_wrp_debug_dumps(capsys):
    code, out, _ = run(capsys, "wrp", TREFOIL, "--graphs", "--cycles")
    assert code == 0
    assert out.count("# directed cycles") == 2
    assert "->" in out


def test_wrp_bad_input(capsys):
    code, _, err = run(capsys, "wrp", "X(1,1,2,2)")
    assert code == 1 and "nugatory" in err
    code, _, err = run(capsys, "wrp", "X(1,2,3)")
    assert code == 1


def test_usage_errors(capsys):
    assert main([]) == 2
    assert main(["nope"]) == 2
    assert main(["gen", "torus2", "x"]) == 2
    assert main(["gen", "torus2", "1"]) == 2
    assert main(["wrp", "no-such-file"]) == 2
    assert main(["table", "missing.tsv", "out.txt"]) == 2
    capsys.readouterr()


def test_table_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    assert main(["table", str(LE10), str(a)]) == 0
    assert main(["table", str(LE10), str(b), "--jobs", "3"]) == 0
    assert a.read_bytes() == b.read_bytes()
    lines = a.read_text().splitlines()
    assert len(lines) == 196
    assert lines[0] == "K3a1\t{w^6, 2w^3 + 3w^2}"


@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_table_formats(capsys, tmp_path, fmt):
    out = tmp_path / f"t.{fmt}"
    assert main(["table", str(LE10), str(out), "--format", fmt, "--mirrors"]) == 0
    text = out.read_text()
    assert "K3a1m" in text


def test_table_partial_failure(capsys, tmp_path):
    src = tmp_path / "in.tsv"
    src.write_text(f"K3a1\t{TREFOIL}\nbad\tX(1,2\nkink\tX(1,1,2,2)\n")
    out = tmp_path / "out.txt"
    assert main(["table", str(src), str(out)]) == 1
    lines = out.read_text().splitlines()
    assert lines[0].startswith("K3a1\t{")
    assert lines[1].startswith("bad\tERROR") and lines[2].startswith("kink\tERROR")


def test_collisions(capsys):
    code, out, _ = run(capsys, "collisions", str(LE10), "--mirrors")
    assert code == 0
    assert "items: 372  classes: 372" in out
    code, out, _ = run(capsys, "collisions", str(LE10), "--json")
    assert json.loads(out)["summary"]["classes"] == 196


def test_flype_check(capsys, tmp_path, le10_by_name):
    from wrpinv.pdcode import serialize_pd

    src = tmp_path / "in.tsv"
    src.write_text("".join(f"{n}\t{serialize_pd(le10_by_name[n])}\n" for n in ("K3a1", "K6a1", "K7a7")))
    code, out, _ = run(capsys, "flype-check", str(src), "--json")
    data = json.loads(out)
    assert code == 0
    assert data[0]["sites"] == 6
    assert all(r["passed"] for r in data)
    code, out, _ = run(capsys, "flype-check", TREFOIL, "--shapes", "--roundtrip")
    assert code == 0 and "PASS" in out


def test_twist_report(capsys):
    code, out, _ = run(capsys, "twist-report")
    assert code == 0 and "k=2" in out and "k=6" in out
