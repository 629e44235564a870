import json
import subprocess
import sys

import pytest

from rouquier.cli import main, render_json


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_blocks_g222(capsys):
    code, out, _ = run(capsys, "blocks", "--de", "2", "--e", "2", "--r", "2", "--m", "0", "--n", "1")
    assert code == 0
    report = json.loads(out)
    assert report["schemaVersion"] == 1
    assert report["characters"] == 4
    assert [len(b) for b in report["blocks"]] == [1, 1, 1, 1]


def test_hyperplanes_rank2_d2(capsys):
    code, out, _ = run(capsys, "hyperplanes", "--family", "rank2", "--d", "2")
    assert code == 0
    hyps = json.loads(out)["hyperplanes"]
    assert len(hyps) == 7
    assert hyps[:3] == ["A0=A1", "B0=B1", "C0=C1"]


def test_hyperplanes_ak_with_weights(capsys):
    code, out, _ = run(capsys, "hyperplanes", "--family", "ak", "--d", "2", "--r", "2", "--m", "0,1", "--n", "1")
    assert code == 0
    assert json.loads(out)["containing"] == ["1N+M0-M1=0"]


def test_json_round_trip_and_determinism(capsys):
    argv = ["blocks", "--de", "4", "--e", "2", "--r", "3", "--m", "0,1", "--n", "1"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    assert render_json(json.loads(first)) == first


def test_multipartition_and_descended_labels(capsys):
    _, out, _ = run(capsys, "blocks", "--de", "2", "--e", "1", "--r", "2", "--m", "0,0", "--n", "1")
    assert [[2], []] in json.loads(out)["blocks"][0]
    _, out, _ = run(capsys, "blocks", "--de", "3", "--e", "3", "--r", "2", "--m", "0", "--n", "1")
    labels = [x for b in json.loads(out)["blocks"] for x in b]
    assert labels[0] == "orb[[[2],[],[]]]#0"
    assert len(labels) == 3


def test_rank2_direct_and_aa(capsys):
    code, out, _ = run(capsys, "blocks", "--family", "rank2", "--d", "2",
                       "--a", "0,0", "--b", "1,0", "--c", "0,0")
    assert code == 0
    report = json.loads(out)
    assert report["hyperplanes"] == ["A0=A1", "C0=C1"]
    code, out, _ = run(capsys, "aa", "--d", "2", "--a", "1,0", "--b", "0,0", "--c", "0,0")
    row = json.loads(out)["invariants"][0]
    assert row == {"label": "chi[0,0,0]", "a": "0", "A": "2", "a+A": "2"}


def test_text_format(capsys):
    code, out, _ = run(capsys, "blocks", "--de", "4", "--e", "4", "--r", "2", "--m", "0", "--n", "1", "--format", "text")
    assert code == 0
    assert out.startswith("G(4,4,2) via rank2-descent: 5 characters")


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "hyperplanes", "--family", "ak", "--d", "3", "--r", "2", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["hyperplanes"][0] == "N=0"


@pytest.mark.parametrize("argv, field", [
    (["blocks", "--de", "2", "--e", "1", "--r", "2", "--m", "0", "--n", "1"], "--m"),
    (["blocks", "--de", "3", "--e", "2", "--r", "2", "--m", "0", "--n", "1"], "--e"),
    (["blocks", "--de", "2", "--e", "1", "--r", "2", "--m", "0,0"], "--n"),
    (["blocks", "--de", "3", "--e", "3", "--r", "2", "--m", "0", "--n", "1", "--a", "1,0"], "--a"),
    (["aa", "--d", "2", "--a", "1", "--b", "0,0", "--c", "0,0"], "--a"),
    (["hyperplanes", "--family", "ak", "--d", "2"], "--r"),
])
def test_validation_errors_exit_2(capsys, argv, field):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert field in err
    assert out == ""


def test_parse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["blocks", "--de", "two"])
    assert exc.value.code == 2
    assert "--de" in capsys.readouterr().err


def test_invariant_error_exit_1(capsys, monkeypatch):
    from rouquier import cli
    from rouquier.blocks import InvariantError

    def boom(args):
        raise InvariantError("parent blocks are not stable under tau_d")
    monkeypatch.setitem(cli.COMMANDS, "blocks", boom)
    code, _, err = run(capsys, "blocks", "--de", "2", "--e", "1", "--r", "2", "--m", "0,0", "--n", "1")
    assert code == 1
    assert "tau_d" in err


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "rank2", "--max-d", "2", "--max-r", "2", "--seed", "3")
    report = json.loads(out)
    assert code == 0
    assert report["failed"] == 0 and report["passed"] > 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rouquier", "hyperplanes", "--family", "rank2", "--d", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["hyperplanes"] == ["A0=A1", "B0=B1"]


def test_verify_all_suites_default_bounds(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all", "--max-d", "4", "--max-r", "4", "--seed", "7")
    report = json.loads(out)
    assert code == 0
    assert report["failed"] == 0
    assert set(report["suites"]) == {"combinatorics", "cyclotomic", "schur", "ariki_koike", "rank2", "descent"}
