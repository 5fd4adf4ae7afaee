from __future__ import annotations

import json

import pytest

from agtrellis.cli import main
from agtrellis.codefile import dumps_code, dumps_gonality, loads_code, loads_gonality, read_code, write_code
from agtrellis.codes import LinearCode
from agtrellis.errors import ParseError
from agtrellis.field import get_field
from agtrellis.gonality import gs_plane_curve
from agtrellis.hermitian import hermitian_code
from agtrellis.verify import random_code_corpus

HAMMING_FILE = """\
# Hamming [7,4]
field 2 1 0 1
code 4 7
1 0 0 0 0 1 1
0 1 0 0 1 0 1
0 0 1 0 1 1 0
0 0 0 1 1 1 1
"""


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


@pytest.fixture
def hamming(tmp_path):
    path = tmp_path / "hamming.code"
    path.write_text(HAMMING_FILE)
    return str(path)


def test_code_file_round_trip(tmp_path):
    codes = random_code_corpus(seed=4, count=30) + [hermitian_code(q, m).code for q, m in ((2, 3), (3, 14), (4, 20))]
    for i, code in enumerate(codes):
        assert loads_code(dumps_code(code)) == code
        path = tmp_path / f"c{i}.code"
        write_code(code, path)
        assert read_code(path) == code


@pytest.mark.parametrize("text,line,msg", [
    ("field 2 1 0 1\ncode 1 3\n1 1\n", 3, "expected 3 entries"),
    ("field 4 1 0 1\ncode 1 3\n1 1 1\n", 1, "prime"),
    ("field 2 1 0 1\ncode 2 3\n1 1 1\n", 3, "expected 2 generator rows"),
    ("field 2 1 0 1\ncode 1 3\n1 x 1\n", 3, "integers"),
    ("field 2 1 0 1\ncode 1 3\n1 2 1\n", 3, "not an element"),
    ("code 1 3\nfield 2 1 0 1\n1 1 1\n", 1, "first line"),
    ("field 2 1 0 1\ncode 2 3\n1 1 1\n1 1 1\n", 2, "rank 1"),
])
def test_parse_errors(text, line, msg):
    with pytest.raises(ParseError) as info:
        loads_code(text)
    assert info.value.line == line and msg in str(info.value)


def test_gonality_file_forms():
    gs = gs_plane_curve(4)
    assert loads_gonality(dumps_gonality(gs)) == gs
    assert loads_gonality("genus 3\norigin custom\ngammas 0 3 4\n").gammas == (0, 3, 4)


def test_gonality_command(capsys):
    rc, out, _ = run(capsys, "gonality", "--plane-degree", "7")
    assert rc == 0
    assert "jumps (12): -1 6 13 14 20 21 27 28 29 34 35 36" in out
    assert "split_min(2g-2) = 12" in out
    grid = out.strip().splitlines()[-6:]
    assert grid[0].split()[0] == "*-1*" and grid[5].split()[:3] == ["*34*", "*35*", "*36*"]
    rc, out, _ = run(capsys, "gonality", "--plane-degree", "3", "--format", "csv")
    rows = [line.split(",") for line in out.strip().splitlines()[1:]]
    assert [int(r[1]) for r in rows] == [1, 1, 1, 2, 2, 2]
    rc, out, _ = run(capsys, "gonality", "--hyperelliptic-genus", "5", "--format", "json")
    data = json.loads(out)
    assert all(r["split_min"] == (r["N"] + 1) // 2 + 1 for r in data["table"])


def test_gonality_invalid_sequence(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("genus 4\ngammas 0 2 5 6\n")
    rc, _, err = run(capsys, "gonality", "--sequence", str(path))
    assert rc == 2 and "SymmetryViolated" in err


def test_gonality_needs_one_source(capsys):
    assert run(capsys, "gonality")[0] == 2
    assert run(capsys, "gonality", "--plane-degree", "3", "--hyperelliptic-genus", "3")[0] == 2


def test_hermitian_command(capsys, tmp_path):
    out_path = tmp_path / "h.code"
    rc, out, _ = run(capsys, "hermitian", "--q", "2", "--m", "3", "--profile", "--out", str(out_path), "--format", "json")
    data = json.loads(out)
    assert rc == 0 and (data["n"], data["k"]) == (8, 3)
    assert data["profile"]["s_max"] == 3 == data["bounds"]["w"]
    assert read_code(out_path) == hermitian_code(2, 3).code
    rc, out, _ = run(capsys, "hermitian", "--q", "3", "--m", "14", "--profile")
    assert rc == 0 and "s(C) = 12" in out
    rc, out, _ = run(capsys, "hermitian", "--q", "2", "--m", "4", "--exact-distance")
    assert rc == 0 and "exact d = 4" in out
    # 9^12 codewords is over the enumeration cap
    rc, _, err = run(capsys, "hermitian", "--q", "3", "--m", "14", "--exact-distance")
    assert rc == 2 and "EnumerationTooLarge" in err
    assert run(capsys, "hermitian", "--q", "2", "--m", "9")[0] == 2
    assert run(capsys, "hermitian", "--q", "7", "--m", "1")[0] == 2


def test_profile_command(capsys, hamming, tmp_path):
    rc, out, _ = run(capsys, "profile", "--code", hamming)
    assert rc == 0 and "s(C) = 3" in out
    ident = run(capsys, "profile", "--code", hamming, "--permutation", "1,2,3,4,5,6,7")[1]
    assert ident == out
    rep = tmp_path / "rep.code"
    rep.write_text("field 2 1 0 1\ncode 1 3\n1 1 1\n")
    data = json.loads(run(capsys, "profile", "--code", str(rep), "--format", "json")[1])
    assert data["profile"]["s"] == [0, 1, 1, 0]
    rc, _, err = run(capsys, "profile", "--code", hamming, "--permutation", "1,2")
    assert rc == 2
    bad = tmp_path / "bad.code"
    bad.write_text("field 2 1 0 1\ncode 1 3\n1 1\n")
    rc, _, err = run(capsys, "profile", "--code", str(bad))
    assert rc == 2 and "line 3" in err
    assert run(capsys, "profile", "--code", str(tmp_path / "missing"))[0] == 2


def test_search_command(capsys, hamming, tmp_path):
    rc, out, _ = run(capsys, "search", "--code", hamming, "--strategy", "exhaustive", "--format", "json")
    data = json.loads(out)
    assert rc == 0 and data["best_s"] == 3 and data["evaluations"] == 5040 and data["exhaustive"]
    path = tmp_path / "h.code"
    write_code(hermitian_code(3, 14).code, path)
    args = ["search", "--code", str(path), "--strategy", "random", "--budget", "200", "--seed", "7", "--format", "json"]
    first = run(capsys, *args)[1]
    assert first == run(capsys, *args, "--workers", "2")[1]
    assert json.loads(first)["best_s"] >= 11
    assert run(capsys, "search", "--code", hamming, "--budget", "0")[0] == 2
    assert run(capsys, "search", "--code", str(path), "--strategy", "exhaustive")[0] == 2


def test_bounds_command(capsys, tmp_path):
    rc, out, _ = run(capsys, "bounds", "--plane-degree", "3", "--n", "27", "--m", "14", "--format", "json")
    assert rc == 0 and json.loads(out)["gonality"] == 11
    path = tmp_path / "h.code"
    write_code(hermitian_code(3, 14).code, path)
    rc, out, _ = run(capsys, "bounds", "--plane-degree", "3", "--code", str(path), "--m", "14", "--format", "json")
    assert json.loads(out)["exact_s"] == 12
    assert run(capsys, "bounds", "--plane-degree", "3", "--m", "14")[0] == 2
    assert run(capsys, "bounds", "--plane-degree", "3", "--n", "27", "--m", "3")[0] == 2


def test_json_is_byte_stable(capsys):
    a = run(capsys, "hermitian", "--q", "2", "--m", "5", "--profile", "--format", "json")[1]
    b = run(capsys, "hermitian", "--q", "2", "--m", "5", "--profile", "--format", "json")[1]
    assert a == b


def test_verify_command(capsys):
    rc, out, _ = run(capsys, "verify", "--suite", "jumps")
    assert rc == 0 and "FAIL" not in out
    rc, out, _ = run(capsys, "verify", "--suite", "r-oracle")
    assert rc == 0 and out.count("DEVIATION") == 2
    rc, out, _ = run(capsys, "verify", "--suite", "duality", "--seed", "1", "--format", "json")
    checks = json.loads(out)
    assert rc == 0 and all(c["status"] == "pass" for c in checks)
    assert "300 cases" in checks[0]["detail"]


def test_verify_exit_code_on_failure(capsys, monkeypatch):
    from agtrellis import verify
    from agtrellis.verify import Check
    monkeypatch.setitem(verify.SUITE_FUNCS, "jumps", lambda seed, workers: [Check("jumps", "broken", "fail", "x")])
    rc, out, _ = run(capsys, "verify", "--suite", "jumps")
    assert rc == 1 and out.startswith("FAIL")


def test_field_with_explicit_modulus():
    F = get_field(2, 3, (1, 0, 1, 1))
    code = LinearCode(F, [[1, 2, 7]])
    assert loads_code(dumps_code(code)).field.modulus == (1, 0, 1, 1)
