import json

import pytest

from conftest import EXAF_HOLES
from gnswilf.cli import INVALID, OK, VIOLATION, main
from gnswilf.files import read_gns
from gnswilf.gns import validate_hole_set


@pytest.fixture
def exaf_file(tmp_path):
    p = tmp_path / "exaf.json"
    p.write_text(json.dumps({"dim": 2, "holes": [list(h) for h in EXAF_HOLES]}))
    return str(p)


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_example(capsys, exaf_file):
    code, out, _ = run(capsys, "check", exaf_file)
    assert code == OK
    assert "e*n = 56 > d*c = 32" in out and "slack 24" in out
    assert "n_ord*e = 80 > n_ord+g = 19" in out


def test_check_formats(capsys, exaf_file):
    code, out, _ = run(capsys, "check", exaf_file, "--format", "json-lines", "--order", "grevlex:2,1")
    obj = json.loads(out)
    assert code == OK and obj["e"] == 8 and "ewc_grevlex[21]_holds" in obj
    code, out, _ = run(capsys, "check", exaf_file, "--format", "csv")
    assert out.splitlines()[0].startswith("dim,genus,holes")


def test_check_strict_violation(capsys, tmp_path):
    f = write(tmp_path, "n23.json", {"dim": 1, "holes": [[1]]})
    code, out, _ = run(capsys, "check", f, "--ewc-strict")
    assert code == VIOLATION
    assert "witness holes [[1]]" in out


def test_invalid_inputs(capsys, tmp_path):
    bad = write(tmp_path, "bad.json", {"dim": 1, "holes": [[2]]})
    assert run(capsys, "check", bad)[0] == INVALID
    assert run(capsys, "check", str(tmp_path / "missing.json"))[0] == INVALID
    assert run(capsys, "nonsense")[0] == INVALID
    assert run(capsys, "enumerate", "-d", "2")[0] == INVALID
    assert run(capsys, "enumerate", "-d", "2", "-g", "2", "--emit", "--count-only")[0] == INVALID
    code, _, err = run(capsys, "sweep", "-d", "2", "--max-genus", "3", "--mode", "random", "--trials", "0")
    assert code == INVALID and err.startswith("error:")


def test_invariants_and_classify(capsys, exaf_file):
    code, out, _ = run(capsys, "invariants", exaf_file)
    assert code == OK
    lines = out.splitlines()
    assert {"e 8", "g 9", "n 7", "c 16"} <= set(lines)
    code, out, _ = run(capsys, "classify", exaf_file)
    assert code == OK and "frobenius none" in out and "is_symmetric false" in out


def test_thicken_and_restrict(capsys, tmp_path):
    f = write(tmp_path, "n.json", {"dim": 1, "holes": [[1]]})
    out_path = tmp_path / "t.json"
    assert run(capsys, "thicken", f, "--axis", "2", "-k", "1", "-o", str(out_path))[0] == OK
    T = read_gns(out_path)
    assert set(T.holes) == {(1, 0), (1, 1)}
    code, out, _ = run(capsys, "restrict", str(out_path))
    assert code == OK and "rank 2" in out
    code, out, _ = run(capsys, "thicken", f, "--axis", "2", "-k", "0")
    assert json.loads(out) == {"dim": 2, "holes": [[1, 0]]}


def test_enumerate(capsys):
    assert run(capsys, "enumerate", "-d", "2", "-g", "4")[1].strip() == "71"
    assert run(capsys, "enumerate", "-d", "1", "-g", "10", "--count-only")[1].strip() == "204"
    code, out, _ = run(capsys, "enumerate", "-d", "2", "-g", "2", "--emit")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == OK and len(rows) == 7
    for r in rows:
        validate_hole_set(2, [tuple(h) for h in r["holes"]])


def test_random_is_seeded(capsys):
    a = run(capsys, "random", "-d", "3", "-g", "30", "--seed", "4")[1]
    b = run(capsys, "random", "-d", "3", "-g", "30", "--seed", "4")[1]
    assert a == b and len(json.loads(a)["holes"]) == 30


def test_sweep(capsys, tmp_path):
    code, out, _ = run(capsys, "sweep", "-d", "2", "--max-genus", "5", "--ewc")
    assert code == OK and out.splitlines()[-1] == "total 314, violations 0"
    rep = tmp_path / "r.csv"
    code, out, _ = run(capsys, "sweep", "-d", "2", "--max-genus", "3", "--report", str(rep))
    assert code == OK and len(rep.read_text().splitlines()) == 1 + 33
    code, out, _ = run(capsys, "sweep", "-d", "1", "--max-genus", "3", "--ewc-strict")
    assert code == VIOLATION and "witness holes" in out
    code, out, _ = run(capsys, "sweep", "-d", "3", "--max-genus", "20", "--mode", "random", "--trials", "5")
    assert code == OK and "trials=5" in out


def test_ideal_commands(capsys, tmp_path):
    f = write(tmp_path, "i.json", {"vars": 2, "generators": [[5, 0], [3, 3], [0, 5]]})
    code, out, _ = run(capsys, "ideal", "wilf", f)
    assert code == OK and "46 > d*l(R/I) = 42" in out and "complete intersection false" in out
    code, out, _ = run(capsys, "ideal", "reduction", f)
    assert code == OK and "reduction number 1" in out and "slack 4" in out
    g = write(tmp_path, "l.json", {"vars": 2, "generators": [[5, 0], [1, 4], [0, 5]]})
    assert "reduction number 4" in run(capsys, "ideal", "reduction", g)[1]
    assert "reduction number > 3" in run(capsys, "ideal", "reduction", g, "--cap", "3")[1]


def test_family(capsys):
    code, out, _ = run(capsys, "family", "ordinary", "2", "3")
    assert code == OK and len(json.loads(out)["holes"]) == 11
    assert json.loads(run(capsys, "family", "axis", "2", "1", "2", "3")[1])["holes"] == [[1, 0], [1, 1], [1, 2]]
    code, out, _ = run(capsys, "family", "box", "1", "-j", "2", "--gaps", "1,2")
    assert code == OK and len(json.loads(out)["holes"]) == 4
    code, out, _ = run(capsys, "family", "e2d", "2", "1", "2", "3", "2", "--format", "csv")
    assert code == OK and out.splitlines()[1].split(",")[-1] == "true"
    assert run(capsys, "family", "axis", "2", "1")[0] == INVALID
    assert run(capsys, "family", "e2d", "2", "1", "2", "4", "1")[0] == INVALID
