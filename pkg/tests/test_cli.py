import json

from prmcodes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_params(capsys):
    code, out, _ = run(capsys, "params", "--q", "2", "--m", "2", "--nu", "1")
    assert code == 0
    assert "n=7 k=3 d=4" in out
    code, out, _ = run(capsys, "params", "--q", "3", "--m", "2", "--nu", "2")
    assert code == 0 and "n=13 k=6 d=6" in out


def test_params_json_round_trip(capsys):
    code, out, _ = run(capsys, "params", "--q", "3", "--m", "2", "--nu", "2",
                       "--format", "json")
    data = json.loads(out)
    assert data == {"q": 3, "m": 2, "nu": 2, "n": 13, "k": 6, "d": 6, "r": 0, "s": 1}


def test_params_rejects_out_of_range(capsys):
    code, _, err = run(capsys, "params", "--q", "2", "--m", "2", "--nu", "3")
    assert code == 2
    assert "m(q-1)" in err


def test_params_rejects_non_prime_power(capsys):
    code, _, err = run(capsys, "params", "--q", "6", "--m", "2", "--nu", "1")
    assert code == 2


def test_field_by_p_e(capsys):
    code, out, _ = run(capsys, "params", "--p", "2", "--e", "2", "--m", "2", "--nu", "1")
    assert code == 0 and "q=4" in out


def test_verify_match(capsys):
    code, out, _ = run(capsys, "verify", "--q", "2", "--m", "2", "--nu", "2")
    assert code == 0
    assert "k: 6 = 6 MATCH" in out and "d: 2 = 2 MATCH" in out
    code, out, _ = run(capsys, "verify", "--q", "3", "--m", "1", "--nu", "2")
    assert code == 0 and "k: 3 = 3 MATCH" in out and "d: 2 = 2 MATCH" in out


def test_verify_budget(capsys):
    code, _, err = run(capsys, "verify", "--q", "5", "--m", "2", "--nu", "8",
                       "--budget", "1000")
    assert code == 3
    assert "budget" in err


def test_separate(capsys, tmp_path):
    pf = tmp_path / "pts.txt"
    pf.write_text("1,0,0\n0,1,0\n0,0,1\n")
    code, out, _ = run(capsys, "separate", "--q", "3", "--points", str(pf),
                       "--target", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["hyperplane"] == [[1, 0, 0], [0, 1, 1]]
    assert data["contains"] == [True, False, False]


def test_separate_too_many_points(capsys, tmp_path):
    pf = tmp_path / "pts.txt"
    pf.write_text("1,0,0\n1,1,0\n1,0,1\n1,1,1\n")  # t = 4 > q+1 = 3
    code, _, err = run(capsys, "separate", "--q", "2", "--points", str(pf))
    assert code == 2


def test_separate_duplicates(capsys, tmp_path):
    pf = tmp_path / "pts.txt"
    pf.write_text("1,0,0\n2,0,0\n")  # same projective point
    code, _, err = run(capsys, "separate", "--q", "3", "--points", str(pf))
    assert code == 2


def test_gapdemo(capsys):
    code, out, _ = run(capsys, "gapdemo", "--q", "2", "--m", "2", "--nu", "2",
                       "--seed", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert 2 <= data["t"] <= 3
    assert data["deg_H"] == 2 + data["t"] - 1
    assert data["zero_count_H"] == 6


def test_gapdemo_deterministic(capsys):
    _, out1, _ = run(capsys, "gapdemo", "--q", "3", "--m", "2", "--nu", "3",
                     "--seed", "7", "--format", "json")
    _, out2, _ = run(capsys, "gapdemo", "--q", "3", "--m", "2", "--nu", "3",
                     "--seed", "7", "--format", "json")
    assert out1 == out2


def test_gapdemo_infeasible(capsys):
    # every linear form over GF(2), m=2 has t = q^m = 4 > q+1
    code, _, err = run(capsys, "gapdemo", "--q", "2", "--m", "2", "--nu", "1",
                       "--seed", "1")
    assert code == 5


def test_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "--q-list", "2", "--m-list", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 3  # header + nu in {1, 2}
    assert all(line.endswith("MATCH") for line in lines[1:])


def test_sweep_json(capsys):
    code, out, _ = run(capsys, "sweep", "--q-list", "2,3", "--m-list", "1,2",
                       "--format", "json")
    rows = json.loads(out)
    assert len(rows) == 1 + 2 + 2 + 4
    assert all(r["status"] == "MATCH" for r in rows)


def test_sweep_empty(capsys):
    code, out, _ = run(capsys, "sweep")
    assert code == 0


def test_matrix(capsys, tmp_path):
    code, out, _ = run(capsys, "matrix", "--q", "2", "--m", "2", "--nu", "1")
    assert code == 0
    rows = [line.split(",") for line in out.strip().splitlines()]
    assert len(rows) == 3 and len(rows[0]) == 7
    dest = tmp_path / "g.json"
    code, _, _ = run(capsys, "matrix", "--q", "2", "--m", "2", "--nu", "1",
                     "--format", "json", "-o", str(dest))
    data = json.loads(dest.read_text())
    assert data["q"] == 2 and len(data["entries"]) == 3


def test_flats(capsys, tmp_path):
    ff = tmp_path / "flat.txt"
    ff.write_text("1,0,0\n")
    code, out, _ = run(capsys, "flats", "--q", "3", "--flat", str(ff),
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == data["expected"] == 4
    assert data["partition_ok"]


def test_lemma4(capsys):
    code, out, _ = run(capsys, "lemma4", "--q", "2", "--m", "2")
    assert code == 0 and "True" in out
