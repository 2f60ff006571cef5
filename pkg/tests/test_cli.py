import json
import subprocess
import sys

import pytest

from nilcentral.cli import main
from nilcentral.maps import g_map, identity_map, map_from_images, p_map
from nilcentral.nilmatrix import RingContext, UTMatrix, named_matrix, unit


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


@pytest.fixture
def maps(tmp_path):
    ctx4, ctx5 = RingContext(4), RingContext(5)
    images = [UTMatrix.zero(ctx4)] * 6
    images[ctx4.idx(2, 3)] = unit(ctx4, 2, 3)
    return {
        "g": write(tmp_path, "g.json", g_map(ctx4).to_dict()),
        "p": write(tmp_path, "p.json", p_map(ctx4).to_dict()),
        "3id": write(tmp_path, "3id.json", (3 * identity_map(ctx4)).to_dict()),
        "id+4g": write(tmp_path, "id4g.json", (identity_map(ctx5) + 4 * g_map(ctx5)).to_dict()),
        "x23": write(tmp_path, "x23.json", map_from_images(ctx4, images).to_dict()),
        "id3": write(tmp_path, "id3.json", identity_map(RingContext(3)).to_dict()),
    }


def test_decide(capsys, maps, tmp_path):
    code, out = run(capsys, "decide", "--map", maps["g"], "--property", "commuting")
    assert code == 0 and json.loads(out)["result"]["verdict"] is True
    code, out = run(capsys, "decide", "--map", maps["p"], "--property", "commuting")
    rep = json.loads(out)["result"]
    assert code == 1 and rep["verdict"] is False
    assert rep["witnesses"][0]["x"]["entries"] == [{"i": 1, "j": 2, "v": "1"}]
    assert rep["witnesses"][0]["commutator"]["entries"] == [{"i": 1, "j": 4, "v": "-1"}]
    code, _ = run(capsys, "decide", "--map", maps["p"], "--property", "centralizing")
    assert code == 0
    trunc = tmp_path / "trunc.json"
    trunc.write_text(json.dumps(g_map(RingContext(4)).to_dict())[:40])
    assert run(capsys, "decide", "--map", str(trunc))[0] == 2
    assert run(capsys, "decide", "--map", str(tmp_path / "missing.json"))[0] == 2


def test_decide_report_reproducible(capsys, maps, tmp_path):
    from nilcentral.analyzer.deciders import is_commuting
    from nilcentral.maps import MapOnN, apply
    from nilcentral.nilmatrix import commutator

    _, out = run(capsys, "decide", "--map", maps["p"], "--property", "commuting")
    rep = json.loads(out)
    f = MapOnN.from_dict(json.loads(open(maps["p"]).read()))
    assert is_commuting(f).to_dict() == rep["result"]
    for w in rep["result"]["witnesses"]:
        x = UTMatrix.from_dict(w["x"])
        assert commutator(apply(f, x), x) == UTMatrix.from_dict(w["commutator"])


def test_field_mismatch_is_usage_error(capsys, tmp_path):
    bad = g_map(RingContext(4)).to_dict()
    bad["constant"] = unit(RingContext(5), 1, 2).to_dict()
    assert run(capsys, "decide", "--map", write(tmp_path, "bad.json", bad))[0] == 2
    bad = g_map(RingContext(4)).to_dict()
    bad["field"] = "F4"
    assert run(capsys, "decide", "--map", write(tmp_path, "bad2.json", bad))[0] == 2


def test_decompose(capsys, maps):
    code, out = run(capsys, "decompose", "--map", maps["3id"])
    res = json.loads(out)["result"]
    assert code == 0
    assert (res["lambda"], res["a"], res["standard_form"]) == ("3", "0", True)
    code, out = run(capsys, "decompose", "--map", maps["id+4g"])
    res = json.loads(out)["result"]
    assert (res["lambda"], res["a"], res["standard_form"]) == ("1", "4", False)
    assert res["mu"]["r"] == 5
    code, out = run(capsys, "decompose", "--map", maps["x23"])
    assert code == 1 and json.loads(out)["result"]["witnesses"]
    assert run(capsys, "decompose", "--map", maps["id3"])[0] == 2
    assert run(capsys, "decompose", "--map", maps["p"])[0] == 2


def test_dims(capsys):
    code, out = run(capsys, "dims", "--r", "4", "--field", "Q", "--kind", "both")
    rows = json.loads(out)["result"]["rows"]
    assert code == 0
    assert [(r["computed"], r["predicted"], r["match"]) for r in rows] == [(19, 19, True), (8, 8, True)]
    code, out = run(capsys, "dims", "--r", "3", "--field", "Q")
    rows = json.loads(out)["result"]["rows"]
    assert code == 0 and all(r["predicted"] == "n/a (r<4)" for r in rows)
    code, out = run(capsys, "dims", "--r", "4", "--field", "F101")
    res = json.loads(out)["result"]
    assert res["exploration"] and all(r["predicted"] == "exploration" for r in res["rows"])
    code, out = run(capsys, "dims", "--r", "4", "--format", "csv", "--kind", "commuting")
    assert out == "r,field,n,kind,computed,predicted,match\n4,Q,6,commuting,8,8,true\n"
    with pytest.raises(SystemExit) as err:
        main(["dims", "--r", "4", "--field", "F9"])
    assert err.value.code == 2
    assert run(capsys, "dims", "--r", "1")[0] == 2


def test_centralizer(capsys, tmp_path):
    ctx4 = RingContext(4)
    code, out = run(capsys, "centralizer", "--matrix", write(tmp_path, "j.json", named_matrix(ctx4, "J").to_dict()))
    res = json.loads(out)["result"]
    assert code == 0 and res["oracle_dimension"] == 3 and res["equal"] is True
    code, out = run(capsys, "centralizer", "--matrix", write(tmp_path, "c.json", unit(ctx4, 1, 4).to_dict()))
    res = json.loads(out)["result"]
    assert res["oracle_dimension"] == 6 and res["closed_form_dimension"] == "n/a"
    code, out = run(capsys, "centralizer", "--matrix", write(tmp_path, "z.json", UTMatrix.zero(RingContext(5)).to_dict()))
    assert json.loads(out)["result"]["oracle_dimension"] == 10
    bad = {"r": 4, "field": "Q", "entries": [{"i": 3, "j": 1, "v": "1"}]}
    assert run(capsys, "centralizer", "--matrix", write(tmp_path, "bad.json", bad))[0] == 2


def test_span(capsys):
    code, out = run(capsys, "span", "--r", "4")
    assert code == 0 and json.loads(out)["result"] == {"rank": 6, "n": 6, "spans": True}


def test_identities(capsys):
    code, out = run(capsys, "identities", "--r-max", "8", "--no-timing")
    res = json.loads(out)["result"]
    assert code == 0 and res["claims_hold"]
    assert res["summary"]["power_closed_form"]["display_matches"] == 0
    assert res["power_corrected_form_matches"]
    assert res["summary"]["factorial_inequality"]["claims_hold"]
    assert run(capsys, "identities", "--r-max", "4")[0] == 2


def test_sweep(capsys, tmp_path):
    out_path = tmp_path / "sweep.csv"
    code, _ = run(capsys, "sweep", "--r", "4,5", "--p", "Q,101", "--out", str(out_path))
    assert code == 0
    assert out_path.read_text() == (
        "r,p,n,dim_centralizing,dim_commuting,pred_centralizing,pred_commuting,match\n"
        "4,Q,6,19,8,19,8,true\n"
        "4,F101,6,19,8,n/a,n/a,exploration\n"
        "5,Q,10,31,12,31,12,true\n"
        "5,F101,10,31,12,n/a,n/a,exploration\n"
    )
    assert run(capsys, "sweep", "--r", "4", "--p", "9")[0] == 2
    assert run(capsys, "sweep", "--r", "x", "--p", "Q")[0] == 2


def test_examples(capsys):
    code, out = run(capsys, "examples", "--r", "4", "--name", "g")
    assert code == 0 and json.loads(out) == g_map(RingContext(4)).to_dict()
    _, out = run(capsys, "examples", "--r", "4", "--name", "p")
    assert json.loads(out)["constant"]["entries"] == [{"i": 1, "j": 3, "v": "1"}, {"i": 2, "j": 4, "v": "1"}]
    _, out = run(capsys, "examples", "--r", "4", "--name", "W1")
    assert json.loads(out)["entries"] == [
        {"i": 1, "j": 2, "v": "1"},
        {"i": 2, "j": 3, "v": "2"},
        {"i": 3, "j": 4, "v": "3"},
    ]
    _, out = run(capsys, "examples", "--r", "4", "--name", "S2")
    assert len(json.loads(out)["members"]) == 6
    assert run(capsys, "examples", "--r", "3", "--name", "g")[0] == 2
    with pytest.raises(SystemExit) as err:
        main(["examples", "--r", "4", "--name", "K"])
    assert err.value.code == 2


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "nilcentral", *argv], capture_output=True)


def test_byte_stable_outputs(tmp_path):
    g = tmp_path / "g.json"
    g.write_bytes(_cli("examples", "--r", "5", "--name", "g").stdout)
    for argv in (
        ("decide", "--map", str(g), "--property", "commuting", "--no-timing"),
        ("identities", "--r-max", "6", "--seed", "3", "--no-timing"),
        ("sweep", "--r", "4", "--p", "Q,7"),
        ("dims", "--r", "4", "--no-timing"),
    ):
        first, second = _cli(*argv), _cli(*argv)
        assert first.returncode == 0
        assert first.stdout == second.stdout and first.stdout


def test_subprocess_exit_codes(tmp_path):
    p = tmp_path / "p.json"
    p.write_bytes(_cli("examples", "--r", "4", "--name", "p").stdout)
    assert _cli("decide", "--map", str(p), "--property", "commuting").returncode == 1
    assert _cli("decide", "--map", str(p), "--property", "centralizing").returncode == 0
    assert _cli("bogus").returncode == 2
