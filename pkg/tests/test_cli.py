import json

import pytest

from repgeo.cli import main

R1_FILE = """\
field p=2
group cyclic(2) as a
dim 2
act a = [[0,1],[1,0]]
"""

R2_FILE = """\
field p=2
group product(cyclic(2) as a, cyclic(2) as b)
dim 2
act a = [[0,1],[1,0]]
act b = [[1,0],[0,1]]
act a·b = [[0,1],[1,0]]
"""

TRIVIAL_FILE = """\
field p=2
group cyclic(2) as a
dim 2
act a = [[1,0],[0,1]]
"""

Z2_GRP = "group cyclic(2) as a\n"
V4_GRP = "group product(cyclic(2) as a, cyclic(2) as b)\n"
Z3_GRP = "group cyclic(3) as c\n"

SYS_FILE = "xvars x\nyvars y\nmodule: x*y - x = 0\n"


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in [
        ("r1.rep", R1_FILE),
        ("r2.rep", R2_FILE),
        ("triv.rep", TRIVIAL_FILE),
        ("z2.grp", Z2_GRP),
        ("v4.grp", V4_GRP),
        ("z3.grp", Z3_GRP),
        ("t.sys", SYS_FILE),
    ]:
        p = tmp_path / name
        p.write_text(text, encoding="utf-8")
        paths[name] = str(p)
    return paths


def _json_run(capsys, argv):
    code = main(["--json"] + argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_qid_witness(files, capsys):
    code, doc = _json_run(
        capsys, ["qid", files["r1.rep"], "x*y - x = 0 => y = 1"]
    )
    assert code == 1
    assert doc["outcome"] == "not-fulfilled"
    assert doc["witness"]["y"] == ["a"]


def test_qid_fulfilled(files, capsys):
    code, doc = _json_run(capsys, ["qid", files["r1.rep"], "=> y*y = 1"])
    assert code == 0 and doc["witness"] is None


def test_check_geo_groups(files, capsys):
    code, doc = _json_run(
        capsys, ["check-geo-groups", files["z2.grp"], files["v4.grp"]]
    )
    assert code == 0 and doc["outcome"] == "equivalent"
    code, doc = _json_run(
        capsys, ["check-geo-groups", files["z2.grp"], files["z3.grp"]]
    )
    assert code == 1 and doc["outcome"] == "not-equivalent"


def test_check_geo_reps(files, capsys):
    code, doc = _json_run(capsys, ["check-geo", files["r1.rep"], files["r2.rep"]])
    assert code == 0
    assert "forward" in doc["certificate"] and "backward" in doc["certificate"]


def test_check_at(files, capsys):
    code, doc = _json_run(capsys, ["check-at", files["r1.rep"], files["r2.rep"]])
    assert code == 0 and doc["outcome"] == "equivalent"
    code, doc = _json_run(capsys, ["check-at", files["r1.rep"], files["triv.rep"]])
    assert code == 1
    assert doc["witness"]["in_first"] != doc["witness"]["in_second"]


def test_closure(files, capsys):
    args = ["closure", files["r1.rep"], "--system", files["t.sys"], "--member"]
    code, doc = _json_run(capsys, args + ["x*y^2 - x = 0", "--action-type"])
    assert code == 0 and doc["outcome"] == "member"
    code, doc = _json_run(capsys, args + ["x = 0"])
    assert code == 1 and doc["outcome"] == "non-member"


def test_faithful(files, capsys, tmp_path):
    out = tmp_path / "quot.rep"
    code, doc = _json_run(
        capsys, ["faithful", files["r2.rep"], "-o", str(out)]
    )
    assert code == 0
    from repgeo import parse_rep_file

    quot = parse_rep_file(out.read_text(encoding="utf-8"))
    assert quot.group.order == 2


def test_homs(files, capsys):
    code, doc = _json_run(capsys, ["homs", files["v4.grp"], files["z2.grp"]])
    assert code == 0 and doc["certificate"]["count"] == 4
    code, doc = _json_run(
        capsys, ["homs", files["r1.rep"], files["r1.rep"], "--reps"]
    )
    assert doc["certificate"]["count"] == 8


def test_paper_demo(files, capsys):
    code, doc = _json_run(capsys, ["paper-demo", "--p", "2"])
    assert code == 0
    statuses = {c["id"]: c["status"] for c in doc["certificate"]["claims"]}
    assert statuses == {
        "C1": "CONFIRMED",
        "C2": "CONFIRMED",
        "C3": "CONFIRMED",
        "C4": "CONTRADICTED",
        "C5": "CONFIRMED",
        "C6": "CONTRADICTED",
    }


def test_parse_error_exit_3(files, capsys, tmp_path):
    bad = tmp_path / "bad.rep"
    bad.write_text("nonsense\n", encoding="utf-8")
    code, doc = _json_run(capsys, ["qid", str(bad), "y = 1"])
    assert code == 3 and doc["outcome"] == "error"
    assert "span" in doc


def test_missing_file_exit_3(capsys):
    code, doc = _json_run(capsys, ["qid", "/nonexistent.rep", "y = 1"])
    assert code == 3


def test_json_stable_modulo_timing(files, capsys):
    def run_once():
        main(["--json", "check-geo", files["r1.rep"], files["r2.rep"]])
        doc = json.loads(capsys.readouterr().out)
        doc.pop("timing_ms")
        # inputs contain tmp paths, fine: identical between the two runs
        return json.dumps(doc, sort_keys=True)

    assert run_once() == run_once()


def test_human_output_not_json(files, capsys):
    code = main(["qid", files["r1.rep"], "=> y*y = 1"])
    out = capsys.readouterr().out
    assert code == 0 and out.strip() == "fulfilled"
