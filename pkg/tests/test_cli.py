"""The command-line front end, driven in-process through ``main``."""

import io
import json

import pytest

from galekit.cli import main


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def run(*argv):
    out = io.StringIO()
    status = main([str(a) for a in argv], out)
    return status, json.loads(out.getvalue()), out.getvalue()


def config(rows, name=""):
    return {"name": name, "dim": len(rows), "columns": [list(map(str, c)) for c in zip(*rows)]}


@pytest.fixture
def files(tmp_path):
    f = {}
    f["line_a"] = write(tmp_path, "line_a.json", config([[1, -1]], "A"))
    f["line_same"] = write(tmp_path, "line_same.json", config([[1, 1]]))
    f["points2"] = write(tmp_path, "k2.json", {"m": 2, "facets": [[1], [2]]})
    f["plane_a"] = write(tmp_path, "plane_a.json", config([[1, 0, -1, -1], [0, 1, 0, -1]]))
    f["plane_g"] = write(tmp_path, "plane_g.json", config([[1, 0, 1, 0], [1, 1, 0, 1]]))
    f["plane_k"] = write(tmp_path, "plane_k.json", {"m": 4, "facets": [[3, 4], [4, 1], [1, 2], [2, 3]]})
    f["trapezoid"] = write(tmp_path, "poly.json",
                           dict(config([[1, 0, -1, -1], [0, 1, 0, -1]]), b=["0", "0", "1", "2"]))
    prism = [[1, 0, -1, 1, 0, -1], [0, 1, -1, 0, 1, -1], [1, 1, 1, -1, -1, -1]]
    f["prism_a"] = write(tmp_path, "prism_a.json", dict(config(prism), lattice=True))
    f["prism_g"] = write(tmp_path, "prism_g.json",
                         config([[1, -1, 0, -1, 1, 0], [0, 1, -1, 0, -1, 1], [1, 1, 1, 1, 1, 1]]))
    f["prism_k"] = write(tmp_path, "prism_k.json", {"m": 6, "facets": [
        [1, 2, 3], [4, 5, 6], [1, 2, 4], [2, 4, 5], [2, 3, 5], [3, 5, 6], [1, 3, 6], [1, 4, 6]]})
    f["mixed"] = write(tmp_path, "mixed.json", {"facets": [
        [1, 2, 3], [4, 5, 6], [1, 2, 4], [2, 4, 5], [1, 3, 4, 6], [2, 3, 5, 6]]})
    f["ident"] = write(tmp_path, "ident.json", config([[1, 0], [0, 1]], "I"))
    f["pentagon"] = write(tmp_path, "pent.json", config([[1, 0, -1, 2, -2], [1, -2, 1, -1, -1]]))
    f["datum"] = write(tmp_path, "datum.json", {
        "m": 5, "k": 3, "E": [[3, 4, 5], [4, 5, 1], [5, 1, 2], [1, 2, 3], [2, 3, 4]],
        "points": [[1, 1], [0, -2], [-1, 1], [2, -1], [-2, -1]]})
    f["zmat"] = write(tmp_path, "z.json", {"rows": [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]})
    f["collinear"] = write(tmp_path, "col.json", config([[1, 2]]))
    return f


def test_check_fan_opposite_rays(files):
    status, body, _ = run("check-fan", "--a", files["line_a"], "--complex", files["points2"])
    assert status == 0 and body["verdict"] == "fan" and body["command"] == "check-fan"


def test_check_fan_reports_witness(files):
    status, body, _ = run("check-fan", "--a", files["line_same"], "--complex", files["points2"])
    assert status == 1
    assert body["verdict"] == "not_fan" and body["witness"] == ["1"]
    assert sorted(body["pair"]) == [[1], [2]]


def test_polytopal_on_twisted_prism(files):
    status, body, _ = run("polytopal", "--a", files["prism_a"], "--complex", files["prism_k"])
    assert status == 1 and body["delta"] == "none"


def test_gale_of_identity_is_empty(files):
    status, body, _ = run("gale", files["ident"])
    assert status == 0
    assert body["dim"] == 0 and body["columns"] == [[], []] and body["name"] == "I*"


def test_complete_and_general_flavour(files):
    assert run("complete", "--a", files["plane_a"], "--complex", files["plane_k"])[0] == 0
    status, body, _ = run("check-fan", "--a", files["prism_a"], "--general", files["mixed"])
    assert status == 0 and body["verdict"] == "fan"


def test_normal_fan_and_gkz(files):
    status, body, _ = run("normal-fan", "--poly", files["trapezoid"])
    assert status == 0 and body["generic"]
    assert sorted(body["maximal_cones"]) == [[1, 2], [1, 4], [2, 3], [3, 4]]
    assert body["dual_complex"]["ghost_vertices"] == []
    status, body, _ = run("gkz", "--gamma", files["plane_g"], "--delta", "1,2")
    assert status == 0 and sorted(body["generators"]) == [["0", "1"], ["1", "1"]]


def test_toric_commands(files):
    args = ("--a", files["prism_a"], "--faces", files["mixed"], "--gamma", files["prism_g"])
    status, body, _ = run("nef", *args)
    assert status == 0 and body["generators"] == [["0", "0", "1"]]
    assert run("ample", *args, "--delta", "0,0,2")[0] == 1
    assert run("projective", *args)[0] == 1
    plain = args[:4]
    assert run("cartier", *plain, "--b", "1,0,0,1,0,0")[0] == 1
    assert run("cartier", *plain, "--b", "3,0,0,3,0,0")[0] == 0


def test_quadric_commands(files):
    status, body, _ = run("quadrics", "--gamma", files["plane_g"], "--delta", "1,2")
    assert status == 0 and body["equations"] == ["x1^2 + x3^2 = 1", "x1^2 + x2^2 + x4^2 = 2"]
    assert run("quadrics", "--gamma", files["plane_g"], "--delta", "1,1")[0] == 1
    status, body, _ = run("link", "--points", files["pentagon"])
    assert status == 0 and body["gamma"][2] == ["1"] * 5


def test_lvmb_commands(files):
    status, body, _ = run("lvmb", "--datum", files["datum"])
    assert status == 0 and body["lvmb"] and body["substitute_existence"]
    status, body, _ = run("is-lvm", "--datum", files["datum"])
    assert status == 0 and body["lvm"] and body["origin_presentation"]


def test_euler_and_retract(files, tmp_path):
    pent = write(tmp_path, "pk.json", {"m": 5, "facets": [[1, 2], [2, 3], [3, 4], [4, 5], [5, 1]]})
    assert run("euler", "--complex", pent)[1]["euler_characteristic"] == -8
    status, body, _ = run("retract", "--a", files["plane_a"], "--complex", files["plane_k"],
                          "--gamma", files["plane_g"], "--point", "2,1,1,1")
    assert status == 0 and len(body["point"]) == 4
    assert all(abs(v) <= 1 + 1e-12 for v in body["point"])
    status, body, _ = run("retract", "--a", files["plane_a"], "--complex", files["plane_k"],
                          "--point", "2j,1,1,-1", "--complex-coords")
    assert status == 0 and len(body["point"][0]) == 2


def test_snf_and_stabilizer(files):
    status, body, _ = run("snf", files["zmat"])
    assert status == 0 and [body["S"][i][i] for i in range(3)] == [2, 6, 12]
    status, body, _ = run("stabilizer", "--gamma", files["collinear"], "--i", "1")
    assert status == 0 and body == {"command": "stabilizer", "dim": 0, "order": 2}


def test_errors_are_machine_readable(files, tmp_path):
    status, body, _ = run("check-fan", "--a", str(tmp_path / "missing.json"), "--complex",
                          files["points2"])
    assert status == 2 and body["error"] == "BAD_INPUT"
    status, body, _ = run("gkz", "--gamma", files["plane_g"], "--delta=-1,0")
    assert status == 2 and body["error"] == "DELTA_OUTSIDE"
    status, body, _ = run("gkz", "--gamma", files["plane_g"])
    assert status == 2 and body["error"] == "BAD_INPUT"
    bad = write(tmp_path, "bad.json", {"dim": 1, "columns": [["0.5"]]})
    assert run("gale", bad)[1]["error"] == "BAD_INPUT"


def test_output_is_byte_identical(files):
    first = run("normal-fan", "--poly", files["trapezoid"])[2]
    second = run("normal-fan", "--poly", files["trapezoid"])[2]
    assert first == second
    keys = list(json.loads(first))
    assert keys == sorted(keys)


def test_timings_flag(files):
    _, body, _ = run("--timings", "euler", "--complex", files["plane_k"])
    assert body["timings"]["seconds"] >= 0
