"""End-to-end CLI behaviour: exit codes, JSON output, file handling."""

import json

import pytest

from twistpost import corpus as corpus_mod
from twistpost import serialize
from twistpost.cli import main
from twistpost.groups import cyclic, symmetric
from twistpost.tpg import trivial_tpg


def _write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


@pytest.fixture()
def trivial_z2_file(tmp_path):
    return _write(tmp_path, "trivial_z2.json",
                  serialize.tpg_to_json(trivial_tpg(cyclic(2))))


def test_verify_ok(capsys, trivial_z2_file):
    assert main(["verify", trivial_z2_file]) == 0
    out = capsys.readouterr().out
    assert "left_twisted" in out and "post structure" in out


def test_verify_json_report(capsys, trivial_z2_file):
    assert main(["verify", trivial_z2_file, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["kind"] == "left_twisted"
    assert data["rows_bijective"] is True


def test_verify_corrupted_exits_1(capsys, tmp_path):
    data = serialize.tpg_to_json(trivial_tpg(cyclic(2)))
    data["tri"][0][0] = 1
    path = _write(tmp_path, "bad.json", data)
    assert main(["verify", path]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["kind"] is None
    assert out["witness_bijective"] is not None


def test_verify_two_sided(capsys, tmp_path):
    path = _write(tmp_path, "z4.json",
                  serialize.tpg_to_json(corpus_mod.get("z4_two_sided").tpg))
    assert main(["verify", path, "--kind", "two-sided", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["kind"] == "two_sided_twisted" and data["abelian"]


def test_verify_malformed_json_exit_2(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text('{"group": ')
    assert main(["verify", str(path)]) == 2
    assert "line" in capsys.readouterr().err


def test_verify_missing_file_exit_2(tmp_path):
    assert main(["verify", str(tmp_path / "nope.json")]) == 2


def test_convert_tpg_to_truss(capsys, tmp_path, z3):
    tri = [[(a * b) % 3 for b in range(3)] for a in range(3)]
    data = {"group": serialize.group_to_json(z3), "tri": tri, "phi": [0, 0, 0]}
    path = _write(tmp_path, "z3_field.json", data)
    assert main(["convert", path, "--to", "truss"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["circ"] == tri  # zero cocycle: the derived table is the action
    assert out["phi"] == [0, 0, 0]


def test_convert_to_ybe_and_reload(capsys, tmp_path, s3):
    path = _write(tmp_path, "s3.json", serialize.tpg_to_json(trivial_tpg(s3)))
    out_file = str(tmp_path / "sol.json")
    assert main(["convert", path, "--to", "ybe", "--out", out_file]) == 0
    kind, sol = serialize.load_file(out_file)
    assert kind == "ybe" and sol.n == 6


def test_convert_to_rbs_not_inner(capsys, tmp_path):
    path = _write(tmp_path, "swap.json",
                  serialize.tpg_to_json(corpus_mod.get("klein_swap").tpg))
    assert main(["convert", path, "--to", "rbs"]) == 1
    data = json.loads(capsys.readouterr().out)
    assert data["error"] == "not inner" and data["witness"] == 1


def test_convert_chain_truss_to_brace(capsys, tmp_path):
    z4 = corpus_mod.get("z4_two_sided").tpg
    path = _write(tmp_path, "z4.json", serialize.tpg_to_json(z4))
    assert main(["convert", path, "--to", "brace"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["side"] == "two_sided"
    assert main(["convert", path, "--to", "ring"]) == 0
    ring = json.loads(capsys.readouterr().out)
    assert ring["star"][1][1] == 2


def test_convert_to_hopf_flag(capsys, tmp_path):
    path = _write(tmp_path, "z3.json",
                  serialize.tpg_to_json(trivial_tpg(cyclic(3))))
    assert main(["convert", path, "--to", "hopf"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["hopf"] is True


def test_decompose(capsys, tmp_path):
    path = _write(tmp_path, "kp.json",
                  serialize.tpg_to_json(corpus_mod.get("klein_projection").tpg))
    assert main(["decompose", path, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["partition_ok"] and data["psi_bijective"]
    assert sorted(data["components"]) == ["0", "1"]


def test_laws_on_tpg(capsys, trivial_z2_file):
    assert main(["laws", trivial_z2_file, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["classification"]["kind"] == "left_twisted"
    assert all(v["ok"] for v in data["derived_laws"].values())
    assert data["roundtrip_ok"]


def test_laws_on_truss_and_rbs(capsys, tmp_path, z3, s3):
    truss = dict(corpus_mod.corpus_trusses())["z3_multiplicative"]
    path = _write(tmp_path, "truss.json", serialize.truss_to_json(truss))
    assert main(["laws", path, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["truss_report"]["valid"] and data["right_divisible"] is False

    from twistpost.rota_baxter import make_rbs

    r = make_rbs(s3, tuple(range(6)), (s3.identity,) * 6)
    path = _write(tmp_path, "rbs.json", serialize.rbs_to_json(r))
    assert main(["laws", path, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["left_kind"] == "left_twisted"
    assert data["right_kind"] == "right_twisted"


def test_laws_failure_exits_1(capsys, tmp_path, z2):
    # a weak-only structure passes laws (nothing twisted-only is run), but a
    # corrupted one exits 1
    data = serialize.tpg_to_json(trivial_tpg(z2))
    data["phi"] = [1, 1]
    path = _write(tmp_path, "bad.json", data)
    assert main(["verify", path]) == 1


def test_enumerate_to_catalog(capsys, tmp_path):
    out = str(tmp_path / "cat.ndjson")
    assert main(["enumerate", "--group", "cyclic(2)", "--kind", "twisted",
                 "--out", out, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["raw_count"] == 3 and data["distinct_up_to_isomorphism"] == 3

    assert main(["catalog", "list", out]) == 0
    listing = capsys.readouterr().out
    assert listing.count("left_twisted") == 3

    first_id = data["ids"][0]
    assert main(["catalog", "show", out, first_id]) == 0
    shown = json.loads(capsys.readouterr().out)
    assert shown["id"] == first_id


def test_enumerate_weak_flag(capsys):
    assert main(["enumerate", "--group", "cyclic(2)", "--weak", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["raw_count"] == 8


def test_catalog_show_missing_id(tmp_path, capsys):
    out = str(tmp_path / "cat.ndjson")
    assert main(["enumerate", "--group", "cyclic(2)", "--out", out]) == 0
    capsys.readouterr()
    assert main(["catalog", "show", out, "ffffffffffffffff"]) == 2


def test_verify_other_kinds(capsys, tmp_path, s3):
    # a valid truss file verifies through its loader
    truss = dict(corpus_mod.corpus_trusses())["z3_multiplicative"]
    path = _write(tmp_path, "truss.json", serialize.truss_to_json(truss))
    assert main(["verify", path]) == 0
    assert "truss" in capsys.readouterr().out

    # an invalid ring file fails with exit 1
    bad = {"n": 2, "add": [[0, 1], [1, 0]], "star": [[1, 1], [1, 1]]}
    path = _write(tmp_path, "ring.json", bad)
    assert main(["verify", path]) == 1

    # a braiding file verifies
    from twistpost.braces import yang_baxter_map

    sol = yang_baxter_map(trivial_tpg(s3))
    path = _write(tmp_path, "sol.json", serialize.ybe_to_json(sol))
    assert main(["verify", path]) == 0


def test_laws_on_lie_ring_ybe_brace(capsys, tmp_path, s3):
    from twistpost.braces import to_radical_ring, two_sided_brace, yang_baxter_map
    from twistpost.lie import make_tpla

    z4t = corpus_mod.get("z4_two_sided").tpg
    cases = [
        ("ring.json", serialize.ring_to_json(to_radical_ring(z4t)), "ring_valid"),
        ("sol.json", serialize.ybe_to_json(yang_baxter_map(trivial_tpg(s3))),
         "braiding_valid"),
        ("brace.json", serialize.brace_to_json(two_sided_brace(z4t)),
         "brace_report"),
        ("lie.json", serialize.lie_to_json(
            make_tpla(1, [[[0]]], [[[1]]], [[1]])), "lie_report"),
    ]
    for name, payload, key in cases:
        path = _write(tmp_path, name, payload)
        assert main(["laws", path, "--json"]) == 0, name
        data = json.loads(capsys.readouterr().out)
        assert key in data, name


def test_corpus_listing_and_dump(capsys, tmp_path):
    assert main(["corpus"]) == 0
    out = capsys.readouterr().out
    assert "z4_two_sided" in out and "klein_projection" in out

    assert main(["corpus", "z4_two_sided"]) == 0
    data = json.loads(capsys.readouterr().out)
    path = _write(tmp_path, "z4.json", data)
    assert main(["verify", path, "--kind", "two-sided"]) == 0

    assert main(["corpus", "nope"]) == 2


def test_usage_error_exit_2():
    assert main(["verify"]) == 2
    assert main(["frobnicate"]) == 2


def test_selftest_passes(capsys):
    assert main(["selftest"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out
