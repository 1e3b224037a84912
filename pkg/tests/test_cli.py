import json
import subprocess
import sys

import pydot
import pytest

from benzenoid import hexcore
from benzenoid.cli import export_dot, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, H in [("benzene", hexcore.gen_named("benzene")),
                    ("coronene", hexcore.gen_named("coronene")),
                    ("tri", hexcore.gen_named("triphenylene")),
                    ("rn1", hexcore.gen_Rn(1)),
                    ("phenalene", hexcore.build([(0, 0), (1, 0), (0, 1)]))]:
        p = tmp_path / f"{name}.json"
        hexcore.dump(H, p)
        paths[name] = str(p)
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    paths["bad"] = str(bad)
    return paths


def test_gen_named(capsys):
    code, out, _ = run(capsys, "gen", "named", "triphenylene")
    assert code == 0 and len(json.loads(out)["cells"]) == 4


def test_gen_tp_to_file(capsys, tmp_path):
    out = tmp_path / "tp.json"
    assert run(capsys, "gen", "tp", "6,6,5,4", "-o", str(out))[0] == 0
    assert hexcore.load(out).num_hexagons == 21


def test_gen_bad_params(capsys):
    assert run(capsys, "gen", "tp", "2,3")[0] == 2
    assert run(capsys, "gen", "named", "pentacene")[0] == 2
    assert run(capsys, "gen", "linear")[0] == 2


def test_gen_census(capsys, tmp_path):
    code, _, err = run(capsys, "gen", "census", "4", "-o", str(tmp_path / "c"))
    assert code == 0 and "12 systems" in err
    assert len(list((tmp_path / "c").iterdir())) == 12


def test_gen_rn_validates(capsys, tmp_path):
    out = tmp_path / "r2.json"
    run(capsys, "gen", "rn", "2", "-o", str(out))
    code, stdout, _ = run(capsys, "verify", str(out), "--theorem", "rn")
    assert code == 0 and json.loads(stdout)["status"] == "holds"


def test_invariants_json(capsys, files):
    code, out, _ = run(capsys, "invariants", files["coronene"])
    doc = json.loads(out)
    assert code == 0 and doc["F"] == 3 and doc["k"] == 20


def test_invariants_benzene_table(capsys, files):
    code, out, _ = run(capsys, "invariants", files["benzene"], "--format", "table")
    assert code == 0 and "k=2" in out and "F=1 Cl=1 Af=1 Fr=1" in out


def test_invariants_rn1(capsys, files):
    doc = json.loads(run(capsys, "invariants", files["rn1"])[1])
    assert doc["Af"] == doc["Fr"] == 6


def test_invariants_no_pm_is_a_result(capsys, files):
    code, out, _ = run(capsys, "invariants", files["phenalene"])
    doc = json.loads(out)
    assert code == 0 and doc["k"] == 0 and doc["forcing_spectrum"] == []


def test_invariants_malformed(capsys, files, tmp_path):
    assert run(capsys, "invariants", files["bad"])[0] == 2
    assert run(capsys, "invariants", str(tmp_path / "missing.json"))[0] == 2
    ring = tmp_path / "ring.json"
    ring.write_text(json.dumps({"cells": [[1, 0], [1, -1], [0, -1], [-1, 0], [-1, 1], [0, 1]]}))
    assert run(capsys, "invariants", str(ring))[0] == 2


def test_invariants_with_matchings_and_cycles(capsys, files):
    doc = json.loads(run(capsys, "invariants", files["benzene"], "--matchings", "--cycles")[1])
    row = doc["rows"][0]
    assert len(row["matching"]) == 3 and len(row["cycles"]) == 1


def test_verify_af1_on_triphenylene(capsys, files):
    code, out, _ = run(capsys, "verify", files["tri"], "--theorem", "af1")
    v = json.loads(out)
    assert code == 0 and v["status"] == "holds"
    assert v["witness"] == {"af": 2, "truncated_parallelogram": False}


def test_verify_rn_infers_n(capsys, files):
    code, out, _ = run(capsys, "verify", files["rn1"], "--theorem", "rn")
    v = json.loads(out)
    assert code == 0 and v["witness"]["n"] == 1 and all(v["witness"]["checks"].values())


def test_verify_census_main(capsys):
    code, out, err = run(capsys, "verify", "--census", "5", "--theorem", "main", "--summary")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and lines and {v["status"] for v in lines} <= {"holds", "hypothesis-not-met"}
    assert "main" in err


def test_verify_jobs_keep_order(capsys):
    serial = run(capsys, "verify", "--census", "4", "--theorem", "minimax")[1]
    parallel = run(capsys, "verify", "--census", "4", "--theorem", "minimax", "--jobs", "2")[1]
    assert serial == parallel


def test_verify_skip_exit_code(capsys, files):
    code, out, _ = run(capsys, "verify", files["coronene"], "--theorem", "minimax", "--cycle-cap", "3")
    assert code == 3 and json.loads(out.splitlines()[0])["status"] == "skipped-budget"


def test_verify_failure_exit_code(capsys, files):
    # R_1 checked as R_2 must fail the hexagon count
    code, out, _ = run(capsys, "verify", files["rn1"], "--theorem", "rn", "--rn", "2")
    assert code == 1 and json.loads(out)["status"] == "fails"


def test_verify_usage_errors(capsys, files):
    assert run(capsys, "verify", files["tri"], "--theorem", "nonsense")[0] == 2
    assert run(capsys, "verify")[0] == 2
    assert run(capsys, "verify", files["tri"], "--cycle-cap", "0")[0] == 2
    assert run(capsys, "verify", files["benzene"], "--theorem", "rn")[0] == 2


def test_verify_no_pm(capsys, files):
    code, out, _ = run(capsys, "verify", files["phenalene"], "--theorem", "main")
    assert code == 0 and json.loads(out)["status"] == "hypothesis-not-met"


def _parse(text):
    (g,) = pydot.graph_from_dot_data(text)
    nodes = [n for n in g.get_nodes() if n.get_name().startswith("v")]
    return g, nodes, g.get_edges()


def test_dot_benzene(capsys, files):
    code, out, _ = run(capsys, "dot", files["benzene"])
    g, nodes, edges = _parse(out)
    assert code == 0 and len(nodes) == 6 and len(edges) == 6


def test_dot_coronene_concentric_matching(capsys, files):
    from benzenoid.matchings import enumerate_matchings, ring_matchings
    H = hexcore.gen_named("coronene")
    ms = enumerate_matchings(H)
    idx = ms.index(ring_matchings(H, (0, 0))[0])
    code, out, _ = run(capsys, "dot", files["coronene"], "--matching", str(idx))
    g, nodes, edges = _parse(out)
    alt = [n for n in g.get_nodes() if n.get("alternating") == "true"]
    bold = [e for e in edges if e.get("style") == "bold"]
    assert code == 0 and len(alt) == 1 and len(bold) == 12


def test_dot_index_out_of_range(capsys, files):
    assert run(capsys, "dot", files["coronene"], "--matching", "20")[0] == 2
    assert run(capsys, "dot", files["coronene"], "--matching", "-1")[0] == 2


def test_dot_round_trip_counts():
    for H in hexcore.enumerate_all_systems(5):
        _, nodes, edges = _parse(export_dot(H))
        assert (len(nodes), len(edges)) == (H.num_vertices, H.num_edges)


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "benzenoid", "invariants", files["benzene"],
                           "--format", "table"], capture_output=True, text=True)
    assert proc.returncode == 0 and "k=2" in proc.stdout
