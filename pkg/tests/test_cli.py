import json

import pytest

from ribbon_embed import schema_from_json, verify_schema
from ribbon_embed.cli import main

from conftest import BOUQUET2, DUMBBELL, K4, K5, THETA

CYCLE = "edge a u v 1.0\nedge b v u 2.0\n"
DANGLING = "edge a u v 1.0\nedge b u v 1.0\nedge c u w 1.0\n"


@pytest.fixture()
def graph_file(tmp_path):
    def write(text, name="g.graph"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def test_analyze_text(graph_file, capsys):
    assert main(["analyze", graph_file(THETA)]) == 0
    out = capsys.readouterr().out
    assert "essential_genus  2" in out
    assert "zeta             0" in out


def test_analyze_json(graph_file, capsys):
    assert main(["analyze", graph_file(K4), "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["essential_genus"] == 3
    assert doc["zeta"] == 1
    assert doc["ge_max_bound"] == "4"


def test_analyze_missing_file(capsys):
    assert main(["analyze", "/no/such/file.graph"]) == 2
    assert "error" in capsys.readouterr().err


def test_analyze_bad_syntax(graph_file, capsys):
    assert main(["analyze", graph_file("edge a u v\n")]) == 2
    assert "line 1" in capsys.readouterr().err


def test_analyze_cycle(graph_file, capsys):
    assert main(["analyze", graph_file(CYCLE)]) == 3
    assert "every surface" in capsys.readouterr().err


def test_analyze_dangling(graph_file, capsys):
    assert main(["analyze", graph_file(DANGLING)]) == 2


def test_analyze_rotation_cap_is_soft(graph_file, capsys):
    assert main(["analyze", graph_file(K5), "--json", "--max-rotations", "100"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["ge_max_exact"] is None


def test_embed_minimal_verifies(graph_file, tmp_path, capsys):
    out_path = tmp_path / "schema.json"
    assert main(["embed", graph_file(THETA), "-o", str(out_path)]) == 0
    schema = schema_from_json(out_path.read_text())
    assert schema.summary.genus == 2
    assert schema.summary.minimal is True
    assert verify_schema(schema).ok
    assert "certified" in capsys.readouterr().err


def test_embed_stdout_and_determinism(graph_file, capsys):
    path = graph_file(K4)
    assert main(["embed", path, "--seed", "5"]) == 0
    first = capsys.readouterr().out
    assert main(["embed", path, "--seed", "5"]) == 0
    second = capsys.readouterr().out
    assert first == second
    assert json.loads(first)["summary"]["genus"] == 3


def test_embed_maximal(graph_file, capsys):
    assert main(["embed", graph_file(K5), "--target", "maximal"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["summary"]["genus"] == 5


def test_embed_genus_targets(graph_file, capsys):
    path = graph_file(THETA)
    for g in (2, 3, 4, 5):
        assert main(["embed", path, "--target", f"genus={g}"]) == 0
        schema = schema_from_json(capsys.readouterr().out)
        assert schema.summary.genus == g
        assert schema.summary.minimal is (g == 2)
        assert verify_schema(schema).ok


def test_embed_genus_unreachable(graph_file, capsys):
    assert main(["embed", graph_file(THETA), "--target", "genus=1"]) == 4
    assert "essential genus" in capsys.readouterr().err


def test_embed_bad_target(graph_file, capsys):
    assert main(["embed", graph_file(THETA), "--target", "bogus"]) == 2
    assert main(["embed", graph_file(THETA), "--target", "genus=x"]) == 2


def test_embed_cycle(graph_file):
    assert main(["embed", graph_file(CYCLE)]) == 3


def test_embed_bad_margin(graph_file, capsys):
    assert main(["embed", graph_file(THETA), "--margin", "-1"]) == 2
    assert "margin" in capsys.readouterr().err


def test_embed_smooths_subdivided_input(graph_file, capsys):
    text = THETA + "edge d u x 1.0\nedge e x v 1.0\n"
    assert main(["embed", graph_file(text)]) == 0
    schema = schema_from_json(capsys.readouterr().out)
    assert schema.graph.vertex_count == 2
    # four parallel strands: beta 3, zeta 1, two walks, genus 1 + 0 + 2
    assert schema.summary.genus == 3


def test_oracle_ok(graph_file, capsys):
    assert main(["oracle", graph_file(THETA)]) == 0
    out = capsys.readouterr().out
    assert "boundary profile: {1: 2, 3: 2}" in out
    assert "min boundaries: 1  (1 + zeta = 1)" in out
    assert "move check: ok" in out
    assert "all checks passed" in out


def test_oracle_bouquet(graph_file, capsys):
    assert main(["oracle", graph_file(BOUQUET2)]) == 0
    assert "{1: 2, 3: 4}" in capsys.readouterr().out


def test_oracle_reports_stalls_without_failing(graph_file, capsys):
    # loops mixed into the graph make some descents stall; the oracle
    # reports that but the theory checks still pass
    text = (
        "edge e0 v0 v0 1.0\nedge e1 v1 v2 1.0\nedge e2 v1 v0 1.0\n"
        "edge e3 v0 v1 1.0\nedge e4 v2 v1 1.0\nedge e5 v2 v2 1.0\n"
    )
    assert main(["oracle", graph_file(text)]) == 0
    out = capsys.readouterr().out
    assert "stalled above the minimum" in out
    assert "all checks passed" in out


def test_oracle_cap(graph_file, capsys):
    assert main(["oracle", graph_file(K5), "--max-rotations", "100"]) == 5
    assert "error" in capsys.readouterr().err


def test_verify_clean(graph_file, tmp_path, capsys):
    out_path = tmp_path / "schema.json"
    main(["embed", graph_file(DUMBBELL), "-o", str(out_path)])
    capsys.readouterr()
    assert main(["verify", str(out_path)]) == 0
    assert capsys.readouterr().out.startswith("ok: genus 2")


def test_verify_tampered(graph_file, tmp_path, capsys):
    out_path = tmp_path / "schema.json"
    main(["embed", graph_file(THETA), "-o", str(out_path)])
    doc = json.loads(out_path.read_text())
    doc["summary"]["genus"] = 7
    out_path.write_text(json.dumps(doc))
    capsys.readouterr()
    assert main(["verify", str(out_path)]) == 1
    assert "fail:" in capsys.readouterr().out


def test_verify_malformed(tmp_path, capsys):
    path = tmp_path / "junk.json"
    path.write_text("{]")
    assert main(["verify", str(path)]) == 2


def test_usage_errors_exit_2(capsys):
    assert main([]) == 2
    assert main(["frobnicate"]) == 2
    assert main(["--help"]) == 0
