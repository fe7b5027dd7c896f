import json

import pytest

from cross5.cli import main
from cross5.drawings import drawing_to_json
from cross5.graphs import complete_graph, to_edge_list_text, to_graph6
from cross5.immersions import identity_immersion, immersion_to_json_dict


def run(argv):
    return main(argv)


class TestColorCommand:
    def test_k4_exit_zero(self, capsys):
        assert run(["color", "--named", "K4"]) == 0
        assert "4 colors" in capsys.readouterr().out

    def test_k6_obstruction_exit_two(self, capsys):
        assert run(["color", "--named", "K6"]) == 2
        assert "K6 immerses" in capsys.readouterr().out

    def test_join_obstruction(self):
        assert run(["color", "--named", "join(C3,C5)"]) == 2

    def test_json_output(self, capsys):
        assert run(["color", "--named", "C5", "--json"]) == 0
        obj = json.loads(capsys.readouterr().out)
        assert obj["palette"] == 5 and len(obj["colors"]) == 5

    def test_obstruction_json_certificate(self, capsys):
        assert run(["color", "--named", "K6", "--json"]) == 2
        obj = json.loads(capsys.readouterr().out)
        assert obj["obstruction"]["certificate"]["center"] is not None

    def test_file_input(self, tmp_path, capsys):
        path = tmp_path / "g.txt"
        path.write_text(to_edge_list_text(complete_graph(4)))
        assert run(["color", str(path)]) == 0

    def test_graph6_file_auto(self, tmp_path):
        path = tmp_path / "g.g6"
        path.write_text(to_graph6(complete_graph(4)) + "\n")
        assert run(["color", str(path)]) == 0

    def test_parse_error_exit_one(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("2\n0 0\n")
        assert run(["color", str(path)]) == 1
        assert "loop" in capsys.readouterr().err


class TestNuCommand:
    def test_exact_k6(self, capsys):
        assert run(["nu", "--named", "K6", "--exact"]) == 0
        assert "crossing number = 3" in capsys.readouterr().out

    def test_exact_k4(self, capsys):
        assert run(["nu", "--named", "K4", "--exact"]) == 0
        assert "= 0" in capsys.readouterr().out

    def test_le_unsat_exit_two(self, capsys):
        assert run(["nu", "--named", "K35", "--le", "3"]) == 2
        assert "unsat" in capsys.readouterr().out

    def test_le_sat(self, capsys):
        assert run(["nu", "--named", "K35", "--le", "4"]) == 0

    def test_budget_exit_three(self, capsys):
        assert run(["nu", "--named", "K6", "--exact", "--budget", "5"]) == 3

    def test_enumerate_good(self, capsys):
        assert run(["nu", "--named", "K5", "--enumerate-good", "2"]) == 0
        assert "0 good drawings" in capsys.readouterr().out

    def test_json_witness(self, capsys):
        assert run(["nu", "--named", "K5", "--exact", "--json"]) == 0
        obj = json.loads(capsys.readouterr().out)
        assert obj["value"] == 1 and obj["witness"]["crossings"]


class TestVerifyCommand:
    def test_drawing_valid(self, tmp_path, capsys, k6_three_crossing_drawing):
        path = tmp_path / "w.json"
        path.write_text(drawing_to_json(k6_three_crossing_drawing))
        assert run(["verify", "drawing", str(path)]) == 0
        assert "valid drawing with 3 crossings" in capsys.readouterr().out

    @pytest.mark.parametrize("name,crossings", [
        ("witness_k6_3", 3), ("witness_k35_4", 4), ("witness_c3c5_6", 6)])
    def test_bundled_witnesses_verify(self, capsys, name, crossings):
        from importlib import resources
        path = resources.files("cross5.data").joinpath(f"{name}.json")
        assert run(["verify", "drawing", str(path)]) == 0
        assert f"valid drawing with {crossings} crossings" in capsys.readouterr().out

    def test_drawing_invalid(self, tmp_path, capsys, k5):
        from cross5.drawings import Drawing
        path = tmp_path / "bad.json"
        path.write_text(drawing_to_json(Drawing.make(k5, [])))
        assert run(["verify", "drawing", str(path)]) == 2
        assert "not planar" in capsys.readouterr().out

    def test_coloring_proper(self, tmp_path, capsys):
        path = tmp_path / "c.json"
        path.write_text(json.dumps({"palette": 5, "colors": [1, 2, 1, 2, 3]}))
        assert run(["verify", "coloring", str(path), "--named", "C5"]) == 0

    def test_coloring_improper_names_clause(self, tmp_path, capsys):
        path = tmp_path / "c.json"
        path.write_text(json.dumps({"palette": 5, "colors": [1, 2, 3, 4, 5, 1]}))
        assert run(["verify", "coloring", str(path), "--named", "K6"]) == 2
        assert "proper" in capsys.readouterr().out

    def test_immersion_essential(self, tmp_path, capsys, k6):
        path = tmp_path / "i.json"
        cert = identity_immersion(k6, center=0)
        path.write_text(json.dumps(immersion_to_json_dict(cert)))
        assert run(["verify", "immersion", str(path), "--essential",
                    "--v-immersion"]) == 0

    def test_immersion_invalid(self, tmp_path, capsys):
        path = tmp_path / "i.json"
        obj = {"small": {"n": 4, "edges": [[0, 1], [2, 3]]},
               "host": {"n": 5, "edges": [[0, 4], [1, 4], [2, 4], [3, 4]]},
               "vmap": [0, 1, 2, 3],
               "paths": [[0, 4, 1], [2, 4, 3]], "center": None}
        path.write_text(json.dumps(obj))
        assert run(["verify", "immersion", str(path), "--essential"]) == 2
        assert "essential" in capsys.readouterr().out


class TestGenCorpusCommand:
    def test_small_corpus(self, tmp_path, capsys):
        out = tmp_path / "corpus.json"
        rc = run(["gen-corpus", "--seed", "11", "--count", "3", "--cap", "1",
                  "--n-min", "5", "--n-max", "7", "--out", str(out)])
        assert rc == 0
        obj = json.loads(out.read_text())
        assert len(obj["entries"]) == 3


class TestCheckCommand:
    def test_single_claim_with_report(self, tmp_path, capsys):
        out_dir = tmp_path / "report"
        rc = run(["check", "--only", "nu-k5", "--out", str(out_dir)])
        assert rc == 0
        assert (out_dir / "claims.csv").exists()
        assert (out_dir / "claims.json").exists()
        assert (out_dir / "claim_runtimes.png").exists()
        text = (out_dir / "claims.csv").read_text()
        assert "nu-k5,pass" in text

    def test_json_mode(self, capsys):
        rc = run(["check", "--only", "nu-k5,nu-k6", "--json"])
        assert rc == 0
        obj = json.loads(capsys.readouterr().out)
        assert obj["all_passed"] is True
        assert [c["id"] for c in obj["claims"]] == ["nu-k5", "nu-k6"]

    def test_unknown_claim_errors(self, capsys):
        assert run(["check", "--only", "no-such-claim"]) == 1
