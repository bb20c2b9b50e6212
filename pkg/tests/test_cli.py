import csv
import json

import oracles
from fairalloc.allocation import aggregate_ranks
from fairalloc.cli import main
from fairalloc.presets import get_preset


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestMetrics:
    def test_single_metric(self, capsys):
        code, out, _ = run(capsys, "metrics", "--values", "1,3", "--metric", "gini")
        assert code == 0
        assert out.split() == ["gini", "0.25"]

    def test_trivial_zero(self, capsys):
        code, out, _ = run(capsys, "metrics", "--values", "5,5", "--metric", "theil_t")
        assert code == 0
        assert out.split() == ["theil_t", "0"]

    def test_multiple_metrics_in_order(self, capsys):
        code, out, _ = run(
            capsys, "metrics", "--values", "1,3",
            "--metric", "hoover,std_dev", "--metric", "atkinson(inf)",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert [ln.split()[0] for ln in lines] == ["hoover", "std_dev", "atkinson(inf)"]
        assert [ln.split()[1] for ln in lines] == ["0.25", "1", "0.5"]

    def test_domain_violation_exits_2_with_error_name(self, capsys):
        code, _, err = run(capsys, "metrics", "--values", "0,1", "--metric", "theil_l")
        assert code == 2
        assert "ZeroElement" in err

    def test_bad_values_exit_2(self, capsys):
        code, _, err = run(capsys, "metrics", "--values", "1,banana", "--metric", "gini")
        assert code == 2
        code, _, err = run(capsys, "metrics", "--values=-1,1", "--metric", "gini")
        assert code == 2

    def test_unknown_metric_exit_2(self, capsys):
        code, _, err = run(capsys, "metrics", "--values", "1,2", "--metric", "nope")
        assert code == 2


class TestEvaluate:
    def test_cake_preset_verdicts(self, capsys):
        code, out, _ = run(capsys, "evaluate", "--preset", "cake")
        assert code == 0
        assert "scenario 5" in out and "Combined ranking" in out

    def test_fishermen_preset(self, capsys):
        code, out, _ = run(capsys, "evaluate", "--preset", "fishermen")
        assert code == 0
        assert "t=3.5" in out and "t=2.8" in out and "t=7" in out

    def test_empty_config_exits_2(self, capsys, tmp_path):
        empty = tmp_path / "empty.json"
        empty.write_text("{}", encoding="utf-8")
        code, _, err = run(capsys, "evaluate", "--config", str(empty))
        assert code == 2
        assert "missing required key" in err

    def test_unparseable_config_exits_2(self, capsys, tmp_path):
        empty = tmp_path / "empty.json"
        empty.write_text("", encoding="utf-8")
        code, _, err = run(capsys, "evaluate", "--config", str(empty))
        assert code == 2

    def test_scoring_error_exits_3_naming_principle_and_candidate(self, capsys, tmp_path):
        doc = {
            "kind": "discrete",
            "agents": [{"id": "A", "input": 0.0}, {"id": "B", "input": 1.0}],
            "pieces": [{"amount": 1.0}],
            "principles": [{"principle": "proportion", "metric": "std_dev"}],
        }
        path = tmp_path / "zero_input.json"
        path.write_text(json.dumps(doc), encoding="utf-8")
        code, _, err = run(capsys, "evaluate", "--config", str(path))
        assert code == 3
        assert "proportion" in err and "scenario 1" in err and "ZeroInput" in err

    def test_csv_round_trip_reproduces_combined_ranking(self, capsys, tmp_path):
        out_path = tmp_path / "r.csv"
        code, out, _ = run(capsys, "evaluate", "--preset", "cake", "--out", str(out_path))
        assert code == 0
        with out_path.open(newline="") as fh:
            rows = list(csv.DictReader(fh))
        assert len(rows) == 8 * 6
        candidates = list(dict.fromkeys(r["candidate"] for r in rows))
        principles = list(dict.fromkeys(r["principle"] for r in rows))
        ranks = [
            [int(r["rank"]) for r in rows if r["principle"] == p]
            for p in principles
        ]
        _, combined = aggregate_ranks(ranks, [1.0] * len(principles), candidates)
        printed = [
            line.split(". ", 1)[1].rsplit(" points=", 1)[0].strip()
            for line in out.splitlines()
            if line.strip() and line.strip()[0].isdigit() and ". scenario" in line
        ]
        by_rank = [c for _, c in sorted(zip(combined, candidates))]
        assert printed == by_rank

    def test_resolution_flag_validated(self, capsys):
        code, _, err = run(capsys, "evaluate", "--preset", "fishermen", "--resolution", "1")
        assert code == 2


class TestHeatmap:
    def test_discrete_config_rejected(self, capsys, tmp_path):
        path = tmp_path / "cake.json"
        path.write_text(json.dumps(get_preset("cake")), encoding="utf-8")
        code, _, err = run(capsys, "heatmap", "--config", str(path), "--principle", "equality")
        assert code == 2
        assert "continuous" in err

    def test_unknown_principle_rejected(self, capsys):
        code, _, err = run(
            capsys, "heatmap", "--preset", "fishermen", "--principle", "nope"
        )
        assert code == 2

    def test_grid_one_has_four_rows(self, capsys, tmp_path):
        out_path = tmp_path / "h.csv"
        code, _, _ = run(
            capsys, "heatmap", "--preset", "fishermen",
            "--principle", "greater_good", "--grid", "1", "--out", str(out_path),
        )
        assert code == 0
        lines = out_path.read_text().splitlines()
        assert lines[0] == "y_a,y_b,score,on_frontier"
        assert len(lines) == 5

    def test_sufficiency_score_levels(self, capsys):
        code, out, _ = run(
            capsys, "heatmap", "--preset", "fishermen",
            "--principle", "sufficiency", "--grid", "7",
        )
        assert code == 0
        scores = {row.split(",")[2] for row in out.strip().splitlines()[1:]}
        assert scores == {"0", "0.5", "1"}

    def test_greater_good_is_affine(self, capsys, tmp_path):
        out_path = tmp_path / "gg.csv"
        code, _, _ = run(
            capsys, "heatmap", "--preset", "fishermen",
            "--principle", "greater_good", "--grid", "15", "--out", str(out_path),
        )
        assert code == 0
        with out_path.open(newline="") as fh:
            rows = list(csv.DictReader(fh))
        residual = oracles.fit_plane_residual(
            [float(r["y_a"]) for r in rows],
            [float(r["y_b"]) for r in rows],
            [float(r["score"]) for r in rows],
        )
        assert residual <= 1e-9

    def test_missing_scores_become_empty_fields(self, capsys):
        code, out, _ = run(
            capsys, "heatmap", "--preset", "fishermen",
            "--principle", "equality", "--grid", "2",
        )
        assert code == 0
        assert out.splitlines()[1] == "0,0,,0"


class TestDeterminism:
    def test_byte_identical_reruns(self, capsys, tmp_path):
        paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
        outs = []
        for path in paths:
            code, out, _ = run(capsys, "evaluate", "--preset", "cake", "--out", str(path))
            assert code == 0
            outs.append(out.replace(str(path), "OUT"))
        assert paths[0].read_bytes() == paths[1].read_bytes()
        assert outs[0] == outs[1]

    def test_heatmap_reruns_identical(self, capsys, tmp_path):
        blobs = []
        for name in ("a.csv", "b.csv"):
            path = tmp_path / name
            run(
                capsys, "heatmap", "--preset", "fishermen",
                "--principle", "proportion", "--grid", "9", "--out", str(path),
            )
            blobs.append(path.read_bytes())
        assert blobs[0] == blobs[1]
