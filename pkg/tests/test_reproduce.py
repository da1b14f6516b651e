"""Tests for the reference-chain reproduction report and its figures."""

import json

import pytest

from bounds import sweep
from experiments import analyze_system, render_sweep_svg, run_reproduction, system_curve
from experiments.reproduce import PUBLISHED_BOUNDS, recommended_alphas


@pytest.fixture(scope="module")
def report():
    return run_reproduction()


def _system(report, name):
    return next(s for s in report["systems"] if s["system"] == name)


def _recipe(system_report, k):
    return next(r for r in system_report["recipes"] if r["k"] == k)


class TestReport:
    def test_ground_truth(self, report):
        rows = {row["system"]: row for row in report["ground_truth"]}
        assert rows["M1"]["computed_w1"] == pytest.approx(15.0, rel=1e-9)
        assert rows["M2"]["computed_w1"] == pytest.approx(30.0, rel=1e-9)
        assert {row["status"] for row in rows.values()} == {"PASS"}

    def test_no_soundness_violations(self, report):
        assert report["soundness_violations"] == 0
        for system_report in report["systems"]:
            for recipe in system_report["recipes"]:
                if recipe["recommended_alpha_valid"]:
                    assert recipe["bound_at_recommended_alpha"] <= system_report["true_w1"] + 1e-9
            assert system_report["sweep_best_value"] <= system_report["true_w1"] + 1e-9

    def test_recipes_for_each_pair_count(self, report):
        for system_report in report["systems"]:
            assert [r["k"] for r in system_report["recipes"]] == [1, 3, 5]
            alphas = [r["recommended_alpha"] for r in system_report["recipes"]]
            assert alphas == sorted(alphas)

    def test_full_information_m2_reaches_window_edge(self, report):
        m2 = _system(report, "M2")
        assert m2["window_edge"] == pytest.approx(100.0)
        assert _recipe(m2, 5)["recommended_alpha"] == pytest.approx(100.0, rel=1e-10)
        assert abs(_recipe(m2, 5)["edge_gap"]) < 1e-9

    def test_full_information_m1_undershoots_window_edge(self, report):
        m1 = _system(report, "M1")
        assert m1["window_edge"] == pytest.approx(18.0)
        recipe = _recipe(m1, 5)
        assert recipe["edge_gap"] == pytest.approx(3.0, rel=1e-9)
        assert recipe["recommended_alpha_valid"]

    def test_published_comparison_documents_both_recipes(self, report):
        rows = report["published_bounds"]
        assert {(row["system"], row["k"]) for row in rows} == set(PUBLISHED_BOUNDS)
        for row in rows:
            assert row["recommended_alpha_bound"] is not None
            assert row["sweep_maximum_bound"] is not None
            assert row["status"] in {"PASS", "FAIL"}
            assert (row["status"] == "PASS") == bool(row["matching_recipes"])
        assert "alpha" in report["alpha_selection_note"]

    def test_m2_three_pair_recipe_matches_published_bound(self, report):
        row = next(r for r in report["published_bounds"] if r["system"] == "M2")
        assert row["recommended_alpha_bound"] == pytest.approx(18.22, abs=0.01)
        assert "recommended_alpha" in row["matching_recipes"]
        assert row["status"] == "PASS"

    def test_single_pair_recipe_values(self, report):
        assert _recipe(_system(report, "M1"), 1)["bound_at_recommended_alpha"] == pytest.approx(-0.58, abs=0.01)
        assert _recipe(_system(report, "M2"), 1)["bound_at_recommended_alpha"] == pytest.approx(-14.37, abs=0.01)

    def test_stiffness_variants(self, report):
        rows = {(row["system"], row["terminal"]): row for row in report["stiffness_variants"]}
        assert set(rows) == {(name, terminal) for name, _ in PUBLISHED_BOUNDS for terminal in ("printed", "summed")}
        for row in report["published_bounds"]:
            printed = rows[(row["system"], "printed")]
            assert printed["recommended_alpha_bound"] == row["recommended_alpha_bound"]
            assert printed["sweep_maximum_bound"] == row["sweep_maximum_bound"]
        assert rows[("M1", "summed")]["status"] == "PASS"
        assert "k4 + k5" in report["stiffness_variant_note"]

    def test_sigma1_holds_for_stacked_pairs(self, report):
        for system_report in report["systems"]:
            assert all(r["sigma1_holds"] for r in system_report["recipes"])

    def test_json_ready_and_deterministic(self, report):
        assert json.dumps(report, sort_keys=True) == json.dumps(run_reproduction(), sort_keys=True)


class TestAnalyzeSystem:
    def test_custom_pair_counts(self, m1_system):
        analysis = analyze_system("M1", m1_system, pair_counts=(2,))
        assert [r["k"] for r in analysis["recipes"]] == [2]
        assert analysis["true_w2"] == pytest.approx(21.0)
        assert analysis["sigma1_mass"] == pytest.approx(30.0)
        assert len(analysis["pencil_eigenvalues"]) == 5

    def test_recommended_alphas(self, report):
        alphas = recommended_alphas(_system(report, "M1"))
        assert sorted(alphas) == [1, 3, 5]


class TestPlots:
    def test_svg_is_written_and_stable(self, tmp_path, report):
        result, true_w1 = system_curve("M1")
        assert true_w1 == pytest.approx(15.0)
        first = render_sweep_svg(result, tmp_path / "a.svg", true_w1=true_w1,
                                 recommended=recommended_alphas(_system(report, "M1")), title="M1")
        second = render_sweep_svg(result, tmp_path / "b.svg", true_w1=true_w1,
                                  recommended=recommended_alphas(_system(report, "M1")), title="M1")
        text = first.read_text()
        assert "<svg" in text
        assert text == second.read_text()

    def test_blind_curve_without_window(self, tmp_path):
        result = sweep([1.0, 0.0], [1.0, 0.0], [0.0, 0.5, 1.0])
        path = render_sweep_svg(result, tmp_path / "blind.svg")
        assert path.exists()
