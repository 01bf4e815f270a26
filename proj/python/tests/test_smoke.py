import math

import pytest

import nsga2


def test_problems_and_fronts():
    assert nsga2.problem_names() == ["zdt1", "zdt2", "zdt3", "zdt6", "fon2"]
    info = nsga2.problem_info("fon2")
    assert info["dimension"] == 3
    assert info["lower"] == [-4.0] * 3
    assert nsga2.evaluate("zdt1", [0.0] * 30) == [0.0, 1.0]
    front = nsga2.reference_front("zdt2", 5)
    assert front[2] == [0.5, 0.75]
    with pytest.raises(ValueError, match="zdt9"):
        nsga2.problem_info("zdt9")


def test_run_is_seeded():
    a = nsga2.run("zdt1", generations=20, seed=3)
    b = nsga2.run("zdt1", generations=20, seed=3)
    assert a["front"] == b["front"]
    assert len(a["traces"]) == 20
    assert len(a["genomes"]) == 20
    trace = a["traces"][5]
    gap = max(trace["crowding_gap"], 1e-6)
    expected = min(max(nsga2.sigmoid_weight(5) / gap, 0.01), 1000.0)
    assert trace["distribution_index"] == pytest.approx(expected, rel=1e-14)
    static = nsga2.run("fon2", mutation="static:5", generations=5)
    assert all(t["distribution_index"] == 5.0 for t in static["traces"])
    with pytest.raises(ValueError):
        nsga2.run("zdt1", pop_size=7)


def test_indicators_and_statistics():
    diagonal = [[0.0, 1.0], [1.0, 0.0]]
    assert nsga2.generational_distance([[0.5, 0.5]], diagonal) == pytest.approx(math.sqrt(0.5))
    assert nsga2.spread([[0.0, 1.0], [0.1, 0.9], [1.0, 0.0]], diagonal) == pytest.approx(0.8)
    mean, std, count = nsga2.sample_stats([0.0, 2.0])
    assert (mean, count) == (1.0, 2)
    assert std == pytest.approx(math.sqrt(2.0))
    result = nsga2.welch_t_test(0.443, 0.078, 100, 0.428, 0.065, 100)
    assert result["mark"] == "~"
    assert result["p"] == pytest.approx(0.1412, abs=1e-3)
    assert nsga2.welch_t_test(0.940, 0.076, 100, 0.463, 0.077, 100)["mark"] == "+"


def test_operators_and_ranking():
    assert nsga2.polynomial_delta(0.5, 20.0) == 0.0
    assert nsga2.polynomial_delta(0.2, 5.0) == pytest.approx(-0.141626, abs=1e-6)
    assert nsga2.sbx_spread_factor(0.5, 20.0) == 1.0
    assert nsga2.adaptive_distribution_index(0, 1.0) == 0.5
    assert nsga2.sigmoid_weight(100) == pytest.approx(0.999089, abs=1e-6)
    assert nsga2.nondominated_ranks([[0, 2], [2, 0], [1, 1], [2, 2], [3, 1]]) == [0, 0, 0, 1, 1]
    crowding = nsga2.crowding_distance([[0, 1], [0.2, 0.8], [0.5, 0.5], [1, 0]])
    assert math.isinf(crowding[0]) and math.isinf(crowding[3])
    assert crowding[1:3] == pytest.approx([1.0, 1.6])


def test_benchmark_is_deterministic():
    kwargs = dict(runs=2, base_seed=42, problems=["zdt1"], pop_size=8, generations=5)
    one = nsga2.benchmark(workers=1, **kwargs)
    two = nsga2.benchmark(workers=2, format="json", **kwargs)
    assert one["runs_csv"] == two["runs_csv"]
    assert one["runs_csv"].startswith("problem,setting,run,seed,gd,spread,wall_time_ms\n")
    assert "## Spread" in one["report"]
