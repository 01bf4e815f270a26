#include "doctest.h"

#include "nsga2/problems.hpp"
#include "oracles.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>

using namespace nsga2;

TEST_CASE("problem definitions")
{
    struct Expected {
        const char* name;
        std::size_t dimension;
        double lower;
        double upper;
    };
    for (const auto& e : {Expected{"zdt1", 30, 0.0, 1.0}, Expected{"zdt2", 30, 0.0, 1.0}, Expected{"zdt3", 30, 0.0, 1.0},
                          Expected{"zdt6", 10, 0.0, 1.0}, Expected{"fon2", 3, -4.0, 4.0}}) {
        const auto p = make_problem(e.name);
        CHECK(p.name == e.name);
        CHECK(p.dimension == e.dimension);
        CHECK(p.objectiveCount == 2);
        CHECK(p.bounds.dimension() == e.dimension);
        for (std::size_t j = 0; j < e.dimension; ++j) {
            CHECK(p.bounds.lower(j) == e.lower);
            CHECK(p.bounds.upper(j) == e.upper);
        }
    }
    CHECK(problem_names() == std::vector<std::string>{"zdt1", "zdt2", "zdt3", "zdt6", "fon2"});
}

TEST_CASE("unknown problem names list the valid ones")
{
    try {
        make_problem("zdt9");
        FAIL("expected UserError");
    } catch (const UserError& e) {
        const std::string message = e.what();
        CHECK(message.find("zdt9") != std::string::npos);
        CHECK(message.find("zdt1, zdt2, zdt3, zdt6, fon2") != std::string::npos);
    }
    CHECK_THROWS_AS(sample_reference_front("dtlz2"), UserError);
}

TEST_CASE("objective values at known points")
{
    const auto zdt2 = make_problem("zdt2");
    Genome x(30, 0.0);
    x[0] = 0.5;
    const auto f2 = evaluate_individual(zdt2, x);
    CHECK(f2[0] == 0.5);
    CHECK(f2[1] == doctest::Approx(0.75).epsilon(1e-15));

    const auto zdt3 = make_problem("zdt3");
    x[0] = 0.25;
    const auto f3 = evaluate_individual(zdt3, x);
    CHECK(f3[1] == doctest::Approx(1.0 - 0.5 - 0.25 * std::sin(2.5 * M_PI)).epsilon(1e-14));

    // Off-front point of ZDT1: all tail variables at 1 give g = 10.
    const auto zdt1 = make_problem("zdt1");
    Genome tail(30, 1.0);
    tail[0] = 0.4;
    const auto f1 = evaluate_individual(zdt1, tail);
    CHECK(f1[1] == doctest::Approx(10.0 * (1.0 - std::sqrt(0.04))).epsilon(1e-14));

    // ZDT6 with a zero tail lies on its front f2 = 1 - f1^2.
    const auto zdt6 = make_problem("zdt6");
    Genome y(10, 0.0);
    y[0] = 0.3;
    const auto f6 = evaluate_individual(zdt6, y);
    const double expectedF1 = 1.0 - std::exp(-1.2) * std::pow(std::sin(1.8 * M_PI), 6.0);
    CHECK(f6[0] == doctest::Approx(expectedF1).epsilon(1e-14));
    CHECK(f6[1] == doctest::Approx(1.0 - expectedF1 * expectedF1).epsilon(1e-14));
}

TEST_CASE("reference fronts")
{
    for (const auto& name : problem_names()) {
        const auto front = sample_reference_front(name);
        CHECK(front.size() <= kDefaultFrontPoints);
        CHECK(front.size() >= kDefaultFrontPoints * 9 / 10);
        CHECK(front.objective_count() == 2);
        const auto& pts = front.points();
        for (std::size_t i = 1; i < pts.size(); ++i) {
            CHECK(pts[i - 1][0] < pts[i][0]);
            CHECK(pts[i - 1][1] > pts[i][1]);
        }
        std::vector<oracle::Point> copy(pts.begin(), pts.end());
        const auto ranks = oracle::brute_force_ranks(copy);
        CHECK(std::all_of(ranks.begin(), ranks.end(), [](std::size_t r) { return r == 0; }));
    }

    const auto zdt1 = sample_reference_front("zdt1");
    for (const auto& p : zdt1.points()) {
        CHECK(p[1] == doctest::Approx(1.0 - std::sqrt(p[0])).epsilon(1e-14));
    }
    CHECK(zdt1.minimum(0) == 0.0);
    CHECK(zdt1.maximum(0) == 1.0);

    const auto fon2 = sample_reference_front("fon2");
    const double far = 1.0 - std::exp(-4.0);
    CHECK(fon2.points().front()[0] == 0.0);
    CHECK(fon2.points().front()[1] == doctest::Approx(far).epsilon(1e-14));
    CHECK(fon2.points().back()[0] == doctest::Approx(far).epsilon(1e-14));
    CHECK(fon2.points().back()[1] == doctest::Approx(0.0).epsilon(1e-14));

    const auto zdt3 = sample_reference_front("zdt3");
    CHECK(zdt3.minimum(0) == 0.0);
    CHECK(zdt3.maximum(0) == doctest::Approx(0.8518).epsilon(1e-3));
    CHECK(zdt3.minimum(1) == doctest::Approx(-0.7733).epsilon(1e-3));

    const auto small = sample_reference_front("zdt2", 5);
    CHECK(small.size() == 5);
    CHECK(small.points()[2] == Objectives{0.5, 0.75});
    CHECK_THROWS_AS(sample_reference_front("zdt1", 1), ContractViolation);
}

TEST_CASE("random genomes never dominate the reference front")
{
    RandomSource rng(77);
    for (const auto& name : problem_names()) {
        const auto problem = make_problem(name);
        const auto front = problem.referenceFront(kDefaultFrontPoints);
        for (int trial = 0; trial < 2000; ++trial) {
            Genome g(problem.dimension);
            for (std::size_t j = 0; j < g.size(); ++j) {
                g[j] = rng.uniform(problem.bounds.lower(j), problem.bounds.upper(j));
            }
            const auto f = evaluate_individual(problem, g);
            // Interpolated front value at f1 must not be beaten by more than
            // the sampling resolution.
            bool dominatesAll = true;
            for (const auto& p : front.points()) {
                if (!oracle::pareto_dominates(f, p)) {
                    dominatesAll = false;
                    break;
                }
            }
            CHECK_FALSE(dominatesAll);
            const auto& pts = front.points();
            auto it = std::lower_bound(pts.begin(), pts.end(), f[0],
                                       [](const Objectives& p, double v) { return p[0] < v; });
            if (it != pts.end() && it != pts.begin() && name != "zdt3") {
                CHECK(f[1] >= std::prev(it)->at(1) - 1e-2);
            }
        }
    }
}

TEST_CASE("nondominated_filter")
{
    const auto kept = nondominated_filter({{1, 1}, {0, 2}, {2, 0}, {1, 1}, {2, 2}, {0, 3}});
    CHECK(kept == std::vector<Objectives>{{0, 2}, {1, 1}, {2, 0}});
    const auto three = nondominated_filter({{1, 1, 1}, {0, 2, 2}, {2, 2, 2}, {1, 1, 1}});
    CHECK(three == std::vector<Objectives>{{0, 2, 2}, {1, 1, 1}});
    CHECK(nondominated_filter({}).empty());
}

TEST_CASE("front files round trip")
{
    const auto dir = std::filesystem::temp_directory_path() / "nsga2_test_problems";
    std::filesystem::create_directories(dir);
    const auto path = dir / "front.txt";
    const auto front = sample_reference_front("zdt3", 200);
    write_front_file(front, path);
    const auto loaded = read_front_file(path);
    CHECK(loaded.points() == front.points());

    const auto parsed = parse_front("# comment\n0 1\n\n  0.5 0.25  \n1 0\n");
    CHECK(parsed.points() == std::vector<Objectives>{{0, 1}, {0.5, 0.25}, {1, 0}});

    CHECK_THROWS_AS(parse_front(""), UserError);
    CHECK_THROWS_AS(parse_front("# only comments\n"), UserError);
    CHECK_THROWS_AS(parse_front("0 1\n1\n"), UserError);
    CHECK_THROWS_AS(parse_front("0 1\n1 0 2\n"), UserError);
    CHECK_THROWS_AS(parse_front("0 1\n1 x\n"), UserError);
    CHECK_THROWS_AS(read_front_file(dir / "missing.txt"), UserError);
    try {
        parse_front("0 1\n1 0 2\n");
    } catch (const UserError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    std::filesystem::remove_all(dir);
}
