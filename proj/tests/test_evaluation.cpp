#include "doctest.h"

#include "nsga2/evaluation.hpp"
#include "oracles.hpp"

#include <cmath>
#include <vector>

using namespace nsga2;

namespace {

const ReferenceFront kDiagonal({{0.0, 1.0}, {1.0, 0.0}});

} // namespace

TEST_CASE("normalize_objectives")
{
    const ReferenceFront front({{0.0, 4.0}, {1.0, 2.0}, {2.0, 0.0}});
    const auto q = normalize_objectives(std::vector<Objectives>{{1.0, 2.0}, {3.0, -1.0}}, front);
    CHECK(q[0] == Objectives{0.5, 0.5});
    CHECK(q[1] == Objectives{1.5, -0.25});
    CHECK_THROWS_AS(normalize_objectives(std::vector<Objectives>{{1.0}}, front), ContractViolation);
    CHECK_THROWS_AS(ReferenceFront({{0.0, 1.0}}), UserError);
    CHECK_THROWS_AS(ReferenceFront({{0.0, 1.0}, {0.0, 2.0}}), ContractViolation);
}

TEST_CASE("generational_distance")
{
    CHECK(generational_distance(std::vector<Objectives>{{0.5, 0.5}}, kDiagonal) ==
          doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK(generational_distance(std::vector<Objectives>{{0.5, 0.5}, {0.5, 0.5}}, kDiagonal) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(generational_distance(std::vector<Objectives>{{0.0, 1.0}, {1.0, 0.0}}, kDiagonal) == 0.0);
    CHECK_THROWS_AS(generational_distance(std::vector<Objectives>{}, kDiagonal), ContractViolation);

    // Normalization: the same geometry at a different scale scores the same.
    const ReferenceFront wide({{0.0, 10.0}, {100.0, 0.0}});
    CHECK(generational_distance(std::vector<Objectives>{{50.0, 5.0}}, wide) ==
          doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
}

TEST_CASE("spread")
{
    CHECK(spread(std::vector<Objectives>{{0.0, 1.0}, {0.5, 0.5}, {1.0, 0.0}}, kDiagonal) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(spread(std::vector<Objectives>{{0.0, 1.0}, {0.25, 0.75}, {1.0, 0.0}}, kDiagonal) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(spread(std::vector<Objectives>{{0.6, 0.4}, {0.1, 0.9}, {0.2, 0.8}}, kDiagonal) ==
          doctest::Approx(0.8).epsilon(1e-12));
    const ReferenceFront scaled({{0.0, 4.0}, {1.0, 2.0}, {2.0, 0.0}});
    CHECK(spread(std::vector<Objectives>{{0.5, 3.0}, {1.0, 2.0}, {2.0, 0.5}}, scaled) ==
          doctest::Approx(0.5147186257614297).epsilon(1e-12));

    const double clustered = spread(std::vector<Objectives>{{0.1, 0.9}, {0.11, 0.89}, {0.12, 0.88}}, kDiagonal);
    CHECK(clustered > 0.9);

    CHECK_THROWS_AS(spread(std::vector<Objectives>{{0.5, 0.5}}, kDiagonal), ContractViolation);
    const ReferenceFront threeObjective({{0.0, 1.0, 0.0}, {1.0, 0.0, 1.0}});
    CHECK_THROWS_AS(spread(std::vector<Objectives>{{0, 1, 0}, {1, 0, 1}}, threeObjective), UserError);

    const auto both = score(std::vector<Objectives>{{0.6, 0.4}, {0.1, 0.9}, {0.2, 0.8}}, kDiagonal);
    CHECK(both.spread == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(both.gd == doctest::Approx(std::sqrt(0.42) / 3.0).epsilon(1e-12));
}

TEST_CASE("indicators are invariant to affine rescaling of objectives")
{
    RandomSource rng(8);
    std::vector<Objectives> frontPoints;
    for (int i = 0; i <= 50; ++i) {
        const double f1 = i / 50.0;
        frontPoints.push_back({f1, 1.0 - std::sqrt(f1)});
    }
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Objectives> q;
        for (int i = 0; i < 12; ++i) {
            const double f1 = rng.uniform();
            q.push_back({f1, 1.0 - std::sqrt(f1) + 0.2 * rng.uniform()});
        }
        const double a = 0.1 + 20.0 * rng.uniform();
        const double b = rng.uniform(-5.0, 5.0);
        auto transform = [&](std::vector<Objectives> pts) {
            for (auto& p : pts) {
                p[1] = a * p[1] + b;
            }
            return pts;
        };
        const ReferenceFront original(frontPoints);
        const ReferenceFront moved(transform(frontPoints));
        const auto s1 = score(q, original);
        const auto s2 = score(transform(q), moved);
        CHECK(std::abs(s1.gd - s2.gd) <= 1e-10);
        CHECK(std::abs(s1.spread - s2.spread) <= 1e-10);
    }
}

TEST_CASE("sample_stats")
{
    const auto s = sample_stats(std::vector{0.0, 2.0});
    CHECK(s.mean == 1.0);
    CHECK(s.std == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(s.count == 2);
    const auto c = sample_stats(std::vector{3.0, 3.0, 3.0});
    CHECK(c.std == 0.0);
    const auto k = sample_stats(std::vector{2.0, 4.0, 4.0, 4.0, 5.0, 5.0, 7.0, 9.0});
    CHECK(k.mean == 5.0);
    CHECK(k.std == doctest::Approx(std::sqrt(32.0 / 7.0)).epsilon(1e-14));
    CHECK_THROWS_AS(sample_stats(std::vector{1.0}), ContractViolation);

    RandomSource rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> v(2 + rng.index(200));
        const double offset = 1e6 * rng.uniform();
        for (auto& x : v) {
            x = offset + rng.uniform();
        }
        const auto got = sample_stats(v);
        const auto [mean, std] = oracle::precise_mean_std(v);
        CHECK(std::abs(got.mean - mean) <= 1e-9 * std::abs(mean));
        CHECK(std::abs(got.std - std) <= 1e-6 * std + 1e-12);
    }
}

TEST_CASE("welch_t_test examples")
{
    // Reference values from an independent statistics package.
    const auto close = welch_t_test({0.5, 0.1, 100}, {0.48, 0.09, 100});
    CHECK(close.tStatistic == doctest::Approx(1.4865882924943339).epsilon(1e-10));
    CHECK(close.pValue == doctest::Approx(0.13873170968243806).epsilon(1e-8));
    CHECK(close.mark == Mark::approx);

    const auto far = welch_t_test({0.5, 0.01, 100}, {0.44, 0.009, 100});
    CHECK(far.tStatistic == doctest::Approx(44.59764877482998).epsilon(1e-10));
    CHECK(far.pValue < 1e-90);
    CHECK(far.mark == Mark::plus);

    const auto unequal = welch_t_test({0.3, 0.05, 10}, {0.35, 0.2, 30});
    CHECK(unequal.tStatistic == doctest::Approx(-1.2565617248750862).epsilon(1e-10));
    CHECK(unequal.pValue == doctest::Approx(0.21684471666862187).epsilon(1e-8));

    const auto worse = welch_t_test({0.44, 0.009, 100}, {0.5, 0.01, 100});
    CHECK(worse.mark == Mark::minus);

    const auto same = welch_t_test({0.2, 0.0, 5}, {0.2, 0.0, 5});
    CHECK(same.tStatistic == 0.0);
    CHECK(same.pValue == 1.0);
    CHECK(same.mark == Mark::approx);

    const auto constant = welch_t_test({0.3, 0.0, 5}, {0.2, 0.0, 5});
    CHECK(constant.mark == Mark::plus);
    CHECK(constant.pValue == 0.0);

    CHECK(mark_token(Mark::plus) == "+");
    CHECK(mark_token(Mark::minus) == "-");
    CHECK(mark_token(Mark::approx) == "~");
}

TEST_CASE("two-sided t tail agrees with simulation")
{
    const double frozen[] = {0.6176303002110998, 0.13520723353626748, 0.01323138905861415};
    const double ts[] = {0.5, 1.5, 2.5};
    for (int i = 0; i < 3; ++i) {
        const double p = student_t_two_sided_p(ts[i], 198.0);
        CHECK(p == doctest::Approx(frozen[i]).epsilon(1e-8));
        CHECK(std::abs(p - oracle::monte_carlo_t_tail(ts[i], 198.0, 400000, 13 + i)) < 0.005);
    }
    CHECK(student_t_two_sided_p(0.0, 10.0) == doctest::Approx(1.0));
    CHECK(student_t_two_sided_p(-1.5, 198.0) == student_t_two_sided_p(1.5, 198.0));
    CHECK_THROWS_AS(student_t_two_sided_p(1.0, 0.0), ContractViolation);
}
