#pragma once

#include "nsga2/core.hpp"

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace nsga2 {

struct IndicatorResult {
    double gd = 0.0;
    double spread = 0.0;
};

struct SampleStats {
    double mean = 0.0;
    double std = 0.0; ///< sample standard deviation (divisor n - 1)
    std::size_t count = 0;
};

enum class Mark { plus, minus, approx };

/// "+", "-" or "~".
std::string_view mark_token(Mark mark);

struct SignificanceMark {
    Mark mark = Mark::approx;
    double tStatistic = 0.0;
    double degreesOfFreedom = 0.0;
    double pValue = 1.0;
};

inline constexpr double kSignificanceLevel = 0.05;

/// Maps each objective onto [0, 1] using the reference front's extent.
/// Obtained points may fall outside that box.
std::vector<Objectives> normalize_objectives(std::span<const Objectives> points, const ReferenceFront& front);

/// Root of the summed squared nearest-front distances, divided by |Q|,
/// computed in normalized objective space.
double generational_distance(std::span<const Objectives> obtained, const ReferenceFront& front);

/// Bi-objective spread (non-uniformity) indicator in normalized space.
///
/// Obtained points are ordered by the first objective. Consecutive gaps are
/// compared to their mean; d_f and d_l are the distances from the front's
/// minimum-f1 and maximum-f1 extremes to the first and last obtained points.
double spread(std::span<const Objectives> obtained, const ReferenceFront& front);

IndicatorResult score(std::span<const Objectives> obtained, const ReferenceFront& front);

SampleStats sample_stats(std::span<const double> values);

/// Two-sided Student t tail probability P(|T| >= |t|).
double student_t_two_sided_p(double t, double degreesOfFreedom);

/// Welch's unequal-variance t test of `baseline` against `candidate`.
///
/// The mark is approx when p >= 0.05; otherwise plus when the candidate mean
/// is lower and minus when it is higher.
SignificanceMark welch_t_test(const SampleStats& baseline, const SampleStats& candidate,
                              double alpha = kSignificanceLevel);

} // namespace nsga2
