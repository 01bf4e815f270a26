#include "nsga2/evaluation.hpp"

#include <boost/math/special_functions/beta.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nsga2 {

namespace {

double distance(std::span<const double> a, std::span<const double> b)
{
    double sum = 0.0;
    for (std::size_t m = 0; m < a.size(); ++m) {
        const double d = a[m] - b[m];
        sum += d * d;
    }
    return std::sqrt(sum);
}

} // namespace

std::string_view mark_token(Mark mark)
{
    switch (mark) {
    case Mark::plus:
        return "+";
    case Mark::minus:
        return "-";
    case Mark::approx:
        break;
    }
    return "~";
}

std::vector<Objectives> normalize_objectives(std::span<const Objectives> points, const ReferenceFront& front)
{
    const std::size_t m = front.objective_count();
    std::vector<Objectives> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        require(p.size() == m, "point and reference front differ in objective count");
        Objectives q(m);
        for (std::size_t k = 0; k < m; ++k) {
            const double lo = front.minimum(k);
            const double hi = front.maximum(k);
            require(lo < hi, "reference front has a degenerate range");
            q[k] = (p[k] - lo) / (hi - lo);
        }
        out.push_back(std::move(q));
    }
    return out;
}

double generational_distance(std::span<const Objectives> obtained, const ReferenceFront& front)
{
    require(!obtained.empty(), "generational distance needs a non-empty obtained set");
    const auto q = normalize_objectives(obtained, front);
    const auto ref = normalize_objectives(front.points(), front);
    double sumSquares = 0.0;
    for (const auto& p : q) {
        double nearest = kInfinity;
        for (const auto& r : ref) {
            nearest = std::min(nearest, distance(p, r));
        }
        sumSquares += nearest * nearest;
    }
    return std::sqrt(sumSquares) / static_cast<double>(q.size());
}

double spread(std::span<const Objectives> obtained, const ReferenceFront& front)
{
    require(obtained.size() >= 2, "spread needs at least two obtained points");
    if (front.objective_count() != 2) {
        throw UserError("spread is defined for bi-objective fronts only");
    }
    auto q = normalize_objectives(obtained, front);
    const auto ref = normalize_objectives(front.points(), front);
    std::stable_sort(q.begin(), q.end(), [](const Objectives& a, const Objectives& b) { return a[0] < b[0]; });

    auto byFirst = [](const Objectives& a, const Objectives& b) { return a[0] < b[0]; };
    const Objectives& frontFirst = *std::min_element(ref.begin(), ref.end(), byFirst);
    const Objectives& frontLast = *std::max_element(ref.begin(), ref.end(), byFirst);
    const double df = distance(frontFirst, q.front());
    const double dl = distance(frontLast, q.back());

    std::vector<double> gaps(q.size() - 1);
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
        gaps[i] = distance(q[i], q[i + 1]);
    }
    const double mean = std::accumulate(gaps.begin(), gaps.end(), 0.0) / static_cast<double>(gaps.size());
    double deviation = 0.0;
    for (double d : gaps) {
        deviation += std::abs(d - mean);
    }
    const double denominator = df + dl + static_cast<double>(gaps.size()) * mean;
    require(denominator > 0.0, "spread is undefined when all points coincide with both front extremes");
    return (df + dl + deviation) / denominator;
}

IndicatorResult score(std::span<const Objectives> obtained, const ReferenceFront& front)
{
    return {generational_distance(obtained, front), spread(obtained, front)};
}

SampleStats sample_stats(std::span<const double> values)
{
    require(values.size() >= 2, "sample statistics need at least two values");
    const double n = static_cast<double>(values.size());
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double squares = 0.0;
    double residual = 0.0;
    for (double v : values) {
        squares += (v - mean) * (v - mean);
        residual += v - mean;
    }
    // Corrected two-pass variance; the residual term removes rounding in the mean.
    const double variance = (squares - residual * residual / n) / (n - 1.0);
    return {mean, std::sqrt(std::max(variance, 0.0)), values.size()};
}

double student_t_two_sided_p(double t, double degreesOfFreedom)
{
    require(degreesOfFreedom > 0.0, "degrees of freedom must be positive");
    if (std::isnan(t)) {
        return 1.0;
    }
    if (std::isinf(t)) {
        return 0.0;
    }
    const double x = degreesOfFreedom / (degreesOfFreedom + t * t);
    return boost::math::ibeta(0.5 * degreesOfFreedom, 0.5, x);
}

SignificanceMark welch_t_test(const SampleStats& baseline, const SampleStats& candidate, double alpha)
{
    require(baseline.count >= 2 && candidate.count >= 2, "t test needs at least two values per sample");
    const double na = static_cast<double>(baseline.count);
    const double nb = static_cast<double>(candidate.count);
    const double va = baseline.std * baseline.std / na;
    const double vb = candidate.std * candidate.std / nb;
    const double difference = baseline.mean - candidate.mean;

    SignificanceMark result;
    if (va + vb == 0.0) {
        if (difference == 0.0) {
            result.degreesOfFreedom = na + nb - 2.0;
            return result;
        }
        result.tStatistic = std::copysign(kInfinity, difference);
        result.degreesOfFreedom = na + nb - 2.0;
        result.pValue = 0.0;
    } else {
        result.tStatistic = difference / std::sqrt(va + vb);
        result.degreesOfFreedom = (va + vb) * (va + vb) / (va * va / (na - 1.0) + vb * vb / (nb - 1.0));
        result.pValue = student_t_two_sided_p(result.tStatistic, result.degreesOfFreedom);
    }
    if (result.pValue >= alpha) {
        result.mark = Mark::approx;
    } else {
        result.mark = difference > 0.0 ? Mark::plus : Mark::minus;
    }
    return result;
}

} // namespace nsga2
