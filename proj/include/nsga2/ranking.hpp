#pragma once

#include "nsga2/core.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace nsga2 {

/// Pareto dominance for minimization.
bool dominates(std::span<const double> a, std::span<const double> b);

/// Indices of a population grouped by non-domination level, best first.
struct FrontPartition {
    std::vector<std::vector<std::size_t>> fronts;
};

/// Deb's fast non-dominated sort. Sets `rank` on every member.
FrontPartition fast_nondominated_sort(std::span<Individual> members);

/// Crowding distance for the members of `front` (indices into `members`).
///
/// Each objective is sorted stably, ties broken by position in `front`; the
/// extremes get +infinity and interior members accumulate the neighbour gap
/// normalized by the objective's range within the front. Objectives whose
/// range is zero contribute nothing to interior members.
void assign_crowding_distance(std::span<Individual> members, std::span<const std::size_t> front);

/// Treats every element of `front` as one front.
void assign_crowding_distance(std::span<Individual> front);

/// Sorts into fronts and assigns crowding within each front.
FrontPartition rank_and_crowd(std::span<Individual> members);

/// Crowded-comparison order: lower rank, then larger crowding.
bool crowded_less(const Individual& a, const Individual& b);

} // namespace nsga2
