#include "nsga2/ranking.hpp"

#include <algorithm>
#include <numeric>

namespace nsga2 {

bool dominates(std::span<const double> a, std::span<const double> b)
{
    require(a.size() == b.size() && !a.empty(), "dominance needs objective vectors of equal, non-zero length");
    bool strictly = false;
    for (std::size_t m = 0; m < a.size(); ++m) {
        if (a[m] > b[m]) {
            return false;
        }
        strictly = strictly || a[m] < b[m];
    }
    return strictly;
}

FrontPartition fast_nondominated_sort(std::span<Individual> members)
{
    const std::size_t n = members.size();
    for (const auto& ind : members) {
        require(ind.evaluated(), "cannot sort an unevaluated individual");
    }

    std::vector<std::vector<std::size_t>> dominated(n);
    std::vector<std::size_t> dominationCount(n, 0);
    FrontPartition partition;
    std::vector<std::size_t> current;

    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            if (dominates(members[p].objectives, members[q].objectives)) {
                dominated[p].push_back(q);
                ++dominationCount[q];
            } else if (dominates(members[q].objectives, members[p].objectives)) {
                dominated[q].push_back(p);
                ++dominationCount[p];
            }
        }
    }
    for (std::size_t p = 0; p < n; ++p) {
        if (dominationCount[p] == 0) {
            current.push_back(p);
        }
    }

    while (!current.empty()) {
        const std::size_t level = partition.fronts.size();
        std::vector<std::size_t> next;
        for (std::size_t p : current) {
            members[p].rank = level;
            for (std::size_t q : dominated[p]) {
                if (--dominationCount[q] == 0) {
                    next.push_back(q);
                }
            }
        }
        std::sort(next.begin(), next.end());
        partition.fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return partition;
}

void assign_crowding_distance(std::span<Individual> members, std::span<const std::size_t> front)
{
    const std::size_t l = front.size();
    if (l == 0) {
        return;
    }
    const std::size_t objectiveCount = members[front[0]].objectives.size();
    for (std::size_t i : front) {
        require(members[i].evaluated(), "cannot crowd an unevaluated individual");
        require(members[i].objectives.size() == objectiveCount, "front members differ in objective count");
        members[i].crowding = 0.0;
    }

    std::vector<std::size_t> order(l);
    for (std::size_t m = 0; m < objectiveCount; ++m) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return members[front[a]].objectives[m] < members[front[b]].objectives[m];
        });
        auto value = [&](std::size_t position) { return members[front[order[position]]].objectives[m]; };

        members[front[order.front()]].crowding = kInfinity;
        members[front[order.back()]].crowding = kInfinity;

        const double range = value(l - 1) - value(0);
        if (!(range > 0.0)) {
            continue;
        }
        for (std::size_t pos = 1; pos + 1 < l; ++pos) {
            members[front[order[pos]]].crowding += (value(pos + 1) - value(pos - 1)) / range;
        }
    }
}

void assign_crowding_distance(std::span<Individual> front)
{
    std::vector<std::size_t> all(front.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    assign_crowding_distance(front, all);
}

FrontPartition rank_and_crowd(std::span<Individual> members)
{
    FrontPartition partition = fast_nondominated_sort(members);
    for (const auto& front : partition.fronts) {
        assign_crowding_distance(members, front);
    }
    return partition;
}

bool crowded_less(const Individual& a, const Individual& b)
{
    require(a.ranked() && b.ranked(), "crowded comparison needs rank and crowding on both individuals");
    if (a.rank != b.rank) {
        return a.rank < b.rank;
    }
    return a.crowding > b.crowding;
}

} // namespace nsga2
