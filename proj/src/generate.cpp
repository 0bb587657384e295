#include "ldeq/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ldeq {

PreferenceProfile random_profile(int n, Rng& rng) {
    std::vector<std::vector<Voter>> rows(static_cast<size_t>(n));
    for (auto& row : rows) {
        row.resize(static_cast<size_t>(n) + 1);
        std::iota(row.begin(), row.end(), 0);
        std::shuffle(row.begin(), row.end(), rng);
    }
    return PreferenceProfile(std::move(rows));
}

PreferenceProfile random_sp_profile(int n, Rng& rng) {
    std::vector<std::vector<Voter>> rows(static_cast<size_t>(n));
    for (Voter i = 1; i <= n; ++i) {
        auto& row = rows[static_cast<size_t>(i - 1)];
        Voter left = i - 1, right = i + 1;
        while (left >= 1 || right <= n) {
            const Voter remaining_left = left, remaining_right = n - right + 1;
            std::uniform_int_distribution<int> pick(1, remaining_left + remaining_right);
            if (pick(rng) <= remaining_left) row.push_back(left--);
            else row.push_back(right++);
        }
        for (Voter extra : {i, kAbstain}) {
            std::uniform_int_distribution<size_t> pos(0, row.size());
            row.insert(row.begin() + static_cast<std::ptrdiff_t>(pos(rng)), extra);
        }
    }
    return PreferenceProfile(std::move(rows));
}

PreferenceProfile random_symmetric_profile(int n, Rng& rng, double edge_prob, double abstain_prob) {
    std::bernoulli_distribution edge(edge_prob), abstain(abstain_prob);
    std::vector<char> abstainer(static_cast<size_t>(n) + 1, 0);
    for (Voter i = 1; i <= n; ++i) abstainer[i] = abstain(rng);
    std::vector<std::vector<char>> adj(static_cast<size_t>(n) + 1, std::vector<char>(static_cast<size_t>(n) + 1, 0));
    for (Voter i = 1; i <= n; ++i) {
        for (Voter j = i + 1; j <= n; ++j) {
            if (abstainer[i] || abstainer[j]) continue;
            if (edge(rng)) adj[i][j] = adj[j][i] = 1;
        }
    }
    std::vector<std::vector<Voter>> rows(static_cast<size_t>(n));
    for (Voter i = 1; i <= n; ++i) {
        auto& row = rows[static_cast<size_t>(i - 1)];
        if (abstainer[i]) {
            // Anything goes above 0 for an abstainer.
            row.resize(static_cast<size_t>(n) + 1);
            std::iota(row.begin(), row.end(), 0);
            std::shuffle(row.begin(), row.end(), rng);
            auto zero = std::find(row.begin(), row.end(), kAbstain);
            auto self = std::find(row.begin(), row.end(), i);
            if (self < zero) std::iter_swap(self, zero);
            continue;
        }
        std::vector<Voter> acc, rest;
        for (Voter j = 1; j <= n; ++j) {
            if (j == i) continue;
            (adj[i][j] ? acc : rest).push_back(j);
        }
        rest.push_back(kAbstain);
        std::shuffle(acc.begin(), acc.end(), rng);
        std::shuffle(rest.begin(), rest.end(), rng);
        row = acc;
        row.push_back(i);
        row.insert(row.end(), rest.begin(), rest.end());
    }
    return PreferenceProfile(std::move(rows));
}

DbInstance random_db_instance(int n, Rng& rng, int dim, double max_threshold, double abstain_prob) {
    std::uniform_int_distribution<int> coord(0, 10);
    std::uniform_int_distribution<int> tenths(0, static_cast<int>(std::lround(max_threshold * 10)));
    std::bernoulli_distribution abstain(abstain_prob);
    std::vector<std::vector<double>> points(static_cast<size_t>(n));
    DbInstance inst;
    for (Voter i = 1; i <= n; ++i) {
        for (int k = 0; k < dim; ++k) points[static_cast<size_t>(i - 1)].push_back(coord(rng));
        inst.thresholds.push_back(tenths(rng) / 10.0);
        if (abstain(rng)) inst.abstainers.push_back(i);
    }
    inst.model = DistanceModel::from_points(std::move(points));
    return inst;
}

DbInstance symmetric_as_db(const PreferenceProfile& p) {
    const int n = p.size();
    std::vector<std::vector<double>> dist(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n), 2.0));
    for (Voter i = 1; i <= n; ++i) {
        dist[i - 1][i - 1] = 0.0;
        for (Voter j = 1; j <= n; ++j) {
            if (j != i && !p.is_abstainer(i) && !p.is_abstainer(j) && p.accepts(i, j)) {
                dist[i - 1][j - 1] = dist[j - 1][i - 1] = 1.0;
            }
        }
    }
    DbInstance inst;
    inst.model = DistanceModel::from_matrix(std::move(dist));
    inst.thresholds.assign(static_cast<size_t>(n), 1.0);
    inst.abstainers = p.abstainers();
    return inst;
}

} // namespace ldeq
