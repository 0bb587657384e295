#include "ldeq/symmetric.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ldeq {

SymmetryReport check_symmetric(const PreferenceProfile& p) {
    const int n = p.size();
    for (Voter i = 1; i <= n; ++i) {
        if (p.is_abstainer(i)) continue;
        for (Voter j = 1; j <= n; ++j) {
            if (j == i || p.is_abstainer(j)) continue;
            if (p.accepts(i, j) && !p.accepts(j, i)) return {false, std::make_pair(i, j)};
        }
    }
    return {};
}

namespace {

void require_symmetric(const PreferenceProfile& p) {
    auto report = check_symmetric(p);
    if (!report) {
        throw std::invalid_argument("profile is not symmetric: voter " +
                                    std::to_string(report.witness->first) + " accepts " +
                                    std::to_string(report.witness->second) +
                                    " but not conversely");
    }
}

SymSolution greedy_mis(const PreferenceProfile& p, std::optional<Voter> seed) {
    const int n = p.size();
    std::vector<char> taken(static_cast<size_t>(n) + 1, 0);
    std::vector<Voter> set;
    auto try_add = [&](Voter v) {
        if (taken[static_cast<size_t>(v)] || p.is_abstainer(v)) return;
        for (Voter u : set) {
            if (p.accepts(v, u)) return;
        }
        taken[static_cast<size_t>(v)] = 1;
        set.push_back(v);
    };
    if (seed) try_add(*seed);
    for (Voter v = 1; v <= n; ++v) try_add(v);
    std::sort(set.begin(), set.end());
    SymSolution s;
    s.delegation = kernel_to_delegation(p, set);
    s.gurus = std::move(set);
    return s;
}

} // namespace

SymSolution solve_equilibrium_sym(const PreferenceProfile& p) {
    require_symmetric(p);
    return greedy_mis(p, std::nullopt);
}

SymSolution memb_sym(const PreferenceProfile& p, Voter i) {
    if (!p.contains(i)) throw std::invalid_argument("voter " + std::to_string(i) + " out of range");
    if (p.is_abstainer(i)) {
        throw std::invalid_argument("voter " + std::to_string(i) + " abstains and is never a guru");
    }
    require_symmetric(p);
    return greedy_mis(p, i);
}

} // namespace ldeq
