#ifndef LDEQ_SYMMETRIC_HPP
#define LDEQ_SYMMETRIC_HPP

#include "ldeq/profile.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ldeq {

struct SymmetryReport {
    bool symmetric = true;
    // First ordered pair (i, j) of non-abstainers, lexicographically, where i
    // accepts j but j does not accept i.
    std::optional<std::pair<Voter, Voter>> witness;

    explicit operator bool() const { return symmetric; }
};

SymmetryReport check_symmetric(const PreferenceProfile& p);

struct SymSolution {
    Delegation delegation;
    std::vector<Voter> gurus;
};

// Greedy maximal independent set in ascending index order. Throws
// std::invalid_argument on non-symmetric profiles.
SymSolution solve_equilibrium_sym(const PreferenceProfile& p);

// Same, seeded with i. Throws std::invalid_argument when i abstains.
SymSolution memb_sym(const PreferenceProfile& p, Voter i);

} // namespace ldeq

#endif
