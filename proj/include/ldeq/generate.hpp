#ifndef LDEQ_GENERATE_HPP
#define LDEQ_GENERATE_HPP

#include "ldeq/distance.hpp"
#include "ldeq/profile.hpp"

#include <random>

namespace ldeq {

using Rng = std::mt19937_64;

// Uniformly random strict orders over 0..n.
PreferenceProfile random_profile(int n, Rng& rng);

// Single-peaked along the identity axis: each voter interleaves her left and
// right neighbours nearest-first at random, with self and 0 inserted at
// random positions.
PreferenceProfile random_sp_profile(int n, Rng& rng);

// Random undirected acceptability graph among non-abstainers, each edge
// present with probability `edge_prob`. Acc orders and the tail are random.
PreferenceProfile random_symmetric_profile(int n, Rng& rng, double edge_prob = 0.4,
                                           double abstain_prob = 0.1);

// Integer points in [0, 10]^dim, thresholds in [0, max_threshold].
DbInstance random_db_instance(int n, Rng& rng, int dim = 2, double max_threshold = 5.0,
                              double abstain_prob = 0.1);

// The dist in {1, 2} encoding of a symmetric profile with thresholds 1.
DbInstance symmetric_as_db(const PreferenceProfile& p);

} // namespace ldeq

#endif
