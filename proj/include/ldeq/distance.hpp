#ifndef LDEQ_DISTANCE_HPP
#define LDEQ_DISTANCE_HPP

#include "ldeq/profile.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ldeq {

enum class DistanceSource { kMatrix, kPoints, kGraph };

// Symmetric, non-negative distances between voters 1..n. The triangle
// inequality is not required. Graph distances are hop counts, +inf across
// components.
class DistanceModel {
public:
    DistanceModel() = default;

    // Throws std::invalid_argument on a non-square, asymmetric or negative
    // matrix, or a non-zero diagonal.
    static DistanceModel from_matrix(std::vector<std::vector<double>> dist);
    // Euclidean distances; every point must have the same dimension.
    static DistanceModel from_points(std::vector<std::vector<double>> coords);
    static DistanceModel from_graph(int n, std::vector<std::pair<Voter, Voter>> edges);

    int size() const { return n_; }
    double operator()(Voter i, Voter j) const {
        return dist_[static_cast<size_t>(i - 1) * n_ + (j - 1)];
    }
    DistanceSource source() const { return source_; }
    const std::vector<std::vector<double>>& points() const { return points_; }
    const std::vector<std::pair<Voter, Voter>>& edges() const { return edges_; }

private:
    int n_ = 0;
    DistanceSource source_ = DistanceSource::kMatrix;
    std::vector<double> dist_;
    std::vector<std::vector<double>> points_;
    std::vector<std::pair<Voter, Voter>> edges_;
};

// thresholds[i-1] is voter i's acceptability threshold.
using ThresholdVector = std::vector<double>;

// Acc(i) = {j != i : dist(i, j) <= thresholds[i-1]}. Orders: acceptable
// voters by (distance, index), then self and 0 (0 first for abstainers), then
// the rest by (distance, index). Throws on negative thresholds or a size
// mismatch.
PreferenceProfile build_db_profile(const DistanceModel& model, const ThresholdVector& thresholds,
                                   const std::vector<Voter>& abstainers);

struct ThresholdCheck {
    bool ok = true;
    // Non-abstainers i, j with j in Acc(i), threshold(i) <= threshold(j), and
    // i not in Acc(j); or, against a model, a pair whose acceptance disagrees
    // with the threshold rule.
    Voter i = 0, j = 0;

    explicit operator bool() const { return ok; }
};

// The condition the greedy relies on.
ThresholdCheck check_thresholds(const PreferenceProfile& p, const ThresholdVector& thresholds);
// Exact agreement of Acc sets with the threshold rule.
ThresholdCheck check_thresholds(const PreferenceProfile& p, const DistanceModel& model,
                                const ThresholdVector& thresholds);

struct DbSolution {
    Delegation delegation;
    std::vector<Voter> gurus; // ascending
    std::vector<Voter> order; // insertion order of the greedy
};

// Repeatedly takes the remaining non-abstainer with the smallest threshold
// (ties by index) and drops everyone accepting her. Throws
// std::invalid_argument when check_thresholds fails.
DbSolution solve_equilibrium_db(const PreferenceProfile& p, const ThresholdVector& thresholds);

// A distance model together with its thresholds and abstainer flags.
struct DbInstance {
    DistanceModel model;
    ThresholdVector thresholds;
    std::vector<Voter> abstainers;

    PreferenceProfile profile() const { return build_db_profile(model, thresholds, abstainers); }
};

// One voter per line: "id x1 ... xd threshold flag", flag 0/voter or
// 1/abstainer. Ids must be 1..n in order. '#' starts a comment.
DbInstance parse_points(const std::string& text);
std::string format_points(const DbInstance& inst);

// "graph n", then "thresholds t1 ... tn", an optional "abstainers a b ...",
// then one edge "u v" per line.
DbInstance parse_graph(const std::string& text);
std::string format_graph(const DbInstance& inst);

// Dispatches on the first meaningful line.
DbInstance parse_db_instance(const std::string& text);
std::string format_db_instance(const DbInstance& inst);

} // namespace ldeq

#endif
