#ifndef LDEQ_SINGLE_PEAKED_HPP
#define LDEQ_SINGLE_PEAKED_HPP

#include "ldeq/profile.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ldeq {

// Voters are indexed by their position on the axis, 1 < 2 < ... < n.
struct SinglePeakedVerdict {
    bool ok = true;
    // Lexicographically least (i, j, k) where j lies strictly between i and k
    // on the axis but voter i ranks k above j.
    Voter i = 0, j = 0, k = 0;

    explicit operator bool() const { return ok; }
};

// O(n^2) plus the cost of locating the least witness for a failing voter.
SinglePeakedVerdict check_single_peaked(const PreferenceProfile& p);

// A profile known to be single-peaked along the identity axis.
class AxisProfile {
public:
    // Throws std::invalid_argument when `p` is not single-peaked.
    explicit AxisProfile(PreferenceProfile p);

    const PreferenceProfile& profile() const { return profile_; }
    int size() const { return profile_.size(); }

    // Extent of Acc(i) restricted to non-abstainers, with i herself included:
    // [left(i), right(i)] in axis ids. Only meaningful for non-abstainers.
    Voter left(Voter i) const { return left_[static_cast<size_t>(i)]; }
    Voter right(Voter i) const { return right_[static_cast<size_t>(i)]; }

private:
    PreferenceProfile profile_;
    std::vector<Voter> left_, right_;
};

// Out-neighbourhoods as contiguous intervals, after dropping abstainers and
// renumbering the remaining voters 1..m along the axis.
struct IntervalCatchForm {
    std::vector<Voter> original;  // original[c-1] = axis id of compact voter c
    std::vector<Voter> compact;   // compact[v] = compact id of voter v, 0 for abstainers
    std::vector<Voter> l, r;      // l[c-1] <= c <= r[c-1]

    int size() const { return static_cast<int>(original.size()); }
};

// Throws std::logic_error if some out-neighbourhood is not contiguous.
IntervalCatchForm interval_catch_form(const AxisProfile& ap);

// DAG over s = 0, voters 1..n, t = n+1 whose s-t paths are exactly the
// kernels of the acceptability digraph. Abstainers are isolated.
struct AuxArc {
    int tail = 0;
    int head = 0;
    // What the voters spanned by the arc contribute once tail and head are
    // consecutive gurus (s and t stand for "no guru on that side").
    std::int64_t dissatisfaction = 0; // voters tail..head-1, as rank - 1
    int abstentions = 0;              // voters strictly inside that prefer 0
    int to_tail = 0;                  // voters strictly inside that pick tail
    int to_head = 0;                  // voters strictly inside that pick head
};

class AuxiliaryDigraph {
public:
    AuxiliaryDigraph() = default;
    explicit AuxiliaryDigraph(int n) : n_(n), out_(static_cast<size_t>(n) + 2) {}

    int voters() const { return n_; }
    int source() const { return 0; }
    int sink() const { return n_ + 1; }
    bool weighted() const { return weighted_; }

    // Outgoing arcs of v, heads ascending.
    const std::vector<AuxArc>& out(int v) const { return out_[static_cast<size_t>(v)]; }
    const AuxArc* find(int tail, int head) const;
    std::vector<std::pair<int, int>> arc_list() const;
    size_t arc_count() const;

private:
    friend AuxiliaryDigraph build_auxiliary(const AxisProfile&, bool);
    int n_ = 0;
    bool weighted_ = false;
    std::vector<std::vector<AuxArc>> out_;
};

// Arcs in O(n^2); the weights add O(head - tail) per arc.
AuxiliaryDigraph build_auxiliary(const AxisProfile& ap, bool with_weights = true);

std::string to_dot(const AuxiliaryDigraph& aux);

// Members vote; everyone else takes her favourite among the closest member on
// each side and abstention.
Delegation sp_delegation(const AxisProfile& ap, const std::vector<Voter>& kernel);

struct SpSolution {
    Delegation delegation;
    std::vector<Voter> gurus;
    std::optional<std::int64_t> value; // empty for minmaxvp without gurus
    bool degenerate = false;           // nobody is willing to vote
};

// Lexicographically smallest kernel.
SpSolution solve_equilibrium_sp(const AxisProfile& ap);

struct MembershipAnswer {
    bool member = false;
    bool abstainer = false; // asked about an abstainer; never a guru
    std::optional<SpSolution> witness;
};

MembershipAnswer memb_sp(const AxisProfile& ap, Voter i);

// Optimal equilibria; ties go to the lexicographically smallest guru set.
SpSolution mindis_sp(const AxisProfile& ap);
SpSolution minmaxvp_sp(const AxisProfile& ap);
SpSolution minabst_sp(const AxisProfile& ap);

} // namespace ldeq

#endif
