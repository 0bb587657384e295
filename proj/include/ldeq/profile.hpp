#ifndef LDEQ_PROFILE_HPP
#define LDEQ_PROFILE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ldeq {

// Voters are numbered 1..n. Outcome 0 stands for abstention and is never a
// voter.
using Voter = int;
inline constexpr Voter kAbstain = 0;

// A strict preference order of every voter over the n+1 outcomes {0,1,...,n}.
// Immutable after construction.
class PreferenceProfile {
public:
    PreferenceProfile() = default;

    // rankings[i-1] lists voter i's outcomes from best to worst; each must be a
    // permutation of 0..n. Throws std::invalid_argument otherwise.
    explicit PreferenceProfile(std::vector<std::vector<Voter>> rankings);

    int size() const { return n_; }
    bool contains(Voter i) const { return i >= 1 && i <= n_; }

    std::span<const Voter> ranking(Voter i) const;

    // 1-based position of `outcome` in voter i's order.
    int rank(Voter i, Voter outcome) const {
        return rank_[static_cast<size_t>(i - 1) * (n_ + 1) + outcome];
    }
    bool prefers(Voter i, Voter a, Voter b) const { return rank(i, a) < rank(i, b); }

    // 0 ranked above i herself.
    bool is_abstainer(Voter i) const { return prefers(i, kAbstain, i); }
    // j is an acceptable guru for i: j beats both voting and abstaining.
    bool accepts(Voter i, Voter j) const {
        return j != i && prefers(i, j, i) && prefers(i, j, kAbstain);
    }

    // Acc(i) in i's preference order.
    std::vector<Voter> acceptable(Voter i) const;
    const std::vector<Voter>& abstainers() const { return abstainers_; }
    std::vector<Voter> non_abstainers() const;

    // The ≻_i-best element of `options`; options must be non-empty.
    Voter best_of(Voter i, std::span<const Voter> options) const;

    bool operator==(const PreferenceProfile& other) const {
        return n_ == other.n_ && order_ == other.order_;
    }

private:
    int n_ = 0;
    std::vector<Voter> order_; // n rows of n+1 outcomes
    std::vector<int> rank_;    // n rows of n+1 ranks
    std::vector<Voter> abstainers_;
};

// d(i) = i votes, d(i) = 0 abstains, d(i) = j delegates to j.
class Delegation {
public:
    Delegation() = default;
    explicit Delegation(std::vector<Voter> targets) : targets_(std::move(targets)) {}

    static Delegation all_vote(int n);
    static Delegation all_abstain(int n);

    int size() const { return static_cast<int>(targets_.size()); }
    Voter operator[](Voter i) const { return targets_[static_cast<size_t>(i - 1)]; }
    void set(Voter i, Voter target) { targets_[static_cast<size_t>(i - 1)] = target; }
    std::span<const Voter> targets() const { return targets_; }

    // Throws std::invalid_argument unless the function is defined on exactly
    // 1..n with values in 0..n.
    void validate(int n) const;

    bool operator==(const Delegation&) const = default;
    auto operator<=>(const Delegation&) const = default;

private:
    std::vector<Voter> targets_;
};

struct GuruAssignment {
    std::vector<Voter> guru;   // guru[i-1] = gu(i, d), 0 for abstention
    std::vector<Voter> gurus;  // ascending

    Voter of(Voter i) const { return guru[static_cast<size_t>(i - 1)]; }
    bool operator==(const GuruAssignment&) const = default;
};

// Follows delegations to a voting voter. Paths that end in 0 or run into a
// circuit give guru 0. Linear time.
GuruAssignment resolve_gurus(int n, const Delegation& d);
inline GuruAssignment resolve_gurus(const PreferenceProfile& p, const Delegation& d) {
    d.validate(p.size());
    return resolve_gurus(p.size(), d);
}

struct StabilityVerdict {
    bool stable = true;
    Voter witness = 0;  // least violating voter when unstable
    Voter better = 0;   // her best outcome among gurus, 0 and herself

    explicit operator bool() const { return stable; }
};

StabilityVerdict is_nash_stable(const PreferenceProfile& p, const Delegation& d);
StabilityVerdict is_nash_stable(const PreferenceProfile& p, const Delegation& d,
                                const GuruAssignment& gu);

// Members of `kernel` vote, everyone else delegates directly to her favourite
// member or abstains when 0 beats all of them. Rejects abstainers in the set.
Delegation kernel_to_delegation(const PreferenceProfile& p, std::span<const Voter> kernel);

// Sum over voters of (rank of their guru) - 1.
std::int64_t measure_dissatisfaction(const PreferenceProfile& p, const Delegation& d);
// Largest number of voters represented by one guru (herself included), or
// nullopt when nobody votes.
std::optional<int> measure_max_voting_power(const PreferenceProfile& p, const Delegation& d);
// Voters whose guru is 0, circuit members included.
int measure_abstentions(const PreferenceProfile& p, const Delegation& d);

std::vector<int> voting_powers(int n, const GuruAssignment& gu);

std::string to_string(const Delegation& d);

} // namespace ldeq

#endif
