#include "ldeq/profile.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ldeq {

PreferenceProfile::PreferenceProfile(std::vector<std::vector<Voter>> rankings)
    : n_(static_cast<int>(rankings.size())) {
    const size_t width = static_cast<size_t>(n_) + 1;
    order_.reserve(width * n_);
    rank_.assign(width * n_, 0);
    for (int i = 1; i <= n_; ++i) {
        const auto& row = rankings[static_cast<size_t>(i - 1)];
        if (row.size() != width) {
            throw std::invalid_argument("voter " + std::to_string(i) + " ranks " +
                                        std::to_string(row.size()) + " outcomes, expected " +
                                        std::to_string(width));
        }
        for (size_t pos = 0; pos < row.size(); ++pos) {
            Voter o = row[pos];
            if (o < 0 || o > n_) {
                throw std::invalid_argument("voter " + std::to_string(i) +
                                            " ranks unknown outcome " + std::to_string(o));
            }
            int& slot = rank_[static_cast<size_t>(i - 1) * width + o];
            if (slot != 0) {
                throw std::invalid_argument("voter " + std::to_string(i) + " ranks outcome " +
                                            std::to_string(o) + " twice");
            }
            slot = static_cast<int>(pos) + 1;
            order_.push_back(o);
        }
    }
    for (int i = 1; i <= n_; ++i) {
        if (is_abstainer(i)) abstainers_.push_back(i);
    }
}

std::span<const Voter> PreferenceProfile::ranking(Voter i) const {
    const size_t width = static_cast<size_t>(n_) + 1;
    return std::span<const Voter>(order_).subspan(static_cast<size_t>(i - 1) * width, width);
}

std::vector<Voter> PreferenceProfile::acceptable(Voter i) const {
    std::vector<Voter> acc;
    for (Voter o : ranking(i)) {
        if (o == i || o == kAbstain) break;
        acc.push_back(o);
    }
    return acc;
}

std::vector<Voter> PreferenceProfile::non_abstainers() const {
    std::vector<Voter> out;
    for (int i = 1; i <= n_; ++i) {
        if (!is_abstainer(i)) out.push_back(i);
    }
    return out;
}

Voter PreferenceProfile::best_of(Voter i, std::span<const Voter> options) const {
    Voter best = options.front();
    for (Voter o : options.subspan(1)) {
        if (prefers(i, o, best)) best = o;
    }
    return best;
}

Delegation Delegation::all_vote(int n) {
    std::vector<Voter> t(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) t[static_cast<size_t>(i - 1)] = i;
    return Delegation(std::move(t));
}

Delegation Delegation::all_abstain(int n) {
    return Delegation(std::vector<Voter>(static_cast<size_t>(n), kAbstain));
}

void Delegation::validate(int n) const {
    if (size() != n) {
        throw std::invalid_argument("delegation covers " + std::to_string(size()) +
                                    " voters, profile has " + std::to_string(n));
    }
    for (int i = 1; i <= n; ++i) {
        Voter t = (*this)[i];
        if (t < 0 || t > n) {
            throw std::invalid_argument("voter " + std::to_string(i) + " delegates to " +
                                        std::to_string(t) + ", outside 0.." + std::to_string(n));
        }
    }
}

GuruAssignment resolve_gurus(int n, const Delegation& d) {
    enum : char { kUnknown, kOnPath, kDone };
    std::vector<char> state(static_cast<size_t>(n) + 1, kUnknown);
    GuruAssignment out;
    out.guru.assign(static_cast<size_t>(n), kAbstain);
    std::vector<Voter> path;
    for (Voter start = 1; start <= n; ++start) {
        if (state[start] == kDone) continue;
        path.clear();
        Voter cur = start;
        Voter result = kAbstain;
        while (true) {
            if (state[cur] == kDone) {
                result = out.of(cur);
                break;
            }
            if (state[cur] == kOnPath) {
                result = kAbstain; // circuit
                break;
            }
            state[cur] = kOnPath;
            path.push_back(cur);
            Voter next = d[cur];
            if (next == cur) {
                result = cur;
                break;
            }
            if (next == kAbstain) {
                result = kAbstain;
                break;
            }
            cur = next;
        }
        for (Voter v : path) {
            out.guru[static_cast<size_t>(v - 1)] = result;
            state[v] = kDone;
        }
    }
    for (Voter i = 1; i <= n; ++i) {
        if (d[i] == i) out.gurus.push_back(i);
    }
    return out;
}

StabilityVerdict is_nash_stable(const PreferenceProfile& p, const Delegation& d) {
    d.validate(p.size());
    return is_nash_stable(p, d, resolve_gurus(p.size(), d));
}

StabilityVerdict is_nash_stable(const PreferenceProfile& p, const Delegation& d,
                                const GuruAssignment& gu) {
    (void)d;
    std::vector<Voter> options;
    for (Voter i = 1; i <= p.size(); ++i) {
        options.assign(gu.gurus.begin(), gu.gurus.end());
        options.push_back(kAbstain);
        options.push_back(i);
        Voter best = p.best_of(i, options);
        if (best != gu.of(i)) return {false, i, best};
    }
    return {};
}

Delegation kernel_to_delegation(const PreferenceProfile& p, std::span<const Voter> kernel) {
    const int n = p.size();
    std::vector<char> member(static_cast<size_t>(n) + 1, 0);
    for (Voter k : kernel) {
        if (!p.contains(k)) {
            throw std::invalid_argument("kernel member " + std::to_string(k) + " is not a voter");
        }
        if (p.is_abstainer(k)) {
            throw std::invalid_argument("kernel member " + std::to_string(k) +
                                        " is an abstainer");
        }
        member[k] = 1;
    }
    std::vector<Voter> targets(static_cast<size_t>(n), kAbstain);
    for (Voter i = 1; i <= n; ++i) {
        if (member[i]) {
            targets[static_cast<size_t>(i - 1)] = i;
            continue;
        }
        // The first kernel member or 0 in i's ranking is her favourite.
        for (Voter o : p.ranking(i)) {
            if (o == kAbstain || member[o]) {
                targets[static_cast<size_t>(i - 1)] = o;
                break;
            }
        }
    }
    return Delegation(std::move(targets));
}

std::vector<int> voting_powers(int n, const GuruAssignment& gu) {
    std::vector<int> vp(static_cast<size_t>(n) + 1, 0);
    for (Voter g : gu.guru) {
        if (g != kAbstain) ++vp[g];
    }
    return vp;
}

std::int64_t measure_dissatisfaction(const PreferenceProfile& p, const Delegation& d) {
    auto gu = resolve_gurus(p, d);
    std::int64_t total = 0;
    for (Voter i = 1; i <= p.size(); ++i) total += p.rank(i, gu.of(i)) - 1;
    return total;
}

std::optional<int> measure_max_voting_power(const PreferenceProfile& p, const Delegation& d) {
    auto gu = resolve_gurus(p, d);
    if (gu.gurus.empty()) return std::nullopt;
    auto vp = voting_powers(p.size(), gu);
    return *std::max_element(vp.begin(), vp.end());
}

int measure_abstentions(const PreferenceProfile& p, const Delegation& d) {
    auto gu = resolve_gurus(p, d);
    return static_cast<int>(std::count(gu.guru.begin(), gu.guru.end(), kAbstain));
}

std::string to_string(const Delegation& d) {
    std::ostringstream os;
    os << '(';
    for (Voter i = 1; i <= d.size(); ++i) {
        if (i > 1) os << ", ";
        os << i << "->" << d[i];
    }
    os << ')';
    return os.str();
}

} // namespace ldeq
