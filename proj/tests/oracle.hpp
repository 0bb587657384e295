#ifndef LDEQ_TESTS_ORACLE_HPP
#define LDEQ_TESTS_ORACLE_HPP

// Reference implementations for tests. They only read ranks from the
// profile and share no code with the library's solvers.

#include "ldeq/profile.hpp"
#include "ldeq/single_peaked.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace oracle {

using ldeq::PreferenceProfile;
using ldeq::Voter;
using Sets = std::vector<std::vector<Voter>>;

inline bool accepts(const PreferenceProfile& p, Voter i, Voter j) {
    return i != j && p.rank(i, j) < p.rank(i, i) && p.rank(i, j) < p.rank(i, 0);
}

inline bool abstains(const PreferenceProfile& p, Voter i) { return p.rank(i, 0) < p.rank(i, i); }

// d[1..n]; walks at most n steps, a longer walk is a circuit.
inline Voter walk_guru(const std::vector<Voter>& d, Voter i) {
    const int n = static_cast<int>(d.size()) - 1;
    Voter cur = i;
    for (int step = 0; step <= n; ++step) {
        if (cur == 0) return 0;
        if (d[cur] == cur) return cur;
        cur = d[cur];
    }
    return 0;
}

inline std::vector<Voter> one_based(const ldeq::Delegation& d) {
    std::vector<Voter> out{0};
    for (Voter i = 1; i <= d.size(); ++i) out.push_back(d[i]);
    return out;
}

inline bool best_among(const PreferenceProfile& p, Voter i, Voter outcome, const std::vector<Voter>& gurus) {
    auto beats = [&](Voter a) { return a == outcome || p.rank(i, outcome) < p.rank(i, a); };
    if (!beats(0) || !beats(i)) return false;
    return std::all_of(gurus.begin(), gurus.end(), beats);
}

inline bool stable(const PreferenceProfile& p, const std::vector<Voter>& d) {
    const int n = p.size();
    std::vector<Voter> gurus;
    for (Voter v = 1; v <= n; ++v) {
        if (d[v] == v) gurus.push_back(v);
    }
    for (Voter i = 1; i <= n; ++i) {
        if (!best_among(p, i, walk_guru(d, i), gurus)) return false;
    }
    return true;
}

inline bool stable(const PreferenceProfile& p, const ldeq::Delegation& d) { return stable(p, one_based(d)); }

// Independent and absorbing over non-abstainers, straight from the definition.
inline bool is_kernel(const PreferenceProfile& p, const std::vector<Voter>& k) {
    const int n = p.size();
    std::vector<char> in(static_cast<size_t>(n) + 1, 0);
    for (Voter v : k) {
        if (abstains(p, v)) return false;
        in[v] = 1;
    }
    for (Voter a : k) {
        for (Voter b : k) {
            if (accepts(p, a, b)) return false;
        }
    }
    for (Voter v = 1; v <= n; ++v) {
        if (in[v] || abstains(p, v)) continue;
        if (std::none_of(k.begin(), k.end(), [&](Voter m) { return accepts(p, v, m); })) return false;
    }
    return true;
}

inline std::vector<Voter> members(std::uint32_t mask, int n) {
    std::vector<Voter> out;
    for (Voter v = 1; v <= n; ++v) {
        if (mask >> (v - 1) & 1) out.push_back(v);
    }
    return out;
}

// Every kernel, by trying every subset; sorted lexicographically.
inline Sets kernels_by_subsets(const PreferenceProfile& p) {
    const int n = p.size();
    Sets out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        auto k = members(mask, n);
        if (is_kernel(p, k)) out.push_back(std::move(k));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Guru sets of Nash-stable delegation functions, found by searching over
// delegation functions: fix who votes, then try every target for everyone
// else, abandoning a branch once some voter's fully determined chain leaves
// her unstable.
inline Sets stable_guru_sets(const PreferenceProfile& p) {
    const int n = p.size();
    Sets out;
    std::vector<Voter> d(static_cast<size_t>(n) + 1, -1);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        auto gurus = members(mask, n);
        std::vector<Voter> others;
        std::fill(d.begin(), d.end(), -1);
        for (Voter g : gurus) d[g] = g;
        for (Voter v = 1; v <= n; ++v) {
            if (!(mask >> (v - 1) & 1)) others.push_back(v);
        }
        bool gurus_ok = std::all_of(gurus.begin(), gurus.end(),
                                    [&](Voter g) { return best_among(p, g, g, gurus); });
        if (!gurus_ok) continue;

        // Outcome of v if her chain is fully assigned, -1 otherwise.
        auto determined = [&](Voter v) -> Voter {
            Voter cur = v;
            for (int step = 0; step <= n; ++step) {
                if (cur == 0) return 0;
                if (d[cur] < 0) return -1;
                if (d[cur] == cur) return cur;
                cur = d[cur];
            }
            return 0;
        };
        std::function<bool(size_t)> assign = [&](size_t idx) -> bool {
            if (idx == others.size()) return true;
            const Voter i = others[idx];
            for (Voter target = 0; target <= n; ++target) {
                if (target == i) continue;
                d[i] = target;
                bool ok = true;
                for (Voter v : others) {
                    Voter o = determined(v);
                    if (o >= 0 && !best_among(p, v, o, gurus)) {
                        ok = false;
                        break;
                    }
                }
                if (ok && assign(idx + 1)) return true;
            }
            d[i] = -1;
            return false;
        };
        if (assign(0)) out.push_back(gurus);
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct Scores {
    std::int64_t dissatisfaction = 0;
    std::optional<int> max_vp;
    int abstentions = 0;
};

// Every non-member takes her favourite among the members and 0.
inline Scores evaluate_kernel(const PreferenceProfile& p, const std::vector<Voter>& k) {
    const int n = p.size();
    std::vector<int> vp(static_cast<size_t>(n) + 1, 0);
    Scores s;
    for (Voter i = 1; i <= n; ++i) {
        Voter best = 0;
        if (std::find(k.begin(), k.end(), i) != k.end()) {
            best = i;
        } else {
            for (Voter m : k) {
                if (p.rank(i, m) < p.rank(i, best)) best = m;
            }
        }
        s.dissatisfaction += p.rank(i, best) - 1;
        if (best == 0) ++s.abstentions;
        else ++vp[best];
    }
    if (!k.empty()) s.max_vp = *std::max_element(vp.begin(), vp.end());
    return s;
}

inline bool single_peaked_by_triples(const PreferenceProfile& p) {
    const int n = p.size();
    for (Voter i = 1; i <= n; ++i) {
        for (Voter j = 1; j <= n; ++j) {
            for (Voter k = 1; k <= n; ++k) {
                bool between = (i < j && j < k) || (k < j && j < i);
                if (between && p.rank(i, k) < p.rank(i, j)) return false;
            }
        }
    }
    return true;
}

// Interior vertex sets of all s-t paths.
inline Sets path_sets(const ldeq::AuxiliaryDigraph& aux) {
    Sets out;
    std::vector<Voter> path;
    std::function<void(int)> walk = [&](int v) {
        if (v == aux.sink()) {
            out.push_back(path);
            return;
        }
        for (const auto& a : aux.out(v)) {
            if (a.head != aux.sink()) path.push_back(a.head);
            walk(a.head);
            if (a.head != aux.sink()) path.pop_back();
        }
    };
    walk(aux.source());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace oracle

#endif
