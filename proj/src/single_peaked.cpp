#include "ldeq/single_peaked.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ldeq {

namespace {

constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max() / 4;

// Least (j, k) with j strictly between i and k and k ranked above j.
SinglePeakedVerdict least_violation(const PreferenceProfile& p, Voter i) {
    const int n = p.size();
    for (Voter j = 1; j <= n; ++j) {
        for (Voter k = 1; k <= n; ++k) {
            bool between = (i < j && j < k) || (k < j && j < i);
            if (between && p.prefers(i, k, j)) return {false, i, j, k};
        }
    }
    return {};
}

} // namespace

SinglePeakedVerdict check_single_peaked(const PreferenceProfile& p) {
    const int n = p.size();
    for (Voter i = 1; i <= n; ++i) {
        bool ok = true;
        for (Voter j = i + 1; j < n && ok; ++j) ok = p.prefers(i, j, j + 1);
        for (Voter j = i - 1; j > 1 && ok; --j) ok = p.prefers(i, j, j - 1);
        if (!ok) return least_violation(p, i);
    }
    return {};
}

AxisProfile::AxisProfile(PreferenceProfile p) : profile_(std::move(p)) {
    auto verdict = check_single_peaked(profile_);
    if (!verdict) {
        throw std::invalid_argument("profile is not single-peaked: voter " +
                                    std::to_string(verdict.i) + " ranks " +
                                    std::to_string(verdict.k) + " above " +
                                    std::to_string(verdict.j));
    }
    const int n = profile_.size();
    left_.assign(static_cast<size_t>(n) + 2, 0);
    right_.assign(static_cast<size_t>(n) + 2, 0);
    for (Voter i = 1; i <= n; ++i) {
        Voter lo = i, hi = i;
        for (Voter j : profile_.acceptable(i)) {
            if (profile_.is_abstainer(j)) continue;
            lo = std::min(lo, j);
            hi = std::max(hi, j);
        }
        left_[static_cast<size_t>(i)] = lo;
        right_[static_cast<size_t>(i)] = hi;
    }
}

IntervalCatchForm interval_catch_form(const AxisProfile& ap) {
    const auto& p = ap.profile();
    const int n = p.size();
    IntervalCatchForm form;
    form.compact.assign(static_cast<size_t>(n) + 1, 0);
    for (Voter v = 1; v <= n; ++v) {
        if (p.is_abstainer(v)) continue;
        form.original.push_back(v);
        form.compact[v] = static_cast<Voter>(form.original.size());
    }
    const int m = form.size();
    for (Voter c = 1; c <= m; ++c) {
        Voter v = form.original[static_cast<size_t>(c - 1)];
        Voter l = form.compact[ap.left(v)];
        Voter r = form.compact[ap.right(v)];
        for (Voter x = l; x <= r; ++x) {
            if (x == c) continue;
            if (!p.accepts(v, form.original[static_cast<size_t>(x - 1)])) {
                throw std::logic_error("out-neighbourhood of voter " + std::to_string(v) +
                                       " is not an interval");
            }
        }
        form.l.push_back(l);
        form.r.push_back(r);
    }
    return form;
}

const AuxArc* AuxiliaryDigraph::find(int tail, int head) const {
    for (const auto& a : out(tail)) {
        if (a.head == head) return &a;
    }
    return nullptr;
}

std::vector<std::pair<int, int>> AuxiliaryDigraph::arc_list() const {
    std::vector<std::pair<int, int>> arcs;
    for (int v = 0; v <= sink(); ++v) {
        for (const auto& a : out(v)) arcs.emplace_back(a.tail, a.head);
    }
    return arcs;
}

size_t AuxiliaryDigraph::arc_count() const {
    size_t c = 0;
    for (const auto& o : out_) c += o.size();
    return c;
}

namespace {

void weigh(const PreferenceProfile& p, AuxArc& arc, int n) {
    const int sink = n + 1;
    const Voter lo = arc.tail == 0 ? 1 : arc.tail;
    const Voter hi = arc.head == sink ? n : arc.head - 1;
    Voter options[3];
    int count = 0;
    options[count++] = kAbstain;
    if (arc.tail != 0) options[count++] = arc.tail;
    if (arc.head != sink) options[count++] = arc.head;
    const std::span<const Voter> opts(options, static_cast<size_t>(count));
    for (Voter i = lo; i <= hi; ++i) {
        if (i == arc.tail) {
            arc.dissatisfaction += p.rank(i, i) - 1;
            continue;
        }
        Voter pick = p.best_of(i, opts);
        arc.dissatisfaction += p.rank(i, pick) - 1;
        if (pick == kAbstain) ++arc.abstentions;
        else if (pick == arc.tail) ++arc.to_tail;
        else ++arc.to_head;
    }
}

} // namespace

AuxiliaryDigraph build_auxiliary(const AxisProfile& ap, bool with_weights) {
    const auto& p = ap.profile();
    const int n = p.size();
    const int sink = n + 1;
    AuxiliaryDigraph aux(n);
    aux.weighted_ = with_weights;
    auto add = [&](int tail, int head) {
        AuxArc a;
        a.tail = tail;
        a.head = head;
        if (with_weights) weigh(p, a, n);
        aux.out_[static_cast<size_t>(tail)].push_back(a);
    };

    // s -> j iff every non-abstainer before j accepts j.
    Voter reach = std::numeric_limits<Voter>::max();
    for (Voter j = 1; j <= n; ++j) {
        if (p.is_abstainer(j)) continue;
        if (j <= reach) add(0, j);
        reach = std::min(reach, ap.right(j));
    }

    // i -> j iff {i, j} is independent and absorbs every non-abstainer
    // between them; `bound` is the smallest right end among voters in between
    // that do not accept i.
    for (Voter i = 1; i <= n; ++i) {
        if (p.is_abstainer(i)) continue;
        Voter bound = std::numeric_limits<Voter>::max();
        for (Voter j = i + 1; j <= n; ++j) {
            if (p.is_abstainer(j)) continue;
            const bool j_accepts_i = p.accepts(j, i);
            if (!j_accepts_i && !p.accepts(i, j) && j <= bound) add(i, j);
            if (!j_accepts_i) bound = std::min(bound, ap.right(j));
            if (bound < j) break; // no later head can satisfy j <= bound
        }
    }

    // i -> t iff every non-abstainer after i accepts i.
    std::vector<char> to_sink(static_cast<size_t>(n) + 1, 0);
    Voter reach_left = 0;
    for (Voter i = n; i >= 1; --i) {
        if (p.is_abstainer(i)) continue;
        if (i >= reach_left) to_sink[static_cast<size_t>(i)] = 1;
        reach_left = std::max(reach_left, ap.left(i));
    }
    for (Voter i = 1; i <= n; ++i) {
        if (to_sink[static_cast<size_t>(i)]) add(i, sink);
    }
    return aux;
}

std::string to_dot(const AuxiliaryDigraph& aux) {
    std::ostringstream os;
    auto name = [&](int v) -> std::string {
        if (v == aux.source()) return "s";
        if (v == aux.sink()) return "t";
        return std::to_string(v);
    };
    os << "digraph auxiliary {\n  rankdir=LR;\n";
    for (int v = 0; v <= aux.sink(); ++v) {
        for (const auto& a : aux.out(v)) {
            os << "  " << name(a.tail) << " -> " << name(a.head);
            if (aux.weighted()) {
                os << " [label=\"dis=" << a.dissatisfaction << " abst=" << a.abstentions
                   << " tail=" << a.to_tail << " head=" << a.to_head << "\"]";
            }
            os << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

Delegation sp_delegation(const AxisProfile& ap, const std::vector<Voter>& kernel) {
    const auto& p = ap.profile();
    const int n = p.size();
    std::vector<char> member(static_cast<size_t>(n) + 2, 0);
    for (Voter k : kernel) {
        if (!p.contains(k) || p.is_abstainer(k)) {
            throw std::invalid_argument("voter " + std::to_string(k) + " cannot be a guru");
        }
        member[static_cast<size_t>(k)] = 1;
    }
    std::vector<Voter> prev(static_cast<size_t>(n) + 2, 0), next(static_cast<size_t>(n) + 2, 0);
    for (Voter i = 1, last = 0; i <= n; ++i) {
        prev[static_cast<size_t>(i)] = last;
        if (member[static_cast<size_t>(i)]) last = i;
    }
    for (Voter i = n, last = 0; i >= 1; --i) {
        next[static_cast<size_t>(i)] = last;
        if (member[static_cast<size_t>(i)]) last = i;
    }
    std::vector<Voter> targets(static_cast<size_t>(n), kAbstain);
    for (Voter i = 1; i <= n; ++i) {
        if (member[static_cast<size_t>(i)]) {
            targets[static_cast<size_t>(i - 1)] = i;
            continue;
        }
        Voter options[3] = {kAbstain, 0, 0};
        int count = 1;
        if (prev[static_cast<size_t>(i)]) options[count++] = prev[static_cast<size_t>(i)];
        if (next[static_cast<size_t>(i)]) options[count++] = next[static_cast<size_t>(i)];
        targets[static_cast<size_t>(i - 1)] =
            p.best_of(i, std::span<const Voter>(options, static_cast<size_t>(count)));
    }
    return Delegation(std::move(targets));
}

namespace {

std::vector<Voter> interior(const std::vector<int>& path, int sink) {
    std::vector<Voter> k;
    for (int v : path) {
        if (v != 0 && v != sink) k.push_back(v);
    }
    return k;
}

// Arcs of v in lexicographic preference: the arc to t first (it closes the
// guru list), then heads ascending.
template <class Visit>
void in_lex_order(const AuxiliaryDigraph& aux, int v, Visit visit) {
    const auto& arcs = aux.out(v);
    if (!arcs.empty() && arcs.back().head == aux.sink()) {
        if (visit(arcs.back())) return;
    }
    for (const auto& a : arcs) {
        if (a.head == aux.sink()) continue;
        if (visit(a)) return;
    }
}

// Shortest s-t path under an additive arc weight; among shortest paths the
// one with the lexicographically smallest guru list.
template <class Weight>
std::vector<int> lexmin_shortest_path(const AuxiliaryDigraph& aux, Weight weight,
                                      std::int64_t& value) {
    const int sink = aux.sink();
    std::vector<std::int64_t> to_go(static_cast<size_t>(sink) + 1, kUnreachable);
    to_go[static_cast<size_t>(sink)] = 0;
    for (int v = sink - 1; v >= 0; --v) {
        for (const auto& a : aux.out(v)) {
            if (to_go[static_cast<size_t>(a.head)] == kUnreachable) continue;
            to_go[static_cast<size_t>(v)] = std::min(to_go[static_cast<size_t>(v)],
                                                     weight(a) + to_go[static_cast<size_t>(a.head)]);
        }
    }
    value = to_go[0];
    if (value == kUnreachable) return {};
    std::vector<int> path{0};
    int v = 0;
    while (v != sink) {
        int chosen = -1;
        in_lex_order(aux, v, [&](const AuxArc& a) {
            auto rest = to_go[static_cast<size_t>(a.head)];
            if (rest != kUnreachable && weight(a) + rest == to_go[static_cast<size_t>(v)]) {
                chosen = a.head;
                return true;
            }
            return false;
        });
        if (chosen < 0) throw std::logic_error("shortest path reconstruction failed");
        path.push_back(chosen);
        v = chosen;
    }
    return path;
}

bool has_candidates(const PreferenceProfile& p) {
    return static_cast<int>(p.abstainers().size()) < p.size();
}

SpSolution degenerate(const AxisProfile& ap) {
    SpSolution s;
    s.delegation = Delegation::all_abstain(ap.size());
    s.degenerate = true;
    return s;
}

SpSolution realise(const AxisProfile& ap, std::vector<Voter> kernel) {
    SpSolution s;
    s.delegation = sp_delegation(ap, kernel);
    s.gurus = std::move(kernel);
    return s;
}

void require_weights(const AuxiliaryDigraph& aux) {
    if (!aux.weighted()) throw std::logic_error("auxiliary digraph built without weights");
}

} // namespace

SpSolution solve_equilibrium_sp(const AxisProfile& ap) {
    if (!has_candidates(ap.profile())) return degenerate(ap);
    auto aux = build_auxiliary(ap, false);
    std::int64_t value = 0;
    auto path = lexmin_shortest_path(aux, [](const AuxArc&) { return std::int64_t{0}; }, value);
    if (path.empty()) throw std::logic_error("single-peaked profile without an s-t path");
    return realise(ap, interior(path, aux.sink()));
}

MembershipAnswer memb_sp(const AxisProfile& ap, Voter i) {
    const auto& p = ap.profile();
    if (!p.contains(i)) throw std::invalid_argument("voter " + std::to_string(i) + " out of range");
    MembershipAnswer ans;
    if (p.is_abstainer(i)) {
        ans.abstainer = true;
        return ans;
    }
    auto aux = build_auxiliary(ap, false);
    const int sink = aux.sink();
    // Which vertices reach t, and which reach i.
    std::vector<char> to_sink(static_cast<size_t>(sink) + 1, 0), to_i(static_cast<size_t>(sink) + 1, 0);
    to_sink[static_cast<size_t>(sink)] = 1;
    to_i[static_cast<size_t>(i)] = 1;
    for (int v = sink - 1; v >= 0; --v) {
        for (const auto& a : aux.out(v)) {
            if (to_sink[static_cast<size_t>(a.head)]) to_sink[static_cast<size_t>(v)] = 1;
            if (a.head <= i && to_i[static_cast<size_t>(a.head)]) to_i[static_cast<size_t>(v)] = 1;
        }
    }
    if (!to_i[0] || !to_sink[static_cast<size_t>(i)]) return ans;

    std::vector<int> path{0};
    int v = 0;
    while (v != i) {
        for (const auto& a : aux.out(v)) {
            if (a.head <= i && to_i[static_cast<size_t>(a.head)]) {
                v = a.head;
                break;
            }
        }
        path.push_back(v);
    }
    while (v != sink) {
        int chosen = -1;
        in_lex_order(aux, v, [&](const AuxArc& a) {
            if (!to_sink[static_cast<size_t>(a.head)]) return false;
            chosen = a.head;
            return true;
        });
        v = chosen;
        path.push_back(v);
    }
    ans.member = true;
    ans.witness = realise(ap, interior(path, sink));
    return ans;
}

SpSolution mindis_sp(const AxisProfile& ap) {
    if (!has_candidates(ap.profile())) {
        auto s = degenerate(ap);
        s.value = measure_dissatisfaction(ap.profile(), s.delegation);
        return s;
    }
    auto aux = build_auxiliary(ap, true);
    require_weights(aux);
    std::int64_t value = 0;
    auto path = lexmin_shortest_path(aux, [](const AuxArc& a) { return a.dissatisfaction; }, value);
    if (path.empty()) throw std::logic_error("single-peaked profile without an s-t path");
    auto s = realise(ap, interior(path, aux.sink()));
    s.value = value;
    return s;
}

SpSolution minabst_sp(const AxisProfile& ap) {
    if (!has_candidates(ap.profile())) {
        auto s = degenerate(ap);
        s.value = ap.size();
        return s;
    }
    auto aux = build_auxiliary(ap, true);
    std::int64_t value = 0;
    auto path = lexmin_shortest_path(
        aux, [](const AuxArc& a) { return static_cast<std::int64_t>(a.abstentions); }, value);
    if (path.empty()) throw std::logic_error("single-peaked profile without an s-t path");
    auto s = realise(ap, interior(path, aux.sink()));
    s.value = value;
    return s;
}

SpSolution minmaxvp_sp(const AxisProfile& ap) {
    if (!has_candidates(ap.profile())) return degenerate(ap);
    auto aux = build_auxiliary(ap, true);
    const int n = ap.size();
    const int sink = aux.sink();
    const size_t width = static_cast<size_t>(n) + 1;
    constexpr int kInf = std::numeric_limits<int>::max() / 4;

    // best[v][w]: smallest achievable maximum voting power over the gurus from
    // v onwards, given that w voters on v's left delegate to v.
    std::vector<int> best(static_cast<size_t>(sink + 1) * width, kInf);
    auto at = [&](int v, int w) -> int& { return best[static_cast<size_t>(v) * width + w]; };
    auto beyond = [&](const AuxArc& a) -> int {
        return a.head == sink ? 0 : at(a.head, a.to_head);
    };
    auto through = [&](const AuxArc& a, int w) -> int {
        int rest = beyond(a);
        if (rest >= kInf) return kInf;
        if (a.tail == 0) return rest;
        return std::max(w + a.to_tail + 1, rest);
    };
    for (int v = n; v >= 1; --v) {
        if (aux.out(v).empty()) continue;
        for (int w = 0; w <= n; ++w) {
            int m = kInf;
            for (const auto& a : aux.out(v)) m = std::min(m, through(a, w));
            at(v, w) = m;
        }
    }
    int optimum = kInf;
    for (const auto& a : aux.out(0)) optimum = std::min(optimum, through(a, 0));
    if (optimum >= kInf) throw std::logic_error("single-peaked profile without an s-t path");

    std::vector<int> path{0};
    int v = 0, w = 0;
    while (v != sink) {
        const AuxArc* chosen = nullptr;
        in_lex_order(aux, v, [&](const AuxArc& a) {
            if (through(a, w) > optimum) return false;
            chosen = &a;
            return true;
        });
        if (!chosen) throw std::logic_error("voting-power path reconstruction failed");
        v = chosen->head;
        w = chosen->to_head;
        path.push_back(v);
    }
    auto s = realise(ap, interior(path, sink));
    s.value = optimum;
    return s;
}

} // namespace ldeq
