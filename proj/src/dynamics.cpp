#include "ldeq/dynamics.hpp"

#include "text.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace ldeq {

std::vector<Voter> achievable_outcomes(const PreferenceProfile& p, const Delegation& d, Voter i) {
    auto gu = resolve_gurus(p, d);
    std::vector<Voter> out;
    for (Voter g : gu.gurus) {
        if (g != i) out.push_back(g);
    }
    out.push_back(i);
    out.push_back(kAbstain);
    return out;
}

Response best_response(const PreferenceProfile& p, const Delegation& d, Voter i) {
    auto gu = resolve_gurus(p, d);
    std::vector<Voter> options;
    for (Voter g : gu.gurus) {
        if (g != i) options.push_back(g);
    }
    options.push_back(i);
    options.push_back(kAbstain);
    Voter best = p.best_of(i, options);
    if (gu.of(i) == best) return {d[i], best};
    return {best, best};
}

TokenFunction TokenFunction::permutation(std::vector<Voter> order) {
    std::vector<Voter> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (size_t k = 0; k < sorted.size(); ++k) {
        if (sorted[k] != static_cast<Voter>(k) + 1) {
            throw std::invalid_argument("token order is not a permutation of 1..n");
        }
    }
    TokenFunction t;
    t.sequence_ = std::move(order);
    t.repeat_from_ = 1;
    return t;
}

TokenFunction TokenFunction::round_robin(int n) {
    std::vector<Voter> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    return permutation(std::move(order));
}

TokenFunction TokenFunction::scripted(std::vector<Voter> sequence, std::optional<size_t> repeat_from) {
    if (repeat_from && (*repeat_from < 1 || *repeat_from > sequence.size())) {
        throw std::invalid_argument("repeat-from " + std::to_string(*repeat_from) +
                                    " outside the script");
    }
    TokenFunction t;
    t.sequence_ = std::move(sequence);
    t.repeat_from_ = repeat_from;
    return t;
}

size_t TokenFunction::index(size_t t) const {
    if (t <= sequence_.size()) return t - 1;
    if (!repeat_from_) throw std::out_of_range("finite token exhausted");
    const size_t r = *repeat_from_;
    const size_t period = sequence_.size() - r + 1;
    return r - 1 + (t - r) % period;
}

std::optional<size_t> TokenFunction::phase(size_t t) const {
    if (!repeat_from_ || t < *repeat_from_) return std::nullopt;
    const size_t period = sequence_.size() - *repeat_from_ + 1;
    return (t - *repeat_from_) % period;
}

TokenFunction Script::token() const {
    std::vector<Voter> seq;
    for (const auto& s : steps) seq.push_back(s.mover);
    return TokenFunction::scripted(std::move(seq), repeat_from);
}

std::string to_string(DynamicsVerdict v) {
    switch (v) {
    case DynamicsVerdict::kConverged: return "converged";
    case DynamicsVerdict::kCycle: return "cycle";
    case DynamicsVerdict::kBudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

size_t DynamicsTrace::round_of(size_t t) const {
    if (t == 0) return 0;
    auto it = std::lower_bound(round_ends.begin(), round_ends.end(), t);
    return static_cast<size_t>(it - round_ends.begin()) + 1;
}

size_t default_budget(int n) {
    return static_cast<size_t>(n) * static_cast<size_t>(n + 2) * static_cast<size_t>(n);
}

namespace {

Voter scripted_move(const PreferenceProfile& p, const Delegation& d, const MoveRule& rule,
                    const TokenFunction& token, size_t t, Voter mover) {
    const auto& step = rule.script.steps.at(token.index(t));
    if (step.mover != mover) {
        throw ScriptError(t, "script moves voter " + std::to_string(step.mover) +
                                 " but the token is held by " + std::to_string(mover));
    }
    const Voter m = step.move;
    if (m < 0 || m > p.size()) throw ScriptError(t, "move target " + std::to_string(m) + " out of range");
    if (rule.kind == RuleKind::kMoveScript) return m;

    const Voter before = resolve_gurus(p.size(), d).of(mover);
    if (m == d[mover]) {
        Voter best = best_response(p, d, mover).outcome;
        if (best != before) {
            throw ScriptError(t, "voter " + std::to_string(mover) +
                                     " keeps her delegation although she can improve");
        }
        return m;
    }
    Delegation next = d;
    next.set(mover, m);
    const Voter after = resolve_gurus(p.size(), next).of(mover);
    if (!p.prefers(mover, after, before)) {
        throw ScriptError(t, "voter " + std::to_string(mover) + " moves to " + std::to_string(m) +
                                 " without improving her outcome");
    }
    return m;
}

} // namespace

DynamicsTrace run_dynamics(const PreferenceProfile& p, const Delegation& d0,
                           const TokenFunction& token, const MoveRule& rule, size_t budget) {
    const int n = p.size();
    d0.validate(n);
    DynamicsTrace trace;
    trace.states.push_back(d0);
    if (n == 0) {
        trace.verdict = DynamicsVerdict::kConverged;
        return trace;
    }

    std::vector<char> since_change(static_cast<size_t>(n) + 1, 0), in_round(static_cast<size_t>(n) + 1, 0);
    int since_count = 0, round_count = 0;
    std::map<std::pair<std::vector<Voter>, size_t>, size_t> seen;
    auto remember = [&](size_t t) -> std::optional<size_t> {
        auto ph = token.phase(t + 1);
        if (!ph) return std::nullopt;
        const auto& st = trace.states[t].targets();
        auto [it, fresh] = seen.try_emplace({std::vector<Voter>(st.begin(), st.end()), *ph}, t);
        if (fresh) return std::nullopt;
        return it->second;
    };
    remember(0);

    for (size_t t = 1;; ++t) {
        if (t > budget) {
            trace.verdict = DynamicsVerdict::kBudgetExhausted;
            break;
        }
        if (token.finite() && t > token.length()) {
            trace.verdict = is_nash_stable(p, trace.final_state())
                                ? DynamicsVerdict::kConverged
                                : DynamicsVerdict::kBudgetExhausted;
            break;
        }
        const Voter i = token.at(t);
        if (i < 1 || i > n) throw ScriptError(t, "token holder " + std::to_string(i) + " out of range");
        const Delegation& d = trace.states.back();
        Voter move = rule.kind == RuleKind::kBestResponse ? best_response(p, d, i).move
                                                          : scripted_move(p, d, rule, token, t, i);
        Delegation next = d;
        next.set(i, move);
        const bool changed = next != d;
        trace.movers.push_back(i);
        trace.moves.push_back(move);
        trace.states.push_back(std::move(next));

        if (!in_round[i]) {
            in_round[i] = 1;
            if (++round_count == n) {
                trace.round_ends.push_back(t);
                std::fill(in_round.begin(), in_round.end(), 0);
                round_count = 0;
            }
        }
        if (changed) {
            trace.last_change = t;
            std::fill(since_change.begin(), since_change.end(), 0);
            since_count = 0;
        } else if (!since_change[i]) {
            since_change[i] = 1;
            if (++since_count == n) {
                trace.verdict = DynamicsVerdict::kConverged;
                break;
            }
        }
        if (auto earlier = remember(t)) {
            if (trace.last_change <= *earlier) {
                // Nothing changed over a whole token period: the state is fixed.
                trace.verdict = DynamicsVerdict::kConverged;
            } else {
                trace.verdict = DynamicsVerdict::kCycle;
                trace.cycle_entry = *earlier;
                trace.period = t - *earlier;
            }
            break;
        }
    }
    return trace;
}

std::string format_trace(const PreferenceProfile& p, const DynamicsTrace& trace) {
    std::ostringstream os;
    os << "# t,mover,move,state,gurus,dissatisfaction,max_vp,abstentions\n";
    for (size_t t = 0; t < trace.states.size(); ++t) {
        const auto& d = trace.states[t];
        os << t << ',';
        if (t == 0) os << "-,-,";
        else os << trace.movers[t - 1] << ',' << trace.moves[t - 1] << ',';
        for (Voter i = 1; i <= d.size(); ++i) os << (i > 1 ? " " : "") << d[i];
        os << ',';
        auto gu = resolve_gurus(p, d);
        if (gu.gurus.empty()) os << '-';
        for (size_t k = 0; k < gu.gurus.size(); ++k) os << (k ? " " : "") << gu.gurus[k];
        os << ',' << measure_dissatisfaction(p, d) << ',';
        auto vp = measure_max_voting_power(p, d);
        if (vp) os << *vp;
        else os << '-';
        os << ',' << measure_abstentions(p, d) << '\n';
    }
    os << "# verdict " << to_string(trace.verdict);
    switch (trace.verdict) {
    case DynamicsVerdict::kConverged:
        os << " last-change=" << trace.last_change << " round=" << trace.round_of(trace.last_change);
        break;
    case DynamicsVerdict::kCycle:
        os << " entry=" << trace.cycle_entry << " period=" << trace.period;
        break;
    case DynamicsVerdict::kBudgetExhausted:
        os << " steps=" << trace.steps();
        break;
    }
    os << '\n';
    return os.str();
}

Script parse_script(const std::string& input) {
    Script script;
    int line_no = 0;
    for (auto raw : text::split_lines(input)) {
        ++line_no;
        auto line = text::trim(text::strip_comment(raw));
        if (line.empty()) continue;
        if (line.substr(0, 11) == "repeat-from") {
            auto w = text::words(line);
            if (w.size() != 2) throw ParseError(line_no, "expected 'repeat-from <t>'");
            auto r = text::to_int(w[1], line_no, "step");
            if (r < 1) throw ParseError(line_no, "repeat-from must be at least 1");
            script.repeat_from = static_cast<size_t>(r);
            continue;
        }
        std::vector<std::string_view> fields;
        size_t start = 0;
        while (true) {
            auto comma = line.find(',', start);
            fields.push_back(text::trim(line.substr(start, comma - start)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (fields.size() < 3) throw ParseError(line_no, "expected 't,mover,move'");
        auto t = text::to_int(fields[0], line_no, "step");
        if (t == 0) continue;
        if (t != static_cast<long long>(script.steps.size()) + 1) {
            throw ParseError(line_no, "steps must be numbered 1, 2, ... in order");
        }
        ScriptStep s;
        s.mover = static_cast<Voter>(text::to_int(fields[1], line_no, "mover"));
        s.move = static_cast<Voter>(text::to_int(fields[2], line_no, "move"));
        script.steps.push_back(s);
    }
    if (script.repeat_from && *script.repeat_from > script.steps.size()) {
        throw ParseError(0, "repeat-from points past the last step");
    }
    return script;
}

ConvergenceReport verify_brd_convergence_db(const PreferenceProfile& p,
                                            const ThresholdVector& thresholds, size_t trials,
                                            size_t budget, std::uint64_t seed) {
    auto check = check_thresholds(p, thresholds);
    if (!check) throw std::invalid_argument("thresholds inconsistent with the profile");
    const int n = p.size();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Voter> target(0, n);
    ConvergenceReport report;
    std::vector<Voter> order(static_cast<size_t>(n));
    for (size_t k = 0; k < trials; ++k) {
        std::vector<Voter> d0(static_cast<size_t>(n));
        for (auto& v : d0) v = target(rng);
        std::iota(order.begin(), order.end(), 1);
        std::shuffle(order.begin(), order.end(), rng);
        auto trace = run_dynamics(p, Delegation(std::move(d0)), TokenFunction::permutation(order),
                                  MoveRule::best_response(), budget);
        ++report.trials;
        switch (trace.verdict) {
        case DynamicsVerdict::kConverged:
            ++report.converged;
            if (!is_nash_stable(p, trace.final_state())) ++report.unstable_fixed_points;
            report.max_round = std::max(report.max_round, trace.round_of(trace.last_change));
            break;
        case DynamicsVerdict::kCycle: ++report.cycles; break;
        case DynamicsVerdict::kBudgetExhausted: ++report.exhausted; break;
        }
    }
    return report;
}

} // namespace ldeq
