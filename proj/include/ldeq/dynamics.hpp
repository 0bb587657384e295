#ifndef LDEQ_DYNAMICS_HPP
#define LDEQ_DYNAMICS_HPP

#include "ldeq/distance.hpp"
#include "ldeq/profile.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ldeq {

struct Response {
    Voter move = 0;    // new value of d(i)
    Voter outcome = 0; // resulting guru of i
};

// Outcomes i can reach with everyone else fixed: voting, abstaining, and
// every current guru other than herself.
std::vector<Voter> achievable_outcomes(const PreferenceProfile& p, const Delegation& d, Voter i);

// The ≻_i-best achievable outcome. Keeps d(i) when it already yields that
// outcome, otherwise delegates directly to the chosen guru.
Response best_response(const PreferenceProfile& p, const Delegation& d, Voter i);

// Who holds the token at steps 1, 2, ...: a repeated permutation, or a
// script that is finite or repeats from some step on.
class TokenFunction {
public:
    static TokenFunction permutation(std::vector<Voter> order);
    static TokenFunction round_robin(int n);
    // `repeat_from` (1-based) makes steps repeat_from..size cycle forever.
    static TokenFunction scripted(std::vector<Voter> sequence,
                                  std::optional<size_t> repeat_from = std::nullopt);

    Voter at(size_t t) const { return sequence_[index(t)]; }
    // Position in the underlying sequence used at step t.
    size_t index(size_t t) const;
    bool finite() const { return !repeat_from_; }
    size_t length() const { return sequence_.size(); }
    // Phase of step t within the period, or nullopt before the periodic part.
    std::optional<size_t> phase(size_t t) const;
    const std::vector<Voter>& sequence() const { return sequence_; }

private:
    std::vector<Voter> sequence_;
    std::optional<size_t> repeat_from_;
};

struct ScriptStep {
    Voter mover = 0;
    Voter move = 0;
};

struct Script {
    std::vector<ScriptStep> steps;
    std::optional<size_t> repeat_from; // 1-based step

    TokenFunction token() const;
};

enum class RuleKind {
    kBestResponse,
    kImprovedScript, // scripted moves, each checked to be an improved response
    kMoveScript,     // scripted moves taken verbatim
};

struct MoveRule {
    RuleKind kind = RuleKind::kBestResponse;
    Script script; // scripted kinds only

    static MoveRule best_response() { return {}; }
    static MoveRule improved(Script s) { return {RuleKind::kImprovedScript, std::move(s)}; }
    static MoveRule verbatim(Script s) { return {RuleKind::kMoveScript, std::move(s)}; }
};

// A scripted move that is illegal for its step.
class ScriptError : public std::runtime_error {
public:
    ScriptError(size_t step, const std::string& what)
        : std::runtime_error("step " + std::to_string(step) + ": " + what), step_(step) {}
    size_t step() const { return step_; }

private:
    size_t step_;
};

enum class DynamicsVerdict { kConverged, kCycle, kBudgetExhausted };

std::string to_string(DynamicsVerdict v);

struct DynamicsTrace {
    std::vector<Delegation> states; // states[t] = d_t, states[0] = d_0
    std::vector<Voter> movers;      // movers[t-1] held the token at step t
    std::vector<Voter> moves;       // moves[t-1] = d_t(mover)
    DynamicsVerdict verdict = DynamicsVerdict::kBudgetExhausted;
    size_t last_change = 0;         // step of the last state change, 0 if none
    size_t cycle_entry = 0;         // cycle: d_entry recurs with the same phase
    size_t period = 0;
    std::vector<size_t> round_ends; // r_1 < r_2 < ...

    size_t steps() const { return movers.size(); }
    const Delegation& final_state() const { return states.back(); }
    // 1-based round containing step t; 0 for t = 0, round_ends.size()+1 for
    // steps after the last complete round.
    size_t round_of(size_t t) const;
};

// Runs at most `budget` steps. Converged once every voter has held the
// token since the last change (or when a finite token runs out on a stable
// state); cycle when (state, token phase) repeats with changes in between.
// Throws ScriptError for illegal scripted moves or movers that disagree with
// the token.
DynamicsTrace run_dynamics(const PreferenceProfile& p, const Delegation& d0,
                           const TokenFunction& token, const MoveRule& rule, size_t budget);

// n * (n + 2) rounds of n steps.
size_t default_budget(int n);

// "t,mover,move,state,gurus,dissatisfaction,max_vp,abstentions" per step,
// t = 0 first, then a "# verdict ..." line.
std::string format_trace(const PreferenceProfile& p, const DynamicsTrace& trace);

// Lines "t,mover,move[,...]" for t = 1, 2, ... (a t = 0 line is skipped),
// optionally "repeat-from <t>". '#' starts a comment.
Script parse_script(const std::string& text);

struct ConvergenceReport {
    size_t trials = 0;
    size_t converged = 0;
    size_t cycles = 0;
    size_t exhausted = 0;
    size_t unstable_fixed_points = 0; // converged on a state that is not stable
    size_t max_round = 0;             // largest round containing t*
};

// BRD from uniformly random d0 under uniformly random permutation tokens.
// Throws std::invalid_argument unless the thresholds pass check_thresholds.
ConvergenceReport verify_brd_convergence_db(const PreferenceProfile& p,
                                            const ThresholdVector& thresholds, size_t trials,
                                            size_t budget, std::uint64_t seed);

} // namespace ldeq

#endif
