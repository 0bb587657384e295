#ifndef LDEQ_SOLVE_HPP
#define LDEQ_SOLVE_HPP

#include "ldeq/digraph.hpp"
#include "ldeq/distance.hpp"
#include "ldeq/io.hpp"
#include "ldeq/profile.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ldeq {

enum class Problem { kEquilibrium, kMembership, kMinDissatisfaction, kMinMaxVotingPower, kMinAbstention };

struct ProblemSpec {
    Problem problem = Problem::kEquilibrium;
    Voter voter = 0; // membership only
};

// "eq", "memb:<i>", "mindis", "minmaxvp", "minabst".
ProblemSpec parse_problem(const std::string& name);
std::string to_string(const ProblemSpec& spec);

enum class ClassChoice { kAuto, kSinglePeaked, kSymmetric, kDistance, kGeneric };

ClassChoice parse_class_choice(const std::string& name);
std::string to_string(ClassChoice c);

// The profile does not belong to the requested class, or a request cannot be
// honoured for this input.
class ClassMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct SolveRequest {
    PreferenceProfile profile;
    ClassChoice choice = ClassChoice::kAuto;
    ProblemSpec problem;
    std::optional<DbInstance> model; // distance sidecar
    bool partial = false;            // profile came from partial lines
    bool assume_completion = false;  // allow rank-based objectives on partial input
    int oracle_bound = kDefaultKernelBound;
};

enum class SolveStatus {
    kSolved,
    kNegative, // no equilibrium, or the voter is in none
};

struct SolveResult {
    ProblemSpec problem;
    ClassChoice used = ClassChoice::kGeneric;
    std::string method; // "auxiliary-digraph", "greedy-independent-set", "greedy-threshold", "exhaustive"
    SolveStatus status = SolveStatus::kSolved;
    std::optional<Delegation> delegation;
    std::vector<Voter> gurus;
    std::optional<std::int64_t> value;
    bool degenerate = false;
    std::vector<std::string> diagnostics;
};

// Polynomial solvers where the class admits one; the exhaustive kernel
// search otherwise, refused with SizeGuardError above `oracle_bound`
// candidate gurus.
SolveResult solve(const SolveRequest& req);

// The oracle on its own: kernels of the acceptability digraph, scored by the
// problem's measure; ties go to the lexicographically first kernel.
SolveResult solve_exhaustive(const PreferenceProfile& p, const ProblemSpec& problem,
                             int vertex_bound = kDefaultKernelBound);

// JSON result document (stable key order).
std::string result_json(const PreferenceProfile& p, const SolveResult& r);

} // namespace ldeq

#endif
