#ifndef LDEQ_GADGETS_HPP
#define LDEQ_GADGETS_HPP

#include "ldeq/digraph.hpp"
#include "ldeq/distance.hpp"
#include "ldeq/profile.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ldeq {

// Literal +v is variable v, -v its negation.
struct CnfInstance {
    int variables = 0;
    std::vector<std::array<int, 3>> clauses;

    int clause_count() const { return static_cast<int>(clauses.size()); }
    bool operator==(const CnfInstance&) const = default;
};

// DIMACS: "c" comment lines, a "p cnf <vars> <clauses>" header, then clauses
// of exactly three non-zero literals, each terminated by 0. Throws ParseError
// with the offending line.
CnfInstance parse_cnf(const std::string& text);
std::string format_cnf(const CnfInstance& inst);

inline constexpr int kSatVariableBound = 24;

struct SatResult {
    bool satisfiable = false;
    std::vector<bool> assignment; // assignment[v-1] for variable v
};

// Tries all assignments. Throws SizeGuardError above kSatVariableBound.
SatResult brute_force_sat(const CnfInstance& inst);

enum class RoleKind { kLiteral, kClause, kHub, kClique, kPendant, kConnector, kQuery };

struct Role {
    RoleKind kind = RoleKind::kLiteral;
    int index = 0;         // variable, clause or clique index (1-based); 0 for the hub
    bool positive = true;  // literals only

    std::string label() const; // "x3", "~x3", "c2", "hub", "k4", "p4", "vt", "vq"
};

// Voter layout shared by every construction: the literal voters of variable
// i are 2i-1 (positive) and 2i (negative), clause j is 2n_u + j, and any
// construction-specific voters follow.
Voter literal_voter(int literal);
Voter clause_voter(const CnfInstance& inst, int clause);

struct GucGadget {
    AcceptabilityDigraph graph;
    std::vector<Role> roles; // roles[v-1]
};

// Symmetric digraph: each literal pair, and each clause to its literals.
GucGadget build_guc(const CnfInstance& inst);

enum class GadgetKind { kGuc, kMinabst, kMindis, kMinmaxvp, kMemb };

std::string to_string(GadgetKind kind);
GadgetKind parse_gadget_kind(const std::string& name);

struct GadgetProfile {
    GadgetKind kind = GadgetKind::kMinabst;
    PreferenceProfile profile;
    std::vector<Role> roles;        // roles[v-1]
    std::optional<DbInstance> model; // memb only
    Voter query = 0;                // memb: the voter whose membership decides
    std::int64_t bound = 0;         // mindis: 2k; minmaxvp: n_c + 3
    int hub_size = 0;               // mindis: k
};

// Clause voters abstain below their literals; literal voters accept their
// opposite literal and their clauses, then vote.
GadgetProfile build_minabst_gadget(const CnfInstance& inst);
// Adds a k-clique; k defaults to 3n_c + n_u + n_u*n_c. Abstention is last
// for everyone.
GadgetProfile build_mindis_gadget(const CnfInstance& inst, std::optional<int> k = std::nullopt);
// Adds an (n_c+2)-clique joined to every clause and one pendant per clique
// voter.
GadgetProfile build_minmaxvp_gadget(const CnfInstance& inst);
// Hop distances on G_{U,C} plus a connector joined to the query voter and
// every clause; thresholds 1, except 2 for the query voter.
GadgetProfile build_memb_gadget(const CnfInstance& inst);

GadgetProfile build_gadget(const CnfInstance& inst, GadgetKind kind);

// "# role <voter> <label>" lines.
std::string format_roles(const std::vector<Role>& roles);

struct ReductionReport {
    GadgetKind kind = GadgetKind::kGuc;
    SatResult sat;
    bool gadget_side = false;
    std::optional<std::vector<Voter>> witness; // kernel realising the gadget side
    bool agree = false;
    // mindis: smallest dissatisfaction over all equilibria, with the
    // verdicts at both candidate thresholds (2k and 2k-1).
    std::optional<std::int64_t> optimum;
    bool agree_at_bound = false;
    bool agree_below_bound = false;
    size_t kernels = 0;
};

// Both sides of the equivalence. Throws SizeGuardError when the gadget has
// more than `vertex_bound` voters.
ReductionReport verify_reduction(const CnfInstance& inst, GadgetKind kind,
                                 int vertex_bound = kDefaultKernelBound);

} // namespace ldeq

#endif
