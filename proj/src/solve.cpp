#include "ldeq/solve.hpp"

#include "ldeq/single_peaked.hpp"
#include "ldeq/symmetric.hpp"

#include <json.hpp>

#include <algorithm>

namespace ldeq {

ProblemSpec parse_problem(const std::string& name) {
    if (name == "eq") return {Problem::kEquilibrium, 0};
    if (name == "mindis") return {Problem::kMinDissatisfaction, 0};
    if (name == "minmaxvp") return {Problem::kMinMaxVotingPower, 0};
    if (name == "minabst") return {Problem::kMinAbstention, 0};
    if (name.rfind("memb:", 0) == 0) {
        const std::string rest = name.substr(5);
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos) {
            throw std::invalid_argument("expected memb:<voter>, got '" + name + "'");
        }
        return {Problem::kMembership, std::stoi(rest)};
    }
    throw std::invalid_argument("unknown problem '" + name + "'");
}

std::string to_string(const ProblemSpec& spec) {
    switch (spec.problem) {
    case Problem::kEquilibrium: return "eq";
    case Problem::kMembership: return "memb:" + std::to_string(spec.voter);
    case Problem::kMinDissatisfaction: return "mindis";
    case Problem::kMinMaxVotingPower: return "minmaxvp";
    case Problem::kMinAbstention: return "minabst";
    }
    return "?";
}

ClassChoice parse_class_choice(const std::string& name) {
    if (name == "auto") return ClassChoice::kAuto;
    if (name == "sp") return ClassChoice::kSinglePeaked;
    if (name == "sym") return ClassChoice::kSymmetric;
    if (name == "db") return ClassChoice::kDistance;
    if (name == "generic") return ClassChoice::kGeneric;
    throw std::invalid_argument("unknown class '" + name + "'");
}

std::string to_string(ClassChoice c) {
    switch (c) {
    case ClassChoice::kAuto: return "auto";
    case ClassChoice::kSinglePeaked: return "sp";
    case ClassChoice::kSymmetric: return "sym";
    case ClassChoice::kDistance: return "db";
    case ClassChoice::kGeneric: return "generic";
    }
    return "?";
}

namespace {

std::string hardness_note(ClassChoice c, const ProblemSpec& spec) {
    const std::string prob = to_string(spec);
    switch (c) {
    case ClassChoice::kSymmetric:
        return prob + " is NP-hard on symmetric profiles";
    case ClassChoice::kDistance:
        return prob + " is NP-hard on distance-based profiles";
    default:
        return "equilibrium existence is NP-complete on unrestricted profiles";
    }
}

std::optional<std::int64_t> score(const PreferenceProfile& p, const Delegation& d, Problem problem) {
    switch (problem) {
    case Problem::kMinDissatisfaction: return measure_dissatisfaction(p, d);
    case Problem::kMinMaxVotingPower: {
        auto vp = measure_max_voting_power(p, d);
        if (!vp) return std::nullopt;
        return *vp;
    }
    case Problem::kMinAbstention: return measure_abstentions(p, d);
    default: return std::nullopt;
    }
}

bool is_optimisation(Problem p) {
    return p == Problem::kMinDissatisfaction || p == Problem::kMinMaxVotingPower ||
           p == Problem::kMinAbstention;
}

SolveResult from_sp(const SpSolution& s, const ProblemSpec& spec) {
    SolveResult r;
    r.problem = spec;
    r.used = ClassChoice::kSinglePeaked;
    r.method = "auxiliary-digraph";
    r.delegation = s.delegation;
    r.gurus = s.gurus;
    r.value = s.value;
    r.degenerate = s.degenerate;
    if (s.degenerate) r.diagnostics.push_back("every voter abstains; no guru is possible");
    return r;
}

void require_voter(const PreferenceProfile& p, Voter i) {
    if (!p.contains(i)) throw std::invalid_argument("voter " + std::to_string(i) + " out of range");
}

SolveResult negative_abstainer(const ProblemSpec& spec, ClassChoice used) {
    SolveResult r;
    r.problem = spec;
    r.used = used;
    r.method = "abstainer";
    r.status = SolveStatus::kNegative;
    r.diagnostics.push_back("voter " + std::to_string(spec.voter) + " abstains and is never a guru");
    return r;
}

} // namespace

SolveResult solve_exhaustive(const PreferenceProfile& p, const ProblemSpec& spec, int vertex_bound) {
    SolveResult r;
    r.problem = spec;
    r.used = ClassChoice::kGeneric;
    r.method = "exhaustive";
    auto kernels = enumerate_kernels(build_digraph(p), std::nullopt, vertex_bound).kernels;
    r.diagnostics.push_back(std::to_string(kernels.size()) + " equilibrium guru sets");
    const std::vector<Voter>* chosen = nullptr;
    std::optional<std::int64_t> best;
    for (const auto& k : kernels) {
        if (spec.problem == Problem::kMembership) {
            if (std::binary_search(k.begin(), k.end(), spec.voter)) {
                chosen = &k;
                break;
            }
            continue;
        }
        if (!is_optimisation(spec.problem)) {
            chosen = &k;
            break;
        }
        auto v = score(p, kernel_to_delegation(p, k), spec.problem);
        // A guru-less equilibrium has no maximum voting power; any other beats it.
        bool better = !chosen || (v && (!best || *v < *best));
        if (better) {
            chosen = &k;
            best = v;
        }
    }
    if (!chosen) {
        r.status = SolveStatus::kNegative;
        return r;
    }
    r.gurus = *chosen;
    r.delegation = kernel_to_delegation(p, r.gurus);
    if (is_optimisation(spec.problem)) r.value = score(p, *r.delegation, spec.problem);
    r.degenerate = r.gurus.empty();
    return r;
}

SolveResult solve(const SolveRequest& req) {
    const auto& p = req.profile;
    const auto& spec = req.problem;
    if (spec.problem == Problem::kMembership) require_voter(p, spec.voter);
    if (spec.problem == Problem::kMinDissatisfaction && req.partial && !req.assume_completion) {
        throw ClassMismatch("mindis needs full rankings; the profile was given in partial form "
                            "(pass --assume-completion to use the completed ranks)");
    }

    std::optional<DbInstance> model = req.model;
    if (model) {
        auto check = check_thresholds(p, model->model, model->thresholds);
        if (!check) {
            throw ClassMismatch("distance model disagrees with the profile: voter " + std::to_string(check.i) +
                                " and voter " + std::to_string(check.j));
        }
    }

    ClassChoice used = req.choice;
    if (used == ClassChoice::kAuto) {
        if (check_single_peaked(p)) used = ClassChoice::kSinglePeaked;
        else if (check_symmetric(p)) used = ClassChoice::kSymmetric;
        else if (model) used = ClassChoice::kDistance;
        else used = ClassChoice::kGeneric;
    }

    auto oracle = [&](ClassChoice cls) {
        const int candidates = static_cast<int>(p.non_abstainers().size());
        if (candidates > req.oracle_bound) {
            throw SizeGuardError(hardness_note(cls, spec) + "; refusing exhaustive search over " +
                                 std::to_string(candidates) + " candidate gurus (bound " +
                                 std::to_string(req.oracle_bound) + ")");
        }
        auto r = solve_exhaustive(p, spec, req.oracle_bound);
        r.used = cls;
        return r;
    };

    switch (used) {
    case ClassChoice::kSinglePeaked: {
        auto verdict = check_single_peaked(p);
        if (!verdict) {
            throw ClassMismatch("profile is not single-peaked: voter " + std::to_string(verdict.i) + " ranks " +
                                std::to_string(verdict.k) + " above " + std::to_string(verdict.j));
        }
        AxisProfile ap(p);
        switch (spec.problem) {
        case Problem::kEquilibrium: return from_sp(solve_equilibrium_sp(ap), spec);
        case Problem::kMinDissatisfaction: return from_sp(mindis_sp(ap), spec);
        case Problem::kMinMaxVotingPower: return from_sp(minmaxvp_sp(ap), spec);
        case Problem::kMinAbstention: return from_sp(minabst_sp(ap), spec);
        case Problem::kMembership: {
            auto ans = memb_sp(ap, spec.voter);
            if (ans.abstainer) return negative_abstainer(spec, used);
            if (!ans.member) {
                SolveResult r;
                r.problem = spec;
                r.used = used;
                r.method = "auxiliary-digraph";
                r.status = SolveStatus::kNegative;
                return r;
            }
            return from_sp(*ans.witness, spec);
        }
        }
        break;
    }
    case ClassChoice::kSymmetric: {
        auto report = check_symmetric(p);
        if (!report) {
            throw ClassMismatch("profile is not symmetric: voter " + std::to_string(report.witness->first) +
                                " accepts " + std::to_string(report.witness->second) + " but not conversely");
        }
        if (spec.problem == Problem::kEquilibrium || spec.problem == Problem::kMembership) {
            if (spec.problem == Problem::kMembership && p.is_abstainer(spec.voter)) {
                return negative_abstainer(spec, used);
            }
            auto s = spec.problem == Problem::kEquilibrium ? solve_equilibrium_sym(p) : memb_sym(p, spec.voter);
            SolveResult r;
            r.problem = spec;
            r.used = used;
            r.method = "greedy-independent-set";
            r.delegation = s.delegation;
            r.gurus = s.gurus;
            r.degenerate = s.gurus.empty();
            return r;
        }
        return oracle(used);
    }
    case ClassChoice::kDistance: {
        if (!model) throw ClassMismatch("class db needs a distance model (--model)");
        if (spec.problem == Problem::kEquilibrium) {
            auto s = solve_equilibrium_db(p, model->thresholds);
            SolveResult r;
            r.problem = spec;
            r.used = used;
            r.method = "greedy-threshold";
            r.delegation = s.delegation;
            r.gurus = s.gurus;
            r.degenerate = s.gurus.empty();
            return r;
        }
        if (spec.problem == Problem::kMembership && p.is_abstainer(spec.voter)) {
            return negative_abstainer(spec, used);
        }
        return oracle(used);
    }
    case ClassChoice::kGeneric:
    case ClassChoice::kAuto:
        if (spec.problem == Problem::kMembership && p.is_abstainer(spec.voter)) {
            return negative_abstainer(spec, ClassChoice::kGeneric);
        }
        return oracle(ClassChoice::kGeneric);
    }
    throw std::logic_error("unhandled class");
}

std::string result_json(const PreferenceProfile& p, const SolveResult& r) {
    nlohmann::ordered_json doc;
    doc["problem"] = to_string(r.problem);
    doc["profile_digest"] = profile_digest(p);
    doc["class"] = to_string(r.used);
    doc["method"] = r.method;
    doc["status"] = r.status == SolveStatus::kSolved ? "solved" : "negative";
    if (r.value) doc["value"] = *r.value;
    else doc["value"] = nullptr;
    if (r.delegation) {
        nlohmann::ordered_json map = nlohmann::ordered_json::object();
        for (Voter i = 1; i <= r.delegation->size(); ++i) map[std::to_string(i)] = (*r.delegation)[i];
        doc["delegation"] = map;
        doc["stable"] = static_cast<bool>(is_nash_stable(p, *r.delegation));
    } else {
        doc["delegation"] = nullptr;
    }
    doc["gurus"] = r.gurus;
    doc["degenerate"] = r.degenerate;
    doc["diagnostics"] = r.diagnostics;
    return doc.dump(2) + "\n";
}

} // namespace ldeq
