// Command-line front end. Exit codes: 0 success, 1 negative answer (unstable,
// no solution, cycle), 2 input error, 3 size-guard refusal, 4 dynamics budget
// exhausted.

#include "ldeq/digraph.hpp"
#include "ldeq/distance.hpp"
#include "ldeq/dynamics.hpp"
#include "ldeq/gadgets.hpp"
#include "ldeq/generate.hpp"
#include "ldeq/io.hpp"
#include "ldeq/single_peaked.hpp"
#include "ldeq/solve.hpp"
#include "ldeq/symmetric.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

namespace {

using namespace ldeq;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitSizeGuard = 3;
constexpr int kExitBudget = 4;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << content;
}

ProfileDocument load_profile(const std::string& path) {
    try {
        return parse_profile(read_file(path));
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string join(const std::vector<Voter>& v, const char* sep = " ") {
    std::string out;
    for (size_t k = 0; k < v.size(); ++k) {
        if (k) out += sep;
        out += std::to_string(v[k]);
    }
    return out;
}

std::vector<Voter> parse_list(const std::string& s) {
    std::vector<Voter> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw InputError("bad voter list '" + s + "'");
        }
    }
    return out;
}

// --- check ---------------------------------------------------------------

struct CheckArgs {
    std::string profile, delegation;
};

int run_check(const CheckArgs& a) {
    auto doc = load_profile(a.profile);
    Delegation d;
    try {
        d = parse_delegation(read_file(a.delegation), doc.profile.size());
    } catch (const ParseError& e) {
        throw InputError(a.delegation + ": " + e.what());
    }
    auto verdict = is_nash_stable(doc.profile, d);
    auto gu = resolve_gurus(doc.profile, d);
    std::cout << "gurus: " << (gu.gurus.empty() ? "-" : join(gu.gurus)) << '\n';
    if (verdict) {
        std::cout << "stable\n";
        return kExitOk;
    }
    std::cout << "unstable: voter " << verdict.witness << " prefers ";
    if (verdict.better == kAbstain) std::cout << "abstaining";
    else if (verdict.better == verdict.witness) std::cout << "voting herself";
    else std::cout << "guru " << verdict.better;
    std::cout << " to guru " << gu.of(verdict.witness) << '\n';
    return kExitNegative;
}

// --- solve ---------------------------------------------------------------

struct SolveArgs {
    std::string profile, klass = "auto", problem = "eq", model, out, delegation_out, aux_dot;
    bool assume_completion = false;
    int bound = kDefaultKernelBound;
};

int run_solve(const SolveArgs& a) {
    auto doc = load_profile(a.profile);
    SolveRequest req;
    req.profile = doc.profile;
    req.partial = doc.partial;
    req.assume_completion = a.assume_completion;
    req.oracle_bound = a.bound;
    try {
        req.choice = parse_class_choice(a.klass);
        req.problem = parse_problem(a.problem);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    if (!a.model.empty()) {
        try {
            req.model = parse_db_instance(read_file(a.model));
        } catch (const ParseError& e) {
            throw InputError(a.model + ": " + e.what());
        }
    }
    SolveResult r;
    try {
        r = solve(req);
    } catch (const ClassMismatch& e) {
        throw InputError(e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    if (!a.aux_dot.empty()) {
        if (r.used != ClassChoice::kSinglePeaked) throw InputError("--aux-dot needs a single-peaked profile");
        write_output(a.aux_dot, to_dot(build_auxiliary(AxisProfile(doc.profile))));
    }
    write_output(a.out, result_json(doc.profile, r));
    if (!a.delegation_out.empty() && r.delegation) write_output(a.delegation_out, format_delegation(*r.delegation));
    return r.status == SolveStatus::kSolved ? kExitOk : kExitNegative;
}

// --- dynamics ------------------------------------------------------------

struct DynamicsArgs {
    std::string profile, rule = "brd", token = "round-robin", script, init = "all-vote", trace_out;
    std::string budget;
    std::uint64_t seed = 1;
};

TokenFunction parse_token(const std::string& spec, int n, Rng& rng) {
    if (spec == "round-robin") return TokenFunction::round_robin(n);
    if (spec == "random") {
        std::vector<Voter> order(static_cast<size_t>(n));
        std::iota(order.begin(), order.end(), 1);
        std::shuffle(order.begin(), order.end(), rng);
        return TokenFunction::permutation(order);
    }
    if (spec.rfind("perm:", 0) == 0) return TokenFunction::permutation(parse_list(spec.substr(5)));
    if (spec.rfind("seq:", 0) == 0) {
        auto body = spec.substr(4);
        std::optional<size_t> repeat;
        if (auto at = body.find('@'); at != std::string::npos) {
            repeat = static_cast<size_t>(std::stoul(body.substr(at + 1)));
            body = body.substr(0, at);
        }
        return TokenFunction::scripted(parse_list(body), repeat);
    }
    throw InputError("unknown token spec '" + spec + "'");
}

Delegation parse_init(const std::string& init, int n, Rng& rng) {
    if (init == "all-vote") return Delegation::all_vote(n);
    if (init == "all-abstain") return Delegation::all_abstain(n);
    if (init == "random") {
        std::uniform_int_distribution<Voter> target(0, n);
        std::vector<Voter> d(static_cast<size_t>(n));
        for (auto& v : d) v = target(rng);
        return Delegation(std::move(d));
    }
    try {
        return parse_delegation(read_file(init), n);
    } catch (const ParseError& e) {
        throw InputError(init + ": " + e.what());
    }
}

int run_dynamics_cmd(const DynamicsArgs& a) {
    auto doc = load_profile(a.profile);
    const auto& p = doc.profile;
    Rng rng(a.seed);
    Delegation d0 = parse_init(a.init, p.size(), rng);
    MoveRule rule;
    std::optional<TokenFunction> token;
    if (a.rule == "brd") {
        token = parse_token(a.token, p.size(), rng);
    } else if (a.rule == "ird-script" || a.rule == "move-script") {
        if (a.script.empty()) throw InputError("--script is required for scripted rules");
        Script s;
        try {
            s = parse_script(read_file(a.script));
        } catch (const ParseError& e) {
            throw InputError(a.script + ": " + e.what());
        }
        token = s.token();
        rule = a.rule == "ird-script" ? MoveRule::improved(std::move(s)) : MoveRule::verbatim(std::move(s));
    } else {
        throw InputError("unknown rule '" + a.rule + "'");
    }
    size_t budget = default_budget(p.size());
    if (!a.budget.empty()) {
        try {
            budget = static_cast<size_t>(std::stoull(a.budget));
        } catch (const std::exception&) {
            throw InputError("bad budget '" + a.budget + "'");
        }
    }
    DynamicsTrace trace;
    try {
        trace = run_dynamics(p, d0, *token, rule, budget);
    } catch (const ScriptError& e) {
        throw InputError(std::string("inconsistent script: ") + e.what());
    }
    const auto text = format_trace(p, trace);
    write_output(a.trace_out, text);
    if (!a.trace_out.empty() && a.trace_out != "-") {
        std::cout << text.substr(text.rfind("# verdict"));
    }
    switch (trace.verdict) {
    case DynamicsVerdict::kConverged: return kExitOk;
    case DynamicsVerdict::kCycle: return kExitNegative;
    case DynamicsVerdict::kBudgetExhausted: return kExitBudget;
    }
    return kExitOk;
}

// --- gen -----------------------------------------------------------------

struct GenArgs {
    std::string kind, out, model_out, cnf, points;
    int n = 10, dim = 2;
    std::optional<int> k;
    double edge_prob = 0.4, abstain_prob = 0.1, max_threshold = 5.0;
    std::uint64_t seed = 1;
    bool partial = false;
};

int run_gen(const GenArgs& a) {
    Rng rng(a.seed);
    ProfileFormat fmt;
    fmt.partial = a.partial;
    PreferenceProfile p;
    std::optional<DbInstance> model;
    if (a.n < 0) throw InputError("--n must be non-negative");
    if (a.kind == "random") {
        p = random_profile(a.n, rng);
    } else if (a.kind == "sp-random") {
        p = random_sp_profile(a.n, rng);
        fmt.classes = {ProfileClass::kSinglePeaked};
        fmt.axis = "identity";
    } else if (a.kind == "sym-random") {
        p = random_symmetric_profile(a.n, rng, a.edge_prob, a.abstain_prob);
        fmt.classes = {ProfileClass::kSymmetric};
    } else if (a.kind == "db-points" || a.kind == "db-graph") {
        if (!a.points.empty()) {
            try {
                model = parse_db_instance(read_file(a.points));
            } catch (const ParseError& e) {
                throw InputError(a.points + ": " + e.what());
            }
        } else if (a.kind == "db-points") {
            model = random_db_instance(a.n, rng, a.dim, a.max_threshold, a.abstain_prob);
        } else {
            throw InputError("db-graph needs --points with a graph model");
        }
        p = model->profile();
        fmt.classes = {ProfileClass::kDistance};
    } else if (a.kind.rfind("gadget:", 0) == 0) {
        if (a.cnf.empty()) throw InputError("gadget kinds need --cnf");
        CnfInstance inst;
        GadgetKind kind;
        try {
            inst = parse_cnf(read_file(a.cnf));
            kind = parse_gadget_kind(a.kind.substr(7));
        } catch (const ParseError& e) {
            throw InputError(a.cnf + ": " + e.what());
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        if (kind == GadgetKind::kGuc) throw InputError("guc is a digraph, not a profile; use gadget:minabst");
        auto g = kind == GadgetKind::kMindis ? build_mindis_gadget(inst, a.k) : build_gadget(inst, kind);
        p = g.profile;
        model = g.model;
        fmt.classes = {kind == GadgetKind::kMemb ? ProfileClass::kDistance : ProfileClass::kSymmetric};
        std::ostringstream c;
        c << "# gadget " << to_string(kind);
        if (g.bound) c << " bound " << g.bound;
        if (g.hub_size) c << " clique " << g.hub_size;
        if (g.query) c << " query " << g.query;
        c << '\n' << format_roles(g.roles);
        fmt.comments = c.str();
    } else {
        throw InputError("unknown kind '" + a.kind + "'");
    }
    write_output(a.out, format_profile(p, fmt));
    if (model && !a.model_out.empty()) write_output(a.model_out, format_db_instance(*model));
    return kExitOk;
}

// --- enumerate -----------------------------------------------------------

struct EnumerateArgs {
    std::string profile, dot;
    std::optional<size_t> limit;
    int bound = kDefaultKernelBound;
};

int run_enumerate(const EnumerateArgs& a) {
    auto doc = load_profile(a.profile);
    auto g = build_digraph(doc.profile);
    if (!a.dot.empty()) write_output(a.dot, to_dot(g));
    auto list = enumerate_kernels(g, a.limit, a.bound);
    std::cout << "# " << list.kernels.size() << " kernel(s)" << (list.truncated ? ", truncated" : "") << '\n';
    for (const auto& k : list.kernels) std::cout << '{' << join(k, ",") << "}\n";
    return kExitOk;
}

// --- reduce --------------------------------------------------------------

struct ReduceArgs {
    std::string cnf, kind = "guc";
    int bound = kDefaultKernelBound;
};

int run_reduce(const ReduceArgs& a) {
    CnfInstance inst;
    GadgetKind kind;
    try {
        inst = parse_cnf(read_file(a.cnf));
        kind = parse_gadget_kind(a.kind);
    } catch (const ParseError& e) {
        throw InputError(a.cnf + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    auto r = verify_reduction(inst, kind, a.bound);
    std::cout << "satisfiable: " << (r.sat.satisfiable ? "yes" : "no") << '\n';
    std::cout << "gadget side: " << (r.gadget_side ? "yes" : "no") << '\n';
    if (r.optimum) {
        std::cout << "min dissatisfaction: " << *r.optimum << '\n';
        std::cout << "agree at 2k: " << (r.agree_at_bound ? "yes" : "no") << '\n';
        std::cout << "agree at 2k-1: " << (r.agree_below_bound ? "yes" : "no") << '\n';
    }
    if (r.witness) std::cout << "witness: {" << join(*r.witness, ",") << "}\n";
    std::cout << (r.agree ? "agree" : "disagree") << '\n';
    return r.agree ? kExitOk : kExitNegative;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equilibria of the liquid-democracy delegation game"};
    app.require_subcommand(1);
    app.footer(
        "Profile lines are 'i: o1 > o2 > ... > o(n+1)' or 'i: voter|abstainer acc: j1 > j2'.\n"
        "Partial lines are completed as: Acc in the listed order, then self and 0\n"
        "(0 first for abstainers), then the remaining voters ascending.\n"
        "Exit codes: 0 success, 1 negative answer, 2 input error, 3 size guard, 4 budget exhausted.");

    CheckArgs check;
    auto* c = app.add_subcommand("check", "Nash-stability of a delegation function");
    c->add_option("profile", check.profile, "Profile file")->required();
    c->add_option("delegation", check.delegation, "Delegation file ('i: j' per voter)")->required();

    SolveArgs solve_args;
    auto* s = app.add_subcommand("solve", "Solve eq, memb:<i>, mindis, minmaxvp or minabst");
    s->add_option("profile", solve_args.profile, "Profile file")->required();
    s->add_option("--class", solve_args.klass, "auto, sp, sym, db or generic")->capture_default_str();
    s->add_option("--problem", solve_args.problem, "eq, memb:<i>, mindis, minmaxvp, minabst")->capture_default_str();
    s->add_option("--model", solve_args.model, "Distance model sidecar (points or graph)");
    s->add_flag("--assume-completion", solve_args.assume_completion,
                "Accept mindis on partial profiles using the completed ranks");
    s->add_option("--bound", solve_args.bound, "Largest candidate count for exhaustive search")->capture_default_str();
    s->add_option("--out", solve_args.out, "Result JSON (default stdout)");
    s->add_option("--delegation-out", solve_args.delegation_out, "Write the delegation function");
    s->add_option("--aux-dot", solve_args.aux_dot, "Write the auxiliary digraph (single-peaked only)");

    DynamicsArgs dyn;
    auto* d = app.add_subcommand("dynamics", "Run delegation dynamics");
    d->add_option("profile", dyn.profile, "Profile file")->required();
    d->add_option("--rule", dyn.rule, "brd, ird-script or move-script")->capture_default_str();
    d->add_option("--token", dyn.token,
                  "round-robin, random, perm:<i,j,...>, seq:<i,j,...>[@repeat-from] (brd only)")
        ->capture_default_str();
    d->add_option("--script", dyn.script, "Script file for scripted rules");
    d->add_option("--init", dyn.init, "all-vote, all-abstain, random or a delegation file")->capture_default_str();
    d->add_option("--budget", dyn.budget, "Step budget (default n*(n+2) rounds of n steps)");
    d->add_option("--seed", dyn.seed, "Seed for random tokens and starts")->capture_default_str();
    d->add_option("--trace-out", dyn.trace_out, "Trace file (default stdout)");

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Generate a profile");
    g->add_option("--kind", gen.kind, "random, sp-random, sym-random, db-points, db-graph, gadget:<kind>")
        ->required();
    g->add_option("--n", gen.n, "Voter count")->capture_default_str();
    g->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
    g->add_option("--dim", gen.dim, "Point dimension (db-points)")->capture_default_str();
    g->add_option("--edge-prob", gen.edge_prob, "Edge probability (sym-random)")->capture_default_str();
    g->add_option("--abstain-prob", gen.abstain_prob, "Abstainer probability")->capture_default_str();
    g->add_option("--max-threshold", gen.max_threshold, "Largest threshold (db-points)")->capture_default_str();
    g->add_option("--points", gen.points, "Read the distance model instead of drawing one");
    g->add_option("--cnf", gen.cnf, "DIMACS instance for gadget kinds");
    g->add_option("--k", gen.k, "Clique size for gadget:mindis");
    g->add_flag("--partial", gen.partial, "Write partial lines");
    g->add_option("--out", gen.out, "Profile file (default stdout)");
    g->add_option("--model-out", gen.model_out, "Distance model sidecar for db kinds");

    EnumerateArgs en;
    auto* e = app.add_subcommand("enumerate", "List every equilibrium guru set");
    e->add_option("profile", en.profile, "Profile file")->required();
    e->add_option("--limit", en.limit, "Stop after this many");
    e->add_option("--bound", en.bound, "Largest vertex count")->capture_default_str();
    e->add_option("--dot", en.dot, "Write the acceptability digraph");

    ReduceArgs red;
    auto* r = app.add_subcommand("reduce", "Check a hardness reduction on a DIMACS instance");
    r->add_option("cnf", red.cnf, "DIMACS file")->required();
    r->add_option("--kind", red.kind, "guc, minabst, mindis, minmaxvp or memb")->capture_default_str();
    r->add_option("--bound", red.bound, "Largest gadget size")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*c) return run_check(check);
        if (*s) return run_solve(solve_args);
        if (*d) return run_dynamics_cmd(dyn);
        if (*g) return run_gen(gen);
        if (*e) return run_enumerate(en);
        if (*r) return run_reduce(red);
    } catch (const SizeGuardError& err) {
        std::cerr << "refused: " << err.what() << '\n';
        return kExitSizeGuard;
    } catch (const InputError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
