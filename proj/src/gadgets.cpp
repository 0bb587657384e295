#include "ldeq/gadgets.hpp"

#include "text.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace ldeq {

CnfInstance parse_cnf(const std::string& input) {
    CnfInstance inst;
    bool header = false;
    int declared = 0;
    std::vector<int> pending;
    int line_no = 0;
    for (auto raw : text::split_lines(input)) {
        ++line_no;
        auto line = text::trim(raw);
        if (line.empty() || line.front() == 'c') continue;
        auto w = text::words(line);
        if (w.front() == "p") {
            if (header) throw ParseError(line_no, "duplicate header");
            if (w.size() != 4 || w[1] != "cnf") throw ParseError(line_no, "expected 'p cnf <vars> <clauses>'");
            auto vars = text::to_int(w[2], line_no, "variable count");
            auto cls = text::to_int(w[3], line_no, "clause count");
            if (vars < 0 || cls < 0) throw ParseError(line_no, "negative count in header");
            inst.variables = static_cast<int>(vars);
            declared = static_cast<int>(cls);
            header = true;
            continue;
        }
        if (!header) throw ParseError(line_no, "clause before the 'p cnf' header");
        for (auto word : w) {
            auto lit = text::to_int(word, line_no, "literal");
            if (lit == 0) {
                if (pending.size() != 3) {
                    throw ParseError(line_no, "clause has " + std::to_string(pending.size()) +
                                                  " literals, expected 3");
                }
                inst.clauses.push_back({pending[0], pending[1], pending[2]});
                pending.clear();
                continue;
            }
            if (std::llabs(lit) > inst.variables) {
                throw ParseError(line_no, "variable " + std::to_string(std::llabs(lit)) +
                                              " out of range 1.." + std::to_string(inst.variables));
            }
            pending.push_back(static_cast<int>(lit));
        }
    }
    if (!header) throw ParseError(0, "missing 'p cnf' header");
    if (!pending.empty()) throw ParseError(line_no, "last clause is not terminated by 0");
    if (inst.clause_count() != declared) {
        throw ParseError(0, "header declares " + std::to_string(declared) + " clauses, found " +
                                std::to_string(inst.clause_count()));
    }
    return inst;
}

std::string format_cnf(const CnfInstance& inst) {
    std::ostringstream os;
    os << "p cnf " << inst.variables << ' ' << inst.clause_count() << '\n';
    for (const auto& c : inst.clauses) os << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
    return os.str();
}

SatResult brute_force_sat(const CnfInstance& inst) {
    if (inst.variables > kSatVariableBound) {
        throw SizeGuardError("brute-force SAT refused: " + std::to_string(inst.variables) +
                             " variables exceed the bound of " + std::to_string(kSatVariableBound));
    }
    const std::uint32_t total = std::uint32_t{1} << inst.variables;
    auto holds = [](std::uint32_t mask, int lit) {
        bool value = (mask >> (std::abs(lit) - 1)) & 1;
        return lit > 0 ? value : !value;
    };
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        bool ok = std::all_of(inst.clauses.begin(), inst.clauses.end(), [&](const auto& c) {
            return holds(mask, c[0]) || holds(mask, c[1]) || holds(mask, c[2]);
        });
        if (!ok) continue;
        SatResult r;
        r.satisfiable = true;
        for (int v = 1; v <= inst.variables; ++v) r.assignment.push_back((mask >> (v - 1)) & 1);
        return r;
    }
    return {};
}

std::string Role::label() const {
    switch (kind) {
    case RoleKind::kLiteral: return (positive ? "x" : "~x") + std::to_string(index);
    case RoleKind::kClause: return "c" + std::to_string(index);
    case RoleKind::kHub: return "hub";
    case RoleKind::kClique: return "k" + std::to_string(index);
    case RoleKind::kPendant: return "p" + std::to_string(index);
    case RoleKind::kConnector: return "vt";
    case RoleKind::kQuery: return "vq";
    }
    return "?";
}

Voter literal_voter(int literal) {
    return literal > 0 ? 2 * literal - 1 : 2 * (-literal);
}

Voter clause_voter(const CnfInstance& inst, int clause) {
    return 2 * inst.variables + clause;
}

namespace {

std::vector<Role> base_roles(const CnfInstance& inst) {
    std::vector<Role> roles;
    for (int v = 1; v <= inst.variables; ++v) {
        roles.push_back({RoleKind::kLiteral, v, true});
        roles.push_back({RoleKind::kLiteral, v, false});
    }
    for (int j = 1; j <= inst.clause_count(); ++j) roles.push_back({RoleKind::kClause, j, true});
    return roles;
}

// Literal voters of clause j in clause order, repeats dropped.
std::vector<Voter> clause_literals(const CnfInstance& inst, int j) {
    std::vector<Voter> out;
    for (int lit : inst.clauses[static_cast<size_t>(j - 1)]) {
        Voter v = literal_voter(lit);
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    return out;
}

// Clause voters containing the literal of voter v, ascending.
std::vector<Voter> literal_clauses(const CnfInstance& inst, Voter v) {
    std::vector<Voter> out;
    for (int j = 1; j <= inst.clause_count(); ++j) {
        auto lits = clause_literals(inst, j);
        if (std::find(lits.begin(), lits.end(), v) != lits.end()) out.push_back(clause_voter(inst, j));
    }
    return out;
}

Voter opposite(Voter literal) {
    return literal % 2 == 1 ? literal + 1 : literal - 1;
}

// `head` in order, then the tail tiers, with every voter not yet placed
// inserted ascending at the `rest` marker.
constexpr Voter kRest = -1;

std::vector<Voter> complete(int n, Voter self, std::vector<Voter> order) {
    std::vector<char> placed(static_cast<size_t>(n) + 1, 0);
    for (Voter o : order) {
        if (o >= 0) placed[static_cast<size_t>(o)] = 1;
    }
    std::vector<Voter> row;
    for (Voter o : order) {
        if (o != kRest) {
            row.push_back(o);
            continue;
        }
        for (Voter v = 1; v <= n; ++v) {
            if (!placed[static_cast<size_t>(v)] && v != self) row.push_back(v);
        }
    }
    return row;
}

template <class... Parts>
std::vector<Voter> concat(const Parts&... parts) {
    std::vector<Voter> out;
    (out.insert(out.end(), parts.begin(), parts.end()), ...);
    return out;
}

std::vector<Voter> range(Voter lo, Voter hi) {
    std::vector<Voter> out;
    for (Voter v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

std::vector<Voter> clause_range(const CnfInstance& inst) {
    return range(clause_voter(inst, 1), clause_voter(inst, inst.clause_count()));
}

} // namespace

GucGadget build_guc(const CnfInstance& inst) {
    const int n = 2 * inst.variables + inst.clause_count();
    std::vector<std::pair<Voter, Voter>> arcs;
    for (int v = 1; v <= inst.variables; ++v) {
        arcs.emplace_back(2 * v - 1, 2 * v);
        arcs.emplace_back(2 * v, 2 * v - 1);
    }
    for (int j = 1; j <= inst.clause_count(); ++j) {
        Voter c = clause_voter(inst, j);
        for (Voter l : clause_literals(inst, j)) {
            arcs.emplace_back(c, l);
            arcs.emplace_back(l, c);
        }
    }
    GucGadget g;
    g.graph = AcceptabilityDigraph(n, range(1, n), arcs);
    g.roles = base_roles(inst);
    return g;
}

std::string to_string(GadgetKind kind) {
    switch (kind) {
    case GadgetKind::kGuc: return "guc";
    case GadgetKind::kMinabst: return "minabst";
    case GadgetKind::kMindis: return "mindis";
    case GadgetKind::kMinmaxvp: return "minmaxvp";
    case GadgetKind::kMemb: return "memb";
    }
    return "?";
}

GadgetKind parse_gadget_kind(const std::string& name) {
    for (auto k : {GadgetKind::kGuc, GadgetKind::kMinabst, GadgetKind::kMindis,
                   GadgetKind::kMinmaxvp, GadgetKind::kMemb}) {
        if (to_string(k) == name) return k;
    }
    throw std::invalid_argument("unknown gadget kind '" + name + "'");
}

GadgetProfile build_minabst_gadget(const CnfInstance& inst) {
    const int n = 2 * inst.variables + inst.clause_count();
    std::vector<std::vector<Voter>> rows;
    for (Voter v = 1; v <= 2 * inst.variables; ++v) {
        rows.push_back(complete(n, v, concat(std::vector<Voter>{opposite(v)}, literal_clauses(inst, v),
                                             std::vector<Voter>{v, kAbstain, kRest})));
    }
    for (int j = 1; j <= inst.clause_count(); ++j) {
        Voter c = clause_voter(inst, j);
        rows.push_back(complete(n, c, concat(clause_literals(inst, j),
                                             std::vector<Voter>{kAbstain, c, kRest})));
    }
    GadgetProfile g;
    g.kind = GadgetKind::kMinabst;
    g.profile = PreferenceProfile(std::move(rows));
    g.roles = base_roles(inst);
    return g;
}

GadgetProfile build_mindis_gadget(const CnfInstance& inst, std::optional<int> k_override) {
    const int nu = inst.variables, nc = inst.clause_count();
    const int k = k_override.value_or(3 * nc + nu + nu * nc);
    if (k < 1) throw std::invalid_argument("clique size must be at least 1");
    const int n = 2 * nu + nc + k;
    const Voter hub = 2 * nu + nc + 1;
    auto member = [&](int i) { return hub + i; }; // i in 1..k-1
    const auto clauses = clause_range(inst);
    const auto members = range(hub + 1, hub + k - 1);

    std::vector<std::vector<Voter>> rows;
    for (Voter v = 1; v <= 2 * nu; ++v) {
        rows.push_back(complete(n, v, concat(std::vector<Voter>{opposite(v)}, literal_clauses(inst, v),
                                             std::vector<Voter>{v, kRest, kAbstain})));
    }
    for (int j = 1; j <= nc; ++j) {
        Voter c = clause_voter(inst, j);
        rows.push_back(complete(n, c, concat(clause_literals(inst, j), members,
                                             std::vector<Voter>{hub, c, kRest, kAbstain})));
    }
    rows.push_back(complete(n, hub, concat(members, clauses, std::vector<Voter>{hub, kRest, kAbstain})));
    for (int i = 1; i <= k - 1; ++i) {
        std::vector<Voter> head{hub};
        for (int step = 0; step < k - 2; ++step) head.push_back(member((i + step) % (k - 1) + 1));
        rows.push_back(complete(n, member(i), concat(head, clauses,
                                                     std::vector<Voter>{member(i), kRest, kAbstain})));
    }
    GadgetProfile g;
    g.kind = GadgetKind::kMindis;
    g.profile = PreferenceProfile(std::move(rows));
    g.roles = base_roles(inst);
    g.roles.push_back({RoleKind::kHub, 0, true});
    for (int i = 1; i <= k - 1; ++i) g.roles.push_back({RoleKind::kClique, i, true});
    g.bound = 2 * static_cast<std::int64_t>(k);
    g.hub_size = k;
    return g;
}

GadgetProfile build_minmaxvp_gadget(const CnfInstance& inst) {
    const int nu = inst.variables, nc = inst.clause_count();
    const int m = nc + 2;
    const int n = 2 * nu + nc + 2 * m;
    auto clique = [&](int i) { return 2 * nu + nc + i; };
    auto pendant = [&](int i) { return 2 * nu + nc + m + i; };
    const auto clauses = clause_range(inst);
    const auto members = range(clique(1), clique(m));

    std::vector<std::vector<Voter>> rows;
    for (Voter v = 1; v <= 2 * nu; ++v) {
        rows.push_back(complete(n, v, concat(std::vector<Voter>{opposite(v)}, literal_clauses(inst, v),
                                             std::vector<Voter>{v, kRest, kAbstain})));
    }
    for (int j = 1; j <= nc; ++j) {
        Voter c = clause_voter(inst, j);
        rows.push_back(complete(n, c, concat(clause_literals(inst, j), members,
                                             std::vector<Voter>{c, kRest, kAbstain})));
    }
    for (int i = 1; i <= m; ++i) {
        std::vector<Voter> peers;
        for (Voter v : members) {
            if (v != clique(i)) peers.push_back(v);
        }
        rows.push_back(complete(n, clique(i),
                                concat(clauses, peers,
                                       std::vector<Voter>{pendant(i), clique(i), kRest, kAbstain})));
    }
    for (int i = 1; i <= m; ++i) {
        rows.push_back(complete(n, pendant(i), {clique(i), pendant(i), kRest, kAbstain}));
    }
    GadgetProfile g;
    g.kind = GadgetKind::kMinmaxvp;
    g.profile = PreferenceProfile(std::move(rows));
    g.roles = base_roles(inst);
    for (int i = 1; i <= m; ++i) g.roles.push_back({RoleKind::kClique, i, true});
    for (int i = 1; i <= m; ++i) g.roles.push_back({RoleKind::kPendant, i, true});
    g.bound = nc + 3;
    return g;
}

GadgetProfile build_memb_gadget(const CnfInstance& inst) {
    const int nu = inst.variables, nc = inst.clause_count();
    const int n = 2 * nu + nc + 2;
    const Voter connector = n - 1, query = n;
    std::vector<std::pair<Voter, Voter>> edges;
    for (int v = 1; v <= nu; ++v) edges.emplace_back(2 * v - 1, 2 * v);
    for (int j = 1; j <= nc; ++j) {
        for (Voter l : clause_literals(inst, j)) edges.emplace_back(clause_voter(inst, j), l);
    }
    for (int j = 1; j <= nc; ++j) edges.emplace_back(connector, clause_voter(inst, j));
    edges.emplace_back(connector, query);

    DbInstance db;
    db.model = DistanceModel::from_graph(n, std::move(edges));
    db.thresholds.assign(static_cast<size_t>(n), 1.0);
    db.thresholds.back() = 2.0;

    GadgetProfile g;
    g.kind = GadgetKind::kMemb;
    g.profile = db.profile();
    g.model = std::move(db);
    g.roles = base_roles(inst);
    g.roles.push_back({RoleKind::kConnector, 0, true});
    g.roles.push_back({RoleKind::kQuery, 0, true});
    g.query = query;
    return g;
}

GadgetProfile build_gadget(const CnfInstance& inst, GadgetKind kind) {
    switch (kind) {
    case GadgetKind::kGuc:
    case GadgetKind::kMinabst: return build_minabst_gadget(inst);
    case GadgetKind::kMindis: return build_mindis_gadget(inst);
    case GadgetKind::kMinmaxvp: return build_minmaxvp_gadget(inst);
    case GadgetKind::kMemb: return build_memb_gadget(inst);
    }
    throw std::invalid_argument("unknown gadget kind");
}

std::string format_roles(const std::vector<Role>& roles) {
    std::ostringstream os;
    for (size_t v = 0; v < roles.size(); ++v) os << "# role " << v + 1 << ' ' << roles[v].label() << '\n';
    return os.str();
}

ReductionReport verify_reduction(const CnfInstance& inst, GadgetKind kind, int vertex_bound) {
    ReductionReport r;
    r.kind = kind;
    r.sat = brute_force_sat(inst);

    auto guard = [&](int n) {
        if (n > vertex_bound) {
            throw SizeGuardError(to_string(kind) + " gadget has " + std::to_string(n) +
                                 " voters, above the exhaustion bound of " + std::to_string(vertex_bound));
        }
    };

    if (kind == GadgetKind::kGuc) {
        auto g = build_guc(inst);
        guard(g.graph.universe());
        auto kernels = enumerate_kernels(g.graph, std::nullopt, vertex_bound).kernels;
        r.kernels = kernels.size();
        const Voter first_clause = 2 * inst.variables + 1;
        for (auto& k : kernels) {
            if (std::none_of(k.begin(), k.end(), [&](Voter v) { return v >= first_clause; })) {
                r.gadget_side = true;
                r.witness = k;
                break;
            }
        }
    } else {
        auto g = build_gadget(inst, kind);
        guard(g.profile.size());
        const auto& p = g.profile;
        auto kernels = enumerate_kernels(build_digraph(p), std::nullopt, vertex_bound).kernels;
        r.kernels = kernels.size();
        for (auto& k : kernels) {
            auto d = kernel_to_delegation(p, k);
            bool hit = false;
            switch (kind) {
            case GadgetKind::kMinabst: hit = measure_abstentions(p, d) == 0; break;
            case GadgetKind::kMinmaxvp: {
                auto vp = measure_max_voting_power(p, d);
                hit = vp && *vp < g.bound;
                break;
            }
            case GadgetKind::kMemb: hit = std::binary_search(k.begin(), k.end(), g.query); break;
            case GadgetKind::kMindis: {
                auto dis = measure_dissatisfaction(p, d);
                if (!r.optimum || dis < *r.optimum) {
                    r.optimum = dis;
                    r.witness = k;
                }
                break;
            }
            case GadgetKind::kGuc: break;
            }
            if (hit) {
                r.gadget_side = true;
                r.witness = k;
                break;
            }
        }
        if (kind == GadgetKind::kMindis) {
            r.gadget_side = r.optimum && *r.optimum <= g.bound;
            r.agree_at_bound = r.gadget_side == r.sat.satisfiable;
            r.agree_below_bound = (r.optimum && *r.optimum <= g.bound - 1) == r.sat.satisfiable;
            r.agree = r.agree_at_bound;
            return r;
        }
    }
    r.agree = r.gadget_side == r.sat.satisfiable;
    r.agree_at_bound = r.agree_below_bound = r.agree;
    return r;
}

} // namespace ldeq
