#include "ldeq/digraph.hpp"
#include "ldeq/distance.hpp"
#include "ldeq/gadgets.hpp"
#include "ldeq/parse_error.hpp"
#include "ldeq/symmetric.hpp"

#include "oracle.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace ldeq;

namespace {

CnfInstance unsat_pair() {
    // (x1 | x1 | x1) & (~x1 | ~x1 | ~x1)
    return {1, {{1, 1, 1}, {-1, -1, -1}}};
}

std::vector<Voter> row(const PreferenceProfile& p, Voter i) {
    return {p.ranking(i).begin(), p.ranking(i).end()};
}

std::int64_t min_dissatisfaction(const PreferenceProfile& p) {
    auto kernels = enumerate_kernels(build_digraph(p)).kernels;
    std::int64_t best = -1;
    for (const auto& k : kernels) {
        auto v = oracle::evaluate_kernel(p, k).dissatisfaction;
        if (best < 0 || v < best) best = v;
    }
    return best;
}

} // namespace

TEST(Gadgets, ParseCnf) {
    auto inst = parse_cnf(testutil::read_data("five_var.cnf"));
    EXPECT_EQ(inst.variables, 5);
    ASSERT_EQ(inst.clause_count(), 3);
    EXPECT_EQ(inst.clauses[1], (std::array<int, 3>{-2, -4, 1}));
    EXPECT_EQ(parse_cnf(format_cnf(inst)), inst);
}

TEST(Gadgets, ParseCnfErrors) {
    auto line_of = [](const std::string& text) {
        try {
            parse_cnf(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    EXPECT_EQ(line_of("p cnf 2 1\n1 2 0\n"), 2);
    EXPECT_EQ(line_of("c hi\np cnf 2 1\n1 2 3 0\n"), 3);
    EXPECT_EQ(line_of("1 2 -1 0\n"), 1);
    EXPECT_EQ(line_of("p cnf 2 2\n1 2 -1 0\n"), 0);
    EXPECT_EQ(line_of("p cnf 2 1\n1 2 -1\n"), 2);
}

TEST(Gadgets, BruteForceSat) {
    auto sat = brute_force_sat(parse_cnf(testutil::read_data("five_var.cnf")));
    EXPECT_TRUE(sat.satisfiable);
    EXPECT_EQ(sat.assignment.size(), 5u);
    EXPECT_FALSE(brute_force_sat(unsat_pair()).satisfiable);
    CnfInstance huge{30, {}};
    EXPECT_THROW(brute_force_sat(huge), SizeGuardError);
}

TEST(Gadgets, Layout) {
    EXPECT_EQ(literal_voter(3), 5);
    EXPECT_EQ(literal_voter(-3), 6);
    auto inst = parse_cnf(testutil::read_data("five_var.cnf"));
    EXPECT_EQ(clause_voter(inst, 2), 12);
    EXPECT_EQ((Role{RoleKind::kLiteral, 3, false}.label()), "~x3");
    EXPECT_EQ((Role{RoleKind::kHub, 0, true}.label()), "hub");
    EXPECT_EQ(format_roles({{RoleKind::kClause, 2, true}}), "# role 1 c2\n");
}

TEST(Gadgets, GucShape) {
    auto inst = parse_cnf(testutil::read_data("five_var.cnf"));
    auto g = build_guc(inst);
    EXPECT_EQ(g.graph.universe(), 13);
    EXPECT_TRUE(g.graph.is_symmetric());
    EXPECT_TRUE(g.graph.has_arc(1, 2));
    EXPECT_TRUE(g.graph.has_arc(11, 1));
    EXPECT_FALSE(g.graph.has_arc(11, 12));
    EXPECT_EQ(g.roles[10].label(), "c1");
}

TEST(Gadgets, MinabstOrders) {
    auto inst = parse_cnf(testutil::read_data("five_var.cnf"));
    auto g = build_minabst_gadget(inst);
    const auto& p = g.profile;
    EXPECT_TRUE(check_symmetric(p));
    // x1 sits in clauses 1 and 2 (voters 11, 12).
    EXPECT_EQ(p.acceptable(1), (std::vector<Voter>{2, 11, 12}));
    // Clause 1 = x1 | x2 | ~x3.
    EXPECT_EQ(row(p, 11), (std::vector<Voter>{1, 3, 6, 0, 11, 2, 4, 5, 7, 8, 9, 10, 12, 13}));
    EXPECT_TRUE(p.is_abstainer(11));
}

TEST(Gadgets, MindisCliqueOrders) {
    CnfInstance inst{1, {{1, 1, -1}}};
    auto g = build_mindis_gadget(inst, 4);
    // Literals 1, 2; clause 3; hub 4; clique members 5, 6, 7.
    const auto& p = g.profile;
    EXPECT_EQ(p.size(), 7);
    EXPECT_EQ(g.bound, 8);
    EXPECT_EQ(row(p, 4), (std::vector<Voter>{5, 6, 7, 3, 4, 1, 2, 0}));
    EXPECT_EQ(row(p, 5), (std::vector<Voter>{4, 6, 7, 3, 5, 1, 2, 0}));
    EXPECT_EQ(row(p, 6), (std::vector<Voter>{4, 7, 5, 3, 6, 1, 2, 0}));
    EXPECT_EQ(row(p, 7), (std::vector<Voter>{4, 5, 6, 3, 7, 1, 2, 0}));
    EXPECT_EQ(row(p, 3), (std::vector<Voter>{1, 2, 5, 6, 7, 4, 3, 0}));
    EXPECT_TRUE(check_symmetric(p));
    EXPECT_EQ(g.roles[3].label(), "hub");
    EXPECT_EQ(g.roles[6].label(), "k3");
}

TEST(Gadgets, MindisUnsatisfiableExceedsBound) {
    auto g = build_mindis_gadget(unsat_pair(), 9);
    ASSERT_EQ(g.profile.size(), 13);
    EXPECT_GT(min_dissatisfaction(g.profile), g.bound);
}

TEST(Gadgets, MindisSatisfiableWithinBound) {
    CnfInstance inst{1, {{1, 1, 1}}};
    auto g = build_mindis_gadget(inst);
    EXPECT_LE(min_dissatisfaction(g.profile), g.bound);
}

TEST(Gadgets, MinmaxvpShape) {
    CnfInstance inst{2, {{1, 2, -1}}};
    auto g = build_minmaxvp_gadget(inst);
    // 4 literals, 1 clause, a 3-clique, 3 pendants.
    EXPECT_EQ(g.profile.size(), 11);
    EXPECT_EQ(g.bound, 4);
    EXPECT_TRUE(check_symmetric(g.profile));
    EXPECT_EQ(g.profile.acceptable(9), (std::vector<Voter>{6}));
    EXPECT_EQ(g.profile.acceptable(6), (std::vector<Voter>{5, 7, 8, 9}));
}

TEST(Gadgets, MembIsDistanceBased) {
    auto inst = parse_cnf(testutil::read_data("five_var.cnf"));
    auto g = build_memb_gadget(inst);
    ASSERT_TRUE(g.model);
    EXPECT_EQ(g.query, 15);
    EXPECT_TRUE(check_thresholds(g.profile, g.model->model, g.model->thresholds));
    EXPECT_TRUE(check_thresholds(g.profile, g.model->thresholds));
    // The query voter reaches the clauses through the connector.
    EXPECT_EQ(g.profile.acceptable(15), (std::vector<Voter>{14, 11, 12, 13}));
}

TEST(Gadgets, ReductionOnSampleInstance) {
    auto inst = parse_cnf(testutil::read_data("five_var.cnf"));
    for (auto kind : {GadgetKind::kGuc, GadgetKind::kMinabst, GadgetKind::kMemb}) {
        auto r = verify_reduction(inst, kind);
        EXPECT_TRUE(r.agree) << to_string(kind);
        EXPECT_TRUE(r.gadget_side);
        ASSERT_TRUE(r.witness);
    }
    EXPECT_THROW(verify_reduction(inst, GadgetKind::kMindis), SizeGuardError);
}

TEST(Gadgets, ReductionOnUnsatisfiableInstance) {
    for (auto kind : {GadgetKind::kGuc, GadgetKind::kMinabst, GadgetKind::kMinmaxvp, GadgetKind::kMemb}) {
        auto r = verify_reduction(unsat_pair(), kind);
        EXPECT_FALSE(r.sat.satisfiable);
        EXPECT_FALSE(r.gadget_side) << to_string(kind);
        EXPECT_TRUE(r.agree);
    }
}

TEST(Gadgets, KindNames) {
    EXPECT_EQ(parse_gadget_kind("minmaxvp"), GadgetKind::kMinmaxvp);
    EXPECT_THROW(parse_gadget_kind("bogus"), std::invalid_argument);
}
