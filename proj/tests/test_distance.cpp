#include "ldeq/distance.hpp"
#include "ldeq/generate.hpp"
#include "ldeq/parse_error.hpp"
#include "ldeq/symmetric.hpp"

#include "oracle.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace ldeq;

TEST(Distance, MatrixValidation) {
    EXPECT_THROW(DistanceModel::from_matrix({{0, 1}, {2, 0}}), std::invalid_argument);
    EXPECT_THROW(DistanceModel::from_matrix({{0, -1}, {-1, 0}}), std::invalid_argument);
    EXPECT_THROW(DistanceModel::from_matrix({{1, 1}, {1, 0}}), std::invalid_argument);
    EXPECT_THROW(DistanceModel::from_matrix({{0, 1}}), std::invalid_argument);
    EXPECT_NO_THROW(DistanceModel::from_matrix({{0, 1}, {1, 0}}));
}

TEST(Distance, PointsAreEuclidean) {
    auto m = DistanceModel::from_points({{0, 0}, {3, 4}});
    EXPECT_DOUBLE_EQ(m(1, 2), 5.0);
    EXPECT_DOUBLE_EQ(m(2, 1), 5.0);
    EXPECT_THROW(DistanceModel::from_points({{0, 0}, {1}}), std::invalid_argument);
}

TEST(Distance, GraphHopsAndComponents) {
    auto m = DistanceModel::from_graph(4, {{1, 2}, {2, 3}});
    EXPECT_EQ(m(1, 3), 2.0);
    EXPECT_TRUE(std::isinf(m(1, 4)));
    EXPECT_EQ(m(4, 4), 0.0);
}

TEST(Distance, ProfileOrders) {
    auto inst = parse_points(testutil::read_data("grid5.points"));
    auto p = inst.profile();
    EXPECT_EQ(p.acceptable(1), (std::vector<Voter>{2, 5, 3}));
    EXPECT_EQ(p.acceptable(2), (std::vector<Voter>{1, 3, 5}));
    EXPECT_EQ(p.acceptable(4), (std::vector<Voter>{3}));
    EXPECT_EQ(p.acceptable(5), (std::vector<Voter>{1, 3}));
    // Acc, self, 0, then the rest by distance.
    std::vector<Voter> row1(p.ranking(1).begin(), p.ranking(1).end());
    EXPECT_EQ(row1, (std::vector<Voter>{2, 5, 3, 1, 0, 4}));
}

TEST(Distance, AbstainerPutsZeroFirst) {
    DbInstance inst;
    inst.model = DistanceModel::from_matrix({{0, 1}, {1, 0}});
    inst.thresholds = {1, 0};
    inst.abstainers = {1};
    auto p = inst.profile();
    std::vector<Voter> row1(p.ranking(1).begin(), p.ranking(1).end());
    EXPECT_EQ(row1, (std::vector<Voter>{2, 0, 1}));
    EXPECT_TRUE(p.is_abstainer(1));
    EXPECT_THROW(build_db_profile(inst.model, {1, -1}, {}), std::invalid_argument);
    EXPECT_THROW(build_db_profile(inst.model, {1}, {}), std::invalid_argument);
}

TEST(Distance, GridGreedy) {
    auto inst = parse_points(testutil::read_data("grid5.points"));
    auto p = inst.profile();
    auto s = solve_equilibrium_db(p, inst.thresholds);
    EXPECT_EQ(s.order, (std::vector<Voter>{4, 5}));
    EXPECT_EQ(s.gurus, (std::vector<Voter>{4, 5}));
    EXPECT_TRUE(oracle::stable(p, s.delegation));
}

TEST(Distance, ThresholdCheckFindsInconsistency) {
    // 1 accepts 2 with the smaller threshold, 2 does not accept 1.
    PreferenceProfile p({{2, 1, 0}, {2, 0, 1}});
    auto c = check_thresholds(p, {1, 2});
    EXPECT_FALSE(c);
    EXPECT_EQ(c.i, 1);
    EXPECT_EQ(c.j, 2);
    EXPECT_THROW(solve_equilibrium_db(p, {1, 2}), std::invalid_argument);
    EXPECT_TRUE(check_thresholds(p, {3, 2}));
}

TEST(Distance, ModelCheckDetectsDisagreement) {
    auto inst = parse_points(testutil::read_data("grid5.points"));
    auto p = inst.profile();
    EXPECT_TRUE(check_thresholds(p, inst.model, inst.thresholds));
    auto shifted = inst.thresholds;
    shifted[3] = 0.5;
    EXPECT_FALSE(check_thresholds(p, inst.model, shifted));
}

TEST(Distance, GreedyIsStableOnRandomInstances) {
    Rng rng(17);
    for (int rep = 0; rep < 300; ++rep) {
        const int n = 1 + rep % 9;
        auto inst = rep % 3 ? random_db_instance(n, rng) : random_db_instance(n, rng, 1, 3.0, 0.3);
        auto p = inst.profile();
        ASSERT_TRUE(check_thresholds(p, inst.thresholds));
        auto s = solve_equilibrium_db(p, inst.thresholds);
        EXPECT_TRUE(oracle::stable(p, s.delegation));
        EXPECT_TRUE(oracle::is_kernel(p, s.gurus));
    }
}

TEST(Distance, SymmetricProfilesEmbed) {
    Rng rng(19);
    for (int rep = 0; rep < 100; ++rep) {
        auto p = random_symmetric_profile(1 + rep % 8, rng);
        auto inst = symmetric_as_db(p);
        auto q = inst.profile();
        for (Voter i = 1; i <= p.size(); ++i) {
            if (p.is_abstainer(i)) continue;
            auto a = p.acceptable(i), b = q.acceptable(i);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            EXPECT_EQ(a, b);
        }
    }
}

TEST(Distance, PointsRoundTrip) {
    auto inst = parse_points(testutil::read_data("grid5.points"));
    auto again = parse_points(format_points(inst));
    EXPECT_EQ(again.thresholds, inst.thresholds);
    EXPECT_EQ(again.abstainers, inst.abstainers);
    EXPECT_EQ(again.model.points(), inst.model.points());
}

TEST(Distance, GraphRoundTrip) {
    const std::string text = "graph 4\nthresholds 1 2 1 0\nabstainers 4\n1 2\n2 3\n";
    auto inst = parse_db_instance(text);
    EXPECT_EQ(inst.model.source(), DistanceSource::kGraph);
    EXPECT_EQ(format_db_instance(inst), text);
    auto p = inst.profile();
    EXPECT_EQ(p.acceptable(2), (std::vector<Voter>{1, 3}));
    EXPECT_TRUE(p.is_abstainer(4));
}

TEST(Distance, ParseErrorsCarryLines) {
    try {
        parse_points("1 0 0 1 0\n3 1 1 1 0\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2);
    }
    EXPECT_THROW(parse_graph("graph 2\nthresholds 1\n"), ParseError);
    EXPECT_THROW(parse_graph("graph 2\nthresholds 1 1\n1 1\n"), ParseError);
    EXPECT_THROW(parse_points("1 0 0 1 maybe\n"), ParseError);
}
