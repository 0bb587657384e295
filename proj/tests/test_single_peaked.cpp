#include "ldeq/digraph.hpp"
#include "ldeq/generate.hpp"
#include "ldeq/single_peaked.hpp"

#include "oracle.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace ldeq;

namespace {

using Arcs = std::vector<std::pair<int, int>>;

// Kernel test on the voters of [lo, hi] only, with hi = n+1 or lo = 0 meaning
// the side is open.
bool kernel_of_window(const PreferenceProfile& p, Voter lo, Voter hi, const std::vector<Voter>& k) {
    std::vector<Voter> window;
    for (Voter v = std::max(lo, 1); v <= std::min(hi, p.size()); ++v) {
        if (!oracle::abstains(p, v)) window.push_back(v);
    }
    for (Voter a : k) {
        for (Voter b : k) {
            if (oracle::accepts(p, a, b)) return false;
        }
    }
    for (Voter v : window) {
        if (std::find(k.begin(), k.end(), v) != k.end()) continue;
        if (std::none_of(k.begin(), k.end(), [&](Voter m) { return oracle::accepts(p, v, m); })) return false;
    }
    return true;
}

struct Best {
    std::int64_t value = 0;
    std::vector<Voter> gurus;
};

template <class Score>
Best brute_min(const oracle::Sets& kernels, Score score) {
    Best b;
    bool first = true;
    for (const auto& k : kernels) {
        auto v = score(k);
        if (first || v < b.value) {
            b = {v, k};
            first = false;
        }
    }
    return b;
}

} // namespace

TEST(SinglePeaked, ExampleProfileIsSinglePeaked) {
    EXPECT_TRUE(check_single_peaked(testutil::load_profile("sp4.profile")));
}

TEST(SinglePeaked, LeastWitness) {
    auto v = check_single_peaked(testutil::load_profile("cyclic3.profile"));
    // 3: 1 > 3 > 2 puts 1 above 2, which lies between them.
    ASSERT_FALSE(v);
    EXPECT_EQ(v.i, 3);
    EXPECT_EQ(v.j, 2);
    EXPECT_EQ(v.k, 1);
}

TEST(SinglePeaked, CheckAgreesWithTripleDefinition) {
    Rng rng(5);
    for (int rep = 0; rep < 400; ++rep) {
        const int n = 1 + rep % 7;
        auto p = rep % 2 ? random_profile(n, rng) : random_sp_profile(n, rng);
        EXPECT_EQ(static_cast<bool>(check_single_peaked(p)), oracle::single_peaked_by_triples(p));
    }
}

TEST(SinglePeaked, GeneratorIsSinglePeaked) {
    Rng rng(9);
    for (int rep = 0; rep < 100; ++rep) EXPECT_TRUE(check_single_peaked(random_sp_profile(1 + rep % 20, rng)));
}

TEST(SinglePeaked, AxisProfileRejectsNonSinglePeaked) {
    EXPECT_THROW(AxisProfile(testutil::load_profile("cyclic3.profile")), std::invalid_argument);
}

TEST(SinglePeaked, IntervalCatchForm) {
    AxisProfile ap(testutil::load_profile("sp4.profile"));
    auto icf = interval_catch_form(ap);
    EXPECT_EQ(icf.size(), 4);
    // Acc(1)={2}, Acc(2)={3,4}, Acc(3)={2,1}, Acc(4)={3}.
    EXPECT_EQ(icf.l, (std::vector<Voter>{1, 2, 1, 3}));
    EXPECT_EQ(icf.r, (std::vector<Voter>{2, 4, 3, 4}));
}

TEST(SinglePeaked, ExampleAuxiliaryArcs) {
    AxisProfile ap(testutil::load_profile("sp4.profile"));
    auto aux = build_auxiliary(ap);
    EXPECT_EQ(aux.arc_list(), (Arcs{{0, 1}, {0, 2}, {1, 4}, {3, 5}, {4, 5}}));
    const AuxArc* a = aux.find(1, 4);
    ASSERT_NE(a, nullptr);
    EXPECT_EQ(a->dissatisfaction, 3);
    EXPECT_EQ(a->abstentions, 0);
    EXPECT_EQ(a->to_tail, 1);
    EXPECT_EQ(a->to_head, 1);
    EXPECT_EQ(oracle::path_sets(aux), (oracle::Sets{{1, 4}}));
}

TEST(SinglePeaked, ArcCriterionMatchesWindowKernels) {
    Rng rng(21);
    for (int rep = 0; rep < 300; ++rep) {
        const int n = 1 + rep % 12;
        auto p = random_sp_profile(n, rng);
        AxisProfile ap(p);
        auto aux = build_auxiliary(ap, false);
        for (int u = 0; u <= n; ++u) {
            for (int v = u + 1; v <= n + 1; ++v) {
                if (u == 0 && v == n + 1) continue;
                bool endpoints_ok = (u == 0 || !oracle::abstains(p, u)) && (v == n + 1 || !oracle::abstains(p, v));
                std::vector<Voter> k;
                if (u != 0) k.push_back(u);
                if (v != n + 1) k.push_back(v);
                bool expected = endpoints_ok && kernel_of_window(p, u, v, k);
                ASSERT_EQ(aux.find(u, v) != nullptr, expected) << "n=" << n << " arc " << u << "," << v;
            }
        }
    }
}

TEST(SinglePeaked, PathsAreKernels) {
    Rng rng(31);
    for (int rep = 0; rep < 300; ++rep) {
        auto p = random_sp_profile(1 + rep % 10, rng);
        if (p.non_abstainers().empty()) continue;
        auto aux = build_auxiliary(AxisProfile(p));
        EXPECT_EQ(oracle::path_sets(aux), oracle::kernels_by_subsets(p));
    }
}

TEST(SinglePeaked, SolversMatchBruteForce) {
    Rng rng(41);
    for (int rep = 0; rep < 300; ++rep) {
        const int n = 1 + rep % 10;
        auto p = random_sp_profile(n, rng);
        AxisProfile ap(p);
        auto kernels = oracle::kernels_by_subsets(p);
        if (p.non_abstainers().empty()) {
            EXPECT_TRUE(solve_equilibrium_sp(ap).degenerate);
            EXPECT_EQ(minabst_sp(ap).value, n);
            continue;
        }
        ASSERT_FALSE(kernels.empty());

        auto eq = solve_equilibrium_sp(ap);
        EXPECT_EQ(eq.gurus, kernels.front());
        EXPECT_TRUE(oracle::stable(p, eq.delegation));

        auto dis = brute_min(kernels, [&](const auto& k) { return oracle::evaluate_kernel(p, k).dissatisfaction; });
        auto s = mindis_sp(ap);
        EXPECT_EQ(s.value, dis.value);
        EXPECT_EQ(s.gurus, dis.gurus);
        EXPECT_EQ(measure_dissatisfaction(p, s.delegation), dis.value);
        EXPECT_TRUE(oracle::stable(p, s.delegation));

        auto abst = brute_min(kernels, [&](const auto& k) { return std::int64_t{oracle::evaluate_kernel(p, k).abstentions}; });
        s = minabst_sp(ap);
        EXPECT_EQ(s.value, abst.value);
        EXPECT_EQ(s.gurus, abst.gurus);
        EXPECT_TRUE(oracle::stable(p, s.delegation));

        auto vp = brute_min(kernels, [&](const auto& k) { return std::int64_t{*oracle::evaluate_kernel(p, k).max_vp}; });
        s = minmaxvp_sp(ap);
        EXPECT_EQ(s.value, vp.value);
        EXPECT_EQ(s.gurus, vp.gurus);
        EXPECT_EQ(measure_max_voting_power(p, s.delegation), vp.value);
        EXPECT_TRUE(oracle::stable(p, s.delegation));

        for (Voter i = 1; i <= n; ++i) {
            bool expected = std::any_of(kernels.begin(), kernels.end(), [&](const auto& k) {
                return std::binary_search(k.begin(), k.end(), i);
            });
            auto ans = memb_sp(ap, i);
            EXPECT_EQ(ans.member, expected);
            EXPECT_EQ(ans.abstainer, p.is_abstainer(i));
            if (ans.member) {
                ASSERT_TRUE(ans.witness);
                EXPECT_TRUE(std::binary_search(ans.witness->gurus.begin(), ans.witness->gurus.end(), i));
                EXPECT_TRUE(oracle::stable(p, ans.witness->delegation));
            }
        }
    }
}

TEST(SinglePeaked, AllAbstainersIsDegenerate) {
    PreferenceProfile p({{0, 1, 2}, {0, 2, 1}});
    AxisProfile ap(p);
    auto aux = build_auxiliary(ap);
    EXPECT_EQ(aux.arc_count(), 0u);
    auto s = solve_equilibrium_sp(ap);
    EXPECT_TRUE(s.degenerate);
    EXPECT_EQ(s.delegation, Delegation::all_abstain(2));
    EXPECT_FALSE(minmaxvp_sp(ap).value.has_value());
    EXPECT_TRUE(memb_sp(ap, 1).abstainer);
}

TEST(SinglePeaked, LargeInstanceRuns) {
    Rng rng(1);
    auto p = random_sp_profile(400, rng);
    AxisProfile ap(p);
    auto s = solve_equilibrium_sp(ap);
    EXPECT_TRUE(is_nash_stable(p, s.delegation));
}
