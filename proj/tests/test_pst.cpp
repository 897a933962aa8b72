#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "vpst/oracle.hpp"
#include "vpst/pst.hpp"

using namespace vpst;

namespace {

/// Synthetic table whose values are all taken as integers, skipping the trace identities.
SpectrumTable integral_table(const GroupParams& g, const std::vector<double>& values) {
    auto t = SpectrumTable::synthetic(g, static_cast<int>(values.front()), values);
    for (auto& e : t.eigenvalues()) {
        e.is_integer = true;
        e.integer_value = static_cast<std::int64_t>(e.value);
    }
    t.set_all_integral(true);
    return t;
}

ConnectionSet full_set(const GroupParams& g) {
    std::vector<GroupElement> all;
    for (const auto& x : all_elements(g))
        if (x != identity()) all.push_back(x);
    return validate_connection_set(g, all);
}

PstErrorKind error_kind(auto&& f) {
    try {
        f();
    } catch (const PstError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no PstError thrown";
    return PstErrorKind::same_vertex;
}

}  // namespace

TEST(Valuation, Examples) {
    EXPECT_TRUE(nu2(0).is_infinite());
    EXPECT_EQ(nu2(12), Valuation::finite(2));
    EXPECT_EQ(nu2(-8), Valuation::finite(3));
    EXPECT_EQ(nu2(1), Valuation::finite(0));
    EXPECT_EQ(nu2(std::numeric_limits<std::int64_t>::min()), Valuation::finite(63));
    EXPECT_GT(Valuation::infinite(), Valuation::finite(1000));
    EXPECT_EQ(Valuation::infinite().to_string(), "inf");
}

TEST(Valuation, ProductAndSumRules) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> dist(-(1 << 20), 1 << 20);
    for (int t = 0; t < 10000; ++t) {
        const auto x = dist(rng) * (1 << (t % 7));
        const auto y = dist(rng);
        EXPECT_EQ(nu2(x * y), nu2(x) + nu2(y));
        const auto s = nu2(x + y);
        EXPECT_GE(s, std::min(nu2(x), nu2(y)));
        if (nu2(x) != nu2(y)) {
            EXPECT_EQ(s, std::min(nu2(x), nu2(y)));
        }
    }
}

TEST(GapGcd, Examples) {
    // n = 1: theta_1..4, psi_0
    EXPECT_EQ(gap_gcd(integral_table(GroupParams(1), {13, 9, 5, 1, 13})), 4);
    EXPECT_EQ(gap_gcd(eigenvalues(full_set(GroupParams(1)))), 8);
    EXPECT_EQ(error_kind([] { gap_gcd(integral_table(GroupParams(1), {3, 3, 3, 3, 3})); }),
              PstErrorKind::degenerate_spectrum);
    auto irrational = SpectrumTable::synthetic(GroupParams(1), 3, {3, 1, -1, -3, std::sqrt(2.0)});
    check_integrality(irrational);
    EXPECT_EQ(error_kind([&] { gap_gcd(irrational); }), PstErrorKind::not_integral);
}

TEST(Decisions, Errors) {
    const auto odd = eigenvalues(full_set(GroupParams(1)));
    const auto even = eigenvalues(full_set(GroupParams(2)));
    EXPECT_EQ(error_kind([&] { classify_pair_odd({3}, {3}, odd); }), PstErrorKind::same_vertex);
    EXPECT_EQ(error_kind([&] { classify_pair_even({3}, {3}, even); }), PstErrorKind::same_vertex);
    EXPECT_EQ(error_kind([&] { classify_pair_odd({0}, {4}, even); }), PstErrorKind::even_n);
    EXPECT_EQ(error_kind([&] { classify_pair_even({0}, {4}, odd); }), PstErrorKind::odd_n);
    EXPECT_EQ(error_kind([&] { classify_graph_type(odd); }), PstErrorKind::odd_n);
    EXPECT_THROW(classify_pair_odd({0}, {8}, odd), std::out_of_range);
}

TEST(Decisions, TypeOneSyntheticSpectrum) {
    // n = 2: theta_1..8, psi_1, phi_1; gaps to beta_1 and gamma_1 are 2, the rest 0 mod 4
    const auto t = integral_table(GroupParams(2), {10, 6, 2, -2, 6, 2, -2, -6, 8, 8});
    EXPECT_EQ(classify_graph_type(t), (TypeClassification{true, false, false}));
    // n = 2 is 2 mod 4: Type 1 fires on opposite blocks at distance 3n or 5n
    const auto v = classify_pair_even({2}, {8}, t);
    EXPECT_TRUE(v.has_pst);
    EXPECT_EQ(v.clause, Clause::type1_opposite_block);
    EXPECT_EQ(v.M, 2);
    EXPECT_DOUBLE_EQ(v.min_time, std::numbers::pi / 2);
    EXPECT_TRUE(classify_pair_even({0}, {10}, t).has_pst);
    EXPECT_FALSE(classify_pair_even({0}, {2}, t).has_pst);
    EXPECT_EQ(classify_pair_even({0}, {8}, t).clause, Clause::no_type_match);
}

TEST(Decisions, TypeThreeAntipodal) {
    // n = 2, Type 3: alpha_even and gamma gaps share the baseline, alpha_odd and beta gaps exceed it
    const auto t = integral_table(GroupParams(2), {12, 10, 8, 10, 4, 10, 8, 10, 4, 10});
    EXPECT_EQ(classify_graph_type(t), (TypeClassification{false, false, true}));
    const auto v = classify_pair_even({1}, {9}, t);
    EXPECT_TRUE(v.has_pst);
    EXPECT_EQ(v.clause, Clause::type3_antipodal);
    EXPECT_EQ(v.M, 2);
}

TEST(Decisions, NonIntegralHasNoType) {
    auto t = SpectrumTable::synthetic(GroupParams(2), 3, {3, 1, 1, 1, 1, 1, 1, 1, std::sqrt(2.0), 1});
    check_integrality(t);
    EXPECT_EQ(classify_graph_type(t), TypeClassification{});
    EXPECT_EQ(classify_pair_even({0}, {8}, t).clause, Clause::not_integral);
    EXPECT_TRUE(all_pst_pairs(t).empty());
}

TEST(Decisions, RegionNoGos) {
    const GroupParams g(3);
    const auto t = eigenvalues(full_set(g));
    EXPECT_EQ(classify_pair_odd({0}, {1}, t).clause, Clause::no_go_blocks_12);
    EXPECT_EQ(classify_pair_odd({0}, {7}, t).clause, Clause::no_go_blocks_12);
    EXPECT_EQ(classify_pair_odd({0}, {20}, t).clause, Clause::no_go_blocks_14);
    EXPECT_EQ(classify_pair_odd({7}, {13}, t).clause, Clause::no_go_blocks_23);
    EXPECT_EQ(classify_pair_odd({13}, {23}, t).clause, Clause::no_go_blocks_34);
    // V1 to V3 at distance 3n
    const auto v = classify_pair_odd({3}, {12}, t);
    EXPECT_FALSE(v.has_pst);
    EXPECT_EQ(v.clause, Clause::displacement_mismatch);

    const GroupParams e(2);
    const auto te = eigenvalues(full_set(e));
    EXPECT_EQ(classify_pair_even({0}, {4}, te).clause, Clause::no_go_cross_12);
    EXPECT_EQ(classify_pair_even({12}, {0}, te).clause, Clause::no_go_cross_14);
    EXPECT_EQ(classify_pair_even({4}, {8}, te).clause, Clause::no_go_cross_23);
    EXPECT_EQ(classify_pair_even({8}, {12}, te).clause, Clause::no_go_cross_34);
}

TEST(Decisions, CompleteGraphHasNoPairs) {
    for (int n = 1; n <= 4; ++n) EXPECT_TRUE(all_pst_pairs(eigenvalues(full_set(GroupParams(n)))).empty()) << n;
}

TEST(Decisions, StructuralProperties) {
    for (int n = 1; n <= 6; ++n) {
        const GroupParams g(n);
        for (const auto& set : enumerate_connection_sets(g, n <= 4 ? 64 : 4)) {
            const auto t = eigenvalues(set);
            const auto pairs = all_pst_pairs(t);
            std::set<double> times;
            for (const auto& p : pairs) {
                times.insert(p.min_time);
                const auto d = displacements(p.clause, n);
                EXPECT_NE(std::find(d.begin(), d.end(), std::abs(p.u.idx - p.v.idx)), d.end());
                // symmetric in (u, v)
                EXPECT_TRUE(classify_pair(p.v, p.u, t).has_pst);
                for (const auto& e : t.eigenvalues()) EXPECT_EQ((*t.alpha(1).integer_value - *e.integer_value) % p.M, 0);
            }
            EXPECT_LE(times.size(), 1u);
            if (!g.is_odd()) {
                const auto types = classify_graph_type(t);
                // at most one clause per pair
                for (int u = 0; u < g.order(); ++u)
                    for (int v = u + 1; v < g.order(); ++v) {
                        int fired = 0;
                        for (auto c : {Clause::type1_same_block, Clause::type1_opposite_block, Clause::type2_same_block,
                                       Clause::type2_opposite_block, Clause::type3_antipodal}) {
                            const auto d = displacements(c, n);
                            const bool disp = std::find(d.begin(), d.end(), v - u) != d.end();
                            const int gap = std::abs(static_cast<int>(region_of(g, {u})) - static_cast<int>(region_of(g, {v})));
                            const bool region = c == Clause::type3_antipodal ||
                                                (c == Clause::type1_same_block || c == Clause::type2_same_block
                                                     ? gap == 0
                                                     : gap == 2);
                            const bool type = (c == Clause::type1_same_block || c == Clause::type1_opposite_block)
                                                  ? types.type1
                                                  : (c == Clause::type3_antipodal ? types.type3 : types.type2);
                            const bool parity_ok =
                                c == Clause::type3_antipodal ||
                                ((c == Clause::type1_same_block || c == Clause::type2_opposite_block) ==
                                 (n % 4 == 0));
                            fired += disp && region && type && parity_ok && t.all_integral() ? 1 : 0;
                        }
                        EXPECT_LE(fired, 1);
                        EXPECT_EQ(classify_pair_even({u}, {v}, t, types).has_pst, fired == 1);
                    }
            }
        }
    }
}

TEST(Decisions, AgreeWithOracleSmallN) {
    const auto grid = uniform_grid(2000);
    for (int n = 1; n <= 2; ++n) {
        const GroupParams g(n);
        for (const auto& set : enumerate_connection_sets(g, 64)) {
            const auto t = eigenvalues(set);
            const DenseWalk walk(adjacency(set));
            auto times = grid;
            if (t.all_integral())
                for (double c : candidate_times(gap_gcd(t))) times.push_back(c);
            const auto scan = walk.scan(times, 1.0 - 1e-4);
            for (int u = 0; u < g.order(); ++u)
                for (int v = u + 1; v < g.order(); ++v) {
                    const auto verdict = classify_pair({u}, {v}, t);
                    if (verdict.has_pst)
                        EXPECT_GT(std::abs(walk.entry(u, v, verdict.min_time)), 1.0 - 1e-6);
                    else
                        EXPECT_LT(scan.max_abs(u, v), 1.0 - 1e-4) << "n = " << n << " (" << u << ", " << v << ")";
                }
        }
    }
}
