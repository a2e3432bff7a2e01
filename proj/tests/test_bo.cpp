#include <gtest/gtest.h>

#include <set>

#include <apart/apart.hpp>

using namespace apart;

namespace
{

using PairSet = std::set<std::tuple<Weight, Weight, bool>>;

PairSet pairs_of(const std::vector<ExceptionRecord> &ex)
{
    PairSet out;
    for (const auto &e : ex) {
        out.emplace(e.outcome.w, e.outcome.z, e.equality);
    }
    return out;
}

PairSet uncovered_table(Weight m)
{
    Weight bound = mary_scan_bound(m);
    CountTable t(PartSet::mary(m), bound);
    return pairs_of(uncovered_only(m, scan_sums(t, m, bound)));
}

} // namespace

TEST(Pair, Relation)
{
    CountTable t(PartSet::mary(2), 20);
    auto o = bo_check_pair(t, 2, 2);
    EXPECT_EQ(o.lhs, 4);
    EXPECT_EQ(o.rhs, 4);
    EXPECT_EQ(o.relation, Relation::equal);
    EXPECT_EQ(bo_check_pair(t, 1, 1).relation, Relation::less);
    EXPECT_TRUE(bo_check_pair(t, 6, 8).strict());
    EXPECT_THROW(bo_check_pair(t, 10, 11), bound_error);
}

TEST(Scan, UncoveredPairsSmallM)
{
    EXPECT_EQ(uncovered_table(2),
              (PairSet{{2, 2, true}, {2, 3, true}, {3, 3, false}, {3, 5, false}, {3, 7, false}, {3, 9, true}}));
    EXPECT_EQ(uncovered_table(3), (PairSet{{4, 5, false},
                                           {4, 8, false},
                                           {5, 5, false},
                                           {5, 7, false},
                                           {5, 8, false},
                                           {7, 8, true},
                                           {8, 8, true}}));
    auto m4 = uncovered_table(4);
    EXPECT_EQ(m4.size(), 12u);
    for (const auto &[w, z, eq] : m4) {
        EXPECT_TRUE(eq) << w << "," << z;
    }
}

TEST(Scan, OrderedAndThreadIndependent)
{
    CountTable t(PartSet::mary(3), 60);
    auto one = scan_sums(t, 1, 60, 1);
    auto four = scan_sums(t, 1, 60, 4);
    ASSERT_EQ(one.size(), four.size());
    for (std::size_t k = 0; k < one.size(); ++k) {
        EXPECT_EQ(one[k].outcome.w, four[k].outcome.w);
        EXPECT_EQ(one[k].outcome.z, four[k].outcome.z);
        if (k > 0) {
            EXPECT_LT(std::make_pair(one[k - 1].outcome.w, one[k - 1].outcome.z),
                      std::make_pair(one[k].outcome.w, one[k].outcome.z));
        }
    }
}

TEST(Scan, MaryFiveEquality)
{
    CountTable t(PartSet::mary(5), 20);
    EXPECT_EQ(bo_check_pair(t, 9, 9).relation, Relation::equal);
}

TEST(Threshold, SmallM)
{
    EXPECT_EQ(mary_threshold(2).threshold, 13u);
    EXPECT_EQ(mary_threshold(3).threshold, 17u);
    EXPECT_EQ(mary_threshold(4).threshold, 23u);
    for (Weight m = 5; m <= 7; ++m) {
        auto r = mary_threshold(m);
        EXPECT_EQ(r.threshold, 4 * m - 1);
        ASSERT_TRUE(r.witness);
        EXPECT_EQ(r.witness->outcome.w + r.witness->outcome.z, 4 * m - 2);
    }
}

TEST(Threshold, InconclusiveWhenScanTooShort)
{
    CountTable t(PartSet::mary(2), 20);
    EXPECT_THROW(find_threshold(t, 2, 20), inconclusive_error);
}

TEST(MiddleLemma, EqualityReading)
{
    for (Weight m = 4; m <= 10; ++m) {
        auto a = audit_middle_lemma(m);
        EXPECT_GT(a.pairs, 0u);
        EXPECT_TRUE(a.equal_below_3m.empty()) << m;
        EXPECT_TRUE(a.strict_at_or_above_3m.empty()) << m;
        EXPECT_TRUE(a.less.empty()) << m;
    }
}

TEST(Hypotheses, Report)
{
    auto r = check_hypotheses(PartSet::power(3), 500, GapMode::theorem);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.items.front().scope, "closed-form");

    auto all = check_hypotheses(PartSet::all_integers(), 100, GapMode::theorem);
    auto failed = all.failed();
    EXPECT_NE(std::find(failed.begin(), failed.end(), second_part_hypothesis), failed.end());
    EXPECT_NE(std::find(failed.begin(), failed.end(), gap_hypothesis_name(GapMode::theorem)), failed.end());

    auto ex = check_hypotheses(PartSet::explicit_parts({1, 2, 6, 13, 20, 27, 34}), 100, GapMode::theorem);
    EXPECT_TRUE(ex.passed());
    EXPECT_EQ(ex.items.front().scope, "scan<=100");

    EXPECT_THROW(check_hypotheses(PartSet::explicit_parts({1, 2}), 100, GapMode::theorem), domain_error);
    EXPECT_THROW(check_hypotheses(PartSet::explicit_parts({1, 2, 5}), 100, GapMode::proposition), domain_error);
}

TEST(Scheme, Choices)
{
    auto th = theorem_scheme(PartSet::power(3));
    EXPECT_EQ(th.L, 27u);
    EXPECT_EQ(th.window_lo(), 54u);
    EXPECT_EQ(th.window_hi(), 69u);
    EXPECT_TRUE(th.legal());

    auto sq = default_scheme(PartSet::power(2));
    EXPECT_EQ(sq.variant, Variant::g);
    EXPECT_EQ(sq.L, 12u);
    EXPECT_EQ(sq.window_lo(), 24u);
    EXPECT_EQ(sq.window_hi(), 31u);

    auto fib = default_scheme(PartSet::fibonacci());
    EXPECT_EQ(fib.variant, Variant::g);
    EXPECT_EQ(fib.L, 6u);
    EXPECT_EQ(fib.window_hi(), 15u);

    auto fac = default_scheme(PartSet::factorial());
    EXPECT_EQ(fac.variant, Variant::f);
    EXPECT_EQ(fac.L, 6u);

    EXPECT_FALSE(proposition_scheme(PartSet::power(2), 8).legal());
}

TEST(Certificate, Valid)
{
    for (const auto &set : {PartSet::power(3), PartSet::power(4), PartSet::fibonacci(), PartSet::factorial(),
                            PartSet::power(2)}) {
        auto c = certify_bo(set, default_scheme(set));
        EXPECT_TRUE(c.valid) << set.spec();
        EXPECT_TRUE(c.failures.empty());
        EXPECT_TRUE(c.window.pass);
        EXPECT_FALSE(c.caveats.empty());
    }
}

TEST(Certificate, AllIntegersInvalid)
{
    auto c = certify_bo(PartSet::all_integers(), default_scheme(PartSet::all_integers()));
    EXPECT_FALSE(c.valid);
    auto named = [&](const std::string &h) {
        return std::find(c.failures.begin(), c.failures.end(), "hypothesis failed: " + h) != c.failures.end();
    };
    EXPECT_TRUE(named(second_part_hypothesis));
    EXPECT_TRUE(named(gap_hypothesis_name(GapMode::theorem)));
}

TEST(Certificate, IllegalSchemeAndShortTable)
{
    auto set = PartSet::power(2);
    auto c = certify_bo(set, proposition_scheme(set, 8));
    EXPECT_FALSE(c.valid);
    auto short_table = certify_bo(set, default_scheme(set), CountTable(set, 20));
    EXPECT_FALSE(short_table.valid);
}

TEST(SpotScan, PowerFamilies)
{
    CountTable sq(PartSet::power(2), 300);
    EXPECT_TRUE(scan_sums(sq, 12, 300).empty());
    CountTable cu(PartSet::power(3), 300);
    EXPECT_TRUE(scan_sums(cu, 27, 300).empty());
}

TEST(Conjecture, Deterministic)
{
    ConjectureConfig cfg;
    cfg.sets = 4;
    cfg.bound = 60;
    auto a = conjecture_scan(cfg);
    auto b = conjecture_scan(cfg, 3);
    ASSERT_EQ(a.size(), 4u);
    for (std::size_t k = 0; k < a.size(); ++k) {
        EXPECT_EQ(a[k].set, b[k].set);
        EXPECT_EQ(a[k].settled, b[k].settled);
    }
    cfg.max_element = 1;
    EXPECT_THROW(conjecture_scan(cfg), domain_error);
}
