#include <gtest/gtest.h>

#include <apart/apart.hpp>

using namespace apart;

TEST(MaryCount, MatchesDp)
{
    for (Weight m = 2; m <= 10; ++m) {
        CountTable t(PartSet::mary(m), 2000);
        MaryCounter c(m);
        for (Weight n = 0; n <= 2000; ++n) {
            ASSERT_EQ(c(n), t[n]) << "m=" << m << " n=" << n;
        }
    }
}

TEST(MaryCount, Anchors)
{
    for (Weight m = 2; m <= 8; ++m) {
        EXPECT_EQ(mary_count(m, m), 2);
        EXPECT_EQ(mary_count(m, m * m), m + 2);
        EXPECT_EQ(mary_count(m, m * m * m), (m * m + 4) * (m + 1) / 2 - m);
    }
    EXPECT_EQ(mary_count(4, 20), 8);
    EXPECT_EQ(mary_count(2, 12), 20);
    EXPECT_THROW(mary_count(1, 4), domain_error);
}

TEST(MaryCount, NonMonotoneQueries)
{
    MaryCounter c(3);
    EXPECT_EQ(c(300), mary_count(3, 300));
    EXPECT_EQ(c(5), 2);
    EXPECT_EQ(c(0), 1);
}

TEST(LemmaRegion, Classification)
{
    EXPECT_EQ(mary_lemma_region(3, 2, 10), LemmaRegion::small_w);
    EXPECT_EQ(mary_lemma_region(2, 3, 20), LemmaRegion::L1);
    EXPECT_EQ(mary_lemma_region(2, 3, 19), LemmaRegion::uncovered);
    EXPECT_EQ(mary_lemma_region(4, 5, 6), LemmaRegion::L2);
    EXPECT_EQ(mary_lemma_region(4, 5, 9), LemmaRegion::uncovered);
    EXPECT_EQ(mary_lemma_region(6, 7, 20), LemmaRegion::L2);
    EXPECT_EQ(mary_lemma_region(4, 8, 24), LemmaRegion::L3);
    EXPECT_EQ(mary_lemma_region(4, 8, 25), LemmaRegion::uncovered);
    EXPECT_EQ(mary_lemma_region(3, 6, 12), LemmaRegion::uncovered); // L3 needs m >= 4
    EXPECT_THROW(mary_lemma_region(3, 5, 4), domain_error);
}

TEST(GapValidator, Verdicts)
{
    using enum GapStatus;
    auto status = [](const PartSet &s, GapMode m) { return gap_validator(s, m).status; };
    EXPECT_EQ(status(PartSet::mary(2), GapMode::theorem), certified_pass);
    EXPECT_EQ(status(PartSet::power(3), GapMode::theorem), certified_pass);
    EXPECT_EQ(status(PartSet::power(5), GapMode::theorem), certified_pass);
    EXPECT_EQ(status(PartSet::factorial(), GapMode::theorem), certified_pass);
    EXPECT_EQ(status(PartSet::power(2), GapMode::theorem), certified_fail);
    EXPECT_EQ(status(PartSet::power(2), GapMode::proposition), certified_pass);
    EXPECT_EQ(status(PartSet::fibonacci(), GapMode::theorem), certified_fail);
    EXPECT_EQ(status(PartSet::fibonacci(), GapMode::proposition), certified_pass);
    EXPECT_EQ(status(PartSet::all_integers(), GapMode::theorem), certified_fail);
    EXPECT_EQ(status(PartSet::explicit_parts({1, 2, 5}), GapMode::theorem), not_applicable);

    auto v = gap_validator(PartSet::power(2), GapMode::theorem);
    EXPECT_EQ(v.witness, "a_4 - a_3 = 16 - 9 = 7 < 9 = a_3");
    auto ok = gap_validator(PartSet::power(3), GapMode::theorem);
    EXPECT_FALSE(ok.caveat.empty());
    EXPECT_GE(ok.checked_up_to, 64u);
}

TEST(ClosedForm, PredictedValues)
{
    EXPECT_EQ(*predicted_max(PartSet::mary(3), 10), 8);
    EXPECT_EQ(*predicted_max(PartSet::power(2), 17), 16);
    EXPECT_EQ(*predicted_max(PartSet::fibonacci(), 8), 18);
    EXPECT_EQ(*predicted_max(PartSet::fibonacci(), 7), 12);
    EXPECT_EQ(*predicted_max(PartSet::fibonacci(), 9), 27);
    EXPECT_EQ(*predicted_max(PartSet::fibonacci(), 13), 108);
    EXPECT_EQ(*predicted_max(PartSet::fibonacci(), 1), 1);
    EXPECT_EQ(*predicted_max(PartSet::factorial(), 7), 8);
    EXPECT_EQ(*predicted_max(PartSet::all_integers(), 11), 77);
    EXPECT_FALSE(predicted_max(PartSet::all_integers(), 7));
    EXPECT_FALSE(predicted_max(PartSet::explicit_parts({1, 2}), 7));
}

TEST(ClosedForm, MaxFormulaCheck)
{
    std::vector<PartSet> sets{PartSet::mary(2), PartSet::mary(3), PartSet::mary(4), PartSet::power(2),
                              PartSet::power(3), PartSet::fibonacci(), PartSet::factorial()};
    for (const auto &s : sets) {
        CountTable t(s, 60);
        MaxTable mt(t);
        for (Weight n = 0; n <= 60; ++n) {
            auto v = max_formula_check(s, n, mt.result(n, 256));
            EXPECT_EQ(v.status, FormulaStatus::pass) << s.spec() << " n=" << n;
        }
    }
}

TEST(ClosedForm, AllIntegersIsReportOnly)
{
    CountTable t(PartSet::all_integers(), 40);
    MaxTable mt(t);
    for (Weight n = 8; n <= 40; ++n) {
        auto v = max_formula_check(PartSet::all_integers(), n, mt.result(n));
        EXPECT_EQ(v.status, FormulaStatus::report_only);
        EXPECT_TRUE(v.value_matches) << n;
    }
    EXPECT_EQ(max_formula_check(PartSet::explicit_parts({1, 3}), 5, max_value(PartSet::explicit_parts({1, 3}), 5))
                  .status,
              FormulaStatus::not_applicable);
}

TEST(ClosedForm, WitnessStructure)
{
    // power(2): maximizers use only 1, 4, 9, with at most three 9s and three 1s.
    CountTable sq(PartSet::power(2), 120);
    MaxTable msq(sq);
    for (Weight n = 1; n <= 120; ++n) {
        for (const auto &p : msq.result(n, 256).witnesses) {
            for (Weight a : p.parts()) {
                EXPECT_TRUE(a == 1 || a == 4 || a == 9) << p.str();
            }
            EXPECT_LE(p.multiplicity(9), 3u);
            EXPECT_LE(p.multiplicity(1), 3u);
        }
    }
    // fib: for n >= 2 only 2, 3, 5 appear, at most two 2s and two 5s.
    CountTable fb(PartSet::fibonacci(), 120);
    MaxTable mfb(fb);
    for (Weight n = 2; n <= 120; ++n) {
        for (const auto &p : mfb.result(n, 256).witnesses) {
            for (Weight a : p.parts()) {
                EXPECT_TRUE(a == 2 || a == 3 || a == 5) << p.str();
            }
            EXPECT_LE(p.multiplicity(2), 2u);
            EXPECT_LE(p.multiplicity(5), 2u);
        }
    }
}

TEST(ClosedForm, SmallCasesDropNegativeShapes)
{
    // n = 6 for power(2): the 9-shapes do not apply.
    auto w = predicted_witnesses(PartSet::power(2), 6);
    ASSERT_EQ(w.size(), 1u);
    EXPECT_EQ(w[0], Partition({4, 1, 1}));
    auto f = predicted_witnesses(PartSet::fibonacci(), 4);
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f[0], Partition({2, 2}));
}
