#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "curveforge/admissibility.hpp"
#include "curveforge/error.hpp"

using namespace curveforge;

namespace {

bool has(const std::vector<Violation>& v, Condition c) {
    return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.condition == c; });
}

// Brute force: every multiset of clusters with fields bounded by d and every
// multiset of off-Q entries, filtered by validate (Q multiplicity pruned).
std::set<DataSpec> brute_force(int d, int g) {
    const int M = d - 2;
    const int T = d - g - 2;
    std::set<DataSpec> out;
    if (T < 0) return out;
    std::vector<QCluster> cands;
    for (int k = 1; k <= M; ++k)
        for (int a = 0; a <= T; ++a) {
            cands.push_back(QCluster::single(k, a));
            for (int kp = k; kp <= M; ++kp)
                if (a >= 1) cands.push_back(QCluster::pair(k, kp, a));
        }
    std::vector<OffQSing> offs;
    for (int b = 1; b <= T; ++b) {
        offs.push_back(OffQSing::tacnode(b));
        offs.push_back(OffQSing::cusp(b));
    }
    std::vector<std::vector<OffQSing>> off_sets;
    std::function<void(size_t, int, std::vector<OffQSing>&)> gen_off = [&](size_t start, int budget,
                                                                          std::vector<OffQSing>& cur) {
        off_sets.push_back(cur);
        for (size_t i = start; i < offs.size(); ++i)
            if (offs[i].b <= budget) {
                cur.push_back(offs[i]);
                gen_off(i, budget - offs[i].b, cur);
                cur.pop_back();
            }
    };
    std::vector<OffQSing> tmp;
    gen_off(0, T, tmp);
    std::function<void(size_t, int, std::vector<QCluster>&)> gen_q = [&](size_t start, int mult,
                                                                        std::vector<QCluster>& cur) {
        if (mult == M)
            for (const auto& off : off_sets) {
                DataSpec m(cur, off);
                if (validate(d, g, m).empty()) out.insert(m);
            }
        for (size_t i = start; i < cands.size(); ++i) {
            if (mult + cands[i].mult() > M) continue;
            cur.push_back(cands[i]);
            gen_q(i, mult + cands[i].mult(), cur);
            cur.pop_back();
        }
    };
    std::vector<QCluster> q;
    gen_q(0, 0, q);
    return out;
}

}  // namespace

TEST(Validate, Examples) {
    EXPECT_TRUE(validate(7, 1, parse_data("[(5), (2_1), (2_1), (2_1), (2_1)]")).empty());
    EXPECT_TRUE(has(validate(6, 1, DataSpec({QCluster::pair(2, 2, 1)}, {OffQSing::cusp(1), OffQSing::cusp(1)})),
                    Condition::C3));
    // five cusps, no Single tails, g = 1
    DataSpec five({QCluster::single(6, 0)}, std::vector<OffQSing>(5, OffQSing::cusp(1)));
    auto v = validate(8, 1, five);
    ASSERT_EQ(v.size(), 1U);
    EXPECT_EQ(v[0].condition, Condition::C2);
}

TEST(Validate, EachCondition) {
    EXPECT_TRUE(has(validate(7, 1, parse_data("[(4), (2_1), (2_1), (2_1), (2_1)]")), Condition::C1a));
    EXPECT_TRUE(has(validate(7, 2, parse_data("[(5), (2_1), (2_1), (2_1), (2_1)]")), Condition::C1b));
    EXPECT_TRUE(validate(7, 1, parse_data("[(2/3)(1/1)_2, (2_1), (2_1)]")).empty());
    EXPECT_TRUE(has(validate(7, 1, parse_data("[(2/3)(1/1)_3, (2_1)]")), Condition::C3));
    EXPECT_EQ(validate(7, 1, parse_data("[(2/3)(1/1)_3, (2_1)]")).size(), 1U);
    EXPECT_TRUE(has(validate(6, 1, parse_data("[(4, 2_1), (2_1), (2_1)]")), Condition::C4));
    EXPECT_TRUE(has(validate(6, 2, parse_data("[(3, 2_2)]")), Condition::C4));
    EXPECT_TRUE(validate(6, 1, parse_data("[(4, 2_2), (2_1)]")).empty());
    EXPECT_TRUE(has(validate(4, 1, DataSpec({}, {OffQSing::cusp(1)})), Condition::MultQ));
}

TEST(Validate, DetailNamesOffender) {
    auto v = validate(6, 1, parse_data("[(2/2)(1/1)_1, (2_1), (2_1)]"));
    ASSERT_FALSE(v.empty());
    EXPECT_NE(v[0].detail.find("(2/2)(1/1)_1"), std::string::npos);
}

TEST(CorollaryClass, Examples) {
    EXPECT_EQ(corollary_class(parse_data("[(5), (2_1), (2_1), (2_1), (2_1)]")), ClassLabel::a);
    EXPECT_EQ(corollary_class(parse_data("[(3, 2_1)]")), ClassLabel::b);
    EXPECT_EQ(corollary_class(DataSpec({QCluster::pair(1, 1, 1)}, {})), ClassLabel::e);
    EXPECT_EQ(corollary_class(parse_data("[(4, 2_3), (2_1)]")), ClassLabel::c);
    EXPECT_EQ(corollary_class(parse_data("[(2/3)(1/1)_2, (1/1)_1]")), ClassLabel::f);
    EXPECT_EQ(corollary_class(parse_data("[(3) (2), (1/1)_2]")), ClassLabel::aa);
    EXPECT_EQ(corollary_class(parse_data("[(3, 2_1) (2)]")), ClassLabel::ab);
    EXPECT_EQ(corollary_class(parse_data("[(4, 2_2) (1)]")), ClassLabel::ac);
    EXPECT_EQ(corollary_class(parse_data("[(3, 2_1) (3, 2_1)]")), ClassLabel::bb);
    EXPECT_EQ(corollary_class(parse_data("[(3, 2_1) (2, 2_1)]")), ClassLabel::bc);
    EXPECT_EQ(corollary_class(parse_data("[(2, 2_1) (2, 2_1)]")), ClassLabel::cc);
    EXPECT_EQ(corollary_class(parse_data("[(1) (1), (1/1)_2]")), ClassLabel::aa1);
    EXPECT_EQ(corollary_class(parse_data("[(1) (1), (1/1)_1, (1/1)_1]")), ClassLabel::aa2);
    EXPECT_EQ(corollary_class(parse_data("[(1) (1), (1/1)_1]")), ClassLabel::aa3);
    EXPECT_EQ(corollary_class(parse_data("[(1) (1)]")), ClassLabel::aa4);
    EXPECT_EQ(corollary_class(parse_data("[(2) (1), (2_1)]")), ClassLabel::mixed);
    EXPECT_EQ(corollary_class(parse_data("[(2), (1/1)_1]")), ClassLabel::mixed);
}

TEST(CorollaryClass, RejectsInadmissible) {
    try {
        corollary_class(DataSpec({QCluster::pair(2, 2, 1)}, {}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotAdmissible);
    }
}

TEST(CorollaryClass, LabelNamesRoundTrip) {
    for (const char* n : {"a", "b", "c", "e", "f", "aa", "ab", "ac", "bb", "bc", "cc", "aa1", "aa2", "aa3", "aa4", "mixed"})
        EXPECT_EQ(label_name(*parse_label(n)), n);
    EXPECT_FALSE(parse_label("zz").has_value());
}

TEST(Enumerate, FourOne) {
    auto specs = enumerate(4, 1);
    std::vector<std::string> text;
    for (const auto& m : specs) text.push_back(format_data(m));
    EXPECT_EQ(text, (std::vector<std::string>{"[(1/1)(1/1)_1]", "[(2, 2_1)]", "[(2), (1/1)_1]", "[(2), (2_1)]",
                                              "[(1) (1), (1/1)_1]", "[(1) (1), (2_1)]"}));
}

TEST(Enumerate, Counts) {
    EXPECT_EQ(enumerate(4, 2).size(), 2U);
    EXPECT_EQ(enumerate(5, 1).size(), 25U);
    EXPECT_EQ(enumerate(6, 1).size(), 113U);
    EXPECT_EQ(enumerate(6, 2).size(), 48U);
    EXPECT_EQ(enumerate(7, 1).size(), 396U);
}

TEST(Enumerate, TopGenusHasNoTails) {
    for (int d = 4; d <= 8; ++d)
        for (const auto& m : enumerate(d, d - 2)) EXPECT_EQ(m.sum_a() + m.sum_b(), 0);
    EXPECT_TRUE(enumerate(4, 3).empty());
}

TEST(Enumerate, Errors) {
    for (auto [d, g] : {std::pair{3, 0}, std::pair{5, -1}}) {
        try {
            enumerate(d, g);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::EmptyRange);
        }
    }
}

TEST(Enumerate, MatchesBruteForce) {
    for (int d = 4; d <= 6; ++d)
        for (int g = 0; g <= d - 2; ++g) {
            auto fast = enumerate(d, g);
            std::set<DataSpec> slow = brute_force(d, g);
            EXPECT_EQ(std::set<DataSpec>(fast.begin(), fast.end()), slow) << d << "," << g;
            EXPECT_EQ(fast.size(), slow.size());
        }
}

TEST(Enumerate, EverySpecValidatesWithGenus) {
    for (int d = 4; d <= 8; ++d)
        for (int g = 0; g <= 3; ++g)
            for (const auto& m : enumerate(d, g)) {
                EXPECT_TRUE(validate(d, g, m).empty());
                EXPECT_EQ(genus_of(d, m), g);
                EXPECT_TRUE(table_bound_discrepancies(d, g, m).empty());
            }
}

TEST(Enumerate, SerialAndParallelAgree) {
    for (int d = 4; d <= 8; ++d)
        for (int g = 0; g <= 3; ++g) EXPECT_EQ(enumerate(d, g), enumerate_serial(d, g));
}

TEST(Enumerate, Filters) {
    for (const auto& m : enumerate(7, 1, EnumFilter::cuspidal)) EXPECT_TRUE(is_cuspidal_label(corollary_class(m)));
    for (const auto& m : enumerate(7, 1, EnumFilter::bibranched)) EXPECT_TRUE(is_bibranched_label(corollary_class(m)));
    const auto all = enumerate(7, 1);
    const auto cusp = enumerate(7, 1, EnumFilter::cuspidal);
    EXPECT_TRUE(std::find(cusp.begin(), cusp.end(), parse_data("[(5), (2_1), (2_1), (2_1), (2_1)]")) != cusp.end());
    EXPECT_LT(cusp.size(), all.size());
}

TEST(TableBounds, AgreeWithConditionTwo) {
    // b with n' = 2g+2 cusps: both the table and condition (2) reject it
    DataSpec m({QCluster::single(5, 2)}, std::vector<OffQSing>(4, OffQSing::cusp(1)));
    EXPECT_FALSE(validate(9, 1, m).empty());
    EXPECT_TRUE(table_bound_discrepancies(9, 1, m).empty());
    for (int d = 4; d <= 9; ++d)
        for (int g = 0; g <= 3; ++g)
            for (const auto& s : enumerate(d, g, EnumFilter::cuspidal))
                EXPECT_TRUE(table_bound_discrepancies(d, g, s).empty());
}
