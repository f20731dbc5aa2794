#include <gtest/gtest.h>

#include <random>

#include "curveforge/data_spec.hpp"
#include "curveforge/error.hpp"

using namespace curveforge;

namespace {

// Independent delta count: list the multiplicities of Q and of every
// infinitely near point, then sum m(m-1)/2.
int column_sum_delta(int d, const DataSpec& m) {
    std::vector<int> mults{d - 2};
    for (const auto& c : m.q_clusters())
        for (int i = 0; i < c.a; ++i) mults.push_back(2);
    for (const auto& o : m.off_q())
        for (int i = 0; i < o.b; ++i) mults.push_back(2);
    int delta = 0;
    for (int v : mults) delta += v * (v - 1) / 2;
    return delta;
}

DataSpec random_spec(std::mt19937& rng) {
    std::vector<QCluster> q;
    const int nq = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < nq; ++i) {
        if (rng() % 2)
            q.push_back(QCluster::pair(1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 4),
                                       1 + static_cast<int>(rng() % 4)));
        else
            q.push_back(QCluster::single(1 + static_cast<int>(rng() % 6), static_cast<int>(rng() % 4)));
    }
    std::vector<OffQSing> off;
    const int no = static_cast<int>(rng() % 5);
    for (int i = 0; i < no; ++i) {
        const int b = 1 + static_cast<int>(rng() % 4);
        off.push_back(rng() % 2 ? OffQSing::tacnode(b) : OffQSing::cusp(b));
    }
    return DataSpec(q, off);
}

}  // namespace

TEST(DataSpec, DerivedCounts) {
    DataSpec m({QCluster::pair(2, 3, 2), QCluster::single(3, 1), QCluster::single(2, 0)},
               {OffQSing::tacnode(1), OffQSing::cusp(2), OffQSing::cusp(1)});
    EXPECT_EQ(m.N(), 3);
    EXPECT_EQ(m.s(), 1);
    EXPECT_EQ(m.n(), 1);
    EXPECT_EQ(m.n_prime(), 2);
    EXPECT_EQ(m.s_prime(), 1);
    EXPECT_EQ(m.mult_q(), 10);
    EXPECT_EQ(m.sum_a(), 3);
    EXPECT_EQ(m.sum_b(), 4);
}

TEST(DataSpec, PairOrientationIsNormalized) {
    EXPECT_EQ(QCluster::pair(3, 1, 1), QCluster::pair(1, 3, 1));
    EXPECT_EQ(DataSpec({QCluster{QCluster::Kind::Pair, 4, 2, 2}}, {}), DataSpec({QCluster::pair(2, 4, 2)}, {}));
}

TEST(Delta, OffQAndClusters) {
    EXPECT_EQ(delta_invariant(OffQSing::tacnode(3)), 3);
    for (int b = 1; b <= 5; ++b) {
        EXPECT_EQ(delta_invariant(OffQSing::cusp(b)), b);
        DataSpec only({QCluster::single(2, 0)}, {OffQSing::cusp(b)});
        EXPECT_EQ(delta_invariant(4, only) - delta_at_q(4, only), column_sum_delta(4, only) - 1);
    }
}

TEST(Delta, NormalFormGenusTwo) {
    DataSpec m({QCluster::pair(2, 2, 2)}, {});
    EXPECT_EQ(delta_at_q(6, m), 8);
    EXPECT_EQ(delta_invariant(6, m), column_sum_delta(6, m));
    EXPECT_EQ(genus_of(6, m), 2);
}

TEST(Delta, MultiplicityMismatch) {
    DataSpec m({QCluster::single(3, 0)}, {});
    EXPECT_THROW(delta_at_q(6, m), Error);
    try {
        genus_of(6, m);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::MultiplicityMismatch);
    }
}

TEST(Genus, Examples) {
    EXPECT_EQ(genus_of(7, parse_data("[(5), (2_1), (2_1), (2_1), (2_1)]")), 1);
    EXPECT_EQ(genus_of(4, parse_data("[(2), (2_1), (2_1)]")), 0);
    for (int g = 1; g <= 4; ++g) EXPECT_EQ(genus_of(2 * g + 2, DataSpec({QCluster::pair(g, g, g)}, {})), g);
    try {
        genus_of(4, parse_data("[(2), (2_2), (2_1)]"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NegativeGenus);
    }
}

TEST(Genus, MatchesColumnSumOracle) {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        DataSpec m = random_spec(rng);
        const int d = m.mult_q() + 2;
        const int g = d - 2 - m.sum_a() - m.sum_b();
        if (g < 0) continue;
        EXPECT_EQ(genus_of(d, m), (d - 1) * (d - 2) / 2 - column_sum_delta(d, m));
    }
}

TEST(Ade, Labels) {
    EXPECT_EQ(ade_label(OffQSing::cusp(1)), "A2");
    EXPECT_EQ(ade_label(OffQSing::tacnode(2)), "A3");
    EXPECT_EQ(ade_label(QCluster::single(3, 0)), "E6");
    EXPECT_EQ(ade_label(QCluster::single(3, 1)), "E8");
    EXPECT_EQ(ade_label(QCluster::pair(1, 2, 1)), "E7");
    EXPECT_EQ(ade_label(QCluster::single(5, 2)), std::nullopt);
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(ade_label(OffQSing::cusp(n)), "A" + std::to_string(2 * n));
        EXPECT_EQ(delta_invariant(OffQSing::cusp(n)), n);
        EXPECT_EQ(ade_label(OffQSing::tacnode(n)), "A" + std::to_string(2 * n - 1));
        EXPECT_EQ(delta_invariant(OffQSing::tacnode(n)), n);
    }
}

TEST(Format, CanonicalText) {
    DataSpec a({QCluster::single(5, 0)}, {OffQSing::cusp(1), OffQSing::cusp(1), OffQSing::cusp(1), OffQSing::cusp(1)});
    EXPECT_EQ(format_data(a), "[(5), (2_1), (2_1), (2_1), (2_1)]");
    DataSpec b({QCluster::pair(2, 3, 2)}, {OffQSing::tacnode(1)});
    EXPECT_EQ(format_data(b), "[(2/3)(1/1)_2, (1/1)_1]");
    DataSpec c({QCluster::single(1, 0), QCluster::single(3, 1)}, {OffQSing::cusp(1), OffQSing::tacnode(2)});
    EXPECT_EQ(format_data(c), "[(3, 2_1) (1), (1/1)_2, (2_1)]");
}

TEST(Format, ParseIsTolerant) {
    EXPECT_EQ(parse_data("[(1)(1),(2_1)]"), DataSpec({QCluster::single(1, 0), QCluster::single(1, 0)}, {OffQSing::cusp(1)}));
    EXPECT_EQ(parse_data(" [ ( 3 , 2_1 ) ( 1 ) , (1 / 1)_2 ] "),
              DataSpec({QCluster::single(3, 1), QCluster::single(1, 0)}, {OffQSing::tacnode(2)}));
    EXPECT_EQ(parse_data("[(1/1)(1/1)_1]"), DataSpec({QCluster::pair(1, 1, 1)}, {}));
}

TEST(Format, ParseErrors) {
    for (const char* bad : {"", "[]", "[(2_1)]", "[(2), (3)]", "[(2)", "[(2/3)]", "[(2, 3_1)]", "[(2)] x", "[(0)]"}) {
        try {
            parse_data(bad);
            ADD_FAILURE() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::SyntaxError) << bad;
        }
    }
}

TEST(Format, RoundTripSeeded) {
    std::mt19937 rng(100);
    for (int trial = 0; trial < 100; ++trial) {
        DataSpec m = random_spec(rng);
        EXPECT_EQ(parse_data(format_data(m)), m) << format_data(m);
    }
}
