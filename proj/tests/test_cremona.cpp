#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "curveforge/cremona.hpp"
#include "curveforge/error.hpp"
#include "curveforge/parser.hpp"
#include "curveforge/synthesis.hpp"

using namespace curveforge;

namespace {

HomPoly P(const char* s) { return parse_poly(s); }
TernaryForm T(const char* s) { return parse_ternary(s); }
Rat R(int a, int b = 1) {
    Rat r(a, b);
    r.canonicalize();
    return r;
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::InvalidArgument;
}

CurveEquation septic() {
    return CurveEquation(P("y^5"), P("x^6 - 15/2*x^4*y^2 + 123/8*x^2*y^4"),
                         P("115/8*x^6*y - 7143/64*x^4*y^3 + 240*x^2*y^5 - 64*y^7"));
}

std::vector<Position> pts(std::initializer_list<int> v) {
    std::vector<Position> out;
    for (int x : v) out.emplace_back(R(x));
    return out;
}

// random type-(d, d-2) curve with small integer coefficients
CurveEquation random_curve(std::mt19937& rng, int d) {
    auto form = [&](int n) {
        std::vector<Rat> c;
        for (int i = 0; i <= n; ++i) c.emplace_back(static_cast<int>(rng() % 7) - 3);
        if (sgn(c[0]) == 0) c[0] = 1;
        return HomPoly(n, c);
    };
    return CurveEquation(form(d - 2), form(d - 1), form(d));
}

}  // namespace

TEST(ApplyPoint, Examples) {
    EXPECT_EQ(apply_point(phi(R(0)), {R(0), R(1), R(5)}), (Point3{R(0), R(1), R(0)}));
    EXPECT_EQ(apply_point(phi(R(0)), {R(1), R(1), R(1)}), (Point3{R(1), R(1), R(1)}));
    EXPECT_EQ(kind_of([] { apply_point(phi(R(3)), {R(1), R(0), R(3)}); }), ErrorKind::IndeterminatePoint);
    EXPECT_EQ(kind_of([] { apply_point(phi(R(3)), {R(0), R(0), R(1)}); }), ErrorKind::IndeterminatePoint);
    // normalization: lowest terms, first nonzero coordinate positive
    EXPECT_EQ(normalize_point({R(-2, 3), R(4, 3), R(0)}), (Point3{R(1), R(-2), R(0)}));
}

TEST(CremonaMap, InverseChecked) {
    for (int c : {0, 1, -3}) {
        EXPECT_NO_THROW(phi(R(c)));
        EXPECT_NO_THROW(phi_inverse(R(c)));
    }
    const Triple f{TernaryForm::x() * TernaryForm::y(), TernaryForm::y() * TernaryForm::y(),
                   TernaryForm::x() * TernaryForm::z()};
    const Triple wrong{TernaryForm::x() * TernaryForm::x(), TernaryForm::y() * TernaryForm::y(),
                       TernaryForm::y() * TernaryForm::z()};
    EXPECT_EQ(kind_of([&] { make_cremona("bad", f, wrong, {}); }), ErrorKind::InvalidArgument);
    EXPECT_NO_THROW(big_phi(septic()));
    EXPECT_NO_THROW(psi(P("(x-y)^2*(x+2*y)")));
}

TEST(StrictTransform, CuspidalCubic) {
    // equal to y^3 z - x^4 up to the sign fixed by primitive normalization
    const TernaryForm t = strict_transform(T("z*y^2 - x^3"), phi(R(0)));
    EXPECT_TRUE(proportional(t, T("y^3*z - x^4")));
    EXPECT_EQ(t, T("x^4 - y^3*z"));
}

TEST(StrictTransform, Identity) {
    const TernaryForm p = T("x^2*y^2+y^2*z^2+z^2*x^2-2*x*y*z*(x+y+z)");
    EXPECT_EQ(strict_transform(p, identity_map()), p);
}

TEST(StrictTransform, ExceptionalInput) {
    EXPECT_EQ(kind_of([] { strict_transform(T("x^3"), phi(R(1))); }), ErrorKind::ExceptionalInput);
    EXPECT_EQ(kind_of([] { strict_transform(T("y^2"), phi(R(1))); }), ErrorKind::ExceptionalInput);
}

TEST(StrictTransform, KeepsTypeAndRoundTrips) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 4 + trial % 3;
        const CurveEquation c = random_curve(rng, d);
        const Rat cc = R(static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 3));
        const TernaryForm img = strict_transform(c.polynomial(), phi(cc));
        EXPECT_EQ(img.z_degree(), 2);
        const CurveEquation c2 = CurveEquation::from_ternary(img);
        EXPECT_GE(c2.d(), 4);
        EXPECT_TRUE(proportional(strict_transform(img, phi_inverse(cc)), c.polynomial()));
    }
}

TEST(Reduce, SepticIsBirationalToElliptic) {
    const NormalForm nf = reduce_to_normal_form(septic());
    EXPECT_EQ(nf.g, 1);
    ASSERT_EQ(nf.branch_points.size(), 4U);
    EXPECT_TRUE(pgl2_equivalent(as_positions(nf.branch_points), pts({1, -1, 2, -2})));
    EXPECT_FALSE(pgl2_equivalent(as_positions(nf.branch_points), pts({0, 1, 3, -1})));
    ASSERT_EQ(nf.transform_log.size(), 4U);
    EXPECT_EQ(nf.transform_log[1], "Phi(d=7)");
    EXPECT_EQ(nf.transform_log[3], "iota");
}

TEST(Reduce, NormalFormIsFixedUpToPgl2) {
    // y^4 z^2 = prod_{+-1,+-2,+-3} (x - l y), Q at (0,0,1)
    HomPoly prod = HomPoly::constant(Rat(1));
    for (int l : {1, -1, 2, -2, 3, -3}) prod = mul(prod, HomPoly::linear(Rat(1), Rat(-l)));
    const NormalForm nf = reduce_to_normal_form(CurveEquation(P("y^4"), HomPoly(5), -prod));
    EXPECT_EQ(nf.g, 2);
    EXPECT_EQ(nf.branch_points.size(), 6U);
    EXPECT_TRUE(pgl2_equivalent(as_positions(nf.branch_points), pts({1, -1, 2, -2, 3, -3})));
}

TEST(Reduce, Aa3Quartic) {
    ClassParams p;
    p.kind = Construction::aa3;
    const Synthesis s = construct_class(p);
    const NormalForm nf = reduce_to_normal_form(s.curve);
    EXPECT_EQ(nf.g, 1);
    EXPECT_EQ(nf.branch_points.size(), 4U);
}

TEST(Reduce, ClassAMatchesLambdas) {
    // the branch set of a class-a curve is its lambda set (tails and simple roots)
    const std::vector<std::pair<std::vector<int>, std::vector<Rat>>> cases{
        {{1, 1, 1, 1}, {R(1), R(-1), R(2), R(-2)}},
        {{2}, {R(1), R(-1), R(3), R(-3)}},
    };
    for (const auto& [tails, lambdas] : cases) {
        ClassParams p;
        p.kind = Construction::a;
        p.g = 1;
        p.tails = tails;
        p.lambdas = lambdas;
        const NormalForm nf = reduce_to_normal_form(construct_class(p).curve);
        EXPECT_TRUE(pgl2_equivalent(as_positions(nf.branch_points), as_positions(lambdas)));
    }
}

TEST(Reduce, Errors) {
    // tricuspidal quartic has genus 0
    const CurveEquation quartic(P("(x-y)^2"), P("-x*y*(x+y)"), P("x^2*y^2"));
    EXPECT_EQ(kind_of([&] { reduce_to_normal_form(quartic); }), ErrorKind::GenusZero);
    // branch points at the roots of x^2 - 2y^2 and x^2 - 3y^2
    const CurveEquation irr(P("y^2"), HomPoly(3), P("-(x^2-2*y^2)*(x^2-3*y^2)"));
    EXPECT_EQ(kind_of([&] { reduce_to_normal_form(irr); }), ErrorKind::NonSplitDiscriminant);
    // square discriminant: no data
    EXPECT_EQ(kind_of([&] { reduce_to_normal_form(CurveEquation(P("y^2"), HomPoly(3), P("-x^2*y^2"))); }),
              ErrorKind::Lemma1Violation);
}

TEST(Reduce, ShearLogged) {
    // F = y^5 forces a shear
    const NormalForm nf = reduce_to_normal_form(septic());
    EXPECT_EQ(nf.transform_log[0].rfind("shear", 0), 0U);
    EXPECT_NE(nf.transform_log[0].find("c=2"), std::string::npos);
}

TEST(Pgl2, Examples) {
    std::vector<Position> a{R(0), R(1), std::nullopt, R(5)};
    EXPECT_TRUE(pgl2_equivalent(a, a));
    std::vector<Position> half{R(1), R(-1), R(1, 2), R(-1, 2)};
    EXPECT_TRUE(pgl2_equivalent(pts({1, -1, 2, -2}), half));
    EXPECT_FALSE(pgl2_equivalent(std::vector<Position>{R(0), R(1), std::nullopt, R(3)},
                                 std::vector<Position>{R(0), R(1), std::nullopt, R(4)}));
    // three points are always equivalent
    EXPECT_TRUE(pgl2_equivalent(pts({0, 1, 2}), std::vector<Position>{R(5), std::nullopt, R(-7, 3)}));
}

TEST(Pgl2, Errors) {
    EXPECT_EQ(kind_of([] { pgl2_equivalent(pts({1, 2, 3}), pts({1, 2, 3, 4})); }), ErrorKind::SizeMismatch);
    EXPECT_EQ(kind_of([] { pgl2_equivalent(pts({1, 2}), pts({1, 2})); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { pgl2_equivalent(pts({1, 1, 3}), pts({1, 2, 3})); }), ErrorKind::InvalidArgument);
}

TEST(Pgl2, EquivalenceRelationAndSerialAgreement) {
    std::mt19937 rng(3);
    auto moebius = [&](const std::vector<Position>& s) {
        Rat a(static_cast<int>(rng() % 7) - 3), b(static_cast<int>(rng() % 7) - 3), c(static_cast<int>(rng() % 7) - 3),
            d(static_cast<int>(rng() % 7) - 3);
        while (a * d == b * c) d += 1;
        std::vector<Position> out;
        for (const auto& p : s) {
            const Rat u = p ? a * *p + b : a, w = p ? c * *p + d : c;
            out.push_back(sgn(w) == 0 ? Position{} : Position{u / w});
        }
        return out;
    };
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Position> s;
        while (s.size() < 5) {
            Rat v(static_cast<int>(rng() % 19) - 9);
            if (std::find(s.begin(), s.end(), Position{v}) == s.end()) s.emplace_back(v);
        }
        const auto t = moebius(s);
        const auto u = moebius(t);
        EXPECT_TRUE(pgl2_equivalent(s, s));
        EXPECT_TRUE(pgl2_equivalent(s, t));
        EXPECT_TRUE(pgl2_equivalent(t, s));
        EXPECT_TRUE(pgl2_equivalent(s, u));
        std::vector<Position> other = s;
        other.back() = *other.back() + Rat(100);
        EXPECT_EQ(pgl2_equivalent(s, other), pgl2_equivalent_serial(s, other));
        EXPECT_EQ(pgl2_equivalent(s, t), pgl2_equivalent_serial(s, t));
    }
}
