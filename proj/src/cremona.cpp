#include "curveforge/cremona.hpp"

#include <algorithm>
#include <sstream>

#include "curveforge/error.hpp"

namespace curveforge {

namespace {

TernaryForm X() { return TernaryForm::x(); }
TernaryForm Y() { return TernaryForm::y(); }
TernaryForm Z() { return TernaryForm::z(); }
TernaryForm bin(const HomPoly& p) { return TernaryForm::from_binary(p); }

HomPoly y_pow(int e) { return HomPoly::monomial(Rat(1), 0, e); }

// distinct irreducible-or-residual factor forms of p
std::vector<HomPoly> factor_forms(const HomPoly& p) {
    std::vector<HomPoly> out;
    for (const auto& [root, mult] : squarefree_factor(p)) out.push_back(root.form());
    return out;
}

std::string param(const Rat& c) { return to_string(c); }

}  // namespace

CremonaMap make_cremona(std::string name, Triple forward, Triple backward, std::vector<HomPoly> exceptional) {
    std::array<TernaryForm, 3> comp;
    for (size_t i = 0; i < 3; ++i) comp[i] = backward[i].substitute(forward);
    const bool ok = !comp[0].is_zero() || !comp[1].is_zero() || !comp[2].is_zero();
    if (!ok || comp[0] * Y() != comp[1] * X() || comp[0] * Z() != comp[2] * X() || comp[1] * Z() != comp[2] * Y())
        fail(ErrorKind::InvalidArgument, name + ": backward o forward is not a multiple of the identity");
    return CremonaMap{std::move(name), std::move(forward), std::move(backward), std::move(exceptional)};
}

CremonaMap phi(const Rat& c) {
    Triple fwd{X() * Y(), Y() * Y(), X() * (Z() - X().scaled(c))};
    Triple bwd{X() * X(), X() * Y(), Y() * Z() + (X() * X()).scaled(c)};
    return make_cremona("phi(c=" + param(c) + ")", fwd, bwd, {HomPoly::linear(Rat(1), Rat(0)), y_pow(1)});
}

CremonaMap phi_inverse(const Rat& c) {
    Triple fwd{X() * X(), X() * Y(), Y() * Z() + (X() * X()).scaled(c)};
    Triple bwd{X() * Y(), Y() * Y(), X() * (Z() - X().scaled(c))};
    return make_cremona("phi_inverse(c=" + param(c) + ")", fwd, bwd, {HomPoly::linear(Rat(1), Rat(0)), y_pow(1)});
}

CremonaMap identity_map() { return make_cremona("identity", {X(), Y(), Z()}, {X(), Y(), Z()}, {}); }

CremonaMap iota() { return make_cremona("iota", {X(), Z(), Y()}, {X(), Z(), Y()}, {}); }

CremonaMap big_phi(const CurveEquation& c) {
    const int d = c.d();
    Triple fwd{X() * bin(y_pow(d - 2)), bin(y_pow(d - 1)), bin(c.F()) * Z() + bin(c.G())};
    Triple bwd{X() * bin(c.F()), Y() * bin(c.F()), bin(y_pow(d - 2)) * Z() - bin(c.G())};
    return make_cremona("Phi(d=" + std::to_string(d) + ")", fwd, bwd, factor_forms(c.F()));
}

CremonaMap psi(const HomPoly& S) {
    const int s = S.degree();
    Triple fwd{X() * bin(S), Y() * bin(S), bin(y_pow(s)) * Z()};
    Triple bwd{X() * bin(y_pow(s)), bin(y_pow(s + 1)), bin(S) * Z()};
    std::vector<HomPoly> exc{y_pow(1)};
    if (s > 0)
        for (auto& f : factor_forms(S)) exc.push_back(f);
    return make_cremona("Psi(s=" + std::to_string(s) + ")", fwd, bwd, exc);
}

Point3 normalize_point(const Point3& pt) {
    if (sgn(pt[0]) == 0 && sgn(pt[1]) == 0 && sgn(pt[2]) == 0) fail(ErrorKind::InvalidArgument, "zero point");
    BigInt den = 1, num = 0;
    for (const auto& v : pt) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    for (const auto& v : pt) {
        BigInt n = v.get_num() * (den / v.get_den());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
    }
    Rat f(den, num);
    f.canonicalize();
    for (const auto& v : pt)
        if (sgn(v) != 0) {
            if (sgn(v) < 0) f = -f;
            break;
        }
    return {pt[0] * f, pt[1] * f, pt[2] * f};
}

Point3 apply_point(const CremonaMap& m, const Point3& pt) {
    Point3 out;
    for (size_t i = 0; i < 3; ++i) out[i] = m.forward[i].eval(pt[0], pt[1], pt[2]);
    if (sgn(out[0]) == 0 && sgn(out[1]) == 0 && sgn(out[2]) == 0) {
        std::ostringstream os;
        os << m.name << " is not defined at (" << pt[0] << ", " << pt[1] << ", " << pt[2] << ")";
        fail(ErrorKind::IndeterminatePoint, os.str());
    }
    return normalize_point(out);
}

TernaryForm strict_transform(const TernaryForm& p, const CremonaMap& m) {
    TernaryForm cur = p.substitute(m.backward);
    if (cur.is_zero()) fail(ErrorKind::ExceptionalInput, "pullback through " + m.name + " vanishes");
    for (const auto& e : m.exceptional_forms) cur = cur.divide_out(e).first;
    if (cur.degree() == 0) fail(ErrorKind::ExceptionalInput, "input is exceptional for " + m.name);
    return cur.primitive();
}

NormalForm reduce_to_normal_form(const CurveEquation& c) {
    const AnalysisReport rep = analyze(c);
    if (!rep.genus) fail(ErrorKind::Lemma1Violation, "curve has no singularity data; cannot reduce");
    const int g = *rep.genus;
    if (g == 0) fail(ErrorKind::GenusZero, "genus 0 curve has no hyperelliptic normal form");
    const int d = c.d();
    NormalForm nf;
    nf.g = g;

    // shear so that y does not divide F * Delta
    const HomPoly D = rep.discriminant;
    Rat shear(0);
    for (int i = 0;; ++i) {
        shear = Rat((i + 1) / 2 * (i % 2 == 1 ? 1 : -1));
        if (sgn(c.F().eval(Rat(1), shear)) != 0 && sgn(D.eval(Rat(1), shear)) != 0) break;
    }
    const Matrix2 m{{{Rat(1), Rat(0)}, {shear, Rat(1)}}};
    const CurveEquation sheared(substitute_linear(c.F(), m), substitute_linear(c.G(), m), substitute_linear(c.H(), m));
    const HomPoly Ds = discriminant(sheared);
    nf.transform_log.push_back("shear(y -> y + c*x, c=" + to_string(shear) + ")");

    const CremonaMap Phi = big_phi(sheared);
    const TernaryForm c1 = strict_transform(sheared.polynomial(), Phi);
    if (!proportional(c1, TernaryForm::from_curve(y_pow(2 * (d - 2)), HomPoly(2 * d - 3), -Ds)))
        fail(ErrorKind::PostconditionFailed, "Phi image is not y^{2(d-2)} z^2 = Delta");
    nf.transform_log.push_back(Phi.name);

    HomPoly S = HomPoly::constant(Rat(1));
    HomPoly L = HomPoly::constant(Rat(1));
    for (const auto& [root, q] : squarefree_factor(Ds)) {
        if (q % 2 == 1) {
            if (!root.is_linear())
                fail(ErrorKind::NonSplitDiscriminant, "odd-order discriminant factor has no rational root");
            L = mul(L, root.form());
        }
        if (q >= 2) S = mul(S, root.form().pow(static_cast<unsigned>(q / 2)));
    }
    const int s = S.degree();
    const int l = L.degree();
    nf.d = d;
    nf.s = s;
    nf.l = l;
    nf.scale = Ds.coeffs().front() / mul(mul(S, S), L).coeffs().front();
    if (l != 2 * g + 2 || g != d - s - 2)
        fail(ErrorKind::PostconditionFailed, "l = " + std::to_string(l) + ", s = " + std::to_string(s) +
                                                 " do not satisfy l = 2g+2, g = d-s-2 for g = " + std::to_string(g));

    const CremonaMap Psi = psi(S);
    const TernaryForm c2 = strict_transform(c1, Psi);
    const TernaryForm expected = TernaryForm::from_curve(y_pow(2 * g), HomPoly(2 * g + 1), -L.scaled(nf.scale));
    if (!proportional(c2, expected)) fail(ErrorKind::PostconditionFailed, "Psi image is not y^{2g} z^2 = c L");
    nf.transform_log.push_back(Psi.name);

    const CremonaMap i = iota();
    const TernaryForm c3 = strict_transform(c2, i);
    if (!proportional(c3, expected.substitute(i.backward)))
        fail(ErrorKind::PostconditionFailed, "iota image has the wrong shape");
    nf.transform_log.push_back(i.name);

    nf.branch_points = rational_roots(L.dehomogenize());
    if (static_cast<int>(nf.branch_points.size()) != 2 * g + 2)
        fail(ErrorKind::PostconditionFailed, "branch point count differs from 2g+2");
    return nf;
}

namespace {

using Vec2 = std::array<Rat, 2>;

Vec2 vec(const Position& p) { return p ? Vec2{*p, Rat(1)} : Vec2{Rat(1), Rat(0)}; }

// the matrix sending (0:1), (1:0), (1:1) to p1, p2, p3
Matrix2 frame(const Position& p1, const Position& p2, const Position& p3) {
    const Vec2 a = vec(p2), b = vec(p1), t = vec(p3);
    // alpha * a + beta * b = t
    const Rat det = a[0] * b[1] - a[1] * b[0];
    const Rat alpha = (t[0] * b[1] - t[1] * b[0]) / det;
    const Rat beta = (a[0] * t[1] - a[1] * t[0]) / det;
    return Matrix2{{{alpha * a[0], beta * b[0]}, {alpha * a[1], beta * b[1]}}};
}

Matrix2 compose(const Matrix2& p, const Matrix2& q) {
    Matrix2 r;
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) r[i][j] = p[i][0] * q[0][j] + p[i][1] * q[1][j];
    return r;
}

Position apply(const Matrix2& m, const Position& p) {
    const Vec2 v = vec(p);
    const Rat u = m[0][0] * v[0] + m[0][1] * v[1];
    const Rat w = m[1][0] * v[0] + m[1][1] * v[1];
    if (sgn(w) == 0) return std::nullopt;
    return u / w;
}

void check_sets(const std::vector<Position>& a, const std::vector<Position>& b) {
    if (a.size() != b.size()) fail(ErrorKind::SizeMismatch, "point sets have different sizes");
    if (a.size() < 3) fail(ErrorKind::InvalidArgument, "need at least 3 points");
    for (const auto* set : {&a, &b}) {
        auto s = *set;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) fail(ErrorKind::InvalidArgument, "repeated point");
    }
}

bool maps_onto(const std::vector<Position>& a, const std::vector<Position>& sorted_b, size_t i, size_t j, size_t k) {
    const Matrix2 t = compose(frame(sorted_b[0], sorted_b[1], sorted_b[2]), inverse(frame(a[i], a[j], a[k])));
    std::vector<Position> img;
    img.reserve(a.size());
    for (const auto& p : a) img.push_back(apply(t, p));
    std::sort(img.begin(), img.end());
    return img == sorted_b;
}

}  // namespace

bool pgl2_equivalent_serial(const std::vector<Position>& a, const std::vector<Position>& b) {
    check_sets(a, b);
    auto sb = b;
    std::sort(sb.begin(), sb.end());
    const size_t n = a.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (i != j && j != k && i != k && maps_onto(a, sb, i, j, k)) return true;
    return false;
}

bool pgl2_equivalent(const std::vector<Position>& a, const std::vector<Position>& b) {
    check_sets(a, b);
    auto sb = b;
    std::sort(sb.begin(), sb.end());
    const long n = static_cast<long>(a.size());
    bool found = false;
#pragma omp parallel for schedule(static) reduction(|| : found)
    for (long idx = 0; idx < n * n * n; ++idx) {
        const auto i = static_cast<size_t>(idx / (n * n)), j = static_cast<size_t>(idx / n % n),
                   k = static_cast<size_t>(idx % n);
        if (i != j && j != k && i != k && maps_onto(a, sb, i, j, k)) found = true;
    }
    return found;
}

std::vector<Position> as_positions(const std::vector<Rat>& values) {
    return std::vector<Position>(values.begin(), values.end());
}

}  // namespace curveforge
