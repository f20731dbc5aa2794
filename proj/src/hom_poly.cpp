#include "curveforge/hom_poly.hpp"

#include <algorithm>
#include <string>

#include "curveforge/error.hpp"
#include "curveforge/parser.hpp"

namespace curveforge {

HomPoly::HomPoly(int degree) : degree_(degree) {
    if (degree < 0) fail(ErrorKind::InvalidArgument, "negative degree");
    coeffs_.resize(static_cast<size_t>(degree) + 1);
}

HomPoly::HomPoly(int degree, std::vector<Rat> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree < 0) fail(ErrorKind::InvalidArgument, "negative degree");
    if (coeffs_.size() != static_cast<size_t>(degree) + 1)
        fail(ErrorKind::DegreeMismatch, "coefficient count does not match degree " + std::to_string(degree));
}

HomPoly HomPoly::constant(const Rat& c) { return HomPoly(0, {c}); }

HomPoly HomPoly::monomial(const Rat& c, int i, int j) {
    HomPoly p(i + j);
    p.coeffs_[static_cast<size_t>(j)] = c;
    return p;
}

HomPoly HomPoly::linear(const Rat& a, const Rat& b) { return HomPoly(1, {a, b}); }

HomPoly HomPoly::homogenize(const UPoly& f, int n) {
    if (f.degree() > n) fail(ErrorKind::DegreeMismatch, "homogenizing degree too small");
    HomPoly p(n);
    for (int i = 0; i <= f.degree(); ++i) p.coeffs_[static_cast<size_t>(n - i)] = f.coeff(i);
    return p;
}

const Rat& HomPoly::coeff_xy(int i, int j) const {
    if (i + j != degree_ || i < 0 || j < 0) fail(ErrorKind::DegreeMismatch, "monomial degree differs from polynomial degree");
    return coeffs_[static_cast<size_t>(j)];
}

bool HomPoly::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return sgn(c) == 0; });
}

int HomPoly::y_order() const noexcept {
    int e = 0;
    while (e <= degree_ && sgn(coeffs_[static_cast<size_t>(e)]) == 0) ++e;
    return e;
}

int HomPoly::x_order() const noexcept {
    int e = 0;
    while (e <= degree_ && sgn(coeffs_[static_cast<size_t>(degree_ - e)]) == 0) ++e;
    return e;
}

Rat HomPoly::eval(const Rat& x, const Rat& y) const {
    // Horner in x with y powers accumulated alongside
    Rat acc(0);
    Rat ypow(1);
    for (int h = 0; h <= degree_; ++h) {
        acc = acc * x + coeffs_[static_cast<size_t>(h)] * ypow;
        ypow *= y;
    }
    return acc;
}

UPoly HomPoly::dehomogenize() const {
    std::vector<Rat> asc(coeffs_.rbegin(), coeffs_.rend());
    return UPoly(std::move(asc));
}

HomPoly HomPoly::operator-() const { return scaled(Rat(-1)); }

HomPoly HomPoly::scaled(const Rat& s) const {
    HomPoly p(*this);
    for (auto& c : p.coeffs_) c *= s;
    return p;
}

HomPoly HomPoly::pow(unsigned e) const {
    HomPoly result = HomPoly::constant(Rat(1));
    HomPoly base = *this;
    while (e > 0) {
        if (e & 1U) result = mul(result, base);
        e >>= 1U;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

HomPoly HomPoly::primitive() const {
    if (is_zero()) return *this;
    BigInt den_lcm = 1;
    for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    BigInt content = 0;
    for (const auto& c : coeffs_) {
        BigInt v = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    }
    const Rat& lead = coeffs_[static_cast<size_t>(y_order())];
    Rat factor(den_lcm, content);
    factor.canonicalize();
    if (sgn(lead) < 0) factor = -factor;
    return scaled(factor);
}

HomPoly add(const HomPoly& a, const HomPoly& b) {
    if (a.degree() != b.degree())
        fail(ErrorKind::DegreeMismatch, "add: degrees " + std::to_string(a.degree()) + " and " + std::to_string(b.degree()));
    std::vector<Rat> c(a.coeffs());
    for (size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs()[i];
    return HomPoly(a.degree(), std::move(c));
}

HomPoly sub(const HomPoly& a, const HomPoly& b) {
    if (a.degree() != b.degree())
        fail(ErrorKind::DegreeMismatch, "sub: degrees " + std::to_string(a.degree()) + " and " + std::to_string(b.degree()));
    std::vector<Rat> c(a.coeffs());
    for (size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs()[i];
    return HomPoly(a.degree(), std::move(c));
}

HomPoly mul(const HomPoly& a, const HomPoly& b) {
    std::vector<Rat> c(static_cast<size_t>(a.degree() + b.degree()) + 1);
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (sgn(a.coeffs()[i]) == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j) {
            if (sgn(b.coeffs()[j]) == 0) continue;
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
        }
    }
    return HomPoly(a.degree() + b.degree(), std::move(c));
}

std::optional<HomPoly> try_div(const HomPoly& a, const HomPoly& b) {
    if (b.is_zero()) fail(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
    const int n = a.degree() - b.degree();
    if (n < 0) return std::nullopt;
    if (a.is_zero()) return HomPoly(n);
    const int s = b.y_order();
    const Rat inv = 1 / b.coeff(s);
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    std::vector<Rat> q(static_cast<size_t>(n) + 1);
    // coefficient i + s of q*b is sum_j q[j] * b[i + s - j]; b[m] = 0 for m < s
    for (int i = 0; i <= n; ++i) {
        Rat acc = ac[static_cast<size_t>(i + s)];
        for (int j = std::max(0, i + s - b.degree()); j < i; ++j) acc -= q[static_cast<size_t>(j)] * bc[static_cast<size_t>(i + s - j)];
        q[static_cast<size_t>(i)] = acc * inv;
    }
    HomPoly quot(n, std::move(q));
    if (mul(quot, b) != a) return std::nullopt;
    return quot;
}

HomPoly div_exact(const HomPoly& a, const HomPoly& b) {
    auto q = try_div(a, b);
    if (!q) fail(ErrorKind::NotDivisible, "polynomial division leaves a nonzero remainder");
    return *q;
}

bool proportional(const HomPoly& a, const HomPoly& b) {
    if (a.degree() != b.degree()) return false;
    return a.primitive() == b.primitive();
}

RootDesc::RootDesc(Kind kind, Rat alpha, HomPoly form) : kind_(kind), alpha_(std::move(alpha)), form_(std::move(form)) {}

RootDesc RootDesc::rational(const Rat& alpha) { return RootDesc(Kind::Rational, alpha, HomPoly::linear(Rat(1), -alpha)); }

RootDesc RootDesc::infinity() { return RootDesc(Kind::Infinity, Rat(0), HomPoly::linear(Rat(0), Rat(1))); }

RootDesc RootDesc::irreducible(const HomPoly& factor) {
    if (factor.degree() < 2) fail(ErrorKind::InvalidArgument, "irreducible root factor must have degree at least 2");
    return RootDesc(Kind::Irreducible, Rat(0), factor.primitive());
}

bool operator<(const RootDesc& a, const RootDesc& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    if (a.kind_ == RootDesc::Kind::Rational) return a.alpha_ < b.alpha_;
    if (a.kind_ == RootDesc::Kind::Infinity) return false;
    if (a.form_.degree() != b.form_.degree()) return a.form_.degree() < b.form_.degree();
    return std::lexicographical_compare(a.form_.coeffs().begin(), a.form_.coeffs().end(), b.form_.coeffs().begin(),
                                        b.form_.coeffs().end());
}

int ord_at(const HomPoly& p, const RootDesc& t) {
    if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "ord_at of the zero polynomial");
    if (t.kind() == RootDesc::Kind::Infinity) return p.y_order();
    int m = 0;
    HomPoly cur = p;
    while (auto q = try_div(cur, t.form())) {
        cur = std::move(*q);
        ++m;
    }
    return m;
}

std::vector<std::pair<RootDesc, int>> squarefree_factor(const HomPoly& p) {
    if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "squarefree_factor of the zero polynomial");
    std::vector<std::pair<RootDesc, int>> rational_part;
    std::vector<std::pair<RootDesc, int>> residual_part;
    const int ey = p.y_order();
    const UPoly f = p.dehomogenize();  // degree n - ey
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        UPoly rest = part;
        for (const Rat& r : rational_roots(part)) {
            rational_part.emplace_back(RootDesc::rational(r), mult);
            rest = div_exact(rest, UPoly({-r, Rat(1)}));
        }
        if (rest.degree() >= 1) residual_part.emplace_back(RootDesc::irreducible(HomPoly::homogenize(rest, rest.degree())), mult);
    }
    std::sort(rational_part.begin(), rational_part.end());
    std::sort(residual_part.begin(), residual_part.end());
    if (ey > 0) rational_part.emplace_back(RootDesc::infinity(), ey);
    rational_part.insert(rational_part.end(), residual_part.begin(), residual_part.end());
    return rational_part;
}

HomPoly substitute_linear(const HomPoly& p, const Matrix2& m) {
    const Rat det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (sgn(det) == 0) fail(ErrorKind::SingularMatrix, "substitution matrix is singular");
    const int n = p.degree();
    const HomPoly X = HomPoly::linear(m[0][0], m[0][1]);
    const HomPoly Y = HomPoly::linear(m[1][0], m[1][1]);
    std::vector<HomPoly> xp{HomPoly::constant(Rat(1))}, yp{HomPoly::constant(Rat(1))};
    for (int i = 1; i <= n; ++i) {
        xp.push_back(mul(xp.back(), X));
        yp.push_back(mul(yp.back(), Y));
    }
    HomPoly out(n);
    for (int h = 0; h <= n; ++h) {
        if (sgn(p.coeff(h)) == 0) continue;
        out = add(out, mul(xp[static_cast<size_t>(n - h)], yp[static_cast<size_t>(h)]).scaled(p.coeff(h)));
    }
    return out;
}

Matrix2 inverse(const Matrix2& m) {
    const Rat det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (sgn(det) == 0) fail(ErrorKind::SingularMatrix, "matrix is singular");
    Matrix2 inv;
    inv[0][0] = m[1][1] / det;
    inv[0][1] = -m[0][1] / det;
    inv[1][0] = -m[1][0] / det;
    inv[1][1] = m[0][0] / det;
    return inv;
}

HomPoly gcd_poly(const HomPoly& a, const HomPoly& b) {
    if (a.is_zero() && b.is_zero()) fail(ErrorKind::ZeroPolynomial, "gcd of two zero polynomials");
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    const int ey = std::min(a.y_order(), b.y_order());
    const UPoly g = gcd(a.dehomogenize(), b.dehomogenize());
    HomPoly h = mul(HomPoly::homogenize(g, g.degree()), HomPoly::monomial(Rat(1), 0, ey));
    return h.primitive();
}

std::ostream& operator<<(std::ostream& os, const HomPoly& p) { return os << format_poly(p); }

std::ostream& operator<<(std::ostream& os, const RootDesc& r) {
    switch (r.kind()) {
        case RootDesc::Kind::Rational: return os << r.alpha().get_str();
        case RootDesc::Kind::Infinity: return os << "inf";
        case RootDesc::Kind::Irreducible: return os << "[" << format_poly(r.form()) << "]";
    }
    return os;
}

}  // namespace curveforge
