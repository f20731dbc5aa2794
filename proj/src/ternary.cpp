#include "curveforge/ternary.hpp"

#include <algorithm>
#include <string>

#include "curveforge/error.hpp"
#include "curveforge/parser.hpp"

namespace curveforge {

TernaryForm::TernaryForm(int degree) : degree_(degree) {
    if (degree < 0) fail(ErrorKind::InvalidArgument, "negative degree");
    for (int k = 0; k <= degree; ++k) parts_.emplace_back(degree - k);
}

TernaryForm::TernaryForm(int degree, std::vector<HomPoly> parts) : TernaryForm(degree) {
    if (parts.size() > parts_.size()) fail(ErrorKind::DegreeMismatch, "too many z parts for degree " + std::to_string(degree));
    for (size_t k = 0; k < parts.size(); ++k) {
        if (parts[k].degree() != degree - static_cast<int>(k))
            fail(ErrorKind::DegreeMismatch, "z^" + std::to_string(k) + " part has the wrong degree");
        parts_[k] = std::move(parts[k]);
    }
}

TernaryForm TernaryForm::from_binary(const HomPoly& p) { return TernaryForm(p.degree(), {p}); }

TernaryForm TernaryForm::x() { return from_binary(HomPoly::linear(Rat(1), Rat(0))); }
TernaryForm TernaryForm::y() { return from_binary(HomPoly::linear(Rat(0), Rat(1))); }
TernaryForm TernaryForm::z() { return TernaryForm(1, {HomPoly(1), HomPoly::constant(Rat(1))}); }

TernaryForm TernaryForm::from_curve(const HomPoly& F, const HomPoly& G, const HomPoly& H) {
    return TernaryForm(H.degree(), {H, G.scaled(Rat(2)), F});
}

int TernaryForm::z_degree() const noexcept {
    for (int k = degree_; k >= 0; --k)
        if (!parts_[static_cast<size_t>(k)].is_zero()) return k;
    return -1;
}

bool TernaryForm::is_zero() const noexcept { return z_degree() < 0; }

Rat TernaryForm::eval(const Rat& x, const Rat& y, const Rat& z) const {
    Rat acc(0);
    for (int k = degree_; k >= 0; --k) acc = acc * z + parts_[static_cast<size_t>(k)].eval(x, y);
    return acc;
}

std::vector<Term> TernaryForm::terms() const {
    std::vector<Term> out;
    for (int k = 0; k <= degree_; ++k) {
        const HomPoly& p = parts_[static_cast<size_t>(k)];
        for (int h = 0; h <= p.degree(); ++h)
            if (sgn(p.coeff(h)) != 0) out.push_back(Term{p.degree() - h, h, k, p.coeff(h)});
    }
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
        if (a.i != b.i) return a.i > b.i;
        return a.j > b.j;
    });
    return out;
}

TernaryForm TernaryForm::scaled(const Rat& s) const {
    TernaryForm out(*this);
    for (auto& p : out.parts_) p = p.scaled(s);
    return out;
}

TernaryForm TernaryForm::pow(unsigned e) const {
    TernaryForm result = from_binary(HomPoly::constant(Rat(1)));
    TernaryForm base = *this;
    while (e > 0) {
        if (e & 1U) result = mul(result, base);
        e >>= 1U;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

TernaryForm TernaryForm::primitive() const {
    if (is_zero()) return *this;
    BigInt den_lcm = 1;
    BigInt content = 0;
    const auto ts = terms();
    for (const auto& t : ts) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den_mpz_t());
    for (const auto& t : ts) {
        BigInt v = t.c.get_num() * (den_lcm / t.c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    }
    Rat factor(den_lcm, content);
    factor.canonicalize();
    if (sgn(ts.front().c) < 0) factor = -factor;
    return scaled(factor);
}

TernaryForm TernaryForm::substitute(const std::array<TernaryForm, 3>& images) const {
    const int m = images[0].degree();
    if (images[1].degree() != m || images[2].degree() != m)
        fail(ErrorKind::DegreeMismatch, "substitution images must share one degree");
    const int n = degree_;
    const int top = std::max(z_degree(), 0);
    std::array<std::vector<TernaryForm>, 3> powers;
    for (int v = 0; v < 3; ++v) {
        powers[static_cast<size_t>(v)].push_back(from_binary(HomPoly::constant(Rat(1))));
        for (int e = 1; e <= (v == 2 ? top : n); ++e) powers[static_cast<size_t>(v)].push_back(mul(powers[static_cast<size_t>(v)].back(), images[static_cast<size_t>(v)]));
    }
    TernaryForm out(n * m);
    for (int k = 0; k <= n; ++k) {
        const HomPoly& p = parts_[static_cast<size_t>(k)];
        if (p.is_zero()) continue;
        TernaryForm inner(m * (n - k));
        for (int h = 0; h <= p.degree(); ++h) {
            if (sgn(p.coeff(h)) == 0) continue;
            inner = add(inner, mul(powers[0][static_cast<size_t>(p.degree() - h)], powers[1][static_cast<size_t>(h)]).scaled(p.coeff(h)));
        }
        out = add(out, mul(inner, powers[2][static_cast<size_t>(k)]));
    }
    return out;
}

std::optional<TernaryForm> TernaryForm::try_div(const HomPoly& form) const {
    if (form.degree() > degree_) {
        if (is_zero()) return TernaryForm(0);
        return std::nullopt;
    }
    const int n = degree_ - form.degree();
    std::vector<HomPoly> parts;
    for (int k = 0; k <= n; ++k) {
        auto q = curveforge::try_div(parts_[static_cast<size_t>(k)], form);
        if (!q) return std::nullopt;
        parts.push_back(std::move(*q));
    }
    for (int k = n + 1; k <= degree_; ++k)
        if (!parts_[static_cast<size_t>(k)].is_zero()) return std::nullopt;
    return TernaryForm(n, std::move(parts));
}

std::pair<TernaryForm, int> TernaryForm::divide_out(const HomPoly& form) const {
    if (form.degree() == 0) fail(ErrorKind::InvalidArgument, "cannot divide out a constant");
    if (is_zero()) fail(ErrorKind::ZeroPolynomial, "divide_out on the zero form");
    TernaryForm cur = *this;
    int count = 0;
    while (auto q = cur.try_div(form)) {
        cur = std::move(*q);
        ++count;
    }
    return {cur, count};
}

TernaryForm add(const TernaryForm& a, const TernaryForm& b) {
    if (a.degree() != b.degree()) fail(ErrorKind::DegreeMismatch, "add: ternary degrees differ");
    std::vector<HomPoly> parts;
    for (int k = 0; k <= a.degree(); ++k) parts.push_back(add(a.part(k), b.part(k)));
    return TernaryForm(a.degree(), std::move(parts));
}

TernaryForm sub(const TernaryForm& a, const TernaryForm& b) {
    if (a.degree() != b.degree()) fail(ErrorKind::DegreeMismatch, "sub: ternary degrees differ");
    std::vector<HomPoly> parts;
    for (int k = 0; k <= a.degree(); ++k) parts.push_back(sub(a.part(k), b.part(k)));
    return TernaryForm(a.degree(), std::move(parts));
}

TernaryForm mul(const TernaryForm& a, const TernaryForm& b) {
    const int n = a.degree() + b.degree();
    std::vector<HomPoly> parts;
    for (int k = 0; k <= n; ++k) parts.emplace_back(n - k);
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.part(i).is_zero()) continue;
        for (int j = 0; j <= b.degree(); ++j) {
            if (b.part(j).is_zero()) continue;
            parts[static_cast<size_t>(i + j)] = add(parts[static_cast<size_t>(i + j)], mul(a.part(i), b.part(j)));
        }
    }
    return TernaryForm(n, std::move(parts));
}

bool proportional(const TernaryForm& a, const TernaryForm& b) {
    if (a.degree() != b.degree()) return false;
    return a.primitive() == b.primitive();
}

std::ostream& operator<<(std::ostream& os, const TernaryForm& p) { return os << format_ternary(p); }

}  // namespace curveforge
