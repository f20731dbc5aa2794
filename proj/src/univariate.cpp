#include "curveforge/univariate.hpp"

#include <algorithm>
#include <optional>

#include "curveforge/error.hpp"

namespace curveforge {

UPoly::UPoly(std::vector<Rat> ascending) : coeffs_(std::move(ascending)) { trim(); }

UPoly UPoly::constant(const Rat& value) { return UPoly({value}); }

UPoly UPoly::monomial(const Rat& coeff, int power) {
    std::vector<Rat> c(static_cast<size_t>(power) + 1);
    c.back() = coeff;
    return UPoly(std::move(c));
}

void UPoly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rat UPoly::coeff(int power) const {
    if (power < 0 || power > degree()) return Rat(0);
    return coeffs_[static_cast<size_t>(power)];
}

Rat UPoly::eval(const Rat& t) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UPoly UPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rat> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
    if (is_zero()) return {};
    Rat inv = 1 / leading();
    std::vector<Rat> c(coeffs_);
    for (auto& v : c) v *= inv;
    return UPoly(std::move(c));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UPoly(std::move(c));
}

UPoly operator*(const Rat& s, const UPoly& a) {
    std::vector<Rat> c(a.coeffs_);
    for (auto& v : c) v *= s;
    return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) fail(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
    if (a.degree() < b.degree()) return {UPoly{}, a};
    std::vector<Rat> rem(a.coeffs());
    std::vector<Rat> quot(static_cast<size_t>(a.degree() - b.degree() + 1));
    const Rat inv = 1 / b.leading();
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        const Rat q = rem[static_cast<size_t>(i)] * inv;
        if (sgn(q) == 0) continue;
        quot[static_cast<size_t>(i - db)] = q;
        for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(i - db + j)] -= q * b.coeffs()[static_cast<size_t>(j)];
    }
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly div_exact(const UPoly& a, const UPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) fail(ErrorKind::NotDivisible, "polynomial division leaves a nonzero remainder");
    return q;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a.monic();
    UPoly y = b.monic();
    while (!y.is_zero()) {
        UPoly r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f) {
    std::vector<std::pair<UPoly, int>> parts;
    if (f.degree() < 1) return parts;
    const UPoly m = f.monic();
    const UPoly fp = m.derivative();
    UPoly a = gcd(m, fp);
    UPoly b = div_exact(m, a);
    UPoly c = div_exact(fp, a);
    UPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() >= 1) {
        UPoly ai = gcd(b, d);
        if (ai.degree() >= 1) parts.emplace_back(ai, i);
        b = div_exact(b, ai);
        c = div_exact(d, ai);
        d = c - b.derivative();
        ++i;
    }
    return parts;
}

std::vector<BigInt> primitive_integer_form(const UPoly& f) {
    std::vector<BigInt> out;
    if (f.is_zero()) return out;
    BigInt den_lcm = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    BigInt content = 0;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        BigInt v = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.push_back(std::move(v));
    }
    if (sgn(out.back()) < 0) content = -content;
    for (auto& v : out) v /= content;
    return out;
}

namespace {

BigInt eval_mod(const std::vector<BigInt>& f, const BigInt& t, const BigInt& m) {
    BigInt acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        acc = acc * t + *it;
        acc %= m;
    }
    if (sgn(acc) < 0) acc += m;
    return acc;
}

std::vector<BigInt> derivative_of(const std::vector<BigInt>& f) {
    std::vector<BigInt> d;
    for (size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<unsigned long>(i));
    return d;
}

// Finds a/b with a = b*r (mod m), |a|, b <= sqrt(m/2).
std::optional<Rat> reconstruct(const BigInt& r, const BigInt& m) {
    BigInt bound = sqrt(BigInt(m / 2));
    BigInt r0 = m, r1 = r, t0 = 0, t1 = 1;
    while (r1 > bound) {
        BigInt q = r0 / r1;
        BigInt tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (sgn(t1) == 0 || abs(t1) > bound) return std::nullopt;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return std::nullopt;
    return Rat(r1, t1);  // caller canonicalizes
}

}  // namespace

std::vector<Rat> rational_roots(const UPoly& f_in) {
    std::vector<Rat> roots;
    if (f_in.degree() < 1) return roots;
    UPoly f = div_exact(f_in, gcd(f_in, f_in.derivative()));
    if (sgn(f.coeff(0)) == 0) {
        roots.emplace_back(0);
        f = div_exact(f, UPoly::monomial(Rat(1), 1));
    }
    const auto z = primitive_integer_form(f);
    const int n = static_cast<int>(z.size()) - 1;
    if (n == 1) {
        Rat r(-z[0], z[1]);
        r.canonicalize();
        roots.push_back(r);
    } else if (n >= 2) {
        const BigInt lc = abs(z.back());
        const BigInt c0 = abs(z.front());
        const BigInt h = std::max(lc, c0);
        const BigInt bound = 2 * h * h + 1;
        const auto dz = derivative_of(z);
        BigInt p = 101;
        for (;;) {
            mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
            if (lc % p == 0) continue;
            std::vector<BigInt> candidates;
            bool simple = true;
            const unsigned long pl = p.get_ui();
            for (unsigned long r = 0; r < pl && simple; ++r) {
                BigInt rb = r;
                if (eval_mod(z, rb, p) != 0) continue;
                if (eval_mod(dz, rb, p) == 0) simple = false;
                candidates.push_back(rb);
            }
            if (!simple) continue;
            for (BigInt r : candidates) {
                BigInt m = p;
                while (m <= bound) {
                    m *= m;
                    BigInt fr = eval_mod(z, r, m);
                    BigInt dfr = eval_mod(dz, r, m);
                    BigInt inv;
                    mpz_invert(inv.get_mpz_t(), dfr.get_mpz_t(), m.get_mpz_t());
                    r = (r - fr * inv) % m;
                    if (sgn(r) < 0) r += m;
                }
                if (auto cand = reconstruct(r, m)) {
                    Rat q = *cand;
                    q.canonicalize();
                    if (sgn(f.eval(q)) == 0) roots.push_back(q);
                }
            }
            break;
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace curveforge
