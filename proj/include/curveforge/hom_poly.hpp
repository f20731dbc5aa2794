#pragma once

#include <array>
#include <compare>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "curveforge/rational.hpp"
#include "curveforge/univariate.hpp"

namespace curveforge {

/// Homogeneous polynomial in x, y of a declared degree n.
/// coeffs()[h] is the coefficient of x^(n-h) * y^h. The zero polynomial keeps
/// its degree tag so that addition stays total.
class HomPoly {
public:
    HomPoly() : HomPoly(0) {}
    explicit HomPoly(int degree);
    HomPoly(int degree, std::vector<Rat> coeffs);

    static HomPoly constant(const Rat& c);
    /// c * x^i * y^j
    static HomPoly monomial(const Rat& c, int i, int j);
    /// a*x + b*y
    static HomPoly linear(const Rat& a, const Rat& b);
    /// p(x, y) = y^n f(x/y), where n >= deg f.
    static HomPoly homogenize(const UPoly& f, int n);

    int degree() const noexcept { return degree_; }
    const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }
    const Rat& coeff(int h) const { return coeffs_.at(static_cast<size_t>(h)); }
    /// Coefficient of x^i y^j (i + j must equal the degree).
    const Rat& coeff_xy(int i, int j) const;
    bool is_zero() const noexcept;

    /// Largest e with y^e | p; the degree + 1 for the zero polynomial.
    int y_order() const noexcept;
    /// Largest e with x^e | p.
    int x_order() const noexcept;

    Rat eval(const Rat& x, const Rat& y) const;
    /// f(t) = p(t, 1)
    UPoly dehomogenize() const;

    HomPoly operator-() const;
    HomPoly scaled(const Rat& s) const;
    HomPoly pow(unsigned e) const;
    /// Integer coefficients, content 1, first nonzero coefficient positive.
    HomPoly primitive() const;

    friend bool operator==(const HomPoly&, const HomPoly&) = default;

private:
    int degree_;
    std::vector<Rat> coeffs_;
};

HomPoly add(const HomPoly& a, const HomPoly& b);
HomPoly sub(const HomPoly& a, const HomPoly& b);
HomPoly mul(const HomPoly& a, const HomPoly& b);
inline HomPoly operator+(const HomPoly& a, const HomPoly& b) { return add(a, b); }
inline HomPoly operator-(const HomPoly& a, const HomPoly& b) { return sub(a, b); }
inline HomPoly operator*(const HomPoly& a, const HomPoly& b) { return mul(a, b); }
inline HomPoly operator*(const Rat& s, const HomPoly& a) { return a.scaled(s); }

/// Quotient when b | a, nullopt otherwise.
std::optional<HomPoly> try_div(const HomPoly& a, const HomPoly& b);
HomPoly div_exact(const HomPoly& a, const HomPoly& b);
/// True when a and b agree up to a nonzero rational factor.
bool proportional(const HomPoly& a, const HomPoly& b);

/// A root of a binary form: a rational point (alpha, 1) or (1, 0). A squarefree
/// residual factor with no rational roots stands for all of its roots.
class RootDesc {
public:
    enum class Kind { Rational, Infinity, Irreducible };

    static RootDesc rational(const Rat& alpha);
    static RootDesc infinity();
    static RootDesc irreducible(const HomPoly& factor);

    Kind kind() const noexcept { return kind_; }
    const Rat& alpha() const { return alpha_; }
    /// x - alpha*y or y for a linear root, else the factor itself.
    const HomPoly& form() const noexcept { return form_; }
    /// Number of complex roots represented.
    int weight() const noexcept { return form_.degree(); }
    bool is_linear() const noexcept { return kind_ != Kind::Irreducible; }

    friend bool operator==(const RootDesc&, const RootDesc&) = default;
    friend bool operator<(const RootDesc& a, const RootDesc& b);

private:
    RootDesc(Kind kind, Rat alpha, HomPoly form);
    Kind kind_;
    Rat alpha_;
    HomPoly form_;
};

/// A rational point of P^1: alpha stands for (alpha : 1) with form x - alpha*y,
/// nullopt for (1 : 0) with form y.
using Position = std::optional<Rat>;

/// Largest m with form(t)^m | p.
int ord_at(const HomPoly& p, const RootDesc& t);

/// Rational and infinite roots with exact multiplicities; whatever is left of
/// each squarefree part becomes one Irreducible entry.
std::vector<std::pair<RootDesc, int>> squarefree_factor(const HomPoly& p);

using Matrix2 = std::array<std::array<Rat, 2>, 2>;
/// p(m00*x + m01*y, m10*x + m11*y)
HomPoly substitute_linear(const HomPoly& p, const Matrix2& m);
Matrix2 inverse(const Matrix2& m);

/// Primitive gcd with positive leading coefficient; degree 0 when coprime.
HomPoly gcd_poly(const HomPoly& a, const HomPoly& b);

std::ostream& operator<<(std::ostream& os, const HomPoly& p);
std::ostream& operator<<(std::ostream& os, const RootDesc& r);

}  // namespace curveforge
