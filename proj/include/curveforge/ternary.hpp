#pragma once

#include <array>
#include <ostream>
#include <utility>
#include <vector>

#include "curveforge/hom_poly.hpp"

namespace curveforge {

/// One monomial c * x^i * y^j * z^k.
struct Term {
    int i = 0;
    int j = 0;
    int k = 0;
    Rat c;
};

/// Homogeneous polynomial in x, y, z of degree n, stored by powers of z:
/// P = sum_k z^k * part(k) with part(k) a binary form of degree n - k.
class TernaryForm {
public:
    TernaryForm() : TernaryForm(0) {}
    explicit TernaryForm(int degree);
    /// Missing trailing parts are zero.
    TernaryForm(int degree, std::vector<HomPoly> parts);

    static TernaryForm from_binary(const HomPoly& p);
    static TernaryForm x();
    static TernaryForm y();
    static TernaryForm z();
    /// F z^2 + 2 G z + H
    static TernaryForm from_curve(const HomPoly& F, const HomPoly& G, const HomPoly& H);

    int degree() const noexcept { return degree_; }
    /// Highest power of z present; -1 for the zero form.
    int z_degree() const noexcept;
    const HomPoly& part(int k) const { return parts_.at(static_cast<size_t>(k)); }
    bool is_zero() const noexcept;

    Rat eval(const Rat& x, const Rat& y, const Rat& z) const;
    /// Nonzero monomials, x power descending, then y, then z.
    std::vector<Term> terms() const;

    TernaryForm scaled(const Rat& s) const;
    TernaryForm pow(unsigned e) const;
    TernaryForm primitive() const;

    /// P(X, Y, Z) for forms X, Y, Z of a common degree.
    TernaryForm substitute(const std::array<TernaryForm, 3>& images) const;
    /// Divides by `form` as often as possible; returns the quotient and the count.
    std::pair<TernaryForm, int> divide_out(const HomPoly& form) const;
    std::optional<TernaryForm> try_div(const HomPoly& form) const;

    friend bool operator==(const TernaryForm&, const TernaryForm&) = default;

private:
    int degree_;
    std::vector<HomPoly> parts_;
};

TernaryForm add(const TernaryForm& a, const TernaryForm& b);
TernaryForm sub(const TernaryForm& a, const TernaryForm& b);
TernaryForm mul(const TernaryForm& a, const TernaryForm& b);
inline TernaryForm operator+(const TernaryForm& a, const TernaryForm& b) { return add(a, b); }
inline TernaryForm operator-(const TernaryForm& a, const TernaryForm& b) { return sub(a, b); }
inline TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) { return mul(a, b); }

bool proportional(const TernaryForm& a, const TernaryForm& b);

std::ostream& operator<<(std::ostream& os, const TernaryForm& p);

}  // namespace curveforge
