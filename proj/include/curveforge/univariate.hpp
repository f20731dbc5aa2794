#pragma once

#include <utility>
#include <vector>

#include "curveforge/rational.hpp"

namespace curveforge {

/// Dense univariate polynomial over Q, coefficients in ascending powers.
/// Always trimmed: the zero polynomial has no coefficients.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rat> ascending);
    static UPoly constant(const Rat& value);
    static UPoly monomial(const Rat& coeff, int power);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }
    Rat coeff(int power) const;
    const Rat& leading() const { return coeffs_.back(); }

    Rat eval(const Rat& t) const;
    UPoly derivative() const;
    UPoly monic() const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const Rat& s, const UPoly& a);
    friend bool operator==(const UPoly& a, const UPoly& b) = default;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Exact quotient; throws NotDivisible on a nonzero remainder.
UPoly div_exact(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

/// Yun decomposition: pairwise coprime monic squarefree parts with their
/// multiplicities, constant factor dropped.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f);

/// Distinct rational roots, ascending. Found by Hensel-lifting simple roots
/// modulo a small prime and rationally reconstructing them.
std::vector<Rat> rational_roots(const UPoly& f);

/// Integer coefficients with content 1 and positive leading coefficient.
std::vector<BigInt> primitive_integer_form(const UPoly& f);

}  // namespace curveforge
