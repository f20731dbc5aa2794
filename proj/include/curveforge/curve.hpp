#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "curveforge/data_spec.hpp"
#include "curveforge/hom_poly.hpp"
#include "curveforge/ternary.hpp"

namespace curveforge {

/// The curve F z^2 + 2 G z + H = 0 with deg F = d-2, deg G = d-1, deg H = d.
/// G is stored without the factor 2.
class CurveEquation {
public:
    /// Throws DegreeMismatch on inconsistent degrees and InvalidType when
    /// d < 4 or F = 0.
    CurveEquation(HomPoly F, HomPoly G, HomPoly H);

    /// Reads off F, G, H from a form of z-degree exactly 2.
    static CurveEquation from_ternary(const TernaryForm& p);

    int d() const noexcept { return H_.degree(); }
    const HomPoly& F() const noexcept { return F_; }
    const HomPoly& G() const noexcept { return G_; }
    const HomPoly& H() const noexcept { return H_; }
    TernaryForm polynomial() const { return TernaryForm::from_curve(F_, G_, H_); }

    friend bool operator==(const CurveEquation&, const CurveEquation&) = default;

private:
    HomPoly F_, G_, H_;
};

struct TwoFormulaEntry {
    RootDesc root;
    int p = 0;
    int q = 0;
    /// number of identical (p, q) pairs this entry stands for
    int weight() const noexcept { return root.weight(); }
    friend bool operator==(const TwoFormulaEntry&, const TwoFormulaEntry&) = default;
};

struct TwoFormula {
    std::vector<TwoFormulaEntry> entries;

    /// The multiset of (p, q) with weights expanded, sorted descending.
    std::vector<std::pair<int, int>> pairs() const;
    int sum_p() const;
    int sum_q() const;
};

struct Lemma1Result {
    bool sum_rule = false;     // sum q = 2 sum p + 2
    bool parity_rule = false;  // p = q or min(p, q) even, for every pair
    bool odd_rule = false;     // some q odd
    bool all() const noexcept { return sum_rule && parity_rule && odd_rule; }
    friend bool operator==(const Lemma1Result&, const Lemma1Result&) = default;
};

struct AnalysisReport {
    int d = 0;
    HomPoly discriminant;
    TwoFormula two_formula;
    Lemma1Result lemma1;
    /// present exactly when lemma1.all()
    std::optional<DataSpec> data;
    std::optional<int> genus;
    bool irreducible_sufficient = false;
    /// how many Single(1, 0) clusters came from (1,0) and from (1,1) entries
    int flex_tangent_entries = 0;
    int simple_tangent_entries = 0;
};

/// G^2 - F H. Throws ZeroDiscriminant when it vanishes.
HomPoly discriminant(const CurveEquation& c);
TwoFormula two_formula(const CurveEquation& c);
/// Pairs (ord_t F, ord_t D) over the distinct roots of F*D.
TwoFormula two_formula_of(const HomPoly& F, const HomPoly& D);
Lemma1Result check_lemma1(const TwoFormula& t);
Lemma1Result check_lemma1(const std::vector<std::pair<int, int>>& pairs);
/// gcd(F, G, H) = 1 and some q odd. False means inconclusive.
bool irreducible_sufficient(const CurveEquation& c);
/// Throws Lemma1Violation unless check_lemma1 passes.
DataSpec data_from_formula(const std::vector<std::pair<int, int>>& pairs, int d);
DataSpec data_from_formula(const TwoFormula& t, int d);
AnalysisReport analyze(const CurveEquation& c);

}  // namespace curveforge
