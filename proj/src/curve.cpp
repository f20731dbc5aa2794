#include "curveforge/curve.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "curveforge/error.hpp"

namespace curveforge {

CurveEquation::CurveEquation(HomPoly F, HomPoly G, HomPoly H) : F_(std::move(F)), G_(std::move(G)), H_(std::move(H)) {
    const int d = H_.degree();
    if (F_.degree() != d - 2 || G_.degree() != d - 1)
        fail(ErrorKind::DegreeMismatch, "F, G, H must have degrees d-2, d-1, d; got " + std::to_string(F_.degree()) +
                                            ", " + std::to_string(G_.degree()) + ", " + std::to_string(d));
    if (d < 4) fail(ErrorKind::InvalidType, "degree must be at least 4, got " + std::to_string(d));
    if (F_.is_zero()) fail(ErrorKind::InvalidType, "F = 0: Q has multiplicity above d-2");
}

CurveEquation CurveEquation::from_ternary(const TernaryForm& p) {
    if (p.degree() < 2 || p.z_degree() != 2)
        fail(ErrorKind::InvalidType, "polynomial must have z-degree exactly 2");
    return CurveEquation(p.part(2), p.part(1).scaled(Rat(1, 2)), p.part(0));
}

std::vector<std::pair<int, int>> TwoFormula::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& e : entries)
        for (int w = 0; w < e.weight(); ++w) out.emplace_back(e.p, e.q);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

int TwoFormula::sum_p() const {
    int s = 0;
    for (const auto& e : entries) s += e.p * e.weight();
    return s;
}

int TwoFormula::sum_q() const {
    int s = 0;
    for (const auto& e : entries) s += e.q * e.weight();
    return s;
}

HomPoly discriminant(const CurveEquation& c) {
    HomPoly D = sub(mul(c.G(), c.G()), mul(c.F(), c.H()));
    if (D.is_zero()) fail(ErrorKind::ZeroDiscriminant, "G^2 - F H vanishes identically");
    return D;
}

TwoFormula two_formula_of(const HomPoly& F, const HomPoly& D) {
    if (F.is_zero() || D.is_zero()) fail(ErrorKind::ZeroPolynomial, "two_formula needs nonzero F and discriminant");
    TwoFormula t;
    // linear roots first, found jointly on F*D
    std::vector<RootDesc> linear;
    if (F.y_order() > 0 || D.y_order() > 0) linear.push_back(RootDesc::infinity());
    for (const Rat& r : rational_roots(mul(F, D).dehomogenize())) linear.push_back(RootDesc::rational(r));
    std::sort(linear.begin(), linear.end());

    HomPoly Fr = F, Dr = D;
    for (const auto& r : linear) {
        const int p = ord_at(F, r);
        const int q = ord_at(D, r);
        t.entries.push_back({r, p, q});
        Fr = div_exact(Fr, r.form().pow(static_cast<unsigned>(p)));
        Dr = div_exact(Dr, r.form().pow(static_cast<unsigned>(q)));
    }

    // the residuals have no linear factors left; split them into pieces of
    // constant (p, q) by crossing the two squarefree decompositions
    const auto fparts = squarefree_decomposition(Fr.dehomogenize());
    const auto dparts = squarefree_decomposition(Dr.dehomogenize());
    std::vector<UPoly> d_left;
    for (const auto& dp : dparts) d_left.push_back(dp.first);
    std::vector<TwoFormulaEntry> residual;
    auto push = [&](const UPoly& piece, int p, int q) {
        residual.push_back({RootDesc::irreducible(HomPoly::homogenize(piece, piece.degree())), p, q});
    };
    for (const auto& [fi, i] : fparts) {
        UPoly f_left = fi;
        for (size_t jj = 0; jj < dparts.size(); ++jj) {
            UPoly g = gcd(f_left, d_left[jj]);
            if (g.degree() < 1) continue;
            push(g, i, dparts[jj].second);
            f_left = div_exact(f_left, g);
            d_left[jj] = div_exact(d_left[jj], g);
        }
        if (f_left.degree() >= 1) push(f_left, i, 0);
    }
    for (size_t jj = 0; jj < dparts.size(); ++jj)
        if (d_left[jj].degree() >= 1) push(d_left[jj], 0, dparts[jj].second);
    std::sort(residual.begin(), residual.end(), [](const TwoFormulaEntry& a, const TwoFormulaEntry& b) {
        if (a.p != b.p) return a.p > b.p;
        if (a.q != b.q) return a.q > b.q;
        return a.root < b.root;
    });
    t.entries.insert(t.entries.end(), residual.begin(), residual.end());
    return t;
}

TwoFormula two_formula(const CurveEquation& c) { return two_formula_of(c.F(), discriminant(c)); }

Lemma1Result check_lemma1(const std::vector<std::pair<int, int>>& pairs) {
    Lemma1Result r;
    int sp = 0, sq = 0;
    r.parity_rule = true;
    for (const auto& [p, q] : pairs) {
        sp += p;
        sq += q;
        if (p != q && std::min(p, q) % 2 != 0) r.parity_rule = false;
        if (q % 2 == 1) r.odd_rule = true;
    }
    r.sum_rule = sq == 2 * sp + 2;
    return r;
}

Lemma1Result check_lemma1(const TwoFormula& t) { return check_lemma1(t.pairs()); }

bool irreducible_sufficient(const CurveEquation& c) {
    const HomPoly g = gcd_poly(gcd_poly(c.F(), c.G()), c.H());
    if (g.degree() != 0) return false;
    return check_lemma1(two_formula(c)).odd_rule;
}

DataSpec data_from_formula(const std::vector<std::pair<int, int>>& pairs, int d) {
    const Lemma1Result l = check_lemma1(pairs);
    if (!l.all())
        fail(ErrorKind::Lemma1Violation, std::string("2-formula fails Lemma 1 rule ") +
                                             (!l.sum_rule ? "(i)" : !l.parity_rule ? "(ii)" : "(iii)"));
    std::vector<QCluster> q;
    std::vector<OffQSing> off;
    int sum_p = 0;
    for (const auto& [p, qq] : pairs) {
        sum_p += p;
        if (p == 0 && qq < 2) continue;
        if (p > 0 && qq > 0 && qq % 2 == 0) {
            if (p <= qq)
                q.push_back(QCluster::pair(p / 2, p / 2, qq / 2));
            else
                q.push_back(QCluster::pair(qq / 2, p - qq / 2, qq / 2));
        } else if (p > 0) {
            q.push_back(QCluster::single(p, qq % 2 == 1 ? (qq - 1) / 2 : 0));
        } else if (qq % 2 == 0) {
            off.push_back(OffQSing::tacnode(qq / 2));
        } else {
            off.push_back(OffQSing::cusp((qq - 1) / 2));
        }
    }
    if (sum_p != d - 2)
        fail(ErrorKind::MultiplicityMismatch,
             "sum of p is " + std::to_string(sum_p) + " but d-2 = " + std::to_string(d - 2));
    return DataSpec(std::move(q), std::move(off));
}

DataSpec data_from_formula(const TwoFormula& t, int d) { return data_from_formula(t.pairs(), d); }

AnalysisReport analyze(const CurveEquation& c) {
    AnalysisReport r;
    r.d = c.d();
    r.discriminant = discriminant(c);
    r.two_formula = two_formula_of(c.F(), r.discriminant);
    const auto pairs = r.two_formula.pairs();
    r.lemma1 = check_lemma1(pairs);
    for (const auto& [p, q] : pairs) {
        if (p == 1 && q == 0) ++r.flex_tangent_entries;
        if (p == 1 && q == 1) ++r.simple_tangent_entries;
    }
    const HomPoly g = gcd_poly(gcd_poly(c.F(), c.G()), c.H());
    r.irreducible_sufficient = g.degree() == 0 && r.lemma1.odd_rule;
    if (r.lemma1.all()) {
        r.data = data_from_formula(pairs, r.d);
        r.genus = genus_of(r.d, *r.data);
    }
    return r;
}

}  // namespace curveforge
