#pragma once

#include <array>
#include <string>
#include <vector>

#include "curveforge/curve.hpp"
#include "curveforge/hom_poly.hpp"
#include "curveforge/ternary.hpp"

namespace curveforge {

using Point3 = std::array<Rat, 3>;
using Triple = std::array<TernaryForm, 3>;

/// A birational map of P^2 given by forward and backward coordinate triples.
/// Pulling a curve back through `backward` and stripping the exceptional
/// forms gives its strict transform under `forward`.
struct CremonaMap {
    std::string name;
    Triple forward;
    Triple backward;
    std::vector<HomPoly> exceptional_forms;
};

/// Checks that backward(forward) is a multiple of (x, y, z); throws
/// InvalidArgument otherwise.
CremonaMap make_cremona(std::string name, Triple forward, Triple backward, std::vector<HomPoly> exceptional);

/// (xy, y^2, x(z - cx)) with inverse (x^2, xy, yz + cx^2)
CremonaMap phi(const Rat& c);
CremonaMap phi_inverse(const Rat& c);
CremonaMap identity_map();
/// (x, z, y)
CremonaMap iota();
/// (x y^{d-2}, y^{d-1}, F z + G) with inverse (xF, yF, y^{d-2} z - G)
CremonaMap big_phi(const CurveEquation& c);
/// (xS, yS, y^s z) with inverse (x y^s, y^{s+1}, S z), s = deg S
CremonaMap psi(const HomPoly& S);

/// Throws IndeterminatePoint when every forward coordinate vanishes.
Point3 apply_point(const CremonaMap& m, const Point3& pt);
/// Integer coordinates with gcd 1, first nonzero coordinate positive.
Point3 normalize_point(const Point3& pt);

/// Pullback through m.backward, exceptional forms divided out, primitive.
/// Throws ExceptionalInput when nothing but exceptional factors is left.
TernaryForm strict_transform(const TernaryForm& p, const CremonaMap& m);

/// y^2 = scale * prod (x - branch_point)
struct NormalForm {
    int g = 0;
    std::vector<Rat> branch_points;
    Rat scale{1};
    std::vector<std::string> transform_log;
    // pipeline quantities: degree, deg S and the number of odd-order factors
    int d = 0;
    int s = 0;
    int l = 0;
};

/// Shear y -> y + cx until y does not divide F * Delta, then Phi, Psi, iota.
/// Throws GenusZero, NonSplitDiscriminant, Lemma1Violation (no data), and
/// PostconditionFailed when an intermediate curve is not of the expected
/// shape or l = 2g+2, g = d-s-2 fail.
NormalForm reduce_to_normal_form(const CurveEquation& c);

/// Whether a Moebius map over Q carries A onto B. Throws SizeMismatch when
/// the sizes differ, InvalidArgument for fewer than 3 or repeated points.
bool pgl2_equivalent(const std::vector<Position>& a, const std::vector<Position>& b);
bool pgl2_equivalent_serial(const std::vector<Position>& a, const std::vector<Position>& b);

std::vector<Position> as_positions(const std::vector<Rat>& values);

}  // namespace curveforge
