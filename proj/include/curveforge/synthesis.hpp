#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "curveforge/admissibility.hpp"
#include "curveforge/curve.hpp"
#include "curveforge/data_spec.hpp"
#include "curveforge/hom_poly.hpp"

namespace curveforge {

/// Low coefficients c_0..c_{k-1} of a square root of delta(t) mod t^k.
struct SqrtSeries {
    std::vector<Rat> c;
};

/// Throws ZeroConstantTerm when delta[0] = 0, NonSquareConstantTerm when it is
/// not the square of a rational.
SqrtSeries sqrt_series(const std::vector<Rat>& delta, int k, int sign = 1);

HomPoly position_form(const Position& pos);

/// One root of F*Delta with its prescribed orders.
struct RootPlacement {
    Position position;
    int p = 0;
    int q = 0;
    int sign = 1;           // square-root branch, used when p > q
    bool pin_next = false;  // p > q only: force ord(G^2 - Delta) = p via the next coefficient
};

struct Synthesis {
    CurveEquation curve;
    std::vector<RootPlacement> roots;
    Rat delta_scale;  // Delta = delta_scale * prod(form^q)
    int attempt = 0;  // 0 means every free coefficient of G is 0
    std::vector<Rat> free_values;
    DataSpec data;
};

/// F = prod form^p, Delta = delta_scale * prod form^q, G solved linearly from
/// the local conditions, H = (G^2 - Delta) / F. Free coefficients of G start at
/// 0 and are redrawn from {-7..7} \ {0} (seeded) up to 32 times until
/// gcd(F, G, H) = 1.
Synthesis solve_placement(const std::vector<RootPlacement>& roots, const Rat& delta_scale, std::uint64_t seed);

/// Equation families of the cuspidal and bibranched classes, including the
/// (1,1)-variants aa+, ab+, ac+ that share their data with aa, ab, ac.
enum class Construction { a, b, c, e, f, aa, aa_plus, aa1, aa2, aa3, aa4, ab, ab_plus, ac, ac_plus, bb, bc, cc };

std::string_view construction_name(Construction c) noexcept;
std::optional<Construction> parse_construction(std::string_view name);
/// Corollary label of the data a construction realizes (aa+ -> aa, and so on;
/// at d = 4 the aa family lands on aa1-aa4).
ClassLabel construction_label(Construction c) noexcept;
const std::vector<Construction>& all_constructions();

/// k, r, j, l are the class table's integers. k is always derived from the
/// genus relation; r is an input for the two-cluster classes and f; j for
/// c, e, ac, ac+, cc; l for bc, cc. tails are the cusp (a, b, c) or tacnode
/// (others) lengths. Empty lambdas selects the default 1, -1, 2, -2, ...
struct ClassParams {
    Construction kind = Construction::a;
    int g = 1;
    int r = 1;
    int j = 0;
    int l = 0;
    std::vector<int> tails;
    std::vector<Rat> lambdas;
    int sign = 1;
    std::uint64_t seed = 0;
};

/// The derived k (throws InvalidArgument when the relation has no solution).
int class_k(const ClassParams& p);
int class_degree(const ClassParams& p);
/// Number of lambdas the class needs (tails first, then simple roots).
int class_lambda_count(const ClassParams& p);
DataSpec class_data(const ClassParams& p);
std::vector<RootPlacement> class_roots(const ClassParams& p);

/// Throws NonSquareConstantTerm, DegenerateLambdas, InvalidArgument,
/// PostconditionFailed.
Synthesis construct_class(const ClassParams& p);

struct SynthesizeOptions {
    /// One position per non-padding root of synthesis_pairs (clusters, then
    /// off-Q entries); empty means search.
    std::vector<Position> placement;
    std::uint64_t seed = 0;
};

/// The (p, q) each non-padding root must carry, and the number of (0,1)
/// padding roots, for data m in degree d and genus g.
struct RootPlan {
    std::vector<std::pair<int, int>> pairs;
    int padding = 0;
};
RootPlan synthesis_plan(int d, int g, const DataSpec& m);

/// Realizes admissible data. Throws NotAdmissible, NonSquareConstantTerm
/// (placement search exhausted, or a given placement fails), DegenerateLambdas,
/// InfeasibleAssignment, PostconditionFailed.
Synthesis synthesize(int d, int g, const DataSpec& m, const SynthesizeOptions& opts = {});

}  // namespace curveforge
