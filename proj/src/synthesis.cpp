#include "curveforge/synthesis.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>

#include "curveforge/error.hpp"
#include "curveforge/linalg.hpp"

namespace curveforge {

SqrtSeries sqrt_series(const std::vector<Rat>& delta, int k, int sign) {
    if (k < 1) fail(ErrorKind::InvalidArgument, "sqrt_series needs k >= 1");
    if (sign != 1 && sign != -1) fail(ErrorKind::InvalidArgument, "sign must be +1 or -1");
    auto d = [&](int j) { return j < static_cast<int>(delta.size()) ? delta[static_cast<size_t>(j)] : Rat(0); };
    if (d(0) == 0) fail(ErrorKind::ZeroConstantTerm, "constant term of delta is 0");
    auto root = exact_sqrt(d(0));
    if (!root) fail(ErrorKind::NonSquareConstantTerm, "constant term " + to_string(d(0)) + " is not a rational square");
    SqrtSeries s;
    s.c.push_back(sign * *root);
    const Rat two_c0 = 2 * s.c[0];
    for (int j = 1; j < k; ++j) {
        Rat acc = d(j);
        for (int i = 1; i < j; ++i) acc -= s.c[static_cast<size_t>(i)] * s.c[static_cast<size_t>(j - i)];
        s.c.push_back(acc / two_c0);
    }
    return s;
}

HomPoly position_form(const Position& pos) {
    return pos ? HomPoly::linear(Rat(1), -*pos) : HomPoly::monomial(Rat(1), 0, 1);
}

namespace {

// Substitution sending the root's form to y; the root itself becomes (1:0).
Matrix2 local_chart(const Position& pos) {
    if (!pos) return Matrix2{{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}};
    return Matrix2{{{*pos, Rat(1)}, {Rat(1), Rat(0)}}};
}

std::string position_text(const Position& pos) { return pos ? to_string(*pos) : std::string("inf"); }

void check_distinct(const std::vector<RootPlacement>& roots) {
    std::set<Position> seen;
    for (const auto& r : roots)
        if (!seen.insert(r.position).second)
            fail(ErrorKind::DegenerateLambdas, "two roots placed at " + position_text(r.position));
}

}  // namespace

Synthesis solve_placement(const std::vector<RootPlacement>& roots, const Rat& delta_scale, std::uint64_t seed) {
    check_distinct(roots);
    if (delta_scale == 0) fail(ErrorKind::InvalidArgument, "delta scale must be nonzero");
    int sum_p = 0, sum_q = 0;
    for (const auto& r : roots) {
        if (r.p < 0 || r.q < 0 || r.p + r.q == 0) fail(ErrorKind::InvalidArgument, "root orders must be a nonzero pair");
        sum_p += r.p;
        sum_q += r.q;
    }
    const int d = sum_p + 2;
    if (d < 4) fail(ErrorKind::InvalidType, "placement gives d = " + std::to_string(d) + " < 4");
    if (sum_q != 2 * d - 2)
        fail(ErrorKind::InvalidArgument,
             "sum of q is " + std::to_string(sum_q) + ", need 2d-2 = " + std::to_string(2 * d - 2));

    HomPoly F = HomPoly::constant(Rat(1));
    HomPoly D = HomPoly::constant(delta_scale);
    for (const auto& r : roots) {
        const HomPoly form = position_form(r.position);
        if (r.p) F = mul(F, form.pow(static_cast<unsigned>(r.p)));
        if (r.q) D = mul(D, form.pow(static_cast<unsigned>(r.q)));
    }

    const int n = d - 1;
    LinearSystem sys(n + 1);
    for (const auto& r : roots) {
        if (r.p == 0) continue;
        const Matrix2 chart = local_chart(r.position);
        std::vector<Rat> target;
        if (r.q >= r.p) {
            target.assign(static_cast<size_t>((r.p + 1) / 2), Rat(0));
        } else {
            if (r.q % 2 != 0)
                fail(ErrorKind::InvalidArgument, "root with p > q needs q even, got (" + std::to_string(r.p) + "," +
                                                     std::to_string(r.q) + ")");
            const HomPoly local_d = substitute_linear(D, chart);
            const int m = r.q / 2;
            const int kk = r.p - r.q + (r.pin_next ? 1 : 0);
            std::vector<Rat> delta;
            for (int j = 0; j < kk; ++j) delta.push_back(local_d.coeff(r.q + j));
            SqrtSeries s = sqrt_series(delta, kk, r.sign);
            if (r.pin_next) s.c.back() += 1;
            target.assign(static_cast<size_t>(m), Rat(0));
            target.insert(target.end(), s.c.begin(), s.c.end());
        }
        const int e = static_cast<int>(target.size());
        std::vector<std::vector<Rat>> rows(static_cast<size_t>(e), std::vector<Rat>(static_cast<size_t>(n + 1)));
        for (int h = 0; h <= n; ++h) {
            const HomPoly img = substitute_linear(HomPoly::monomial(Rat(1), n - h, h), chart);
            for (int i = 0; i < e; ++i) rows[static_cast<size_t>(i)][static_cast<size_t>(h)] = img.coeff(i);
        }
        for (int i = 0; i < e; ++i) sys.add_equation(rows[static_cast<size_t>(i)], target[static_cast<size_t>(i)]);
    }
    const auto sol = sys.solve();
    if (!sol) fail(ErrorKind::InfeasibleAssignment, "local conditions on G are inconsistent");

    std::vector<std::pair<int, int>> expected;
    for (const auto& r : roots) expected.emplace_back(r.p, r.q);
    std::sort(expected.begin(), expected.end(), std::greater<>());

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> draw(1, 14);
    const size_t nfree = sol->free_vars().size();
    constexpr int kRetries = 32;
    for (int attempt = 0; attempt <= kRetries; ++attempt) {
        std::vector<Rat> free(nfree, Rat(0));
        if (attempt > 0)
            for (auto& v : free) {
                const int x = draw(rng);
                v = x <= 7 ? x - 8 : x - 7;
            }
        const HomPoly G(n, sol->instantiate(free));
        const auto H = try_div(sub(mul(G, G), D), F);
        if (!H) fail(ErrorKind::PostconditionFailed, "F does not divide G^2 - Delta");
        CurveEquation curve(F, G, *H);
        const TwoFormula t = two_formula(curve);
        if (t.pairs() != expected) fail(ErrorKind::PostconditionFailed, "2-formula differs from the placement");
        if (irreducible_sufficient(curve)) {
            DataSpec data = data_from_formula(t, d);
            return Synthesis{std::move(curve), roots, delta_scale, attempt, std::move(free), std::move(data)};
        }
        if (nfree == 0) break;
    }
    fail(ErrorKind::PostconditionFailed, "no choice of free coefficients gave gcd(F, G, H) = 1");
}

// ---------------------------------------------------------------- classes

namespace {

struct ConstructionInfo {
    Construction kind;
    std::string_view name;
    ClassLabel label;
};

constexpr std::array<ConstructionInfo, 18> kConstructions{{
    {Construction::a, "a", ClassLabel::a},
    {Construction::b, "b", ClassLabel::b},
    {Construction::c, "c", ClassLabel::c},
    {Construction::e, "e", ClassLabel::e},
    {Construction::f, "f", ClassLabel::f},
    {Construction::aa, "aa", ClassLabel::aa},
    {Construction::aa_plus, "aa+", ClassLabel::aa},
    {Construction::aa1, "aa1", ClassLabel::aa1},
    {Construction::aa2, "aa2", ClassLabel::aa2},
    {Construction::aa3, "aa3", ClassLabel::aa3},
    {Construction::aa4, "aa4", ClassLabel::aa4},
    {Construction::ab, "ab", ClassLabel::ab},
    {Construction::ab_plus, "ab+", ClassLabel::ab},
    {Construction::ac, "ac", ClassLabel::ac},
    {Construction::ac_plus, "ac+", ClassLabel::ac},
    {Construction::bb, "bb", ClassLabel::bb},
    {Construction::bc, "bc", ClassLabel::bc},
    {Construction::cc, "cc", ClassLabel::cc},
}};

bool uses_x_root(Construction c) {
    return c != Construction::a && c != Construction::b && c != Construction::c && c != Construction::e &&
           c != Construction::f;
}

bool cuspidal(Construction c) { return c == Construction::a || c == Construction::b || c == Construction::c; }

// Shape of a class: the roots at y and at x, plus the number of simple roots.
struct Shape {
    int k = 0;
    std::optional<std::pair<int, int>> at_y, at_x;
    int simple = 0;
    bool pin_y = false;
};

struct FixedD4 {
    int g;
    std::vector<int> tails;
};

FixedD4 fixed_d4(Construction c) {
    switch (c) {
        case Construction::aa1: return {0, {2}};
        case Construction::aa2: return {0, {1, 1}};
        case Construction::aa3: return {1, {1}};
        default: return {2, {}};
    }
}

bool is_d4(Construction c) {
    return c == Construction::aa1 || c == Construction::aa2 || c == Construction::aa3 || c == Construction::aa4;
}

std::vector<int> effective_tails(const ClassParams& p) {
    if (is_d4(p.kind) && p.tails.empty()) return fixed_d4(p.kind).tails;
    return p.tails;
}

Shape shape_of(const ClassParams& p) {
    const std::vector<int> tails = effective_tails(p);
    for (int b : tails)
        if (b < 1) fail(ErrorKind::InvalidArgument, "tail lengths must be >= 1");
    if (p.g < 0) fail(ErrorKind::InvalidArgument, "genus must be >= 0");
    if (p.j < 0 || p.l < 0) fail(ErrorKind::InvalidArgument, "j and l must be >= 0");
    const int T = std::accumulate(tails.begin(), tails.end(), 0);
    const int nt = static_cast<int>(tails.size());
    const int g = p.g;
    const int r = p.r;
    auto need_r = [&] {
        if (r < 1) fail(ErrorKind::InvalidArgument, "r must be >= 1");
    };
    Shape s;
    switch (p.kind) {
        case Construction::a:
            s.k = g + T;
            s.at_y = {s.k, 0};
            s.simple = 2 * g + 2 - nt;
            break;
        case Construction::b:
            s.k = g + T - 1;
            s.at_y = {2 * s.k + 1, 2 * s.k + 1};
            s.simple = 2 * g + 1 - nt;
            break;
        case Construction::c:
            s.k = g + p.j + T;
            s.at_y = {2 * s.k, 2 * s.k + 2 * p.j + 1};
            s.simple = 2 * g + 1 - nt;
            break;
        case Construction::e:
            s.k = g + p.j + T;
            s.at_y = {2 * s.k, 2 * s.k + 2 * p.j};
            s.simple = 2 * g + 2;
            break;
        case Construction::f:
            need_r();
            s.k = g + T - r;
            s.at_y = {2 * s.k + r, 2 * s.k};
            s.pin_y = true;
            s.simple = 2 * g + 2;
            break;
        case Construction::aa:
            need_r();
            s.k = g + T - r;
            s.at_y = {s.k, 0};
            s.at_x = {r, 0};
            s.simple = 2 * g + 2;
            break;
        case Construction::aa_plus:
            s.k = g + T - 1;
            s.at_y = {s.k, 0};
            s.at_x = {1, 1};
            s.simple = 2 * g + 1;
            break;
        case Construction::aa1:
        case Construction::aa2:
        case Construction::aa3:
        case Construction::aa4: {
            const FixedD4 fx = fixed_d4(p.kind);
            if (g != fx.g || tails != fx.tails)
                fail(ErrorKind::InvalidArgument, std::string(construction_name(p.kind)) + " needs g = " +
                                                     std::to_string(fx.g) + " and its fixed tacnode tails");
            s.k = 1;
            s.at_y = {1, 1};
            s.at_x = {1, 1};
            s.simple = 2 * g;
            break;
        }
        case Construction::ab:
            need_r();
            s.k = g + T - 1 - r;
            s.at_y = {2 * s.k + 1, 2 * s.k + 1};
            s.at_x = {r, 0};
            s.simple = 2 * g + 1;
            break;
        case Construction::ab_plus:
            s.k = g + T - 2;
            s.at_y = {2 * s.k + 1, 2 * s.k + 1};
            s.at_x = {1, 1};
            s.simple = 2 * g;
            break;
        case Construction::ac:
            need_r();
            s.k = g + p.j + T - r;
            s.at_y = {2 * s.k, 2 * s.k + 2 * p.j + 1};
            s.at_x = {r, 0};
            s.simple = 2 * g + 1;
            break;
        case Construction::ac_plus:
            s.k = g + p.j + T - 1;
            s.at_y = {2 * s.k, 2 * s.k + 2 * p.j + 1};
            s.at_x = {1, 1};
            s.simple = 2 * g;
            break;
        case Construction::bb:
            need_r();
            s.k = g + T - r - 2;
            s.at_y = {2 * s.k + 1, 2 * s.k + 1};
            s.at_x = {2 * r + 1, 2 * r + 1};
            s.simple = 2 * g;
            break;
        case Construction::bc:
            need_r();
            s.k = g + p.l + T - r - 1;
            s.at_y = {2 * s.k + 1, 2 * s.k + 1};
            s.at_x = {2 * r, 2 * r + 2 * p.l + 1};
            s.simple = 2 * g;
            break;
        case Construction::cc:
            need_r();
            s.k = g + p.j + p.l + T - r;
            s.at_y = {2 * s.k, 2 * s.k + 2 * p.j + 1};
            s.at_x = {2 * r, 2 * r + 2 * p.l + 1};
            s.simple = 2 * g;
            break;
    }
    if (s.k < 1)
        fail(ErrorKind::InvalidArgument, "class " + std::string(construction_name(p.kind)) + " with these tails gives k = " +
                                             std::to_string(s.k) + " < 1");
    if (s.simple < 0) fail(ErrorKind::InvalidArgument, "too many tails for genus " + std::to_string(g));
    return s;
}

}  // namespace

std::string_view construction_name(Construction c) noexcept {
    for (const auto& info : kConstructions)
        if (info.kind == c) return info.name;
    return "?";
}

std::optional<Construction> parse_construction(std::string_view name) {
    for (const auto& info : kConstructions)
        if (info.name == name) return info.kind;
    return std::nullopt;
}

ClassLabel construction_label(Construction c) noexcept {
    for (const auto& info : kConstructions)
        if (info.kind == c) return info.label;
    return ClassLabel::mixed;
}

const std::vector<Construction>& all_constructions() {
    static const std::vector<Construction> all = [] {
        std::vector<Construction> v;
        for (const auto& info : kConstructions) v.push_back(info.kind);
        return v;
    }();
    return all;
}

int class_k(const ClassParams& p) { return shape_of(p).k; }

int class_lambda_count(const ClassParams& p) {
    return static_cast<int>(effective_tails(p).size()) + shape_of(p).simple;
}

std::vector<RootPlacement> class_roots(const ClassParams& p) {
    const Shape s = shape_of(p);
    const std::vector<int> tails = effective_tails(p);
    const int count = static_cast<int>(tails.size()) + s.simple;
    std::vector<Rat> lambdas = p.lambdas;
    if (lambdas.empty())
        for (int i = 0; i < count; ++i) lambdas.emplace_back(i % 2 == 0 ? i / 2 + 1 : -(i / 2 + 1));
    if (static_cast<int>(lambdas.size()) != count)
        fail(ErrorKind::InvalidArgument, "class " + std::string(construction_name(p.kind)) + " needs " +
                                             std::to_string(count) + " lambdas, got " + std::to_string(lambdas.size()));
    if (uses_x_root(p.kind))
        for (const auto& l : lambdas)
            if (l == 0) fail(ErrorKind::DegenerateLambdas, "lambdas must be nonzero for this class");
    std::vector<RootPlacement> roots;
    roots.push_back({std::nullopt, s.at_y->first, s.at_y->second, p.sign, s.pin_y});
    if (s.at_x) roots.push_back({Rat(0), s.at_x->first, s.at_x->second, p.sign, false});
    for (size_t i = 0; i < lambdas.size(); ++i) {
        const bool tail = i < tails.size();
        int q = 1;
        if (tail) q = cuspidal(p.kind) ? 2 * tails[i] + 1 : 2 * tails[i];
        roots.push_back({lambdas[i], 0, q, 1, false});
    }
    check_distinct(roots);
    return roots;
}

int class_degree(const ClassParams& p) {
    const Shape s = shape_of(p);
    return s.at_y->first + (s.at_x ? s.at_x->first : 0) + 2;
}

DataSpec class_data(const ClassParams& p) {
    const int d = class_degree(p);
    std::vector<std::pair<int, int>> pairs;
    for (const auto& r : class_roots(p)) pairs.emplace_back(r.p, r.q);
    return data_from_formula(pairs, d);
}

Synthesis construct_class(const ClassParams& p) {
    Synthesis out = solve_placement(class_roots(p), Rat(1), p.seed);
    const DataSpec want = class_data(p);
    if (out.data != want)
        fail(ErrorKind::PostconditionFailed, "constructed curve has data " + format_data(out.data) + ", wanted " +
                                                 format_data(want));
    if (genus_of(out.curve.d(), out.data) != p.g)
        fail(ErrorKind::PostconditionFailed, "constructed curve has the wrong genus");
    return out;
}

// ---------------------------------------------------------------- synthesize

RootPlan synthesis_plan(int d, int g, const DataSpec& m) {
    const auto v = validate(d, g, m);
    if (!v.empty())
        fail(ErrorKind::NotAdmissible, format_data(m) + " is not admissible for d = " + std::to_string(d) + ", g = " +
                                           std::to_string(g) + ": " + v.front().detail);
    RootPlan plan;
    int sum_q = 0;
    int simple_singles = 0;
    for (const auto& c : m.q_clusters()) {
        if (c.is_pair())
            plan.pairs.emplace_back(c.k + c.kp, 2 * c.a);
        else if (c.a > 0)
            plan.pairs.emplace_back(c.k, 2 * c.a + 1);
        else if (c.k >= 2)
            plan.pairs.emplace_back(c.k, 0);
        else {
            ++simple_singles;
            continue;
        }
        sum_q += plan.pairs.back().second;
    }
    for (const auto& o : m.off_q()) {
        plan.pairs.emplace_back(0, o.is_tacnode() ? 2 * o.b : 2 * o.b + 1);
        sum_q += plan.pairs.back().second;
    }
    const int rest = 2 * d - 2 - sum_q;
    // (1,1) needs no square root, so prefer it while the q budget lasts
    const int ones = std::min(simple_singles, rest);
    for (int i = 0; i < simple_singles; ++i) plan.pairs.emplace_back(1, i < ones ? 1 : 0);
    plan.padding = rest - ones;
    bool odd = plan.padding > 0;
    for (const auto& pq : plan.pairs) odd = odd || pq.second % 2 == 1;
    if (!odd) fail(ErrorKind::InfeasibleAssignment, "no odd q available, the curve would split");
    return plan;
}

namespace {

bool odd_q(const RootPlacement& r) { return r.q % 2 == 1; }

// Square class representative of Delta / form^q at the root t.
Rat local_constant(const std::vector<RootPlacement>& roots, size_t t, const Rat& scale) {
    Rat v = scale;
    if (!roots[t].position) return v;
    for (size_t s = 0; s < roots.size(); ++s)
        if (s != t && odd_q(roots[s]) && roots[s].position) v *= *roots[t].position - *roots[s].position;
    return v;
}

std::vector<size_t> square_conditions(const std::vector<RootPlacement>& roots) {
    std::vector<size_t> out;
    for (size_t i = 0; i < roots.size(); ++i)
        if (roots[i].p > roots[i].q) out.push_back(i);
    return out;
}

Rat scale_for(const std::vector<RootPlacement>& roots) {
    const auto conds = square_conditions(roots);
    if (conds.empty()) return Rat(1);
    return local_constant(roots, conds.front(), Rat(1));
}

bool squares_hold(const std::vector<RootPlacement>& roots, const Rat& scale) {
    for (size_t t : square_conditions(roots))
        if (!is_rational_square(local_constant(roots, t, scale))) return false;
    return true;
}

// Rationals a/b with b <= 6 in order of height max(|a|, b).
const std::vector<Rat>& candidate_points() {
    static const std::vector<Rat> pts = [] {
        std::vector<Rat> v{Rat(0)};
        for (int h = 1; h <= 30; ++h)
            for (int b = 1; b <= std::min(h, 6); ++b)
                for (int a = -h; a <= h; ++a)
                    if (std::max(std::abs(a), b) == h && std::gcd(std::abs(a), b) == 1) {
                        Rat r(a, b);
                        r.canonicalize();
                        v.push_back(r);
                    }
        return v;
    }();
    return pts;
}

Rat pool_value(int i) { return i == 0 ? Rat(0) : Rat(i % 2 == 1 ? (i + 1) / 2 : -(i / 2)); }

std::vector<RootPlacement> default_roots(const RootPlan& plan) {
    std::vector<RootPlacement> roots;
    for (const auto& [p, q] : plan.pairs) roots.push_back({Rat(0), p, q, 1, false});
    for (int i = 0; i < plan.padding; ++i) roots.push_back({Rat(0), 0, 1, 1, false});
    return roots;
}

}  // namespace

Synthesis synthesize(int d, int g, const DataSpec& m, const SynthesizeOptions& opts) {
    const RootPlan plan = synthesis_plan(d, g, m);
    std::vector<RootPlacement> roots = default_roots(plan);
    auto finish = [&](const std::vector<RootPlacement>& placed) {
        Synthesis s = solve_placement(placed, scale_for(placed), opts.seed);
        if (s.data != m)
            fail(ErrorKind::PostconditionFailed,
                 "synthesized curve has data " + format_data(s.data) + ", wanted " + format_data(m));
        return s;
    };

    if (!opts.placement.empty()) {
        if (opts.placement.size() != plan.pairs.size())
            fail(ErrorKind::InvalidArgument, "placement needs " + std::to_string(plan.pairs.size()) + " positions, got " +
                                                 std::to_string(opts.placement.size()));
        std::set<Position> used(opts.placement.begin(), opts.placement.end());
        if (used.size() != opts.placement.size()) fail(ErrorKind::DegenerateLambdas, "placement repeats a position");
        int next = 1;
        for (size_t i = 0; i < roots.size(); ++i) {
            if (i < plan.pairs.size()) {
                roots[i].position = opts.placement[i];
                continue;
            }
            while (used.count(pool_value(next))) ++next;
            roots[i].position = pool_value(next);
            used.insert(roots[i].position);
        }
        if (!squares_hold(roots, scale_for(roots)))
            fail(ErrorKind::NonSquareConstantTerm, "placement leaves a non-square constant term at a root with p > q");
        return finish(roots);
    }

    // Roots with p > q need Delta / form^q to be a square there. The first
    // goes to infinity (scale 1); the others are searched among small-height
    // rationals once the odd-q roots (the branch points) are placed.
    std::vector<size_t> conds, others;
    for (size_t i = 0; i < roots.size(); ++i) (roots[i].p > roots[i].q ? conds : others).push_back(i);
    if (conds.empty()) {
        roots[0].position = std::nullopt;
        for (size_t i = 1; i < roots.size(); ++i) roots[i].position = pool_value(static_cast<int>(i) - 1);
        return finish(roots);
    }
    std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
    constexpr int kPlacements = 2000;
    for (int attempt = 0; attempt < kPlacements; ++attempt) {
        std::set<Position> used{std::nullopt};
        roots[conds[0]].position = std::nullopt;
        const int bound = 2 + static_cast<int>(roots.size()) + attempt / 20;
        std::uniform_int_distribution<int> pick(-bound, bound);
        for (size_t n = 0; n < others.size(); ++n) {
            Rat v = pool_value(static_cast<int>(n) + 1);
            if (attempt > 0) do v = pick(rng);
                while (used.count(v));
            used.insert(v);
            roots[others[n]].position = v;
        }
        size_t placed = 1;
        for (const Rat& t : candidate_points()) {
            if (placed == conds.size()) break;
            if (used.count(t)) continue;
            Rat v(1);
            for (size_t s : others)
                if (odd_q(roots[s])) v *= t - *roots[s].position;
            if (v == 0 || !is_rational_square(v)) continue;
            roots[conds[placed++]].position = t;
            used.insert(t);
        }
        if (placed == conds.size()) return finish(roots);
    }
    fail(ErrorKind::NonSquareConstantTerm,
         "no placement found with rational square constant terms for " + format_data(m));
}

}  // namespace curveforge
