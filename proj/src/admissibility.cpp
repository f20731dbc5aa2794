#include "curveforge/admissibility.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "curveforge/error.hpp"

namespace curveforge {

std::string_view condition_name(Condition c) noexcept {
    switch (c) {
        case Condition::C1a: return "C1a";
        case Condition::C1b: return "C1b";
        case Condition::C2: return "C2";
        case Condition::C3: return "C3";
        case Condition::C4: return "C4";
        case Condition::MultQ: return "MultQ";
    }
    return "?";
}

namespace {

bool pair_tail_ok(const QCluster& c) { return c.kp == c.k ? c.a >= c.k : c.a == c.k; }

bool single_tail_ok(const QCluster& c) {
    if (c.a == 0) return true;
    return c.k % 2 == 0 ? c.a >= c.k / 2 : c.a == (c.k - 1) / 2;
}

}  // namespace

std::vector<Violation> validate(int d, int g, const DataSpec& m) {
    std::vector<Violation> out;
    const auto& q = m.q_clusters();
    if (q.empty()) out.push_back({Condition::MultQ, "no clusters at Q"});
    for (size_t i = 0; i < q.size(); ++i) {
        const auto& c = q[i];
        const bool bad = c.k < 1 || (c.is_pair() ? (c.kp < c.k || c.a < 1) : c.a < 0);
        if (bad) out.push_back({Condition::MultQ, "cluster " + std::to_string(i) + " " + format_cluster(c) + " is malformed"});
    }
    for (size_t i = 0; i < m.off_q().size(); ++i)
        if (m.off_q()[i].b < 1) out.push_back({Condition::MultQ, "off-Q entry " + std::to_string(i) + " has b < 1"});

    if (m.mult_q() != d - 2)
        out.push_back({Condition::C1a, "multiplicity at Q is " + std::to_string(m.mult_q()) + ", need d-2 = " +
                                           std::to_string(d - 2)});
    const int tails = m.sum_a() + m.sum_b();
    if (tails != d - g - 2)
        out.push_back({Condition::C1b, "sum a + sum b = " + std::to_string(tails) + ", need d-g-2 = " +
                                           std::to_string(d - g - 2)});
    if (m.n_prime() + m.s_prime() > 2 * g + 2)
        out.push_back({Condition::C2, "n' + s' = " + std::to_string(m.n_prime()) + " + " + std::to_string(m.s_prime()) +
                                          " exceeds 2g+2 = " + std::to_string(2 * g + 2)});
    for (size_t i = 0; i < q.size(); ++i) {
        const auto& c = q[i];
        if (c.is_pair() && !pair_tail_ok(c))
            out.push_back({Condition::C3, "cluster " + std::to_string(i) + " " + format_cluster(c) +
                                              (c.kp == c.k ? ": needs a >= k" : ": needs a = k")});
        if (!c.is_pair() && !single_tail_ok(c))
            out.push_back({Condition::C4, "cluster " + std::to_string(i) + " " + format_cluster(c) +
                                              (c.k % 2 == 0 ? ": needs a >= k/2" : ": needs a = (k-1)/2")});
    }
    return out;
}

namespace {

constexpr std::array<std::pair<ClassLabel, std::string_view>, 16> kLabels{{
    {ClassLabel::a, "a"},     {ClassLabel::b, "b"},     {ClassLabel::c, "c"},     {ClassLabel::e, "e"},
    {ClassLabel::f, "f"},     {ClassLabel::aa, "aa"},   {ClassLabel::ab, "ab"},   {ClassLabel::ac, "ac"},
    {ClassLabel::bb, "bb"},   {ClassLabel::bc, "bc"},   {ClassLabel::cc, "cc"},   {ClassLabel::aa1, "aa1"},
    {ClassLabel::aa2, "aa2"}, {ClassLabel::aa3, "aa3"}, {ClassLabel::aa4, "aa4"}, {ClassLabel::mixed, "mixed"},
}};

// Branch type of a Single cluster inside the bibranched table:
// 'r' for (r), 'b' for (2k+1, 2_k), 'c' for (2k, 2_{k+j}).
char single_type(const QCluster& c) {
    if (c.a == 0) return 'r';
    return c.k % 2 == 1 ? 'b' : 'c';
}

}  // namespace

std::string_view label_name(ClassLabel l) noexcept {
    for (const auto& [label, name] : kLabels)
        if (label == l) return name;
    return "?";
}

std::optional<ClassLabel> parse_label(std::string_view name) {
    for (const auto& [label, n] : kLabels)
        if (n == name) return label;
    return std::nullopt;
}

bool is_cuspidal_label(ClassLabel l) noexcept { return l == ClassLabel::a || l == ClassLabel::b || l == ClassLabel::c; }

bool is_bibranched_label(ClassLabel l) noexcept { return !is_cuspidal_label(l) && l != ClassLabel::mixed; }

ClassLabel corollary_class(const DataSpec& m) {
    const int d = m.mult_q() + 2;
    const int g = d - 2 - m.sum_a() - m.sum_b();
    if (d < 4 || g < 0 || !validate(d, g, m).empty())
        fail(ErrorKind::NotAdmissible, "data " + format_data(m) + " is not admissible for any (d, g)");
    const auto& q = m.q_clusters();
    if (m.n() == 0 && q.size() == 1 && !q[0].is_pair()) {
        const auto& c = q[0];
        if (c.a == 0) return ClassLabel::a;
        return c.k % 2 == 1 ? ClassLabel::b : ClassLabel::c;
    }
    if (m.n_prime() != 0) return ClassLabel::mixed;
    if (q.size() == 1 && q[0].is_pair()) return q[0].k == q[0].kp ? ClassLabel::e : ClassLabel::f;
    if (q.size() == 2 && !q[0].is_pair() && !q[1].is_pair()) {
        std::string types{single_type(q[0]), single_type(q[1])};
        std::sort(types.begin(), types.end());
        if (types == "rr") {
            if (d != 4) return ClassLabel::aa;
            std::vector<int> bs;
            for (const auto& o : m.off_q()) bs.push_back(o.b);
            if (bs == std::vector<int>{2}) return ClassLabel::aa1;
            if (bs == std::vector<int>{1, 1}) return ClassLabel::aa2;
            if (bs == std::vector<int>{1}) return ClassLabel::aa3;
            return ClassLabel::aa4;
        }
        if (types == "br") return ClassLabel::ab;
        if (types == "cr") return ClassLabel::ac;
        if (types == "bb") return ClassLabel::bb;
        if (types == "bc") return ClassLabel::bc;
        if (types == "cc") return ClassLabel::cc;
    }
    return ClassLabel::mixed;
}

std::vector<std::string> table_bound_discrepancies(int d, int g, const DataSpec& m) {
    std::vector<std::string> out;
    const auto& q = m.q_clusters();
    if (m.n() != 0 || q.size() != 1 || q[0].is_pair()) return out;
    const int table_bound = q[0].a == 0 ? 2 * g + 2 : 2 * g + 1;
    const bool table_ok = m.n_prime() <= table_bound;
    bool c2_ok = true;
    for (const auto& v : validate(d, g, m))
        if (v.condition == Condition::C2) c2_ok = false;
    if (table_ok != c2_ok)
        out.push_back("class table bound n' <= " + std::to_string(table_bound) + " and condition (2) disagree on " +
                      format_data(m));
    return out;
}

namespace {

struct Enumerator {
    int d, g, M, T;
    EnumFilter filter;
    std::vector<QCluster> shapes;
    std::vector<OffQSing> off_shapes;

    Enumerator(int d_, int g_, EnumFilter f) : d(d_), g(g_), M(d_ - 2), T(d_ - g_ - 2), filter(f) {
        for (int k = 1; k <= M; ++k) {
            for (int a = 0; a <= T; ++a) {
                QCluster s = QCluster::single(k, a);
                if (single_tail_ok(s)) shapes.push_back(s);
            }
            for (int kp = k; k + kp <= M; ++kp)
                for (int a = 1; a <= T; ++a) {
                    QCluster p = QCluster::pair(k, kp, a);
                    if (pair_tail_ok(p)) shapes.push_back(p);
                }
        }
        std::sort(shapes.begin(), shapes.end(), std::greater<>());
        for (int b = 1; b <= T; ++b) {
            off_shapes.push_back(OffQSing::tacnode(b));
            off_shapes.push_back(OffQSing::cusp(b));
        }
        std::sort(off_shapes.begin(), off_shapes.end(), std::greater<>());
    }

    void off_q(size_t start, int rest, int cusps_left, std::vector<OffQSing>& cur, const std::vector<QCluster>& q,
               std::vector<DataSpec>& out) const {
        if (rest == 0) {
            DataSpec m(q, cur);
            if (keep(m)) out.push_back(std::move(m));
            return;
        }
        for (size_t i = start; i < off_shapes.size(); ++i) {
            const auto& o = off_shapes[i];
            if (o.b > rest) continue;
            if (!o.is_tacnode() && cusps_left == 0) continue;
            cur.push_back(o);
            off_q(i, rest - o.b, cusps_left - (o.is_tacnode() ? 0 : 1), cur, q, out);
            cur.pop_back();
        }
    }

    void clusters(size_t start, int mult_left, int tails_left, std::vector<QCluster>& cur,
                  std::vector<DataSpec>& out) const {
        if (mult_left == 0) {
            int s_prime = 0;
            for (const auto& c : cur)
                if (!c.is_pair() && c.a > 0) ++s_prime;
            const int cusp_budget = 2 * g + 2 - s_prime;
            if (cusp_budget < 0) return;
            std::vector<OffQSing> off;
            off_q(0, tails_left, cusp_budget, off, cur, out);
            return;
        }
        for (size_t i = start; i < shapes.size(); ++i) {
            const auto& s = shapes[i];
            if (s.mult() > mult_left || s.a > tails_left) continue;
            cur.push_back(s);
            clusters(i, mult_left - s.mult(), tails_left - s.a, cur, out);
            cur.pop_back();
        }
    }

    std::vector<DataSpec> from_first(size_t i) const {
        std::vector<DataSpec> out;
        const auto& s = shapes[i];
        if (s.mult() > M || s.a > T) return out;
        std::vector<QCluster> cur{s};
        clusters(i, M - s.mult(), T - s.a, cur, out);
        return out;
    }

    bool keep(const DataSpec& m) const {
        if (filter == EnumFilter::all) return true;
        const ClassLabel l = corollary_class(m);
        return filter == EnumFilter::cuspidal ? is_cuspidal_label(l) : is_bibranched_label(l);
    }
};

void check_range(int d, int g) {
    if (d < 4) fail(ErrorKind::EmptyRange, "enumerate needs d >= 4, got " + std::to_string(d));
    if (g < 0) fail(ErrorKind::EmptyRange, "enumerate needs g >= 0, got " + std::to_string(g));
}

std::vector<DataSpec> finish(std::vector<std::vector<DataSpec>>& parts) {
    std::vector<DataSpec> all;
    for (auto& p : parts) all.insert(all.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    std::sort(all.begin(), all.end(), std::greater<>());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

}  // namespace

std::vector<DataSpec> enumerate_serial(int d, int g, EnumFilter filter) {
    check_range(d, g);
    if (d - g - 2 < 0) return {};
    Enumerator e(d, g, filter);
    std::vector<std::vector<DataSpec>> parts(e.shapes.size());
    for (size_t i = 0; i < e.shapes.size(); ++i) parts[i] = e.from_first(i);
    return finish(parts);
}

std::vector<DataSpec> enumerate(int d, int g, EnumFilter filter) {
    check_range(d, g);
    if (d - g - 2 < 0) return {};
    const Enumerator e(d, g, filter);
    const long n = static_cast<long>(e.shapes.size());
    std::vector<std::vector<DataSpec>> parts(e.shapes.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) parts[static_cast<size_t>(i)] = e.from_first(static_cast<size_t>(i));
    return finish(parts);
}

}  // namespace curveforge
