#include "curveforge/parser.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "curveforge/error.hpp"
#include "curveforge/ternary.hpp"

namespace curveforge {

namespace {

using Exps = std::array<int, 3>;

SparsePoly sparse_mul(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exps e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            Rat& slot = out[e];
            slot += ca * cb;
            if (sgn(slot) == 0) out.erase(e);
        }
    return out;
}

void sparse_add_into(SparsePoly& acc, const SparsePoly& b, int sign) {
    for (const auto& [e, c] : b) {
        Rat& slot = acc[e];
        if (sign > 0)
            slot += c;
        else
            slot -= c;
        if (sgn(slot) == 0) acc.erase(e);
    }
}

class Parser {
public:
    Parser(std::string_view text, std::string_view vars) : text_(text), vars_(vars) {}

    SparsePoly run() {
        SparsePoly p = expr();
        skip_ws();
        if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void error(const std::string& what) const {
        fail(ErrorKind::SyntaxError, what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char ch) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == ch;
    }

    std::string digits() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) error("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    SparsePoly expr() {
        int sign = 1;
        if (peek('+') || peek('-')) {
            sign = text_[pos_] == '-' ? -1 : 1;
            ++pos_;
        }
        SparsePoly acc;
        sparse_add_into(acc, term(), sign);
        while (peek('+') || peek('-')) {
            sign = text_[pos_] == '-' ? -1 : 1;
            ++pos_;
            sparse_add_into(acc, term(), sign);
        }
        return acc;
    }

    SparsePoly term() {
        SparsePoly acc = factor();
        while (peek('*')) {
            ++pos_;
            acc = sparse_mul(acc, factor());
        }
        return acc;
    }

    SparsePoly factor() {
        SparsePoly base = atom();
        while (peek('^')) {
            ++pos_;
            std::string e = digits();
            if (e.size() > 4) error("exponent too large");
            int n = std::stoi(e);
            SparsePoly result{{Exps{0, 0, 0}, Rat(1)}};
            for (int i = 0; i < n; ++i) result = sparse_mul(result, base);
            base = std::move(result);
        }
        return base;
    }

    SparsePoly atom() {
        skip_ws();
        if (pos_ >= text_.size()) error("unexpected end of input");
        char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            SparsePoly inner = expr();
            if (!peek(')')) error("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string num = digits();
            std::string den = "1";
            if (peek('/')) {
                ++pos_;
                den = digits();
            }
            BigInt d(den);
            if (d == 0) error("zero denominator");
            Rat value(BigInt(num), d);
            value.canonicalize();
            SparsePoly p;
            if (sgn(value) != 0) p[Exps{0, 0, 0}] = value;
            return p;
        }
        if (ch == 'x' || ch == 'y' || ch == 'z') {
            if (vars_.find(ch) == std::string_view::npos) error(std::string("variable '") + ch + "' not allowed here");
            ++pos_;
            Exps e{0, 0, 0};
            e[static_cast<size_t>(ch - 'x')] = 1;
            return SparsePoly{{e, Rat(1)}};
        }
        error(std::string("unexpected '") + ch + "'");
    }

    std::string_view text_;
    std::string_view vars_;
    size_t pos_ = 0;
};

int total_degree(const SparsePoly& p, std::string_view text) {
    int deg = -1;
    for (const auto& [e, c] : p) {
        int t = e[0] + e[1] + e[2];
        if (deg >= 0 && t != deg) fail(ErrorKind::NotHomogeneous, "mixed total degrees in '" + std::string(text) + "'");
        deg = t;
    }
    return deg;
}

int resolve_degree(int found, std::optional<int> wanted) {
    if (found < 0) return wanted.value_or(0);
    if (wanted && *wanted != found)
        fail(ErrorKind::DegreeMismatch, "expected degree " + std::to_string(*wanted) + ", found " + std::to_string(found));
    return found;
}

void append_term(std::ostringstream& os, bool first, const Rat& c, const std::array<int, 3>& e) {
    const bool negative = sgn(c) < 0;
    if (first)
        os << (negative ? "-" : "");
    else
        os << (negative ? " - " : " + ");
    const Rat mag = abs(c);
    const bool unit_monomial = e[0] == 0 && e[1] == 0 && e[2] == 0;
    bool need_star = false;
    if (unit_monomial || mag != 1) {
        os << mag.get_str();
        need_star = true;
    }
    static constexpr char names[3] = {'x', 'y', 'z'};
    for (size_t v = 0; v < 3; ++v) {
        if (e[v] == 0) continue;
        if (need_star) os << '*';
        os << names[v];
        if (e[v] > 1) os << '^' << e[v];
        need_star = true;
    }
}

}  // namespace

SparsePoly parse_sparse(std::string_view text, std::string_view vars) { return Parser(text, vars).run(); }

HomPoly parse_poly(std::string_view text, std::optional<int> degree) {
    SparsePoly sp = parse_sparse(text, "xy");
    const int n = resolve_degree(total_degree(sp, text), degree);
    std::vector<Rat> c(static_cast<size_t>(n) + 1);
    for (const auto& [e, v] : sp) c[static_cast<size_t>(e[1])] = v;
    return HomPoly(n, std::move(c));
}

TernaryForm parse_ternary(std::string_view text, std::optional<int> degree) {
    SparsePoly sp = parse_sparse(text, "xyz");
    const int n = resolve_degree(total_degree(sp, text), degree);
    std::vector<std::vector<Rat>> parts;
    for (int k = 0; k <= n; ++k) parts.emplace_back(static_cast<size_t>(n - k) + 1);
    for (const auto& [e, v] : sp) parts[static_cast<size_t>(e[2])][static_cast<size_t>(e[1])] = v;
    std::vector<HomPoly> hp;
    for (int k = 0; k <= n; ++k) hp.emplace_back(n - k, std::move(parts[static_cast<size_t>(k)]));
    return TernaryForm(n, std::move(hp));
}

std::string format_poly(const HomPoly& p) {
    std::ostringstream os;
    bool first = true;
    for (int h = 0; h <= p.degree(); ++h) {
        if (sgn(p.coeff(h)) == 0) continue;
        append_term(os, first, p.coeff(h), {p.degree() - h, h, 0});
        first = false;
    }
    return first ? "0" : os.str();
}

std::string format_ternary(const TernaryForm& p) {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms()) {
        append_term(os, first, t.c, {t.i, t.j, t.k});
        first = false;
    }
    return first ? "0" : os.str();
}

}  // namespace curveforge
