#include "curveforge/rational.hpp"

#include <cctype>

#include "curveforge/error.hpp"

namespace curveforge {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
    std::string_view body = text;
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        fail(ErrorKind::SyntaxError, "not a rational number: '" + std::string(text) + "'");
    const BigInt n_val{std::string(num)};
    const BigInt d_val{std::string(den)};
    if (d_val == 0)
        fail(ErrorKind::SyntaxError, "zero denominator in '" + std::string(text) + "'");
    Rat value(n_val, d_val);
    value.canonicalize();
    return negative ? Rat(-value) : value;
}

std::string to_string(const Rat& value) { return value.get_str(); }

std::optional<Rat> exact_sqrt(const Rat& value) {
    if (sgn(value) < 0) return std::nullopt;
    const BigInt& n = value.get_num();
    const BigInt& d = value.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    return Rat(BigInt(sqrt(n)), BigInt(sqrt(d)));
}

bool is_rational_square(const Rat& value) { return exact_sqrt(value).has_value(); }

Rat rat_pow(const Rat& base, unsigned exponent) {
    Rat result(BigInt(0), BigInt(1));
    mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    return result;
}

BigInt binomial(unsigned n, unsigned k) {
    BigInt result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

}  // namespace curveforge
