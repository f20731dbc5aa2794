#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace curveforge {

// GMP keeps mpq_class canonical (lowest terms, positive denominator, 0 = 0/1)
// after every arithmetic operation.
using Rat = mpq_class;
using BigInt = mpz_class;

Rat parse_rat(std::string_view text);
std::string to_string(const Rat& value);

/// Exact square root when `value` is the square of a rational.
std::optional<Rat> exact_sqrt(const Rat& value);
bool is_rational_square(const Rat& value);

Rat rat_pow(const Rat& base, unsigned exponent);
BigInt binomial(unsigned n, unsigned k);

}  // namespace curveforge
