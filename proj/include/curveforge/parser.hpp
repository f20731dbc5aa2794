#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "curveforge/hom_poly.hpp"
#include "curveforge/rational.hpp"

namespace curveforge {

class TernaryForm;

/// Sparse polynomial in x, y, z keyed by exponent triples.
using SparsePoly = std::map<std::array<int, 3>, Rat>;

/// Grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)*
///   atom   := int ['/' uint] | var | '(' expr ')'
/// `vars` lists the admissible variable letters among x, y, z.
SparsePoly parse_sparse(std::string_view text, std::string_view vars = "xyz");

/// Binary form in x, y. A zero result takes `degree` (or 0); a nonzero result
/// must match `degree` when given.
HomPoly parse_poly(std::string_view text, std::optional<int> degree = std::nullopt);
TernaryForm parse_ternary(std::string_view text, std::optional<int> degree = std::nullopt);

std::string format_poly(const HomPoly& p);
std::string format_ternary(const TernaryForm& p);

}  // namespace curveforge
