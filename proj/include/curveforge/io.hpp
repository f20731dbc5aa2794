#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "curveforge/cremona.hpp"
#include "curveforge/curve.hpp"
#include "curveforge/data_spec.hpp"
#include "curveforge/error.hpp"
#include "curveforge/synthesis.hpp"

namespace curveforge {

using Json = nlohmann::ordered_json;

/// Curve file: {"d": int, "F": str, "G": str, "H": str}, G without the factor 2.
Json curve_to_json(const CurveEquation& c);
/// Throws SyntaxError on missing or mistyped fields, DegreeMismatch when d
/// disagrees with the polynomials.
CurveEquation curve_from_json(const Json& j);

Json data_to_json(const DataSpec& m);
DataSpec data_from_json(const Json& j);

/// Rationals as exact strings, the point at infinity as "inf".
std::string position_to_string(const Position& p);
Position parse_position(std::string_view text);

Json report_to_json(const AnalysisReport& r);
Json normal_form_to_json(const NormalForm& nf);
/// Curve file plus a "provenance" block.
Json synthesis_to_json(const Synthesis& s, const Json& parameters);
Json error_to_json(const Error& e);

/// Annotated enumerate entry: data text plus N, s, n, n', s' and class.
Json enumerate_entry(const DataSpec& m);

}  // namespace curveforge
