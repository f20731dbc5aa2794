#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curveforge/data_spec.hpp"

namespace curveforge {

enum class Condition { C1a, C1b, C2, C3, C4, MultQ };

struct Violation {
    Condition condition;
    std::string detail;
};

std::string_view condition_name(Condition c) noexcept;

/// Empty iff (d, g, m) satisfies conditions (1)-(4). MultQ reports malformed
/// clusters (nonpositive fields, empty Q system).
std::vector<Violation> validate(int d, int g, const DataSpec& m);

enum class ClassLabel { a, b, c, e, f, aa, ab, ac, bb, bc, cc, aa1, aa2, aa3, aa4, mixed };

std::string_view label_name(ClassLabel l) noexcept;
std::optional<ClassLabel> parse_label(std::string_view name);
/// Labels a, b, c.
bool is_cuspidal_label(ClassLabel l) noexcept;
/// Labels e through cc and aa1-aa4.
bool is_bibranched_label(ClassLabel l) noexcept;

/// d and g are read off the data (d = mult_Q + 2). Throws NotAdmissible.
ClassLabel corollary_class(const DataSpec& m);

/// For cuspidal classes, compares the class table's bound on n' against the
/// verdict of condition (2); returns one message per disagreement.
std::vector<std::string> table_bound_discrepancies(int d, int g, const DataSpec& m);

enum class EnumFilter { all, cuspidal, bibranched };

/// Every admissible spec for (d, g), sorted descending. Uses OpenMP over the
/// first Q-cluster choice. Throws EmptyRange for d < 4 or g < 0.
std::vector<DataSpec> enumerate(int d, int g, EnumFilter filter = EnumFilter::all);
/// Single-threaded reference with the same output.
std::vector<DataSpec> enumerate_serial(int d, int g, EnumFilter filter = EnumFilter::all);

}  // namespace curveforge
