#pragma once

#include <optional>
#include <vector>

#include "curveforge/rational.hpp"

namespace curveforge {

/// Solution set of a consistent linear system A v = b over Q, kept in reduced
/// row echelon form so any choice of the free variables can be instantiated.
class AffineSolution {
public:
    int num_vars() const noexcept { return nvars_; }
    const std::vector<int>& free_vars() const noexcept { return free_; }
    /// `free_values` is indexed like free_vars().
    std::vector<Rat> instantiate(const std::vector<Rat>& free_values) const;
    std::vector<Rat> particular() const;

private:
    friend class LinearSystem;
    int nvars_ = 0;
    std::vector<int> free_;
    std::vector<int> pivots_;
    std::vector<std::vector<Rat>> rows_;  // one per pivot, augmented
};

class LinearSystem {
public:
    explicit LinearSystem(int nvars) : nvars_(nvars) {}

    /// Adds sum_i row[i] * v_i = rhs; `row` is padded with zeros.
    void add_equation(std::vector<Rat> row, const Rat& rhs);
    int num_vars() const noexcept { return nvars_; }
    int num_equations() const noexcept { return static_cast<int>(rows_.size()); }

    /// nullopt when inconsistent.
    std::optional<AffineSolution> solve() const;

private:
    int nvars_;
    std::vector<std::vector<Rat>> rows_;
};

}  // namespace curveforge
