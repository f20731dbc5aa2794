#include "curveforge/linalg.hpp"

#include "curveforge/error.hpp"

namespace curveforge {

void LinearSystem::add_equation(std::vector<Rat> row, const Rat& rhs) {
    if (static_cast<int>(row.size()) > nvars_) fail(ErrorKind::InvalidArgument, "equation has too many coefficients");
    row.resize(static_cast<size_t>(nvars_) + 1);
    row.back() = rhs;
    rows_.push_back(std::move(row));
}

std::optional<AffineSolution> LinearSystem::solve() const {
    auto m = rows_;
    const int ncols = nvars_;
    std::vector<int> pivots;
    size_t r = 0;
    for (int col = 0; col < ncols && r < m.size(); ++col) {
        size_t sel = r;
        while (sel < m.size() && sgn(m[sel][static_cast<size_t>(col)]) == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[r], m[sel]);
        const Rat inv = 1 / m[r][static_cast<size_t>(col)];
        for (auto& v : m[r]) v *= inv;
        for (size_t o = 0; o < m.size(); ++o) {
            if (o == r || sgn(m[o][static_cast<size_t>(col)]) == 0) continue;
            const Rat f = m[o][static_cast<size_t>(col)];
            for (size_t c = static_cast<size_t>(col); c < m[o].size(); ++c) m[o][c] -= f * m[r][c];
        }
        pivots.push_back(col);
        ++r;
    }
    for (size_t o = r; o < m.size(); ++o)
        if (sgn(m[o].back()) != 0) return std::nullopt;
    AffineSolution sol;
    sol.nvars_ = nvars_;
    sol.pivots_ = pivots;
    m.resize(r);
    sol.rows_ = std::move(m);
    std::vector<bool> is_pivot(static_cast<size_t>(nvars_), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    for (int v = 0; v < nvars_; ++v)
        if (!is_pivot[static_cast<size_t>(v)]) sol.free_.push_back(v);
    return sol;
}

std::vector<Rat> AffineSolution::instantiate(const std::vector<Rat>& free_values) const {
    if (free_values.size() != free_.size()) fail(ErrorKind::InvalidArgument, "wrong number of free values");
    std::vector<Rat> v(static_cast<size_t>(nvars_));
    for (size_t i = 0; i < free_.size(); ++i) v[static_cast<size_t>(free_[i])] = free_values[i];
    for (size_t i = 0; i < pivots_.size(); ++i) {
        const auto& row = rows_[i];
        Rat val = row.back();
        for (int f : free_) val -= row[static_cast<size_t>(f)] * v[static_cast<size_t>(f)];
        v[static_cast<size_t>(pivots_[i])] = val;
    }
    return v;
}

std::vector<Rat> AffineSolution::particular() const { return instantiate(std::vector<Rat>(free_.size())); }

}  // namespace curveforge
