/*
 * linalg.cpp
 * ----------
 * Gauss-Jordan elimination over Q with first-nonzero pivoting.
 */

#include "cga/linalg.hpp"

#include <algorithm>

namespace cga {

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw internal_error("matrix with negative dimensions");
    data_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Rational(0));
}

std::vector<int> QMatrix::rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int pivot_row = -1;
        for (int r = row; r < rows_; ++r) {
            if (at(r, col) != 0) {
                pivot_row = r;
                break;
            }
        }
        if (pivot_row < 0) continue;
        if (pivot_row != row) {
            for (int c = 0; c < cols_; ++c) std::swap(at(pivot_row, c), at(row, c));
        }
        Rational inv = 1 / at(row, col);
        for (int c = col; c < cols_; ++c) at(row, c) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == row || at(r, col) == 0) continue;
            Rational factor = at(r, col);
            for (int c = col; c < cols_; ++c) at(r, c) -= factor * at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int QMatrix::rank() const {
    QMatrix copy = *this;
    return static_cast<int>(copy.rref().size());
}

std::vector<QVector> QMatrix::kernel_basis() const {
    QMatrix copy = *this;
    std::vector<int> pivots = copy.rref();
    std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;

    std::vector<QVector> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        QVector v(static_cast<size_t>(cols_), Rational(0));
        v[static_cast<size_t>(free)] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) {
            v[static_cast<size_t>(pivots[i])] = -copy.at(static_cast<int>(i), free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

EchelonSpace::EchelonSpace(int dimension) : dim_(dimension) {
    if (dimension < 0) throw internal_error("echelon space with negative dimension");
}

QVector EchelonSpace::reduce(QVector v) const {
    if (static_cast<int>(v.size()) != dim_) throw internal_error("vector/echelon size mismatch");
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Rational& c = v[static_cast<size_t>(pivots_[i])];
        if (c == 0) continue;
        Rational factor = c;
        for (int k = 0; k < dim_; ++k) v[static_cast<size_t>(k)] -= factor * rows_[i][static_cast<size_t>(k)];
    }
    return v;
}

bool EchelonSpace::insert(QVector v) {
    v = reduce(std::move(v));
    int pivot = -1;
    for (int k = 0; k < dim_; ++k) {
        if (v[static_cast<size_t>(k)] != 0) {
            pivot = k;
            break;
        }
    }
    if (pivot < 0) return false;

    Rational inv = 1 / v[static_cast<size_t>(pivot)];
    for (int k = pivot; k < dim_; ++k) v[static_cast<size_t>(k)] *= inv;

    // Clear the new pivot column in the existing rows to stay fully reduced.
    for (auto& row : rows_) {
        const Rational c = row[static_cast<size_t>(pivot)];
        if (c == 0) continue;
        for (int k = 0; k < dim_; ++k) row[static_cast<size_t>(k)] -= c * v[static_cast<size_t>(k)];
    }

    auto where = std::upper_bound(pivots_.begin(), pivots_.end(), pivot);
    size_t idx = static_cast<size_t>(where - pivots_.begin());
    pivots_.insert(where, pivot);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    return true;
}

bool EchelonSpace::contains(const QVector& v) const {
    QVector r = reduce(v);
    for (const Rational& c : r) {
        if (c != 0) return false;
    }
    return true;
}

std::optional<QVector> EchelonSpace::coordinates(const QVector& v) const {
    if (!contains(v)) return std::nullopt;
    QVector coords(rows_.size(), Rational(0));
    // Rows are fully reduced, so the coefficient of row i is just the entry
    // of v at that row's pivot column.
    for (size_t i = 0; i < rows_.size(); ++i) coords[i] = v[static_cast<size_t>(pivots_[i])];
    return coords;
}

}  // namespace cga
