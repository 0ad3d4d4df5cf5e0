#pragma once
/*
 * linalg.hpp
 * ----------
 * Exact dense linear algebra over Q: matrices with reduced row echelon form,
 * canonical kernel bases, and an incrementally grown echelon subspace used
 * for cycle/boundary arithmetic. Everything is deterministic: pivots are
 * always the first nonzero entry, and canonical forms are unique, so equal
 * subspaces produce identical bases.
 */

#include <optional>
#include <vector>

#include "cga/core.hpp"

namespace cga {

using QVector = std::vector<Rational>;

class QMatrix {
public:
    QMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    // Reduced row echelon form in place; returns the pivot column indices.
    std::vector<int> rref();

    // Rank, computed on a copy.
    int rank() const;

    // Canonical kernel basis: one vector per free column in ascending column
    // order, with a 1 in the free position.
    std::vector<QVector> kernel_basis() const;

private:
    int rows_;
    int cols_;
    std::vector<Rational> data_;
};

// A subspace of Q^n kept in reduced echelon form. Inserting a vector reduces
// it against the current rows and, when independent, normalizes it and
// back-substitutes so the basis stays canonical for the spanned subspace.
class EchelonSpace {
public:
    explicit EchelonSpace(int dimension);

    int dimension() const { return dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // Returns true when v enlarged the span.
    bool insert(QVector v);

    bool contains(const QVector& v) const;

    // Residue of v modulo the span.
    QVector reduce(QVector v) const;

    // Coefficients expressing v in the current rows, or nullopt if v is
    // outside the span.
    std::optional<QVector> coordinates(const QVector& v) const;

    const std::vector<QVector>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

private:
    int dim_;
    std::vector<QVector> rows_;   // kept sorted by pivot column
    std::vector<int> pivots_;
};

}  // namespace cga
