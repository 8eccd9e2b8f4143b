#pragma once

// Exact integer linear algebra: dense Smith and Hermite normal forms with
// unimodular transforms, sparse elimination for ranks and invariant factors
// of large boundary matrices, and an integer lattice with membership tests.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quandle {

using BigInt = mpz_class;

class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> init);

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntegerMatrix transposed() const;
    bool is_zero() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row(std::size_t dst, std::size_t src, const BigInt& factor);
    /// col[dst] += factor * col[src]
    void add_col(std::size_t dst, std::size_t src, const BigInt& factor);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

/// Bareiss fraction-free determinant of a square matrix.
BigInt determinant(const IntegerMatrix& m);
bool is_unimodular(const IntegerMatrix& m);

struct SmithResult {
    IntegerMatrix D;
    IntegerMatrix U;  // rows x rows, empty when not requested
    IntegerMatrix V;  // cols x cols, empty when not requested
    std::vector<BigInt> invariant_factors;  // nonzero diagonal, d1 | d2 | ...
    std::size_t rank = 0;
};

/// U * M * V = D. Pivots on the smallest nonzero absolute value in the
/// remaining block, ties broken row-major.
SmithResult smith_normal_form(const IntegerMatrix& m, bool with_u = true, bool with_v = true);

struct HermiteResult {
    IntegerMatrix H;  // row echelon, positive pivots, entries above a pivot in [0, pivot)
    IntegerMatrix U;  // U * M = H
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

HermiteResult hermite_normal_form(const IntegerMatrix& m);

/// Sorted (index, nonzero value) pairs.
struct SparseVector {
    std::vector<std::pair<std::size_t, BigInt>> entries;

    bool empty() const noexcept { return entries.empty(); }
    const BigInt* find(std::size_t index) const;
    /// a*u + b*v with zeros dropped
    static SparseVector combine(const BigInt& a, const SparseVector& u, const BigInt& b, const SparseVector& v);

    friend bool operator==(const SparseVector&, const SparseVector&) = default;
};

struct SparseMatrix {
    std::size_t cols = 0;
    std::vector<SparseVector> rows;

    IntegerMatrix to_dense() const;
    /// this * other, row-vector convention (rows() x cols times other.rows.size() x other.cols)
    SparseMatrix multiply(const SparseMatrix& other) const;
    bool is_zero() const;
};

struct EliminationResult {
    std::size_t rank = 0;
    std::vector<BigInt> invariant_factors;  // all nonzero invariant factors, ascending
};

/// Rank and invariant factors by unit-pivot sparse elimination, finishing the
/// unit-free remainder with the dense Smith form.
EliminationResult sparse_invariant_factors(const SparseMatrix& m);

/// The subgroup of Z^dim spanned by the added vectors, kept as echelon rows
/// with positive pivots. Membership and coordinates are exact integral solves.
class Lattice {
public:
    explicit Lattice(std::size_t dim) : dim_(dim) {}

    std::size_t dimension() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return basis_.size(); }

    void add(SparseVector v);
    bool contains(const SparseVector& v) const;
    /// Coefficients c with v = sum c_i basis()[i], or nullopt when v is not in the lattice.
    std::optional<std::vector<BigInt>> coordinates(const SparseVector& v) const;

    /// Echelon basis, rows sorted by pivot column, reduced above the pivots (Hermite form).
    const std::vector<SparseVector>& basis();

private:
    void reduce_upper();
    void reduce_against_later(std::size_t r);
    void restore_hermite(std::size_t i);

    std::size_t dim_;
    std::vector<SparseVector> basis_;  // sorted by pivot = first index
    bool reduced_ = true;
};

}  // namespace quandle
