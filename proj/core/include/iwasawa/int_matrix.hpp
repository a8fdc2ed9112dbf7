#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "iwasawa/exact_arith.hpp"

namespace iwasawa {

/// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static IntMatrix from_columns(const std::vector<std::vector<Integer>>& columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Integer> column(std::size_t c) const;
    std::vector<Integer> row(std::size_t r) const;
    bool is_zero() const;

    IntMatrix transpose() const;
    /// Columns of *this followed by the columns of `other` (same row count).
    IntMatrix hconcat(const IntMatrix& other) const;
    /// Leading `count` rows.
    IntMatrix top_rows(std::size_t count) const;
    IntMatrix left_columns(std::size_t count) const;

    std::vector<Integer> apply(const std::vector<Integer>& v) const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

    std::string to_string() const;

    // Elementary operations, used by the Smith reduction.
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);  // row dst += k * row src
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);  // col dst += k * col src
    void negate_row(std::size_t r);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix matrix_power(const IntMatrix& m, unsigned long exponent);

/// Exact determinant by fraction-free elimination (square only).
Integer determinant(const IntMatrix& m);

/// Inverse of a unimodular matrix; throws InvalidInput otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

struct SmithForm {
    IntMatrix U;  // rows x rows, unimodular
    IntMatrix D;  // rows x cols, diagonal, d1 | d2 | ..., nonnegative
    IntMatrix V;  // cols x cols, unimodular

    std::size_t rank() const;
    /// The nonzero diagonal entries d1 | d2 | ... (including 1s).
    std::vector<Integer> nonzero_diagonal() const;
};

/// U * A * V = D. The pivot is always the entry of least absolute value in
/// the remaining block, ties broken by lowest row then lowest column, so the
/// output is a deterministic function of the input.
SmithForm smith_normal_form(const IntMatrix& a);

// --- lattice helpers: a lattice in Z^n is given by a generating matrix whose
// --- columns span it (redundant generators allowed).

/// Basis (as columns) of the integer kernel {x : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

/// True iff v lies in the column span of `generators` over Z.
bool lattice_contains(const IntMatrix& generators, const std::vector<Integer>& v);

/// Structure of span(outer) / span(inner), which must satisfy
/// span(inner) <= span(outer).
struct AbelianGroupStructure {
    std::vector<Integer> torsion;  // elementary divisors > 1, increasing divisibility
    std::size_t free_rank = 0;

    bool finite() const { return free_rank == 0; }
    Integer order() const;  // only when finite
    friend bool operator==(const AbelianGroupStructure&, const AbelianGroupStructure&) = default;
};

AbelianGroupStructure lattice_quotient(const IntMatrix& outer, const IntMatrix& inner);

}  // namespace iwasawa
