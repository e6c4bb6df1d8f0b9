#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "effsq/ints.hpp"

namespace effsq {

// Dense row-major integer matrix. Rows or columns may be zero: empty
// presentations and maps out of the zero group are first-class values.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    // Rows given as initializer-friendly vectors; all rows must have equal length.
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<Int>& entries() const { return entries_; }

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const IntMatrix& o) const = default;

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix negated() const;

    std::vector<Int> row(std::size_t r) const;
    std::vector<Int> col(std::size_t c) const;
    std::vector<Int> apply(const std::vector<Int>& v) const; // matrix * column vector

    // Stacks rows of `o` below this matrix (column counts must agree).
    IntMatrix vstack(const IntMatrix& o) const;
    // Places `o` to the right of this matrix (row counts must agree).
    IntMatrix hstack(const IntMatrix& o) const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& k); // row dst += k * row src
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& k);
    void negate_row(std::size_t i);
    void negate_col(std::size_t i);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

} // namespace effsq
