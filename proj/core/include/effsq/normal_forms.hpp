#pragma once

#include <optional>
#include <vector>

#include "effsq/int_matrix.hpp"

namespace effsq {

struct SmithResult {
    IntMatrix U; // rows x rows, unimodular
    IntMatrix D; // diagonal, nonnegative, D[i][i] | D[i+1][i+1]
    IntMatrix V; // cols x cols, unimodular
};

// U * m * V = D. Total on all integer matrices, including empty ones.
// Pivot choice: smallest nonzero absolute value in the working submatrix,
// ties broken by row-major scan order, so U, V are reproducible.
SmithResult smith_normal_form(const IntMatrix& m);

struct HermiteResult {
    IntMatrix H; // same shape as input, row-echelon Hermite form
    IntMatrix U; // rows x rows, unimodular, U * m = H
};

// Row-style Hermite form: pivots positive, entries above a pivot reduced
// into [0, pivot), zero rows pushed to the bottom. The row lattice of H
// equals the row lattice of m, and H is the unique such canonical form.
HermiteResult hermite_normal_form(const IntMatrix& m);

// Exact determinant (Bareiss fraction-free elimination).
Int determinant(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

// Reduces v against the row lattice of H (which must be a Hermite form).
// The result is the canonical coset representative of v.
std::vector<Int> hermite_reduce(const IntMatrix& H, std::vector<Int> v);

// Membership of v in the row lattice presented by `lattice_rows`.
bool in_row_lattice(const IntMatrix& hermite_form, const std::vector<Int>& v);

// Row lattices compared via their canonical Hermite forms.
bool same_row_lattice(const IntMatrix& a, const IntMatrix& b);

// One integer solution x of A x = b, if any exists.
std::optional<std::vector<Int>> solve_linear(const IntMatrix& A, const std::vector<Int>& b);

// Basis of the integer nullspace {x : A x = 0}, as matrix columns. The
// basis spans the full (saturated) nullspace lattice.
IntMatrix nullspace(const IntMatrix& A);

// Exact inverse of a unimodular matrix.
IntMatrix inverse_unimodular(const IntMatrix& m);

} // namespace effsq
