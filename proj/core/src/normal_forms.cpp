#include "effsq/normal_forms.hpp"

#include <stdexcept>

namespace effsq {

namespace {

// Locates the smallest nonzero |entry| in the submatrix starting at
// (from, from), scanning row-major so ties resolve deterministically.
bool find_pivot(const IntMatrix& D, std::size_t from, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Int best;
    for (std::size_t i = from; i < D.rows(); ++i)
        for (std::size_t j = from; j < D.cols(); ++j) {
            if (D.at(i, j) == 0) continue;
            Int a = abs_int(D.at(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pr = i;
                pc = j;
            }
        }
    return found;
}

bool cross_clear(const IntMatrix& D, std::size_t i) {
    for (std::size_t r = i + 1; r < D.rows(); ++r)
        if (D.at(r, i) != 0) return false;
    for (std::size_t c = i + 1; c < D.cols(); ++c)
        if (D.at(i, c) != 0) return false;
    return true;
}

} // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    SmithResult res{IntMatrix::identity(r), m, IntMatrix::identity(c)};
    IntMatrix& D = res.D;
    IntMatrix& U = res.U;
    IntMatrix& V = res.V;

    const std::size_t n = std::min(r, c);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t pr = i, pc = i;
        if (!find_pivot(D, i, pr, pc)) break; // remaining submatrix is zero

        while (true) {
            D.swap_rows(i, pr);
            U.swap_rows(i, pr);
            D.swap_cols(i, pc);
            V.swap_cols(i, pc);

            for (std::size_t j = i + 1; j < r; ++j) {
                if (D.at(j, i) == 0) continue;
                Int k = D.at(j, i) / D.at(i, i);
                D.add_row_multiple(j, i, -k);
                U.add_row_multiple(j, i, -k);
            }
            for (std::size_t j = i + 1; j < c; ++j) {
                if (D.at(i, j) == 0) continue;
                Int k = D.at(i, j) / D.at(i, i);
                D.add_col_multiple(j, i, -k);
                V.add_col_multiple(j, i, -k);
            }

            if (!cross_clear(D, i)) {
                find_pivot(D, i, pr, pc);
                continue;
            }

            // Pivot must divide every remaining entry for the chain
            // d_i | d_{i+1}; if not, fold the offending row in and redo.
            bool divides_all = true;
            for (std::size_t x = i + 1; x < r && divides_all; ++x)
                for (std::size_t y = i + 1; y < c; ++y)
                    if (D.at(x, y) % D.at(i, i) != 0) {
                        D.add_row_multiple(i, x, 1);
                        U.add_row_multiple(i, x, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
            find_pivot(D, i, pr, pc);
        }

        if (D.at(i, i) < 0) {
            D.negate_row(i);
            U.negate_row(i);
        }
    }
    return res;
}

HermiteResult hermite_normal_form(const IntMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    HermiteResult res{m, IntMatrix::identity(r)};
    IntMatrix& H = res.H;
    IntMatrix& U = res.U;

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < c && pivot_row < r; ++col) {
        // Repeated gcd elimination in this column below pivot_row.
        while (true) {
            std::size_t best = r;
            for (std::size_t i = pivot_row; i < r; ++i) {
                if (H.at(i, col) == 0) continue;
                if (best == r || abs_int(H.at(i, col)) < abs_int(H.at(best, col))) best = i;
            }
            if (best == r) break; // column empty below pivot_row
            H.swap_rows(pivot_row, best);
            U.swap_rows(pivot_row, best);
            bool clear = true;
            for (std::size_t i = pivot_row + 1; i < r; ++i) {
                if (H.at(i, col) == 0) continue;
                Int k = H.at(i, col) / H.at(pivot_row, col);
                H.add_row_multiple(i, pivot_row, -k);
                U.add_row_multiple(i, pivot_row, -k);
                if (H.at(i, col) != 0) clear = false;
            }
            if (clear) break;
        }
        if (H.at(pivot_row, col) == 0) continue; // no pivot in this column

        if (H.at(pivot_row, col) < 0) {
            H.negate_row(pivot_row);
            U.negate_row(pivot_row);
        }
        for (std::size_t i = 0; i < pivot_row; ++i) {
            Int k = floor_div(H.at(i, col), H.at(pivot_row, col));
            H.add_row_multiple(i, pivot_row, -k);
            U.add_row_multiple(i, pivot_row, -k);
        }
        ++pivot_row;
    }
    return res;
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix M = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M.at(k, k) == 0) {
            std::size_t j = k + 1;
            while (j < n && M.at(j, k) == 0) ++j;
            if (j == n) return 0;
            M.swap_rows(k, j);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                M.at(i, j) = (M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j)) / prev;
            M.at(i, k) = 0;
        }
        prev = M.at(k, k);
    }
    return sign > 0 ? M.at(n - 1, n - 1) : Int(-M.at(n - 1, n - 1));
}

bool is_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols()) return false;
    return abs_int(determinant(m)) == 1;
}

std::vector<Int> hermite_reduce(const IntMatrix& H, std::vector<Int> v) {
    if (v.size() != H.cols()) throw std::invalid_argument("hermite_reduce: size mismatch");
    for (std::size_t i = 0; i < H.rows(); ++i) {
        std::size_t p = 0;
        while (p < H.cols() && H.at(i, p) == 0) ++p;
        if (p == H.cols()) break; // zero rows are at the bottom
        Int q = floor_div(v[p], H.at(i, p));
        if (q == 0) continue;
        for (std::size_t j = p; j < H.cols(); ++j) v[j] -= q * H.at(i, j);
    }
    return v;
}

bool in_row_lattice(const IntMatrix& hermite_form, const std::vector<Int>& v) {
    auto rem = hermite_reduce(hermite_form, v);
    for (const auto& e : rem)
        if (e != 0) return false;
    return true;
}

bool same_row_lattice(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols()) return false;
    auto strip = [](const IntMatrix& h) {
        std::vector<std::vector<Int>> rows;
        for (std::size_t i = 0; i < h.rows(); ++i) {
            auto r = h.row(i);
            bool zero = true;
            for (const auto& e : r)
                if (e != 0) { zero = false; break; }
            if (!zero) rows.push_back(std::move(r));
        }
        return rows;
    };
    return strip(hermite_normal_form(a).H) == strip(hermite_normal_form(b).H);
}

std::optional<std::vector<Int>> solve_linear(const IntMatrix& A, const std::vector<Int>& b) {
    if (b.size() != A.rows()) throw std::invalid_argument("solve_linear: size mismatch");
    auto snf = smith_normal_form(A);
    auto ub = snf.U.apply(b);
    const std::size_t n = std::min(A.rows(), A.cols());
    std::vector<Int> y(A.cols(), Int(0));
    for (std::size_t i = 0; i < A.rows(); ++i) {
        Int d = i < n ? snf.D.at(i, i) : Int(0);
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % d != 0) return std::nullopt;
            if (i < A.cols()) y[i] = ub[i] / d;
        }
    }
    return snf.V.apply(y);
}

IntMatrix nullspace(const IntMatrix& A) {
    auto snf = smith_normal_form(A);
    const std::size_t n = std::min(A.rows(), A.cols());
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < A.cols(); ++j)
        if (j >= n || snf.D.at(j, j) == 0) free_cols.push_back(j);
    IntMatrix basis(A.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k)
        for (std::size_t i = 0; i < A.cols(); ++i) basis.at(i, k) = snf.V.at(i, free_cols[k]);
    return basis;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
    auto snf = smith_normal_form(m);
    if (!snf.D.is_identity()) throw std::invalid_argument("inverse_unimodular: matrix not unimodular");
    return snf.V * snf.U;
}

} // namespace effsq
