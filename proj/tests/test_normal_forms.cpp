#include <doctest.h>

#include <functional>
#include <vector>

#include "effsq/normal_forms.hpp"
#include "effsq/rng.hpp"

using namespace effsq;

namespace {

IntMatrix mat(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Int>> conv;
    for (const auto& r : rows) conv.emplace_back(r.begin(), r.end());
    return IntMatrix::from_rows(conv);
}

// Independent oracle: the product of the first k invariant factors equals
// the gcd of all k x k minors.
Int minor_gcd(const IntMatrix& m, std::size_t k) {
    std::vector<std::size_t> ri(k), ci(k);
    Int g = 0;
    std::function<void(std::size_t, std::size_t)> rows_pick = [&](std::size_t start, std::size_t depth) {
        if (depth == k) {
            std::function<void(std::size_t, std::size_t)> cols_pick = [&](std::size_t cstart,
                                                                          std::size_t cdepth) {
                if (cdepth == k) {
                    IntMatrix sub(k, k);
                    for (std::size_t i = 0; i < k; ++i)
                        for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(ri[i], ci[j]);
                    g = gcd_int(g, determinant(sub));
                    return;
                }
                for (std::size_t c = cstart; c < m.cols(); ++c) {
                    ci[cdepth] = c;
                    cols_pick(c + 1, cdepth + 1);
                }
            };
            cols_pick(0, 0);
            return;
        }
        for (std::size_t r = start; r < m.rows(); ++r) {
            ri[depth] = r;
            rows_pick(r + 1, depth + 1);
        }
    };
    rows_pick(0, 0);
    return g;
}

IntMatrix random_matrix(Rng& rng, std::size_t maxdim, long bound) {
    std::size_t r = rng.index(maxdim + 1), c = rng.index(maxdim + 1);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.int_in(-bound, bound);
    return m;
}

void check_snf_contract(const IntMatrix& m) {
    auto s = smith_normal_form(m);
    CHECK(s.U * m * s.V == s.D);
    CHECK(is_unimodular(s.U));
    CHECK(is_unimodular(s.V));
    const std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(s.D.at(i, i) >= 0);
        if (i + 1 < n && s.D.at(i, i) != 0) CHECK(s.D.at(i + 1, i + 1) % s.D.at(i, i) == 0);
        if (i + 1 < n && s.D.at(i, i) == 0) CHECK(s.D.at(i + 1, i + 1) == 0);
    }
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j) CHECK(s.D.at(i, j) == 0);
}

} // namespace

TEST_CASE("smith normal form on the worked 2x2 example") {
    IntMatrix m = mat({{2, 4}, {6, 8}});
    auto s = smith_normal_form(m);
    // d1 = gcd of entries, d1*d2 = |det|
    CHECK(minor_gcd(m, 1) == 2);
    CHECK(abs_int(determinant(m)) == 8);
    CHECK(s.D.at(0, 0) == 2);
    CHECK(s.D.at(1, 1) == 4);
    check_snf_contract(m);
}

TEST_CASE("smith normal form fixed points") {
    auto s = smith_normal_form(IntMatrix::identity(3));
    CHECK(s.D == IntMatrix::identity(3));
    CHECK(s.U == IntMatrix::identity(3));
    CHECK(s.V == IntMatrix::identity(3));

    IntMatrix m = mat({{1, 0}, {0, 0}});
    auto s2 = smith_normal_form(m);
    CHECK(s2.D == m);
}

TEST_CASE("smith normal form on empty and degenerate shapes") {
    for (auto m : {IntMatrix(0, 0), IntMatrix(0, 3), IntMatrix(3, 0), IntMatrix(2, 2)})
        check_snf_contract(m);
}

TEST_CASE("smith normal form agrees with the minor-gcd oracle") {
    Rng rng(42);
    for (int t = 0; t < 60; ++t) {
        IntMatrix m = random_matrix(rng, 4, 6);
        auto s = smith_normal_form(m);
        Int prod = 1;
        for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
            prod *= s.D.at(k - 1, k - 1);
            CHECK(prod == minor_gcd(m, k));
            if (prod == 0) break;
        }
    }
}

TEST_CASE("snf contract on seeded matrices") {
    Rng rng(7);
    for (int t = 0; t < 200; ++t) check_snf_contract(random_matrix(rng, 5, 9));
}

TEST_CASE("hermite normal form worked examples") {
    auto h1 = hermite_normal_form(mat({{2}, {3}}));
    CHECK(h1.H == mat({{1}, {0}}));
    CHECK(h1.U * mat({{2}, {3}}) == h1.H);
    CHECK(is_unimodular(h1.U));

    IntMatrix z(2, 3);
    CHECK(hermite_normal_form(z).H == z);

    auto h2 = hermite_normal_form(mat({{4}, {6}}));
    CHECK(h2.H == mat({{2}, {0}}));
}

TEST_CASE("hermite form preserves the row lattice") {
    Rng rng(11);
    for (int t = 0; t < 120; ++t) {
        IntMatrix m = random_matrix(rng, 4, 7);
        auto h = hermite_normal_form(m);
        CHECK(h.U * m == h.H);
        CHECK(is_unimodular(h.U));
        CHECK(same_row_lattice(m, h.H));
        // every original row reduces to zero against H
        for (std::size_t i = 0; i < m.rows(); ++i) CHECK(in_row_lattice(h.H, m.row(i)));
    }
}

TEST_CASE("hermite reduction gives canonical coset representatives") {
    auto h = hermite_normal_form(mat({{4, 1}, {0, 3}}));
    auto r1 = hermite_reduce(h.H, {Int(5), Int(2)});
    auto r2 = hermite_reduce(h.H, {Int(1), Int(1)});
    CHECK(r1 == r2); // (5,2) - (1,1) = (4,1), a lattice row
}

TEST_CASE("solve_linear and nullspace") {
    // 2x = 6 has x = 3; 2x = 5 has no integer solution
    IntMatrix a = mat({{2}});
    CHECK(solve_linear(a, {Int(6)}).value() == std::vector<Int>{Int(3)});
    CHECK(!solve_linear(a, {Int(5)}).has_value());

    // fold map [1 1]: nullspace spanned by (1,-1)
    IntMatrix fold = mat({{1, 1}});
    IntMatrix ns = nullspace(fold);
    REQUIRE(ns.cols() == 1);
    CHECK(ns.at(0, 0) + ns.at(1, 0) == 0);
    CHECK(abs_int(ns.at(0, 0)) == 1);

    Rng rng(3);
    for (int t = 0; t < 80; ++t) {
        IntMatrix m = random_matrix(rng, 4, 5);
        IntMatrix ns2 = nullspace(m);
        for (std::size_t j = 0; j < ns2.cols(); ++j) {
            auto col = ns2.col(j);
            for (auto& e : m.apply(col)) CHECK(e == 0);
        }
    }
}

TEST_CASE("inverse of unimodular matrices") {
    Rng rng(5);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = rng.index(4) + 1;
        IntMatrix u = IntMatrix::identity(n);
        for (std::size_t k = 0; k < 2 * n; ++k) {
            std::size_t i = rng.index(n), j = rng.index(n);
            if (i != j) u.add_row_multiple(i, j, rng.int_in(-2, 2));
        }
        CHECK(u * inverse_unimodular(u) == IntMatrix::identity(n));
    }
}
