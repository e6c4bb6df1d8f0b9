#include "effsq/hom.hpp"

#include "effsq/errors.hpp"

namespace effsq {

bool Hom::is_zero() const {
    for (std::size_t j = 0; j < matrix_.cols(); ++j)
        if (!dst_.is_zero_element(matrix_.col(j))) return false;
    return true;
}

bool Hom::operator==(const Hom& o) const {
    if (!(src_ == o.src_) || !(dst_ == o.dst_)) return false;
    IntMatrix diff = matrix_ - o.matrix_;
    for (std::size_t j = 0; j < diff.cols(); ++j)
        if (!dst_.is_zero_element(diff.col(j))) return false;
    return true;
}

Hom make_hom(const FpAbGroup& src, const FpAbGroup& dst, const IntMatrix& matrix) {
    if (matrix.rows() != dst.num_generators() || matrix.cols() != src.num_generators())
        throw MismatchError("make_hom: matrix is " + std::to_string(matrix.rows()) + "x" +
                            std::to_string(matrix.cols()) + ", expected " +
                            std::to_string(dst.num_generators()) + "x" +
                            std::to_string(src.num_generators()));
    for (std::size_t i = 0; i < src.relations().rows(); ++i) {
        if (!dst.is_zero_element(matrix.apply(src.relations().row(i)))) throw IllDefinedError(i);
    }
    Hom h;
    h.src_ = src;
    h.dst_ = dst;
    h.matrix_ = matrix;
    return h;
}

Hom identity_hom(const FpAbGroup& a) {
    return make_hom(a, a, IntMatrix::identity(a.num_generators()));
}

Hom zero_hom(const FpAbGroup& src, const FpAbGroup& dst) {
    return make_hom(src, dst, IntMatrix(dst.num_generators(), src.num_generators()));
}

Hom compose(const Hom& g, const Hom& f) {
    if (!(f.dst() == g.src()))
        throw MismatchError("compose: codomain of inner map is not the domain of outer map");
    return make_hom(f.src(), g.dst(), g.matrix() * f.matrix());
}

KernelResult kernel(const Hom& h) {
    const std::size_t ns = h.src().num_generators();
    // x is in the kernel iff M x lies in the relation lattice of dst, i.e.
    // [M | -R_dst^T] (x, lambda)^T = 0 for some lambda.
    IntMatrix A = h.matrix().hstack(h.dst().relations().transposed().negated());
    IntMatrix N = nullspace(A);
    IntMatrix B(ns, N.cols());
    for (std::size_t i = 0; i < ns; ++i)
        for (std::size_t j = 0; j < N.cols(); ++j) B.at(i, j) = N.at(i, j);

    // Relations among the kernel generators: combinations landing in the
    // relation lattice of src.
    IntMatrix A2 = B.hstack(h.src().relations().transposed().negated());
    IntMatrix N2 = nullspace(A2);
    IntMatrix rel(N2.cols(), B.cols());
    for (std::size_t r = 0; r < N2.cols(); ++r)
        for (std::size_t c = 0; c < B.cols(); ++c) rel.at(r, c) = N2.at(c, r);

    KernelResult res;
    res.group = make_group(B.cols(), rel);
    res.inclusion = make_hom(res.group, h.src(), B);
    return res;
}

CokernelResult cokernel(const Hom& h) {
    CokernelResult res;
    res.group = make_group(h.dst().num_generators(),
                           h.dst().relations().vstack(h.matrix().transposed()));
    res.projection = make_hom(h.dst(), res.group, IntMatrix::identity(h.dst().num_generators()));
    return res;
}

bool is_mono(const Hom& h) { return kernel(h).group.is_trivial(); }

bool is_epi(const Hom& h) { return cokernel(h).group.is_trivial(); }

bool is_iso(const Hom& h) { return is_mono(h) && is_epi(h); }

std::vector<Hom> enumerate_homs(const FpAbGroup& src, const FpAbGroup& dst,
                                std::uint64_t order_bound) {
    if (!src.is_finite() || !dst.is_finite()) throw InfiniteGroupError();
    if (src.order() * dst.order() > order_bound)
        throw BoundExceededError("enumerate_homs: |src| * |dst| exceeds bound " +
                                 std::to_string(order_bound));
    const std::size_t ns = src.num_generators();
    auto reps = dst.elements();
    std::vector<Hom> out;
    std::vector<std::size_t> pick(ns, 0);
    while (true) {
        IntMatrix M(dst.num_generators(), ns);
        for (std::size_t j = 0; j < ns; ++j)
            for (std::size_t i = 0; i < dst.num_generators(); ++i) M.at(i, j) = reps[pick[j]][i];
        bool ok = true;
        for (std::size_t i = 0; i < src.relations().rows() && ok; ++i)
            ok = dst.is_zero_element(M.apply(src.relations().row(i)));
        if (ok) out.push_back(make_hom(src, dst, M));

        std::size_t j = ns;
        bool done = (ns == 0);
        while (j > 0) {
            --j;
            if (++pick[j] < reps.size()) break;
            pick[j] = 0;
            if (j == 0) done = true;
        }
        if (done) break;
    }
    return out;
}

namespace {

// Dense assembly of the congruence system for solve_factorization.
struct System {
    IntMatrix A;
    std::vector<Int> b;
    System(std::size_t rows, std::size_t cols) : A(rows, cols), b(rows, Int(0)) {}
};

} // namespace

std::optional<Hom> solve_factorization(const Hom& through, const Hom& target, FactorSide side) {
    if (side == FactorSide::Left) {
        if (!(through.src() == target.src()))
            throw MismatchError("solve_factorization(left): domains differ");
        const FpAbGroup& Y = through.dst();
        const FpAbGroup& Z = target.dst();
        const std::size_t ny = Y.num_generators(), nz = Z.num_generators();
        const std::size_t nx = through.src().num_generators();
        const std::size_t ry = Y.relations().rows(), rz = Z.relations().rows();
        // Unknowns: T (nz x ny, column-major), then one lattice multiplier
        // block per congruence column.
        const std::size_t nT = nz * ny;
        const std::size_t ncong = nx + ry;
        System sys(nz * ncong, nT + rz * ncong);
        IntMatrix RzT = Z.relations().transposed(); // nz x rz
        auto fill_block = [&](std::size_t block, const std::vector<Int>& coeffs,
                              const std::vector<Int>& rhs) {
            for (std::size_t i = 0; i < nz; ++i) {
                std::size_t row = block * nz + i;
                for (std::size_t k = 0; k < ny; ++k)
                    sys.A.at(row, k * nz + i) = coeffs[k]; // coefficient on T[i][k]
                for (std::size_t l = 0; l < rz; ++l)
                    sys.A.at(row, nT + block * rz + l) = RzT.at(i, l);
                sys.b[row] = rhs[i];
            }
        };
        for (std::size_t j = 0; j < nx; ++j)
            fill_block(j, through.matrix().col(j), target.matrix().col(j));
        for (std::size_t l = 0; l < ry; ++l)
            fill_block(nx + l, Y.relations().row(l), std::vector<Int>(nz, Int(0)));

        auto sol = solve_linear(sys.A, sys.b);
        if (!sol) return std::nullopt;
        IntMatrix T(nz, ny);
        for (std::size_t k = 0; k < ny; ++k)
            for (std::size_t i = 0; i < nz; ++i) T.at(i, k) = (*sol)[k * nz + i];
        Hom t = make_hom(Y, Z, T);
        return compose(t, through) == target ? std::optional<Hom>(t) : std::nullopt;
    }

    if (!(through.dst() == target.dst()))
        throw MismatchError("solve_factorization(right): codomains differ");
    const FpAbGroup& X = target.src();
    const FpAbGroup& Y = through.src();
    const FpAbGroup& Z = through.dst();
    const std::size_t nx = X.num_generators(), ny = Y.num_generators(), nz = Z.num_generators();
    const std::size_t rx = X.relations().rows(), ry = Y.relations().rows(),
                      rz = Z.relations().rows();
    const std::size_t nT = ny * nx;
    System sys(nz * nx + ny * rx, nT + rz * nx + ry * rx);
    IntMatrix RzT = Z.relations().transposed(); // nz x rz
    IntMatrix RyT = Y.relations().transposed(); // ny x ry
    // through * T[.,j] = target[.,j]  (mod relations of Z)
    for (std::size_t j = 0; j < nx; ++j)
        for (std::size_t i = 0; i < nz; ++i) {
            std::size_t row = j * nz + i;
            for (std::size_t k = 0; k < ny; ++k) sys.A.at(row, j * ny + k) = through.matrix().at(i, k);
            for (std::size_t l = 0; l < rz; ++l) sys.A.at(row, nT + j * rz + l) = RzT.at(i, l);
            sys.b[row] = target.matrix().at(i, j);
        }
    // T itself must be a map X -> Y: T rho^T = 0 (mod relations of Y)
    for (std::size_t l = 0; l < rx; ++l)
        for (std::size_t i = 0; i < ny; ++i) {
            std::size_t row = nz * nx + l * ny + i;
            for (std::size_t j = 0; j < nx; ++j)
                sys.A.at(row, j * ny + i) = X.relations().at(l, j);
            for (std::size_t m = 0; m < ry; ++m)
                sys.A.at(row, nT + rz * nx + l * ry + m) = RyT.at(i, m);
        }

    auto sol = solve_linear(sys.A, sys.b);
    if (!sol) return std::nullopt;
    IntMatrix T(ny, nx);
    for (std::size_t j = 0; j < nx; ++j)
        for (std::size_t i = 0; i < ny; ++i) T.at(i, j) = (*sol)[j * ny + i];
    Hom t = make_hom(X, Y, T);
    return compose(through, t) == target ? std::optional<Hom>(t) : std::nullopt;
}

Hom inclusion_first(const FpAbGroup& a, const FpAbGroup& b) {
    FpAbGroup s = direct_sum(a, b);
    IntMatrix m(s.num_generators(), a.num_generators());
    for (std::size_t i = 0; i < a.num_generators(); ++i) m.at(i, i) = 1;
    return make_hom(a, s, m);
}

Hom inclusion_second(const FpAbGroup& a, const FpAbGroup& b) {
    FpAbGroup s = direct_sum(a, b);
    IntMatrix m(s.num_generators(), b.num_generators());
    for (std::size_t i = 0; i < b.num_generators(); ++i) m.at(a.num_generators() + i, i) = 1;
    return make_hom(b, s, m);
}

Hom projection_first(const FpAbGroup& a, const FpAbGroup& b) {
    FpAbGroup s = direct_sum(a, b);
    IntMatrix m(a.num_generators(), s.num_generators());
    for (std::size_t i = 0; i < a.num_generators(); ++i) m.at(i, i) = 1;
    return make_hom(s, a, m);
}

Hom projection_second(const FpAbGroup& a, const FpAbGroup& b) {
    FpAbGroup s = direct_sum(a, b);
    IntMatrix m(b.num_generators(), s.num_generators());
    for (std::size_t i = 0; i < b.num_generators(); ++i) m.at(i, a.num_generators() + i) = 1;
    return make_hom(s, b, m);
}

Hom direct_sum_hom(const Hom& f, const Hom& g) {
    FpAbGroup s = direct_sum(f.src(), g.src());
    FpAbGroup d = direct_sum(f.dst(), g.dst());
    IntMatrix m(d.num_generators(), s.num_generators());
    for (std::size_t i = 0; i < f.dst().num_generators(); ++i)
        for (std::size_t j = 0; j < f.src().num_generators(); ++j) m.at(i, j) = f.matrix().at(i, j);
    const std::size_t ro = f.dst().num_generators(), co = f.src().num_generators();
    for (std::size_t i = 0; i < g.dst().num_generators(); ++i)
        for (std::size_t j = 0; j < g.src().num_generators(); ++j)
            m.at(ro + i, co + j) = g.matrix().at(i, j);
    return make_hom(s, d, m);
}

} // namespace effsq
