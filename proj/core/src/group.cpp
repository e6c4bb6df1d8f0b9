#include "effsq/group.hpp"

#include <sstream>

#include "effsq/errors.hpp"

namespace effsq {

Int CanonicalForm::order() const {
    if (!is_finite()) throw InfiniteGroupError();
    Int n = 1;
    for (const auto& d : invariant_factors) n *= d;
    return n;
}

Int CanonicalForm::exponent() const {
    if (!is_finite()) throw InfiniteGroupError();
    return invariant_factors.empty() ? Int(1) : invariant_factors.back();
}

std::string CanonicalForm::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) {
        os << "Z";
        first = false;
    } else if (free_rank > 1) {
        os << "Z^" << free_rank;
        first = false;
    }
    for (const auto& d : invariant_factors) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

FpAbGroup::FpAbGroup() : relations_(0, 0), relation_hermite_(0, 0) {}

FpAbGroup make_group(std::size_t num_generators, const IntMatrix& relations) {
    if (relations.rows() != 0 && relations.cols() != num_generators)
        throw MismatchError("make_group: relation matrix has " + std::to_string(relations.cols()) +
                            " columns for " + std::to_string(num_generators) + " generators");
    FpAbGroup g;
    g.num_generators_ = num_generators;
    g.relations_ = relations.rows() == 0 ? IntMatrix(0, num_generators) : relations;
    g.relation_hermite_ = hermite_normal_form(g.relations_).H;

    auto snf = smith_normal_form(g.relations_);
    std::size_t rank = 0;
    const std::size_t n = std::min(g.relations_.rows(), num_generators);
    g.canonical_.invariant_factors.clear();
    for (std::size_t i = 0; i < n; ++i) {
        const Int& d = snf.D.at(i, i);
        if (d == 0) continue;
        ++rank;
        if (d >= 2) g.canonical_.invariant_factors.push_back(d);
    }
    g.canonical_.free_rank = num_generators - rank;
    return g;
}

std::vector<Int> FpAbGroup::reduce(std::vector<Int> v) const {
    return hermite_reduce(relation_hermite_, std::move(v));
}

bool FpAbGroup::is_zero_element(const std::vector<Int>& v) const {
    for (const auto& e : reduce(v))
        if (e != 0) return false;
    return true;
}

std::vector<std::vector<Int>> FpAbGroup::elements() const {
    if (!is_finite()) throw InfiniteGroupError();
    const std::size_t n = num_generators_;
    // Finite means full-rank relation lattice: the Hermite form is upper
    // triangular with positive diagonal in its first n rows, and the
    // canonical representatives are the boxed tuples below the diagonal.
    std::vector<Int> bound(n);
    for (std::size_t i = 0; i < n; ++i) bound[i] = relation_hermite_.at(i, i);
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur(n, Int(0));
    while (true) {
        out.push_back(cur);
        std::size_t i = n;
        while (i > 0) {
            --i;
            ++cur[i];
            if (cur[i] < bound[i]) break;
            cur[i] = 0;
            if (i == 0) return out;
        }
        if (n == 0) return out;
    }
}

FpAbGroup trivial_group() { return make_group(0, IntMatrix(0, 0)); }

FpAbGroup free_group(std::size_t rank) { return make_group(rank, IntMatrix(0, rank)); }

FpAbGroup cyclic_group(const Int& n) {
    IntMatrix rel(1, 1);
    rel.at(0, 0) = n;
    return make_group(1, rel);
}

FpAbGroup direct_sum(const FpAbGroup& a, const FpAbGroup& b) {
    const std::size_t n = a.num_generators() + b.num_generators();
    IntMatrix rel(a.relations().rows() + b.relations().rows(), n);
    for (std::size_t i = 0; i < a.relations().rows(); ++i)
        for (std::size_t j = 0; j < a.num_generators(); ++j) rel.at(i, j) = a.relations().at(i, j);
    for (std::size_t i = 0; i < b.relations().rows(); ++i)
        for (std::size_t j = 0; j < b.num_generators(); ++j)
            rel.at(a.relations().rows() + i, a.num_generators() + j) = b.relations().at(i, j);
    return make_group(n, rel);
}

bool isomorphic(const FpAbGroup& a, const FpAbGroup& b) { return a.canonical() == b.canonical(); }

} // namespace effsq
