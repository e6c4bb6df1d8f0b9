#pragma once

#include <string>
#include <vector>

#include "effsq/int_matrix.hpp"
#include "effsq/normal_forms.hpp"

namespace effsq {

// Invariant-factor decomposition: Z^free_rank + Z/d_1 + ... + Z/d_k with
// d_i | d_{i+1} and every d_i >= 2 (units dropped, zero factors absorbed
// into free_rank). Equal canonical forms mean isomorphic groups.
struct CanonicalForm {
    std::size_t free_rank = 0;
    std::vector<Int> invariant_factors;

    bool operator==(const CanonicalForm& o) const = default;
    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    bool is_finite() const { return free_rank == 0; }
    Int order() const; // throws InfiniteGroupError on infinite groups
    Int exponent() const;
    std::string to_string() const; // "0", "Z", "Z^2 + Z/2 + Z/4", ...
};

// Finitely presented abelian group Z^n / (row lattice of `relations`).
// Values are immutable after construction; identity of objects in diagrams
// is identity of presentations, not isomorphism.
class FpAbGroup {
public:
    FpAbGroup(); // the zero group (0 generators)

    std::size_t num_generators() const { return num_generators_; }
    const IntMatrix& relations() const { return relations_; }
    const IntMatrix& relation_hermite() const { return relation_hermite_; }
    const CanonicalForm& canonical() const { return canonical_; }

    bool is_trivial() const { return canonical_.is_trivial(); }
    bool is_finite() const { return canonical_.is_finite(); }
    Int order() const { return canonical_.order(); }
    Int exponent() const { return canonical_.exponent(); }

    // Canonical coset representative of an element (a generator-coefficient
    // vector) modulo the relation lattice.
    std::vector<Int> reduce(std::vector<Int> v) const;
    bool is_zero_element(const std::vector<Int>& v) const;

    // All elements as canonical representatives; requires a finite group.
    std::vector<std::vector<Int>> elements() const;

    // Presentation identity (same generators, same relation matrix).
    bool operator==(const FpAbGroup& o) const {
        return num_generators_ == o.num_generators_ && relations_ == o.relations_;
    }

    friend FpAbGroup make_group(std::size_t num_generators, const IntMatrix& relations);

private:
    std::size_t num_generators_ = 0;
    IntMatrix relations_;        // rows are relations over the generators
    IntMatrix relation_hermite_; // Hermite form of relations_, for membership
    CanonicalForm canonical_;
};

// Canonicalizes via Smith normal form. Throws MismatchError when the
// relation matrix does not have `num_generators` columns.
FpAbGroup make_group(std::size_t num_generators, const IntMatrix& relations);

FpAbGroup trivial_group();
FpAbGroup free_group(std::size_t rank);
FpAbGroup cyclic_group(const Int& n); // Z/n, n >= 1 (n = 1 gives the presentation <x | x>)
FpAbGroup direct_sum(const FpAbGroup& a, const FpAbGroup& b);

bool isomorphic(const FpAbGroup& a, const FpAbGroup& b);

} // namespace effsq
