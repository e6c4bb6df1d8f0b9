#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "effsq/group.hpp"

namespace effsq {

// Homomorphism between finitely presented abelian groups, as an integer
// matrix on generators (columns indexed by source generators, rows by
// target generators). Validated at construction: every source relation
// must land in the target relation lattice.
class Hom {
public:
    Hom() = default;

    const FpAbGroup& src() const { return src_; }
    const FpAbGroup& dst() const { return dst_; }
    const IntMatrix& matrix() const { return matrix_; }

    // Image of an element, as a canonical representative in dst.
    std::vector<Int> apply(const std::vector<Int>& v) const { return dst_.reduce(matrix_.apply(v)); }

    bool is_zero() const;

    // Equality of maps: identical endpoints (presentation identity) and
    // matrices congruent column-by-column modulo dst's relation lattice.
    bool operator==(const Hom& o) const;

    friend Hom make_hom(const FpAbGroup& src, const FpAbGroup& dst, const IntMatrix& matrix);

private:
    FpAbGroup src_;
    FpAbGroup dst_;
    IntMatrix matrix_;
};

// Throws MismatchError on dimension mismatch, IllDefinedError (naming the
// violated relation) when the matrix is not a well-defined map.
Hom make_hom(const FpAbGroup& src, const FpAbGroup& dst, const IntMatrix& matrix);

Hom identity_hom(const FpAbGroup& a);
Hom zero_hom(const FpAbGroup& src, const FpAbGroup& dst);

// g after f; requires f.dst and g.src to be the same presentation object.
Hom compose(const Hom& g, const Hom& f);

struct KernelResult {
    FpAbGroup group;
    Hom inclusion; // group -> src(h), with compose(h, inclusion) = 0
};
KernelResult kernel(const Hom& h);

struct CokernelResult {
    FpAbGroup group; // dst(h) with the columns of h adjoined as relations
    Hom projection;  // dst(h) -> group
};
CokernelResult cokernel(const Hom& h);

bool is_mono(const Hom& h);
bool is_epi(const Hom& h);
bool is_iso(const Hom& h);

// Exhaustive list of all homomorphisms src -> dst between finite groups.
// Throws InfiniteGroupError, or BoundExceededError when
// |src| * |dst| > order_bound.
std::vector<Hom> enumerate_homs(const FpAbGroup& src, const FpAbGroup& dst,
                                std::uint64_t order_bound = 4096);

enum class FactorSide { Left, Right };

// Left:  find t with compose(t, through) = target  (through: X->Y, target: X->Z, t: Y->Z).
// Right: find t with compose(through, t) = target  (through: Y->Z, target: X->Z, t: X->Y).
// Returns a solution of the integer-linear congruence system, or nullopt.
std::optional<Hom> solve_factorization(const Hom& through, const Hom& target, FactorSide side);

// Direct-sum plumbing used by generators and oracles.
Hom inclusion_first(const FpAbGroup& a, const FpAbGroup& b);  // a -> a+b
Hom inclusion_second(const FpAbGroup& a, const FpAbGroup& b); // b -> a+b
Hom projection_first(const FpAbGroup& a, const FpAbGroup& b); // a+b -> a
Hom projection_second(const FpAbGroup& a, const FpAbGroup& b);
Hom direct_sum_hom(const Hom& f, const Hom& g);

} // namespace effsq
