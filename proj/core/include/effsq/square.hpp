#pragma once

#include "effsq/morphism_class.hpp"
#include "effsq/pushout.hpp"
#include "effsq/verdict.hpp"

namespace effsq {

struct Span {
    Hom f; // A -> B
    Hom g; // A -> C
};

// Throws MismatchError unless f.src = g.src.
Span make_span(Hom f, Hom g);

// Commutative square
//
//   B --h--> D
//   ^        ^
//   f        k
//   A --g--> C
//
// with compose(h, f) = compose(k, g); construction rejects non-commuting data.
class Square {
public:
    Square() = default;

    const Hom& f() const { return f_; }
    const Hom& g() const { return g_; }
    const Hom& h() const { return h_; }
    const Hom& k() const { return k_; }

    const FpAbGroup& corner_a() const { return f_.src(); }
    const FpAbGroup& corner_b() const { return f_.dst(); }
    const FpAbGroup& corner_c() const { return g_.dst(); }
    const FpAbGroup& corner_d() const { return h_.dst(); }

    Span span() const { return {f_, g_}; }

    bool operator==(const Square& o) const {
        return f_ == o.f_ && g_ == o.g_ && h_ == o.h_ && k_ == o.k_;
    }

    friend Square make_square(Hom f, Hom g, Hom h, Hom k);

private:
    Hom f_, g_, h_, k_;
};

Square make_square(Hom f, Hom g, Hom h, Hom k);

// M-effectiveness: the induced map from the pushout of the span (f, g)
// to D lands in M. The verdict always carries the induced map as witness;
// failures are decorated with the membership counterexample.
Verdict is_effective(const Square& sq, const MorphismClass& m);

// Reflection across the bottom-left-to-top-right diagonal; involutive and
// effectiveness-preserving.
Square transpose(const Square& sq);

// Completes a span by its pushout; the result is M-effective for every
// normal M since the induced map is an isomorphism.
Square complete_span(const Span& sp);

// Pasting. Horizontal composition joins along the shared vertical edge
// (right.f must equal left.k); vertical along the shared horizontal edge
// (top.g must equal bottom.h). Edge identity is strict Hom equality.
Square hcompose(const Square& left, const Square& right);
Square vcompose(const Square& bottom, const Square& top);

// Post-extension of the final corner along d: D -> E (the move quantified
// over in the independence-notion axiom).
Square post_extend(const Square& sq, const Hom& d);

struct AmalgamResult {
    Verdict verdict;
    FpAbGroup amalgam;  // E
    Hom leg_left;       // D1 -> E
    Hom leg_right;      // D2 -> E
};

// Uniqueness-up-to-amalgamation: for two M-effective completions of the
// same span, pushes out the two induced maps to the canonical amalgam E
// and verifies the legs agree on B and C and that the outer square is
// M-effective. Non-effective inputs are a precondition error.
AmalgamResult amalgamate_uniqueness(const Span& sp, const Square& sq1, const Square& sq2,
                                    const MorphismClass& m);

} // namespace effsq
