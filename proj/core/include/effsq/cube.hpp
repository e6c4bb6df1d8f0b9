#pragma once

#include "effsq/arrow.hpp"

namespace effsq {

// Commutative cube, stored as the twelve edge maps
//
//          D1 ---d---> D2
//         /|          /|
//      f0p h0      f1p h1          a,b,c,d : left-to-right
//       /  |        /  |           f0,f1   : A->B (bottom face components)
//      C1 -+--c--> C2  |           g0,g1   : A->C (front face components)
//      |   B1 --b--|-> B2          h0,h1   : B->D (rear face components)
//      g0 /        g1 /            f0p,f1p : C->D (top face components)
//      | f0        | f1
//      A1 ---a---> A2
//
// Read as a square in the arrow category it has objects a, b, c, d and
// morphisms the bottom/front/rear/top faces; the left and right faces are
// the commutativity constraints.
class Cube {
public:
    Cube() = default;

    const Hom& a() const { return a_; }
    const Hom& b() const { return b_; }
    const Hom& c() const { return c_; }
    const Hom& d() const { return d_; }
    const Hom& f0() const { return f0_; }
    const Hom& f1() const { return f1_; }
    const Hom& g0() const { return g0_; }
    const Hom& g1() const { return g1_; }
    const Hom& h0() const { return h0_; }
    const Hom& h1() const { return h1_; }
    const Hom& f0p() const { return f0p_; }
    const Hom& f1p() const { return f1p_; }

    ArrowMorphism bottom_face() const; // (f0, f1): a -> b
    ArrowMorphism front_face() const;  // (g0, g1): a -> c
    ArrowMorphism rear_face() const;   // (h0, h1): b -> d
    ArrowMorphism top_face() const;    // (f0p, f1p): c -> d
    Square left_square() const;        // A1, B1, C1, D1
    Square right_square() const;       // A2, B2, C2, D2

    friend Cube make_cube(Hom a, Hom b, Hom c, Hom d, Hom f0, Hom f1, Hom g0, Hom g1, Hom h0,
                          Hom h1, Hom f0p, Hom f1p);

private:
    Hom a_, b_, c_, d_, f0_, f1_, g0_, g1_, h0_, h1_, f0p_, f1p_;
};

// Validates that all six faces commute.
Cube make_cube(Hom a, Hom b, Hom c, Hom d, Hom f0, Hom f1, Hom g0, Hom g1, Hom h0, Hom h1,
               Hom f0p, Hom f1p);

// Assembles the cube completing a span in the arrow category by pushout:
// bottom and front become the span, rear and top the pushout legs.
Cube cube_from_arrow_span(const ArrowMorphism& bottom, const ArrowMorphism& front);

struct DerivedSquare {
    Square square;        // (p, q, q', d)
    Hom p;                // P -> P'
    Hom q;                // P -> D1
    Hom q_prime;          // P' -> D2
    PushoutResult left_po;  // pushout of (f0, g0)
    PushoutResult right_po; // pushout of (f1, g1)
};

// Pushes out the left and right sides of the cube and forms the square of
// induced maps; its effectiveness decides effectiveness of the cube.
DerivedSquare derived_square(const Cube& cube);

// Validity (top, bottom, front, rear faces effective) plus effectiveness
// of the derived square, with per-face witnesses on failure.
Verdict is_cube_effective(const Cube& cube, const MorphismClass& m);

} // namespace effsq
