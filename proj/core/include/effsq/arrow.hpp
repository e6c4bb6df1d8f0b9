#pragma once

#include "effsq/config.hpp"
#include "effsq/report.hpp"
#include "effsq/square.hpp"

namespace effsq {

// A commuting square read as a morphism src_arrow -> dst_arrow in the
// arrow category: bottom and top are the components.
//
//   C --top--> D
//   ^          ^
//   src_arrow  dst_arrow
//   A --bottom--> B
//
class ArrowMorphism {
public:
    ArrowMorphism() = default;

    const Hom& src_arrow() const { return src_arrow_; }
    const Hom& dst_arrow() const { return dst_arrow_; }
    const Hom& bottom() const { return bottom_; }
    const Hom& top() const { return top_; }

    // The square whose span is (bottom, src_arrow) and whose cocone is
    // (dst_arrow, top); its effectiveness is what M! membership means.
    Square underlying_square() const;

    bool operator==(const ArrowMorphism& o) const {
        return src_arrow_ == o.src_arrow_ && dst_arrow_ == o.dst_arrow_ &&
               bottom_ == o.bottom_ && top_ == o.top_;
    }

    friend ArrowMorphism make_arrow_morphism(Hom src_arrow, Hom dst_arrow, Hom bottom, Hom top);

private:
    Hom src_arrow_, dst_arrow_, bottom_, top_;
};

// Validates compose(dst_arrow, bottom) = compose(top, src_arrow).
ArrowMorphism make_arrow_morphism(Hom src_arrow, Hom dst_arrow, Hom bottom, Hom top);

ArrowMorphism identity_arrow_morphism(const Hom& arrow);
ArrowMorphism compose(const ArrowMorphism& second, const ArrowMorphism& first);

struct ArrowPushoutResult {
    Hom apex_arrow;           // m3': B' -> D'
    ArrowMorphism inj_base;   // m3 -> m3', components (b, d)
    ArrowMorphism inj_side;   // m1' -> m3', components (m0', m2')
    PushoutResult bottom_po;  // pushout of (bottom of base, bottom of side)
    PushoutResult top_po;     // pushout of (top of base, top of side)
};

// Pushout in the arrow category, computed componentwise; the defining
// equations of the induced arrow are verified before returning.
ArrowPushoutResult arrow_pushout(const ArrowMorphism& base, const ArrowMorphism& side);

// M! of the arrow category: membership is M-effectiveness of the
// underlying square.
bool mshriek_contains(const MorphismClass& m, const ArrowMorphism& am);
Verdict mshriek_verdict(const MorphismClass& m, const ArrowMorphism& am);

// Instance suite for the closure properties of M!: (a) normality,
// (b) coherence, (c) the coclan property including the mediating-map
// equations of the pushout argument, (d) retract closure.
Report check_mshriek_closure_suite(const MorphismClass& m, const GeneratorConfig& cfg);

// Replays the coclan diagram chase on one instance: pushes `base` out
// along `side`, forms the universal test cocone (u, v) on the derived
// pushout, solves for the mediating q through the top-face pushout and
// asserts the chased equations, that the derived square is a pushout,
// and that the apex arrow inherits effectiveness.
Verdict check_coclan_chase_instance(const MorphismClass& m, const ArrowMorphism& base,
                                    const ArrowMorphism& side);

} // namespace effsq
