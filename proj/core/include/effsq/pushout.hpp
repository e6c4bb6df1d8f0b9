#pragma once

#include "effsq/hom.hpp"

namespace effsq {

// Pushout of a span f: A -> B, g: A -> C, presented as
// (B + C) / <(f(a), -g(a)) : a generator of A>.
struct PushoutResult {
    FpAbGroup apex;
    Hom inj_left;  // B -> apex
    Hom inj_right; // C -> apex
    Hom span_f;    // the defining span, kept for induced-map validation
    Hom span_g;
};

// Throws MismatchError unless f.src = g.src.
PushoutResult pushout(const Hom& f, const Hom& g);

// The unique t: apex -> D with compose(t, inj_left) = h and
// compose(t, inj_right) = k. Throws MismatchError when (h, k) is not a
// commuting cocone over the defining span.
Hom induced_map(const PushoutResult& po, const Hom& h, const Hom& k);

} // namespace effsq
