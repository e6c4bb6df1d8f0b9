#pragma once

#include <tuple>

#include "effsq/config.hpp"
#include "effsq/cube.hpp"
#include "effsq/ncube.hpp"
#include "effsq/rng.hpp"
#include "effsq/square.hpp"

namespace effsq {

// Seeded instance generation. Everything is a deterministic function of
// the Rng stream; same seed, same instances. The mono/iso generators
// self-verify their defining property and throw on a generator bug.

FpAbGroup gen_group(Rng& rng, const GeneratorConfig& cfg, bool force_finite = false);

IntMatrix gen_unimodular(Rng& rng, std::size_t n);

// Change of generators: an isomorphic re-presentation of `src` together
// with the isomorphism and its inverse.
struct IsoResult {
    FpAbGroup dst;
    Hom map;
    Hom inverse;
};
IsoResult gen_iso(Rng& rng, const GeneratorConfig& cfg, const FpAbGroup& src);

// Arbitrary well-defined map, built on canonical coordinates.
Hom gen_hom(Rng& rng, const GeneratorConfig& cfg, const FpAbGroup& src, const FpAbGroup& dst);

// Summand inclusion composed with a change of generators: a split mono.
Hom gen_mono(Rng& rng, const GeneratorConfig& cfg, const FpAbGroup& src);

// Multiplication-pattern mono (x k into a deeper cyclic factor, x m on
// free parts): mono but generally not pure.
Hom gen_nonsplit_mono(Rng& rng, const GeneratorConfig& cfg, const FpAbGroup& src);

Hom gen_map_in_class(Rng& rng, const GeneratorConfig& cfg, const MorphismClass& m,
                     const FpAbGroup& src, bool force_finite = false);
Hom gen_map_in_class(Rng& rng, const GeneratorConfig& cfg, const MorphismClass& m);

Span gen_span(Rng& rng, const GeneratorConfig& cfg);
Span gen_span_in_class(Rng& rng, const GeneratorConfig& cfg, const MorphismClass& m);

// Pushout completion of an in-class span, optionally extended along a
// further class map; always M-effective.
Square gen_effective_square(Rng& rng, const GeneratorConfig& cfg, const MorphismClass& m);
// Mixed bag: effective squares plus arbitrary post-extensions whose
// effectiveness varies.
Square gen_square(Rng& rng, const GeneratorConfig& cfg, const MorphismClass& m);

ArrowMorphism gen_iso_arrow_morphism(Rng& rng, const GeneratorConfig& cfg);
ArrowMorphism gen_effective_arrow_morphism(Rng& rng, const GeneratorConfig& cfg,
                                           const MorphismClass& m, const Hom& from_arrow);
ArrowMorphism gen_commuting_arrow_morphism(Rng& rng, const GeneratorConfig& cfg,
                                           const Hom& from_arrow);

ArrowMorphism direct_sum_arrow_morphism(const ArrowMorphism& g, const ArrowMorphism& h);
// Section/retraction data exhibiting g as a summand retract of g + h:
// returns (u, v, r, s) with (r,s)(u,v) the identity on g.
std::tuple<ArrowMorphism, ArrowMorphism, ArrowMorphism, ArrowMorphism>
arrow_summand_retract(const ArrowMorphism& g, const ArrowMorphism& h);

// Valid cube: faces effective by construction (arrow-category pushout
// completion, optionally extended along an effective step).
Cube gen_cube(Rng& rng, const GeneratorConfig& cfg, const MorphismClass& m);
// Rejected cubes: either the valid-but-not-effective family (all faces
// effective, derived square fails for monos) or a corner-broken cube.
Cube gen_near_miss_cube(Rng& rng, const GeneratorConfig& cfg);

NCube gen_independent_ncube(Rng& rng, const GeneratorConfig& cfg, std::size_t n,
                            const MorphismClass& m);
// Independent cube of the same dimension sharing its source with x.
NCube gen_sibling_ncube(Rng& rng, const GeneratorConfig& cfg, const NCube& x,
                        const MorphismClass& m);
// Another completion of the same span: the corner pushed further along an
// independent extension.
NCube gen_extended_completion(Rng& rng, const GeneratorConfig& cfg, const NCube& comp,
                              const MorphismClass& m);

} // namespace effsq
