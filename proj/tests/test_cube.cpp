#include <doctest.h>

#include "effsq/cube.hpp"
#include "effsq/errors.hpp"
#include "effsq/generator.hpp"
#include "effsq/ncube.hpp"

using namespace effsq;

namespace {

const FpAbGroup Z = free_group(1);
const MorphismClass monos{ClassKind::Monos};

Hom scale(const FpAbGroup& g, long k) {
    IntMatrix m = IntMatrix::identity(g.num_generators());
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, i) = k;
    return make_hom(g, g, m);
}

Cube identity_cube(const FpAbGroup& g) {
    Hom id = identity_hom(g);
    return make_cube(id, id, id, id, id, id, id, id, id, id, id, id);
}

// All faces mono-effective, derived square fails: b = c = d = (x k),
// a = the zero arrow.
Cube fold_cube(long k) {
    FpAbGroup zero = trivial_group();
    Hom arrow = scale(Z, k);
    Hom zarrow = identity_hom(zero);
    Hom zf = zero_hom(zero, Z);
    Hom idf = identity_hom(Z);
    return make_cube(zarrow, arrow, arrow, arrow, zf, zf, zf, zf, idf, idf, idf, idf);
}

} // namespace

TEST_CASE("all-identity cube is effective with an identity derived square") {
    Cube cu = identity_cube(Z);
    DerivedSquare ds = derived_square(cu);
    CHECK(is_iso(ds.p));
    CHECK(is_iso(ds.q));
    CHECK(is_cube_effective(cu, monos).passed);
}

TEST_CASE("pushout-completed cubes are effective") {
    Rng rng(71);
    GeneratorConfig cfg;
    for (int t = 0; t < 15; ++t) {
        Hom a = gen_map_in_class(rng, cfg, monos);
        ArrowMorphism bottom = gen_effective_arrow_morphism(rng, cfg, monos, a);
        ArrowMorphism front = gen_effective_arrow_morphism(rng, cfg, monos, a);
        Cube cu = cube_from_arrow_span(bottom, front);
        CHECK(is_cube_effective(cu, monos).passed);
    }
}

TEST_CASE("fold cube: faces effective, derived square rejected with witness") {
    Cube cu = fold_cube(2);
    for (const auto& face : {cu.bottom_face(), cu.top_face(), cu.front_face(), cu.rear_face()})
        CHECK(mshriek_verdict(monos, face).passed);
    Verdict v = is_cube_effective(cu, monos);
    CHECK(!v.passed);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->kind == "derived_square");
    CHECK(v.witness->element.has_value()); // kernel generator of the derived induced map
}

TEST_CASE("corner-broken cube is rejected at a face") {
    Rng rng(72);
    GeneratorConfig cfg;
    Cube cu = gen_cube(rng, cfg, monos);
    FpAbGroup zero = trivial_group();
    Hom w = zero_hom(cu.d().dst(), zero);
    Cube broken = make_cube(cu.a(), cu.b(), cu.c(), compose(w, cu.d()), cu.f0(), cu.f1(), cu.g0(),
                            cu.g1(), cu.h0(), compose(w, cu.h1()), cu.f0p(), compose(w, cu.f1p()));
    Verdict v = is_cube_effective(broken, monos);
    if (!cu.d().dst().is_trivial()) {
        CHECK(!v.passed);
        REQUIRE(v.witness.has_value());
    }
}

TEST_CASE("derived square of the fold cube has the expected shape") {
    Cube cu = fold_cube(2);
    DerivedSquare ds = derived_square(cu);
    // dom-slice span is (0 -> Z, 0 -> Z): P is Z^2 and q is the fold
    CHECK(ds.left_po.apex.canonical().to_string() == "Z^2");
    CHECK(ds.q.matrix().rows() == 1);
    // p is multiplication by k on the apex
    CHECK(ds.p.matrix() == IntMatrix::from_rows({{Int(2), Int(0)}, {Int(0), Int(2)}}));
}

TEST_CASE("cube construction rejects non-commuting faces") {
    Hom id = identity_hom(Z);
    Hom x2 = scale(Z, 2);
    CHECK_THROWS_AS(make_cube(id, id, id, id, id, x2, id, id, id, id, id, id), MismatchError);
}
