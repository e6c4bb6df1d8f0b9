#include "effsq/cube.hpp"

#include "effsq/errors.hpp"

namespace effsq {

ArrowMorphism Cube::bottom_face() const { return make_arrow_morphism(a_, b_, f0_, f1_); }
ArrowMorphism Cube::front_face() const { return make_arrow_morphism(a_, c_, g0_, g1_); }
ArrowMorphism Cube::rear_face() const { return make_arrow_morphism(b_, d_, h0_, h1_); }
ArrowMorphism Cube::top_face() const { return make_arrow_morphism(c_, d_, f0p_, f1p_); }
Square Cube::left_square() const { return make_square(f0_, g0_, h0_, f0p_); }
Square Cube::right_square() const { return make_square(f1_, g1_, h1_, f1p_); }

Cube make_cube(Hom a, Hom b, Hom c, Hom d, Hom f0, Hom f1, Hom g0, Hom g1, Hom h0, Hom h1,
               Hom f0p, Hom f1p) {
    Cube cu;
    cu.a_ = std::move(a);
    cu.b_ = std::move(b);
    cu.c_ = std::move(c);
    cu.d_ = std::move(d);
    cu.f0_ = std::move(f0);
    cu.f1_ = std::move(f1);
    cu.g0_ = std::move(g0);
    cu.g1_ = std::move(g1);
    cu.h0_ = std::move(h0);
    cu.h1_ = std::move(h1);
    cu.f0p_ = std::move(f0p);
    cu.f1p_ = std::move(f1p);
    // Each face constructor checks commutativity (and endpoint sanity).
    cu.bottom_face();
    cu.front_face();
    cu.rear_face();
    cu.top_face();
    cu.left_square();
    cu.right_square();
    return cu;
}

Cube cube_from_arrow_span(const ArrowMorphism& bottom, const ArrowMorphism& front) {
    auto apr = arrow_pushout(bottom, front);
    // bottom: a -> b, front: a -> c, apex arrow closes the cube as d.
    return make_cube(bottom.src_arrow(), bottom.dst_arrow(), front.dst_arrow(), apr.apex_arrow,
                     bottom.bottom(), bottom.top(), front.bottom(), front.top(),
                     apr.inj_base.bottom(), apr.inj_base.top(), apr.inj_side.bottom(),
                     apr.inj_side.top());
}

DerivedSquare derived_square(const Cube& cube) {
    DerivedSquare ds;
    ds.left_po = pushout(cube.f0(), cube.g0());  // inj_left: B1->P, inj_right: C1->P
    ds.right_po = pushout(cube.f1(), cube.g1()); // inj_left: B2->P', inj_right: C2->P'
    ds.q = induced_map(ds.left_po, cube.h0(), cube.f0p());
    ds.q_prime = induced_map(ds.right_po, cube.h1(), cube.f1p());
    ds.p = induced_map(ds.left_po, compose(ds.right_po.inj_left, cube.b()),
                       compose(ds.right_po.inj_right, cube.c()));
    ds.square = make_square(ds.p, ds.q, ds.q_prime, cube.d());
    return ds;
}

Verdict is_cube_effective(const Cube& cube, const MorphismClass& m) {
    struct Face {
        const char* name;
        ArrowMorphism am;
    };
    const Face faces[] = {{"bottom", cube.bottom_face()},
                          {"top", cube.top_face()},
                          {"front", cube.front_face()},
                          {"rear", cube.rear_face()}};
    for (const auto& face : faces) {
        Verdict v = mshriek_verdict(m, face.am);
        if (!v.passed) {
            v.witness->kind = "invalid_face";
            v.witness->detail = std::string(face.name) + " face not effective" +
                                (v.witness->detail.empty() ? "" : ": " + v.witness->detail);
            return v;
        }
    }
    DerivedSquare ds = derived_square(cube);
    Verdict v = is_effective(ds.square, m);
    if (!v.passed) {
        v.witness->kind = "derived_square";
        v.witness->detail = "derived square not effective" +
                            (v.witness->detail.empty() ? "" : ": " + v.witness->detail);
        return v;
    }
    return v;
}

} // namespace effsq
