#include "effsq/pushout.hpp"

#include "effsq/errors.hpp"

namespace effsq {

PushoutResult pushout(const Hom& f, const Hom& g) {
    if (!(f.src() == g.src())) throw MismatchError("pushout: span legs have different sources");
    const FpAbGroup& A = f.src();
    const FpAbGroup& B = f.dst();
    const FpAbGroup& C = g.dst();
    const std::size_t nb = B.num_generators(), nc = C.num_generators();
    const std::size_t na = A.num_generators();

    IntMatrix rel(B.relations().rows() + C.relations().rows() + na, nb + nc);
    std::size_t r = 0;
    for (std::size_t i = 0; i < B.relations().rows(); ++i, ++r)
        for (std::size_t j = 0; j < nb; ++j) rel.at(r, j) = B.relations().at(i, j);
    for (std::size_t i = 0; i < C.relations().rows(); ++i, ++r)
        for (std::size_t j = 0; j < nc; ++j) rel.at(r, nb + j) = C.relations().at(i, j);
    for (std::size_t a = 0; a < na; ++a, ++r) {
        for (std::size_t i = 0; i < nb; ++i) rel.at(r, i) = f.matrix().at(i, a);
        for (std::size_t i = 0; i < nc; ++i) rel.at(r, nb + i) = -g.matrix().at(i, a);
    }

    PushoutResult res;
    res.apex = make_group(nb + nc, rel);
    IntMatrix ml(nb + nc, nb), mr(nb + nc, nc);
    for (std::size_t i = 0; i < nb; ++i) ml.at(i, i) = 1;
    for (std::size_t i = 0; i < nc; ++i) mr.at(nb + i, i) = 1;
    res.inj_left = make_hom(B, res.apex, ml);
    res.inj_right = make_hom(C, res.apex, mr);
    res.span_f = f;
    res.span_g = g;
    return res;
}

Hom induced_map(const PushoutResult& po, const Hom& h, const Hom& k) {
    if (!(h.dst() == k.dst())) throw MismatchError("induced_map: cocone legs have different targets");
    if (!(h.src() == po.span_f.dst()) || !(k.src() == po.span_g.dst()))
        throw MismatchError("induced_map: cocone legs do not match the span");
    if (!(compose(h, po.span_f) == compose(k, po.span_g)))
        throw MismatchError("induced_map: cocone does not commute over the span");
    // Generators of the apex are the B-generators followed by the
    // C-generators, so the induced map is just [h | k].
    IntMatrix m = h.matrix().hstack(k.matrix());
    return make_hom(po.apex, h.dst(), m);
}

} // namespace effsq
