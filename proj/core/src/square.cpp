#include "effsq/square.hpp"

#include "effsq/errors.hpp"

namespace effsq {

Span make_span(Hom f, Hom g) {
    if (!(f.src() == g.src())) throw MismatchError("span legs have different sources");
    return {std::move(f), std::move(g)};
}

Square make_square(Hom f, Hom g, Hom h, Hom k) {
    if (!(f.src() == g.src())) throw MismatchError("square: f and g must share their source");
    if (!(h.src() == f.dst())) throw MismatchError("square: h must start at the target of f");
    if (!(k.src() == g.dst())) throw MismatchError("square: k must start at the target of g");
    if (!(h.dst() == k.dst())) throw MismatchError("square: h and k must share their target");
    if (!(compose(h, f) == compose(k, g))) throw MismatchError("square does not commute");
    Square sq;
    sq.f_ = std::move(f);
    sq.g_ = std::move(g);
    sq.h_ = std::move(h);
    sq.k_ = std::move(k);
    return sq;
}

Verdict is_effective(const Square& sq, const MorphismClass& m) {
    auto po = pushout(sq.f(), sq.g());
    Hom t = induced_map(po, sq.h(), sq.k());
    Verdict mv = membership_verdict(m, t);
    if (mv.passed) return Verdict::pass_with({"induced_map", class_name(m), t, std::nullopt});
    mv.witness->kind = "induced_map_not_in_class";
    if (!mv.witness->map) mv.witness->map = t;
    return mv;
}

Square transpose(const Square& sq) { return make_square(sq.g(), sq.f(), sq.k(), sq.h()); }

Square complete_span(const Span& sp) {
    auto po = pushout(sp.f, sp.g);
    return make_square(sp.f, sp.g, po.inj_left, po.inj_right);
}

Square hcompose(const Square& left, const Square& right) {
    if (!(right.f() == left.k()))
        throw MismatchError("hcompose: shared edge mismatch (right.f must equal left.k)");
    return make_square(left.f(), compose(right.g(), left.g()), compose(right.h(), left.h()),
                       right.k());
}

Square vcompose(const Square& bottom, const Square& top) {
    if (!(top.g() == bottom.h()))
        throw MismatchError("vcompose: shared edge mismatch (top.g must equal bottom.h)");
    return make_square(compose(top.f(), bottom.f()), bottom.g(), top.h(),
                       compose(top.k(), bottom.k()));
}

Square post_extend(const Square& sq, const Hom& d) {
    if (!(d.src() == sq.corner_d())) throw MismatchError("post_extend: d must start at the final corner");
    return make_square(sq.f(), sq.g(), compose(d, sq.h()), compose(d, sq.k()));
}

AmalgamResult amalgamate_uniqueness(const Span& sp, const Square& sq1, const Square& sq2,
                                    const MorphismClass& m) {
    if (!(sq1.f() == sp.f) || !(sq1.g() == sp.g) || !(sq2.f() == sp.f) || !(sq2.g() == sp.g))
        throw MismatchError("amalgamate_uniqueness: squares are not completions of the span");
    if (!is_effective(sq1, m).passed)
        throw MismatchError("amalgamate_uniqueness: first completion is not effective");
    if (!is_effective(sq2, m).passed)
        throw MismatchError("amalgamate_uniqueness: second completion is not effective");

    auto po = pushout(sp.f, sp.g);
    Hom t1 = induced_map(po, sq1.h(), sq1.k());
    Hom t2 = induced_map(po, sq2.h(), sq2.k());
    auto amal = pushout(t1, t2);
    const Hom& e1 = amal.inj_left;  // D1 -> E
    const Hom& e2 = amal.inj_right; // D2 -> E

    AmalgamResult res{Verdict::pass(), amal.apex, e1, e2};
    if (!(compose(e1, sq1.h()) == compose(e2, sq2.h()))) {
        res.verdict = Verdict::fail({"amalgam", "legs disagree on B", e1, std::nullopt});
        return res;
    }
    if (!(compose(e1, sq1.k()) == compose(e2, sq2.k()))) {
        res.verdict = Verdict::fail({"amalgam", "legs disagree on C", e1, std::nullopt});
        return res;
    }
    Square outer = make_square(sp.f, sp.g, compose(e1, sq1.h()), compose(e1, sq1.k()));
    Verdict eff = is_effective(outer, m);
    if (!eff.passed) {
        eff.witness->kind = "amalgam_outer_square";
        res.verdict = std::move(eff);
        return res;
    }
    res.verdict = Verdict::pass_with({"amalgam", "common extension found", e1, std::nullopt});
    return res;
}

} // namespace effsq
