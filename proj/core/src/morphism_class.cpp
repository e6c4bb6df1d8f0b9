#include "effsq/morphism_class.hpp"

#include "effsq/errors.hpp"

namespace effsq {

std::string class_name(const MorphismClass& m) {
    switch (m.kind) {
        case ClassKind::AllMorphisms: return "all";
        case ClassKind::Monos: return "mono";
        case ClassKind::PureMonos: return "pure";
        case ClassKind::SplitMonos: return "split";
        case ClassKind::Isos: return "iso";
    }
    return "all";
}

MorphismClass class_from_name(const std::string& name) {
    if (name == "all") return {ClassKind::AllMorphisms};
    if (name == "mono") return {ClassKind::Monos};
    if (name == "pure") return {ClassKind::PureMonos};
    if (name == "split") return {ClassKind::SplitMonos};
    if (name == "iso") return {ClassKind::Isos};
    throw MismatchError("unknown morphism class '" + name + "' (expected all|mono|pure|split|iso)");
}

namespace {

bool has_retraction(const Hom& h) {
    return solve_factorization(h, identity_hom(h.src()), FactorSide::Left).has_value();
}

// First kernel generator that is nonzero in src(h).
std::optional<std::vector<Int>> kernel_witness(const Hom& h) {
    auto k = kernel(h);
    for (std::size_t j = 0; j < k.inclusion.matrix().cols(); ++j) {
        auto el = h.src().reduce(k.inclusion.matrix().col(j));
        for (const auto& e : el)
            if (e != 0) return el;
    }
    return std::nullopt;
}

} // namespace

bool is_pure_mono(const Hom& h) { return is_mono(h) && has_retraction(h); }

bool contains(const MorphismClass& m, const Hom& h) {
    switch (m.kind) {
        case ClassKind::AllMorphisms: return true;
        case ClassKind::Monos: return is_mono(h);
        case ClassKind::PureMonos: return is_pure_mono(h);
        case ClassKind::SplitMonos: return is_mono(h) && has_retraction(h);
        case ClassKind::Isos: return is_iso(h);
    }
    return true;
}

Verdict membership_verdict(const MorphismClass& m, const Hom& h) {
    if (contains(m, h)) return Verdict::pass_with({"member", class_name(m), h, std::nullopt});
    Witness w;
    w.kind = "non_member";
    w.map = h;
    if (auto el = kernel_witness(h)) {
        w.detail = "kernel element";
        w.element = std::move(*el);
    } else if (m.kind == ClassKind::Isos) {
        w.detail = "nontrivial cokernel " + cokernel(h).group.canonical().to_string();
    } else {
        w.detail = "mono without retraction (not a direct summand)";
    }
    return Verdict::fail(std::move(w));
}

Verdict check_normal_instance(const MorphismClass& m, const Hom& f, const Hom& g) {
    if (!(g.src() == f.dst())) throw MismatchError("check_normal_instance: maps not composable");
    if (!contains(m, identity_hom(f.src())))
        return Verdict::fail({"normality", "class rejects an identity", identity_hom(f.src()), std::nullopt});
    if (!contains(m, f) || !contains(m, g)) return Verdict::vacuous_pass();
    Hom gf = compose(g, f);
    if (contains(m, gf)) return Verdict::pass_with({"composite", "", gf, std::nullopt});
    return Verdict::fail({"normality", "composite escapes the class", gf, std::nullopt});
}

Verdict check_coherent_instance(const MorphismClass& m, const Hom& f, const Hom& g) {
    if (!(g.src() == f.dst())) throw MismatchError("check_coherent_instance: maps not composable");
    if (!contains(m, compose(g, f)) || !contains(m, g)) return Verdict::vacuous_pass();
    if (contains(m, f)) return Verdict::pass_with({"left_factor", "", f, std::nullopt});
    return Verdict::fail({"coherence", "left factor escapes the class", f, std::nullopt});
}

Verdict check_coclan_instance(const MorphismClass& m, const Hom& mono_leg, const Hom& g) {
    if (!(mono_leg.src() == g.src()))
        throw MismatchError("check_coclan_instance: span legs have different sources");
    if (!contains(m, mono_leg))
        throw MismatchError("check_coclan_instance: leg is not in the class");
    auto po = pushout(mono_leg, g);
    // The pushout of mono_leg along g is the injection opposite mono_leg.
    Verdict v = membership_verdict(m, po.inj_right);
    if (v.passed) return Verdict::pass_with({"pushout_leg", "", po.inj_right, std::nullopt});
    v.witness->kind = "coclan";
    return v;
}

Verdict check_retract_closed_instance(const MorphismClass& m, const Hom& f, const Hom& g,
                                      const Hom& u, const Hom& v, const Hom& r, const Hom& s) {
    if (!(compose(f, u) == compose(v, g)))
        throw MismatchError("retract check: (u,v) is not a morphism g -> f");
    if (!(compose(g, r) == compose(s, f)))
        throw MismatchError("retract check: (r,s) is not a morphism f -> g");
    if (!(compose(r, u) == identity_hom(g.src())) || !(compose(s, v) == identity_hom(g.dst())))
        throw MismatchError("retract check: (r,s)(u,v) is not the identity");
    if (!contains(m, f)) return Verdict::vacuous_pass();
    Verdict mv = membership_verdict(m, g);
    if (mv.passed) return Verdict::pass_with({"retract", "", g, std::nullopt});
    mv.witness->kind = "retract_closure";
    return mv;
}

} // namespace effsq
