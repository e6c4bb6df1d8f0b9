#include "effsq/arrow.hpp"

#include <chrono>

#include "effsq/errors.hpp"
#include "effsq/generator.hpp"

namespace effsq {

Square ArrowMorphism::underlying_square() const {
    return make_square(bottom_, src_arrow_, dst_arrow_, top_);
}

ArrowMorphism make_arrow_morphism(Hom src_arrow, Hom dst_arrow, Hom bottom, Hom top) {
    if (!(bottom.src() == src_arrow.src()) || !(bottom.dst() == dst_arrow.src()) ||
        !(top.src() == src_arrow.dst()) || !(top.dst() == dst_arrow.dst()))
        throw MismatchError("arrow morphism: component endpoints do not match the arrows");
    if (!(compose(dst_arrow, bottom) == compose(top, src_arrow)))
        throw MismatchError("arrow morphism: square does not commute");
    ArrowMorphism am;
    am.src_arrow_ = std::move(src_arrow);
    am.dst_arrow_ = std::move(dst_arrow);
    am.bottom_ = std::move(bottom);
    am.top_ = std::move(top);
    return am;
}

ArrowMorphism identity_arrow_morphism(const Hom& arrow) {
    return make_arrow_morphism(arrow, arrow, identity_hom(arrow.src()), identity_hom(arrow.dst()));
}

ArrowMorphism compose(const ArrowMorphism& second, const ArrowMorphism& first) {
    if (!(first.dst_arrow() == second.src_arrow()))
        throw MismatchError("arrow morphism composition: endpoints do not match");
    return make_arrow_morphism(first.src_arrow(), second.dst_arrow(),
                               compose(second.bottom(), first.bottom()),
                               compose(second.top(), first.top()));
}

ArrowPushoutResult arrow_pushout(const ArrowMorphism& base, const ArrowMorphism& side) {
    if (!(base.src_arrow() == side.src_arrow()))
        throw MismatchError("arrow_pushout: base and side must share their source arrow");

    ArrowPushoutResult res;
    // Componentwise pushouts: bottom over A, top over C.
    res.bottom_po = pushout(side.bottom(), base.bottom()); // inj_left: A'->B', inj_right: B->B'
    res.top_po = pushout(side.top(), base.top());          // inj_left: C'->D', inj_right: D->D'
    const Hom& m0p = res.bottom_po.inj_left;
    const Hom& bb = res.bottom_po.inj_right;
    const Hom& m2p = res.top_po.inj_left;
    const Hom& dd = res.top_po.inj_right;

    res.apex_arrow = induced_map(res.bottom_po, compose(m2p, side.dst_arrow()),
                                 compose(dd, base.dst_arrow()));
    // Defining equations of the induced arrow.
    if (!(compose(res.apex_arrow, m0p) == compose(m2p, side.dst_arrow())))
        throw Error("arrow_pushout: m3' o m0' = m2' o m1' failed");
    if (!(compose(res.apex_arrow, bb) == compose(dd, base.dst_arrow())))
        throw Error("arrow_pushout: m3' o b = d o m3 failed");

    res.inj_base = make_arrow_morphism(base.dst_arrow(), res.apex_arrow, bb, dd);
    res.inj_side = make_arrow_morphism(side.dst_arrow(), res.apex_arrow, m0p, m2p);
    return res;
}

bool mshriek_contains(const MorphismClass& m, const ArrowMorphism& am) {
    return is_effective(am.underlying_square(), m).passed;
}

Verdict mshriek_verdict(const MorphismClass& m, const ArrowMorphism& am) {
    return is_effective(am.underlying_square(), m);
}

Verdict check_coclan_chase_instance(const MorphismClass& m, const ArrowMorphism& base,
                                    const ArrowMorphism& side) {
    if (!mshriek_contains(m, base))
        throw MismatchError("coclan chase: base square is not M-effective");

    auto apr = arrow_pushout(base, side);
    const Hom& m0p = apr.inj_side.bottom(); // A' -> B'
    const Hom& m1p = side.dst_arrow();      // A' -> C'
    const Hom& m2p = apr.inj_side.top();    // C' -> D'
    const Hom& m3p = apr.apex_arrow;        // B' -> D'
    const Hom& bb = apr.inj_base.bottom();  // B -> B'
    const Hom& cc = side.top();             // C -> C'
    const Hom& dd = apr.inj_base.top();     // D -> D'

    // Effectiveness data of the base square and of its pushout.
    auto po = pushout(base.bottom(), base.src_arrow()); // p1: B->P, p0: C->P
    Hom t = induced_map(po, base.dst_arrow(), base.top());
    auto pop = pushout(m0p, m1p); // p1': B'->P', p0': C'->P'
    Hom tp = induced_map(pop, m3p, m2p);
    const Hom& p1p = pop.inj_left;
    const Hom& p0p = pop.inj_right;

    Hom p = induced_map(po, compose(p1p, bb), compose(p0p, cc)); // P -> P'

    // Universal test cocone on the derived span (p, t).
    auto amalg = pushout(p, t);
    const Hom& u = amalg.inj_left;  // P' -> Q
    const Hom& v = amalg.inj_right; // D  -> Q

    // The mediating map comes from the top-face pushout.
    Hom q = induced_map(apr.top_po, compose(u, p0p), v); // D' -> Q

    auto fail = [&](const std::string& eq) {
        return Verdict::fail({"coclan_chase", "equation failed: " + eq, q, std::nullopt});
    };
    if (!(compose(q, m2p) == compose(u, p0p))) return fail("q o m2' = u o p0'");
    if (!(compose(q, dd) == v)) return fail("q o d = v");
    if (!(compose(q, m3p) == compose(u, p1p))) return fail("q o m3' = u o p1'");
    if (!(compose(q, tp) == u)) return fail("q o t' = u");

    // q is unique because m2' and d jointly generate D'.
    Hom joint = make_hom(direct_sum(m1p.dst(), base.top().dst()), apr.top_po.apex,
                         m2p.matrix().hstack(dd.matrix()));
    if (!cokernel(joint).group.is_trivial()) return fail("m2' and d jointly epi");

    // The derived square (p, t, t', d) is a pushout: the comparison map
    // from the universal apex must be an isomorphism.
    if (!(compose(tp, p) == compose(dd, t))) return fail("t' o p = d o t");
    Hom s = induced_map(amalg, tp, dd);
    if (!is_iso(s))
        return Verdict::fail(
            {"coclan_chase", "derived square of the chase is not a pushout", s, std::nullopt});

    // Conclusion: the pushed-out square is again M-effective.
    Verdict eff = membership_verdict(m, tp);
    if (!eff.passed) {
        eff.witness->kind = "coclan_conclusion";
        return eff;
    }
    return Verdict::pass_with({"coclan_chase", "", tp, std::nullopt});
}

namespace {

Verdict check_mshriek_retract_instance(const MorphismClass& m, const ArrowMorphism& g,
                                       const ArrowMorphism& f, const ArrowMorphism& u,
                                       const ArrowMorphism& v, const ArrowMorphism& r,
                                       const ArrowMorphism& s) {
    if (!(compose(f, u) == compose(v, g)))
        throw MismatchError("mshriek retract: (u,v) is not a morphism g -> f");
    if (!(compose(g, r) == compose(s, f)))
        throw MismatchError("mshriek retract: (r,s) is not a morphism f -> g");
    if (!(compose(r, u) == identity_arrow_morphism(g.src_arrow())) ||
        !(compose(s, v) == identity_arrow_morphism(g.dst_arrow())))
        throw MismatchError("mshriek retract: (r,s)(u,v) is not the identity");
    if (!mshriek_contains(m, f)) return Verdict::vacuous_pass();
    Verdict mv = mshriek_verdict(m, g);
    if (mv.passed) return Verdict::pass();
    mv.witness->kind = "mshriek_retract";
    return mv;
}

} // namespace

Report check_mshriek_closure_suite(const MorphismClass& m, const GeneratorConfig& cfg) {
    cfg.validate();
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.seed = cfg.seed;
    rep.config = cfg;

    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        // (a) normality: isomorphisms in the arrow category are effective,
        // and effective composes with effective.
        {
            std::uint64_t ts = derive_seed(cfg.seed, 0xa0, trial);
            Rng rng(ts);
            ArrowMorphism iso = gen_iso_arrow_morphism(rng, cfg);
            rep.record("normal.iso_squares", ts, mshriek_verdict(m, iso));

            ArrowMorphism e1 = gen_effective_arrow_morphism(rng, cfg, m, gen_map_in_class(rng, cfg, m));
            ArrowMorphism e2 = gen_effective_arrow_morphism(rng, cfg, m, e1.dst_arrow());
            rep.record("normal.composition", ts, mshriek_verdict(m, compose(e2, e1)));
        }
        // (b) coherence in the arrow category.
        {
            std::uint64_t ts = derive_seed(cfg.seed, 0xb0, trial);
            Rng rng(ts);
            Hom x = gen_map_in_class(rng, cfg, m);
            ArrowMorphism first = rng.chance(0.5)
                                      ? gen_effective_arrow_morphism(rng, cfg, m, x)
                                      : gen_commuting_arrow_morphism(rng, cfg, x);
            ArrowMorphism second = gen_effective_arrow_morphism(rng, cfg, m, first.dst_arrow());
            ArrowMorphism whole = compose(second, first);
            if (!mshriek_contains(m, whole) || !mshriek_contains(m, second)) {
                rep.record("coherent", ts, Verdict::vacuous_pass());
            } else {
                Verdict mv = mshriek_verdict(m, first);
                if (!mv.passed) mv.witness->kind = "mshriek_coherence";
                rep.record("coherent", ts, mv);
            }
        }
        // (c) coclan: pushouts of effective squares are effective, with the
        // mediating-map equations replayed exactly.
        {
            std::uint64_t ts = derive_seed(cfg.seed, 0xc0, trial);
            Rng rng(ts);
            Hom x = gen_map_in_class(rng, cfg, m);
            ArrowMorphism base = gen_effective_arrow_morphism(rng, cfg, m, x);
            ArrowMorphism side = gen_commuting_arrow_morphism(rng, cfg, x);
            rep.record("coclan.chase", ts, check_coclan_chase_instance(m, base, side));
        }
        // (d) retract closure in the square category over the arrow category.
        {
            std::uint64_t ts = derive_seed(cfg.seed, 0xd0, trial);
            Rng rng(ts);
            ArrowMorphism g = gen_effective_arrow_morphism(rng, cfg, m, gen_map_in_class(rng, cfg, m));
            if (trial % 4 == 0) {
                // identity retract
                ArrowMorphism idm = identity_arrow_morphism(g.src_arrow());
                ArrowMorphism idd = identity_arrow_morphism(g.dst_arrow());
                rep.record("retract", ts, check_mshriek_retract_instance(m, g, g, idm, idd, idm, idd));
            } else {
                ArrowMorphism h = gen_effective_arrow_morphism(rng, cfg, m, gen_map_in_class(rng, cfg, m));
                ArrowMorphism f = direct_sum_arrow_morphism(g, h);
                auto [u, v, r, s] = arrow_summand_retract(g, h);
                rep.record("retract", ts, check_mshriek_retract_instance(m, g, f, u, v, r, s));
            }
        }
    }

    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

} // namespace effsq
