#include "effsq/generator.hpp"

#include "effsq/errors.hpp"
#include "effsq/normal_forms.hpp"

namespace effsq {

namespace {

// Higher-dimensional structures multiply generator counts through nested
// pushouts; shrink the base presentations so the exact solvers stay fast.
GeneratorConfig shrunk(const GeneratorConfig& cfg, std::size_t level) {
    GeneratorConfig c = cfg;
    if (level >= 3) {
        c.max_generators = std::max<std::size_t>(1, std::min<std::size_t>(cfg.max_generators, 2));
        c.max_relations = std::min<std::size_t>(cfg.max_relations, 2);
        c.entry_bound = std::min<long>(cfg.entry_bound, 3);
    }
    return c;
}

struct CanonicalCoords {
    IntMatrix vt;     // V^T: canonical coords y = V^T x
    IntMatrix vt_inv; // (V^T)^{-1}
    std::vector<Int> orders; // per coordinate: 0 free, 1 dead, >= 2 torsion
};

CanonicalCoords coords_of(const FpAbGroup& g) {
    auto snf = smith_normal_form(g.relations());
    CanonicalCoords cc;
    cc.vt = snf.V.transposed();
    cc.vt_inv = inverse_unimodular(cc.vt);
    cc.orders.assign(g.num_generators(), Int(0));
    const std::size_t n = std::min(g.relations().rows(), g.num_generators());
    for (std::size_t i = 0; i < n; ++i) cc.orders[i] = snf.D.at(i, i);
    return cc;
}

} // namespace

FpAbGroup gen_group(Rng& rng, const GeneratorConfig& cfg, bool force_finite) {
    const std::size_t n = static_cast<std::size_t>(rng.pick(0, static_cast<long>(cfg.max_generators)));
    const std::size_t r = static_cast<std::size_t>(rng.pick(0, static_cast<long>(cfg.max_relations)));
    IntMatrix rel(r, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rel.at(i, j) = rng.int_in(-cfg.entry_bound, cfg.entry_bound);
    if (force_finite) {
        IntMatrix diag(n, n);
        for (std::size_t i = 0; i < n; ++i) diag.at(i, i) = rng.int_in(1, 4);
        rel = rel.vstack(diag);
    }
    return make_group(n, rel);
}

IntMatrix gen_unimodular(Rng& rng, std::size_t n) {
    IntMatrix u = IntMatrix::identity(n);
    if (n < 2) return u;
    const std::size_t ops = n + 2;
    for (std::size_t k = 0; k < ops; ++k) {
        std::size_t i = rng.index(n), j = rng.index(n);
        switch (rng.index(3)) {
            case 0:
                if (i != j) u.add_row_multiple(i, j, rng.int_in(-1, 1));
                break;
            case 1:
                u.swap_rows(i, j);
                break;
            default:
                if (i != j) u.add_col_multiple(i, j, rng.int_in(-1, 1));
                break;
        }
    }
    return u;
}

IsoResult gen_iso(Rng& rng, const GeneratorConfig& cfg, const FpAbGroup& src) {
    (void)cfg;
    const std::size_t n = src.num_generators();
    IntMatrix q = gen_unimodular(rng, n);
    // x -> Qx turns the relation lattice N into QN, presented by R Q^T.
    FpAbGroup dst = make_group(n, src.relations() * q.transposed());
    IsoResult res;
    res.map = make_hom(src, dst, q);
    res.inverse = make_hom(dst, src, inverse_unimodular(q));
    res.dst = std::move(dst);
    if (!is_iso(res.map)) throw Error("gen_iso: generator bug, map is not an isomorphism");
    return res;
}

Hom gen_hom(Rng& rng, const GeneratorConfig& cfg, const FpAbGroup& src, const FpAbGroup& dst) {
    CanonicalCoords cs = coords_of(src);
    CanonicalCoords cd = coords_of(dst);
    const std::size_t ns = src.num_generators(), nd = dst.num_generators();
    IntMatrix w(nd, ns);
    for (std::size_t j = 0; j < nd; ++j) {
        for (std::size_t i = 0; i < ns; ++i) {
            const Int& c = cs.orders[i];
            const Int& e = cd.orders[j];
            if (c == 0) {
                w.at(j, i) = rng.int_in(-cfg.entry_bound, cfg.entry_bound);
            } else if (e == 0) {
                w.at(j, i) = 0; // torsion cannot map into a free coordinate
            } else {
                Int step = e / gcd_int(c, e);
                w.at(j, i) = step * rng.int_in(-2, 2);
            }
        }
    }
    return make_hom(src, dst, cd.vt_inv * w * cs.vt);
}

Hom gen_mono(Rng& rng, const GeneratorConfig& cfg, const FpAbGroup& src) {
    if (rng.chance(cfg.quotas.identity_edges)) return identity_hom(src);
    GeneratorConfig small = cfg;
    small.max_generators = std::min<std::size_t>(cfg.max_generators, 2);
    FpAbGroup w = gen_group(rng, small, src.is_finite() && rng.chance(0.7));
    FpAbGroup inter = direct_sum(src, w);
    Hom m = compose(gen_iso(rng, cfg, inter).map, inclusion_first(src, w));
    if (!is_mono(m)) throw Error("gen_mono: generator bug, map is not mono");
    return m;
}

Hom gen_nonsplit_mono(Rng& rng, const GeneratorConfig& cfg, const FpAbGroup& src) {
    CanonicalCoords cs = coords_of(src);
    const std::size_t ns = src.num_generators();
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < ns; ++i)
        if (cs.orders[i] != 1) live.push_back(i);

    const std::size_t nl = live.size();
    IntMatrix rel(nl, nl);
    IntMatrix w(nl, ns);
    for (std::size_t r = 0; r < nl; ++r) {
        const Int& c = cs.orders[live[r]];
        Int k = rng.int_in(1, 3);
        if (c == 0) {
            w.at(r, live[r]) = k; // x k on a free coordinate
        } else {
            rel.at(r, r) = c * k; // Z/c -> Z/ck, 1 -> k
            w.at(r, live[r]) = k;
        }
    }
    FpAbGroup mid = make_group(nl, rel);
    Hom m = make_hom(src, mid, w * cs.vt);
    m = compose(gen_iso(rng, cfg, mid).map, m);
    if (!is_mono(m)) throw Error("gen_nonsplit_mono: generator bug, map is not mono");
    return m;
}

Hom gen_map_in_class(Rng& rng, const GeneratorConfig& cfg, const MorphismClass& m,
                     const FpAbGroup& src, bool force_finite) {
    switch (m.kind) {
        case ClassKind::AllMorphisms: {
            if (rng.chance(cfg.quotas.identity_edges)) return identity_hom(src);
            FpAbGroup dst = gen_group(rng, cfg, force_finite);
            return gen_hom(rng, cfg, src, dst);
        }
        case ClassKind::Monos:
            return rng.chance(0.5) ? gen_mono(rng, cfg, src) : gen_nonsplit_mono(rng, cfg, src);
        case ClassKind::PureMonos:
        case ClassKind::SplitMonos:
            return gen_mono(rng, cfg, src);
        case ClassKind::Isos:
            if (rng.chance(cfg.quotas.identity_edges)) return identity_hom(src);
            return gen_iso(rng, cfg, src).map;
    }
    return identity_hom(src);
}

Hom gen_map_in_class(Rng& rng, const GeneratorConfig& cfg, const MorphismClass& m) {
    bool finite = rng.chance(cfg.quotas.finite_only);
    FpAbGroup src = rng.chance(cfg.quotas.zero_source) ? trivial_group() : gen_group(rng, cfg, finite);
    return gen_map_in_class(rng, cfg, m, src, finite);
}

Span gen_span(Rng& rng, const GeneratorConfig& cfg) {
    bool finite = rng.chance(cfg.quotas.finite_only);
    FpAbGroup a = rng.chance(cfg.quotas.zero_source) ? trivial_group() : gen_group(rng, cfg, finite);
    Hom f = rng.chance(cfg.quotas.identity_edges) ? identity_hom(a)
                                                  : gen_hom(rng, cfg, a, gen_group(rng, cfg, finite));
    Hom g = gen_hom(rng, cfg, a, gen_group(rng, cfg, finite));
    return make_span(std::move(f), std::move(g));
}

Span gen_span_in_class(Rng& rng, const GeneratorConfig& cfg, const MorphismClass& m) {
    bool finite = rng.chance(cfg.quotas.finite_only);
    FpAbGroup a = rng.chance(cfg.quotas.zero_source) ? trivial_group() : gen_group(rng, cfg, finite);
    Hom f = gen_map_in_class(rng, cfg, m, a, finite);
    Hom g = gen_map_in_class(rng, cfg, m, a, finite);
    return make_span(std::move(f), std::move(g));
}

Square gen_effective_square(Rng& rng, const GeneratorConfig& cfg, const MorphismClass& m) {
    Square sq = complete_span(gen_span_in_class(rng, cfg, m));
    if (rng.chance(0.5)) sq = post_extend(sq, gen_map_in_class(rng, cfg, m, sq.corner_d(), false));
    return sq;
}

Square gen_square(Rng& rng, const GeneratorConfig& cfg, const MorphismClass& m) {
    if (rng.chance(0.6)) return gen_effective_square(rng, cfg, m);
    Square sq = complete_span(gen_span_in_class(rng, cfg, m));
    FpAbGroup e = gen_group(rng, cfg, false);
    return post_extend(sq, gen_hom(rng, cfg, sq.corner_d(), e));
}

ArrowMorphism gen_iso_arrow_morphism(Rng& rng, const GeneratorConfig& cfg) {
    FpAbGroup a = gen_group(rng, cfg, false);
    FpAbGroup b = gen_group(rng, cfg, false);
    Hom x = gen_hom(rng, cfg, a, b);
    IsoResult i1 = gen_iso(rng, cfg, a);
    IsoResult i2 = gen_iso(rng, cfg, b);
    Hom y = compose(i2.map, compose(x, i1.inverse));
    return make_arrow_morphism(x, y, i1.map, i2.map);
}

ArrowMorphism gen_effective_arrow_morphism(Rng& rng, const GeneratorConfig& cfg,
                                           const MorphismClass& m, const Hom& from_arrow) {
    Hom leg = gen_map_in_class(rng, cfg, m, from_arrow.src(), false);
    auto po = pushout(leg, from_arrow);
    ArrowMorphism am = make_arrow_morphism(from_arrow, po.inj_left, leg, po.inj_right);
    if (rng.chance(0.4)) {
        Hom leg2 = gen_map_in_class(rng, cfg, m, am.dst_arrow().src(), false);
        auto po2 = pushout(leg2, am.dst_arrow());
        ArrowMorphism step =
            make_arrow_morphism(am.dst_arrow(), po2.inj_left, leg2, po2.inj_right);
        am = compose(step, am);
    }
    return am;
}

ArrowMorphism gen_commuting_arrow_morphism(Rng& rng, const GeneratorConfig& cfg,
                                           const Hom& from_arrow) {
    for (int attempt = 0; attempt < 6; ++attempt) {
        FpAbGroup b1 = gen_group(rng, cfg, false);
        FpAbGroup b2 = gen_group(rng, cfg, false);
        Hom bottom = gen_hom(rng, cfg, from_arrow.src(), b1);
        Hom dst_arrow = gen_hom(rng, cfg, b1, b2);
        auto top = solve_factorization(from_arrow, compose(dst_arrow, bottom), FactorSide::Left);
        if (top) return make_arrow_morphism(from_arrow, dst_arrow, bottom, *top);
    }
    // Always-commuting fallback: zero components.
    FpAbGroup b1 = gen_group(rng, cfg, false);
    FpAbGroup b2 = gen_group(rng, cfg, false);
    Hom dst_arrow = gen_hom(rng, cfg, b1, b2);
    return make_arrow_morphism(from_arrow, dst_arrow, zero_hom(from_arrow.src(), b1),
                               zero_hom(from_arrow.dst(), b2));
}

ArrowMorphism direct_sum_arrow_morphism(const ArrowMorphism& g, const ArrowMorphism& h) {
    return make_arrow_morphism(direct_sum_hom(g.src_arrow(), h.src_arrow()),
                               direct_sum_hom(g.dst_arrow(), h.dst_arrow()),
                               direct_sum_hom(g.bottom(), h.bottom()),
                               direct_sum_hom(g.top(), h.top()));
}

std::tuple<ArrowMorphism, ArrowMorphism, ArrowMorphism, ArrowMorphism>
arrow_summand_retract(const ArrowMorphism& g, const ArrowMorphism& h) {
    ArrowMorphism f = direct_sum_arrow_morphism(g, h);
    ArrowMorphism u = make_arrow_morphism(
        g.src_arrow(), f.src_arrow(), inclusion_first(g.src_arrow().src(), h.src_arrow().src()),
        inclusion_first(g.src_arrow().dst(), h.src_arrow().dst()));
    ArrowMorphism v = make_arrow_morphism(
        g.dst_arrow(), f.dst_arrow(), inclusion_first(g.dst_arrow().src(), h.dst_arrow().src()),
        inclusion_first(g.dst_arrow().dst(), h.dst_arrow().dst()));
    ArrowMorphism r = make_arrow_morphism(
        f.src_arrow(), g.src_arrow(), projection_first(g.src_arrow().src(), h.src_arrow().src()),
        projection_first(g.src_arrow().dst(), h.src_arrow().dst()));
    ArrowMorphism s = make_arrow_morphism(
        f.dst_arrow(), g.dst_arrow(), projection_first(g.dst_arrow().src(), h.dst_arrow().src()),
        projection_first(g.dst_arrow().dst(), h.dst_arrow().dst()));
    return {u, v, r, s};
}

Cube gen_cube(Rng& rng, const GeneratorConfig& cfg, const MorphismClass& m) {
    GeneratorConfig c = shrunk(cfg, 3);
    bool finite = rng.chance(c.quotas.finite_only);
    FpAbGroup a1 = rng.chance(c.quotas.zero_source) ? trivial_group() : gen_group(rng, c, finite);
    Hom a = gen_map_in_class(rng, c, m, a1, finite);
    ArrowMorphism bottom = gen_effective_arrow_morphism(rng, c, m, a);
    ArrowMorphism front = gen_effective_arrow_morphism(rng, c, m, a);
    Cube cu = cube_from_arrow_span(bottom, front);
    if (rng.chance(0.5)) {
        ArrowMorphism step = gen_effective_arrow_morphism(rng, c, m, cu.d());
        cu = make_cube(cu.a(), cu.b(), cu.c(), step.dst_arrow(), cu.f0(), cu.f1(), cu.g0(),
                       cu.g1(), compose(step.bottom(), cu.h0()), compose(step.top(), cu.h1()),
                       compose(step.bottom(), cu.f0p()), compose(step.top(), cu.f1p()));
    }
    return cu;
}

Cube gen_near_miss_cube(Rng& rng, const GeneratorConfig& cfg) {
    if (rng.chance(0.5)) {
        // All four faces effective for monos, derived square fails: the
        // fold counterexample one dimension up.
        FpAbGroup f = free_group(static_cast<std::size_t>(rng.pick(1, 2)));
        IntMatrix mul = IntMatrix::identity(f.num_generators());
        Int k = rng.int_in(2, 4);
        for (std::size_t i = 0; i < mul.rows(); ++i) mul.at(i, i) = k;
        Hom arrow = make_hom(f, f, mul);
        FpAbGroup z = trivial_group();
        Hom zarrow = identity_hom(z);
        Hom zf = zero_hom(z, f);
        Hom idf = identity_hom(f);
        return make_cube(zarrow, arrow, arrow, arrow, zf, zf, zf, zf, idf, idf, idf, idf);
    }
    // Corner-broken cube: collapse the final corner so a face loses
    // effectiveness.
    Cube cu = gen_cube(rng, cfg, {ClassKind::Monos});
    FpAbGroup zero = trivial_group();
    Hom w = zero_hom(cu.d().dst(), zero);
    return make_cube(cu.a(), cu.b(), cu.c(), compose(w, cu.d()), cu.f0(), cu.f1(), cu.g0(),
                     cu.g1(), cu.h0(), compose(w, cu.h1()), cu.f0p(), compose(w, cu.f1p()));
}

NCube gen_independent_ncube(Rng& rng, const GeneratorConfig& cfg, std::size_t n,
                            const MorphismClass& m) {
    GeneratorConfig c = shrunk(cfg, n + 1);
    if (n == 1) return make_ncube(gen_map_in_class(rng, c, m));
    NCube leg1 = gen_independent_ncube(rng, cfg, n - 1, m);
    NCube leg2 = gen_sibling_ncube(rng, cfg, leg1, m);
    NCube completed = complete_ncube_span(leg1, leg2);
    if (n <= 3 && rng.chance(0.35)) {
        NCube sib = gen_sibling_ncube(rng, cfg, completed.dst(), m);
        NCube right = complete_ncube_span(completed.dst(), sib);
        completed = compose_ncube(right, completed);
    }
    return completed;
}

NCube gen_sibling_ncube(Rng& rng, const GeneratorConfig& cfg, const NCube& x,
                        const MorphismClass& m) {
    GeneratorConfig c = shrunk(cfg, x.dim() + 2);
    if (x.dim() == 1) return make_ncube(gen_map_in_class(rng, c, m, x.arrow().src(), false));
    NCube sib = gen_sibling_ncube(rng, cfg, x.src(), m);
    return complete_ncube_span(x.src(), sib);
}

NCube gen_extended_completion(Rng& rng, const GeneratorConfig& cfg, const NCube& comp,
                              const MorphismClass& m) {
    const std::size_t n = comp.dim();
    GeneratorConfig c = shrunk(cfg, n + 1);
    if (n == 2) {
        const FpAbGroup& corner = comp.dst().arrow().dst();
        Hom ext = gen_map_in_class(rng, c, m, corner, false);
        NCube new_dst = make_ncube(compose(ext, comp.dst().arrow()));
        return make_ncube(comp.src(), std::move(new_dst),
                          {comp.connect()[0], compose(ext, comp.connect()[1])});
    }
    NCube corner = comp.dst().dst();
    NCube ext = complete_ncube_span(corner, gen_sibling_ncube(rng, cfg, corner, m));
    NCube new_dst = compose_ncube(ext, comp.dst());
    const std::size_t half = comp.connect().size() / 2;
    std::vector<Hom> conn;
    for (std::size_t v = 0; v < half; ++v) conn.push_back(comp.connect()[v]);
    for (std::size_t v = 0; v < half; ++v)
        conn.push_back(compose(ext.connect()[v], comp.connect()[half + v]));
    return make_ncube(comp.src(), std::move(new_dst), std::move(conn));
}

} // namespace effsq
