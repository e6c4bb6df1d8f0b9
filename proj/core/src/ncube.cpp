#include "effsq/ncube.hpp"

#include <chrono>
#include <functional>

#include "effsq/errors.hpp"
#include "effsq/generator.hpp"

namespace effsq {

const FpAbGroup& NCube::vertex(std::size_t i) const {
    if (dim_ == 1) return i == 0 ? arrow_.src() : arrow_.dst();
    const std::size_t half = vertex_count() / 2;
    return i < half ? src_->vertex(i) : dst_->vertex(i - half);
}

std::vector<NCube::Edge> NCube::edges() const {
    if (dim_ == 1) return {{0, 1, arrow_}};
    const std::size_t half = vertex_count() / 2;
    std::vector<Edge> out;
    for (const auto& e : src_->edges()) out.push_back(e);
    for (const auto& e : dst_->edges()) out.push_back({e.tail + half, e.head + half, e.hom});
    for (std::size_t v = 0; v < half; ++v) out.push_back({v, v + half, connect_[v]});
    return out;
}

NCube make_ncube(Hom arrow) {
    NCube c;
    c.dim_ = 1;
    c.arrow_ = std::move(arrow);
    return c;
}

NCube make_ncube(NCube src, NCube dst, std::vector<Hom> connect) {
    if (src.dim() == 0 || src.dim() != dst.dim())
        throw MismatchError("make_ncube: source and target cubes must have equal dimension");
    const std::size_t half = src.vertex_count();
    if (connect.size() != half)
        throw MismatchError("make_ncube: expected " + std::to_string(half) + " connecting maps");
    for (std::size_t v = 0; v < half; ++v)
        if (!(connect[v].src() == src.vertex(v)) || !(connect[v].dst() == dst.vertex(v)))
            throw MismatchError("make_ncube: connector endpoints do not match the vertices");
    auto se = src.edges();
    auto de = dst.edges();
    for (std::size_t i = 0; i < se.size(); ++i)
        if (!(compose(connect[se[i].head], se[i].hom) == compose(de[i].hom, connect[se[i].tail])))
            throw MismatchError("make_ncube: connecting layer is not natural (edge " +
                                std::to_string(i) + ")");
    NCube c;
    c.dim_ = src.dim() + 1;
    c.src_ = std::make_shared<const NCube>(std::move(src));
    c.dst_ = std::make_shared<const NCube>(std::move(dst));
    c.connect_ = std::move(connect);
    return c;
}

bool ncube_equal(const NCube& x, const NCube& y) {
    if (x.dim() != y.dim()) return false;
    if (x.dim() == 1) return x.arrow() == y.arrow();
    if (!ncube_equal(x.src(), y.src()) || !ncube_equal(x.dst(), y.dst())) return false;
    for (std::size_t v = 0; v < x.connect().size(); ++v)
        if (!(x.connect()[v] == y.connect()[v])) return false;
    return true;
}

NCube ncube_from_square(const Square& sq) {
    return make_ncube(make_ncube(sq.f()), make_ncube(sq.k()), {sq.g(), sq.h()});
}

Square square_from_ncube(const NCube& c) {
    if (c.dim() != 2) throw MismatchError("square_from_ncube: dimension must be 2");
    return make_square(c.src().arrow(), c.connect()[0], c.connect()[1], c.dst().arrow());
}

NCube ncube_from_cube(const Cube& cu) {
    NCube bottom = make_ncube(make_ncube(cu.a()), make_ncube(cu.b()), {cu.f0(), cu.f1()});
    NCube top = make_ncube(make_ncube(cu.c()), make_ncube(cu.d()), {cu.f0p(), cu.f1p()});
    return make_ncube(std::move(bottom), std::move(top), {cu.g0(), cu.g1(), cu.h0(), cu.h1()});
}

NCube front_face(const NCube& c) {
    if (c.dim() < 2) throw MismatchError("front_face: dimension must be >= 2");
    if (c.dim() == 2) return make_ncube(c.connect()[0]);
    const std::size_t q = c.connect().size() / 2;
    std::vector<Hom> conn(c.connect().begin(), c.connect().begin() + q);
    return make_ncube(c.src().src(), c.dst().src(), std::move(conn));
}

NCube rear_face(const NCube& c) {
    if (c.dim() < 2) throw MismatchError("rear_face: dimension must be >= 2");
    if (c.dim() == 2) return make_ncube(c.connect()[1]);
    const std::size_t q = c.connect().size() / 2;
    std::vector<Hom> conn(c.connect().begin() + q, c.connect().end());
    return make_ncube(c.src().dst(), c.dst().dst(), std::move(conn));
}

NCube transpose_ncube(const NCube& c) {
    if (c.dim() < 2) throw MismatchError("transpose_ncube: dimension must be >= 2");
    std::vector<Hom> conn;
    if (c.dim() == 2) {
        conn = {c.src().arrow(), c.dst().arrow()};
    } else {
        conn = c.src().connect();
        conn.insert(conn.end(), c.dst().connect().begin(), c.dst().connect().end());
    }
    return make_ncube(front_face(c), rear_face(c), std::move(conn));
}

NCube compose_ncube(const NCube& second, const NCube& first) {
    if (first.dim() != second.dim())
        throw MismatchError("compose_ncube: dimensions differ");
    if (first.dim() == 1) return make_ncube(compose(second.arrow(), first.arrow()));
    if (!ncube_equal(first.dst(), second.src()))
        throw MismatchError("compose_ncube: middle cubes do not match");
    std::vector<Hom> conn;
    conn.reserve(first.connect().size());
    for (std::size_t v = 0; v < first.connect().size(); ++v)
        conn.push_back(compose(second.connect()[v], first.connect()[v]));
    return make_ncube(first.src(), second.dst(), std::move(conn));
}

NCube hcompose_ncube(const NCube& left, const NCube& right) { return compose_ncube(right, left); }

NCube vcompose_ncube(const NCube& bottom, const NCube& top) {
    return transpose_ncube(compose_ncube(transpose_ncube(top), transpose_ncube(bottom)));
}

namespace {

std::size_t edge_count(std::size_t dim) {
    return dim == 1 ? 1 : 2 * edge_count(dim - 1) + (std::size_t(1) << (dim - 1));
}

// Builds a cube with the structural shape of `tpl` out of a flat list of
// edge homs given in tpl's structural edge order.
NCube rebuild_like(const NCube& tpl, const std::vector<Hom>& homs, std::size_t offset) {
    if (tpl.dim() == 1) return make_ncube(homs[offset]);
    const std::size_t e = edge_count(tpl.dim() - 1);
    NCube s = rebuild_like(tpl.src(), homs, offset);
    NCube d = rebuild_like(tpl.dst(), homs, offset + e);
    std::vector<Hom> conn(homs.begin() + offset + 2 * e,
                          homs.begin() + offset + 2 * e + tpl.connect().size());
    return make_ncube(std::move(s), std::move(d), std::move(conn));
}

std::vector<Hom> connectors_of(const NCube& c) {
    return c.dim() == 1 ? std::vector<Hom>{c.arrow()} : c.connect();
}

} // namespace

NCube complete_ncube_span(const NCube& e1, const NCube& e2) {
    if (e1.dim() != e2.dim()) throw MismatchError("complete_ncube_span: dimensions differ");
    if (e1.dim() == 1) {
        if (!(e1.arrow().src() == e2.arrow().src()))
            throw MismatchError("complete_ncube_span: legs have different sources");
        auto po = pushout(e1.arrow(), e2.arrow());
        return make_ncube(e1, make_ncube(po.inj_right), {e2.arrow(), po.inj_left});
    }
    if (!ncube_equal(e1.src(), e2.src()))
        throw MismatchError("complete_ncube_span: legs have different source cubes");

    const NCube& a = e1.src();
    const NCube& b = e1.dst();
    const NCube& c = e2.dst();
    const std::size_t nv = a.vertex_count();

    std::vector<PushoutResult> po;
    po.reserve(nv);
    for (std::size_t v = 0; v < nv; ++v) po.push_back(pushout(e1.connect()[v], e2.connect()[v]));

    // Apex cube: shaped like b, with functorially induced edges.
    auto be = b.edges();
    auto ce = c.edges();
    std::vector<Hom> apex_edges;
    apex_edges.reserve(be.size());
    for (std::size_t i = 0; i < be.size(); ++i) {
        const std::size_t u = be[i].tail, v = be[i].head;
        apex_edges.push_back(induced_map(po[u], compose(po[v].inj_left, be[i].hom),
                                         compose(po[v].inj_right, ce[i].hom)));
    }
    NCube apex = rebuild_like(b, apex_edges, 0);

    std::vector<Hom> top_conn, bottom_conn;
    for (std::size_t v = 0; v < nv; ++v) top_conn.push_back(po[v].inj_right); // c_v -> P_v
    NCube top_leg = make_ncube(c, std::move(apex), std::move(top_conn));

    std::vector<Hom> conn = e2.connect();
    for (std::size_t v = 0; v < nv; ++v) conn.push_back(po[v].inj_left); // b_v -> P_v
    return make_ncube(e1, std::move(top_leg), std::move(conn));
}

namespace {

struct SliceData {
    PushoutResult left_po;  // pushout of the src-component span
    PushoutResult right_po; // pushout of the dst-component span
    Hom q;                  // induced: P -> D1
    Hom q_prime;            // induced: P' -> D2
    Hom p;                  // induced: P -> P'
};

// Effectiveness data of a 3-cube, shared by derived_ncube and the
// connector construction.
SliceData slice_data(const NCube& c) {
    const NCube& S = c.src();
    const NCube& T = c.dst();
    const Hom& f0 = S.connect()[0];
    const Hom& f1 = S.connect()[1];
    const Hom& g0 = c.connect()[0];
    const Hom& g1 = c.connect()[1];
    const Hom& h0 = c.connect()[2];
    const Hom& h1 = c.connect()[3];
    const Hom& f0p = T.connect()[0];
    const Hom& f1p = T.connect()[1];

    SliceData d;
    d.left_po = pushout(f0, g0);
    d.right_po = pushout(f1, g1);
    d.q = induced_map(d.left_po, h0, f0p);
    d.q_prime = induced_map(d.right_po, h1, f1p);
    d.p = induced_map(d.left_po, compose(d.right_po.inj_left, S.dst().arrow()),
                      compose(d.right_po.inj_right, T.src().arrow()));
    return d;
}

// Connectors between derived structures, induced by a natural family
// lambda: vertices(x) -> vertices(y).
std::vector<Hom> derived_connector(const NCube& x, const NCube& y, const std::vector<Hom>& lam) {
    if (x.dim() == 3) {
        SliceData dx = slice_data(x);
        SliceData dy = slice_data(y);
        Hom pmap = induced_map(dx.left_po, compose(dy.left_po.inj_left, lam[2]),
                               compose(dy.left_po.inj_right, lam[4]));
        Hom pmap_prime = induced_map(dx.right_po, compose(dy.right_po.inj_left, lam[3]),
                                     compose(dy.right_po.inj_right, lam[5]));
        return {pmap, pmap_prime, lam[6], lam[7]};
    }
    const std::size_t half = x.src().vertex_count();
    std::vector<Hom> lsrc(lam.begin(), lam.begin() + half);
    std::vector<Hom> ldst(lam.begin() + half, lam.end());
    std::vector<Hom> out = derived_connector(x.src(), y.src(), lsrc);
    std::vector<Hom> rest = derived_connector(x.dst(), y.dst(), ldst);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

} // namespace

NCube derived_ncube(const NCube& c) {
    if (c.dim() < 3) throw MismatchError("derived_ncube: dimension must be >= 3");
    if (c.dim() == 3) {
        SliceData d = slice_data(c);
        return make_ncube(make_ncube(d.p), make_ncube(c.dst().dst().arrow()), {d.q, d.q_prime});
    }
    NCube dsrc = derived_ncube(c.src());
    NCube ddst = derived_ncube(c.dst());
    return make_ncube(std::move(dsrc), std::move(ddst),
                      derived_connector(c.src(), c.dst(), c.connect()));
}

Verdict ncube_independent(std::size_t n, const NCube& c, const MorphismClass& m,
                          std::size_t max_dim) {
    if (n == 0 || c.dim() != n)
        throw MismatchError("ncube_independent: dimension does not match the cube");
    if (n > max_dim)
        throw DimensionError("ncube_independent: dimension " + std::to_string(n) +
                             " exceeds the configured cap " + std::to_string(max_dim));
    if (n == 1) return membership_verdict(m, c.arrow());
    if (n == 2) return is_effective(square_from_ncube(c), m);

    struct Face {
        const char* name;
        NCube cube;
    };
    const Face faces[] = {{"bottom", c.src()},
                          {"top", c.dst()},
                          {"front", front_face(c)},
                          {"rear", rear_face(c)}};
    for (const auto& face : faces) {
        Verdict v = ncube_independent(n - 1, face.cube, m, max_dim);
        if (!v.passed) {
            v.witness->detail = std::string(face.name) + " face at dimension " +
                                std::to_string(n) + ": " + v.witness->detail;
            return v;
        }
    }
    Verdict v = ncube_independent(n - 1, derived_ncube(c), m, max_dim);
    if (!v.passed) {
        v.witness->detail =
            "derived cube at dimension " + std::to_string(n) + ": " + v.witness->detail;
        return v;
    }
    return v;
}

namespace {

// The induced morphism from the componentwise pushout of the span
// (e1, e2) to the final corner of a completion `comp`.
NCube span_induced(const NCube& e1, const NCube& e2, const NCube& comp) {
    if (e1.dim() == 1) {
        auto po = pushout(e1.arrow(), e2.arrow());
        return make_ncube(induced_map(po, comp.connect()[1], comp.dst().arrow()));
    }
    const NCube& a = e1.src();
    const NCube& b = e1.dst();
    const NCube& c = e2.dst();
    const std::size_t nv = a.vertex_count();
    std::vector<PushoutResult> po;
    for (std::size_t v = 0; v < nv; ++v) po.push_back(pushout(e1.connect()[v], e2.connect()[v]));

    auto be = b.edges();
    auto ce = c.edges();
    std::vector<Hom> apex_edges;
    for (std::size_t i = 0; i < be.size(); ++i) {
        const std::size_t u = be[i].tail, v = be[i].head;
        apex_edges.push_back(induced_map(po[u], compose(po[v].inj_left, be[i].hom),
                                         compose(po[v].inj_right, ce[i].hom)));
    }
    NCube apex = rebuild_like(b, apex_edges, 0);

    const NCube corner = comp.dst().dst(); // the D-cube of the completion
    std::vector<Hom> conn;
    for (std::size_t v = 0; v < nv; ++v)
        conn.push_back(induced_map(po[v], comp.connect()[nv + v], comp.dst().connect()[v]));
    return make_ncube(std::move(apex), corner, std::move(conn));
}

} // namespace

NCubeAmalgamResult ncube_amalgamate(const NCube& e1, const NCube& e2, const NCube& comp1,
                                    const NCube& comp2, const MorphismClass& m,
                                    std::size_t max_dim) {
    const std::size_t n = e1.dim() + 1;
    if (comp1.dim() != n || comp2.dim() != n)
        throw MismatchError("ncube_amalgamate: completions have the wrong dimension");
    if (!ncube_equal(comp1.src(), e1) || !ncube_equal(comp2.src(), e1) ||
        !ncube_equal(front_face(comp1), e2) || !ncube_equal(front_face(comp2), e2))
        throw MismatchError("ncube_amalgamate: inputs are not completions of the span");
    if (!ncube_independent(n, comp1, m, max_dim).passed)
        throw MismatchError("ncube_amalgamate: first completion is not independent");
    if (!ncube_independent(n, comp2, m, max_dim).passed)
        throw MismatchError("ncube_amalgamate: second completion is not independent");

    NCube t1 = span_induced(e1, e2, comp1);
    NCube t2 = span_induced(e1, e2, comp2);
    NCube amal = complete_ncube_span(t1, t2);
    NCube leg1 = rear_face(amal); // corner(comp1) -> E
    NCube leg2 = amal.dst();      // corner(comp2) -> E

    NCubeAmalgamResult res{Verdict::pass(), amal};
    NCube via1_b = compose_ncube(leg1, rear_face(comp1));
    NCube via2_b = compose_ncube(leg2, rear_face(comp2));
    if (!ncube_equal(via1_b, via2_b)) {
        res.verdict = Verdict::fail({"ncube_amalgam", "legs disagree on the B side", std::nullopt, std::nullopt});
        return res;
    }
    NCube via1_c = compose_ncube(leg1, comp1.dst());
    NCube via2_c = compose_ncube(leg2, comp2.dst());
    if (!ncube_equal(via1_c, via2_c)) {
        res.verdict = Verdict::fail({"ncube_amalgam", "legs disagree on the C side", std::nullopt, std::nullopt});
        return res;
    }

    std::vector<Hom> conn = connectors_of(e2);
    for (const Hom& h : connectors_of(via1_b)) conn.push_back(h);
    NCube outer = make_ncube(e1, via1_c, std::move(conn));
    Verdict v = ncube_independent(n, outer, m, max_dim);
    if (!v.passed) {
        v.witness->detail = "outer amalgam completion: " + v.witness->detail;
        res.verdict = std::move(v);
        return res;
    }
    res.verdict = Verdict::pass();
    return res;
}

Report excellence_probe(std::size_t max_n, const MorphismClass& m, const GeneratorConfig& cfg) {
    cfg.validate();
    if (max_n < 2) throw MismatchError("excellence_probe: max_n must be at least 2");
    if (max_n > cfg.max_dimension)
        throw DimensionError("excellence_probe: max_n exceeds the configured dimension cap");

    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.seed = cfg.seed;
    rep.config = cfg;

    for (std::size_t n = 2; n <= max_n; ++n) {
        const std::size_t trials = n >= 4 ? std::min<std::size_t>(cfg.trials, 25) : cfg.trials;
        const std::string tag = "n" + std::to_string(n) + ".";
        for (std::size_t trial = 0; trial < trials; ++trial) {
            // existence: spans of independent cubes complete to independent cubes
            {
                std::uint64_t ts = derive_seed(cfg.seed, 0xe0 + n * 8 + 0, trial);
                Rng rng(ts);
                NCube leg1 = gen_independent_ncube(rng, cfg, n - 1, m);
                NCube leg2 = gen_sibling_ncube(rng, cfg, leg1, m);
                NCube completed = complete_ncube_span(leg1, leg2);
                rep.record(tag + "existence", ts, ncube_independent(n, completed, m, cfg.max_dimension));
            }
            // symmetry: independence agrees across the transpose
            {
                std::uint64_t ts = derive_seed(cfg.seed, 0xe0 + n * 8 + 1, trial);
                Rng rng(ts);
                NCube c = (n == 3 && trial % 5 == 4)
                              ? ncube_from_cube(gen_near_miss_cube(rng, cfg))
                              : gen_independent_ncube(rng, cfg, n, m);
                bool lhs = ncube_independent(n, c, m, cfg.max_dimension).passed;
                bool rhs = ncube_independent(n, transpose_ncube(c), m, cfg.max_dimension).passed;
                rep.record(tag + "symmetry", ts,
                           lhs == rhs ? Verdict::pass()
                                      : Verdict::fail({"transpose", "independence differs across transpose",
                                                       std::nullopt, std::nullopt}));
            }
            // pasting: composition of independent cubes stays independent
            {
                std::uint64_t ts = derive_seed(cfg.seed, 0xe0 + n * 8 + 2, trial);
                Rng rng(ts);
                NCube left = gen_independent_ncube(rng, cfg, n, m);
                NCube sib = gen_sibling_ncube(rng, cfg, left.dst(), m);
                NCube right = complete_ncube_span(left.dst(), sib);
                NCube composite = trial % 2 == 0
                                      ? compose_ncube(right, left)
                                      : transpose_ncube(compose_ncube(right, left));
                rep.record(tag + "pasting", ts,
                           ncube_independent(n, composite, m, cfg.max_dimension));
            }
            // uniqueness: two completions amalgamate over the span
            {
                std::uint64_t ts = derive_seed(cfg.seed, 0xe0 + n * 8 + 3, trial);
                Rng rng(ts);
                NCube leg1 = gen_independent_ncube(rng, cfg, n - 1, m);
                NCube leg2 = gen_sibling_ncube(rng, cfg, leg1, m);
                NCube comp1 = complete_ncube_span(leg1, leg2);
                NCube comp2 = gen_extended_completion(rng, cfg, comp1, m);
                rep.record(tag + "uniqueness", ts,
                           ncube_amalgamate(leg1, leg2, comp1, comp2, m, cfg.max_dimension).verdict);
            }
        }
    }

    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

} // namespace effsq
