#include "effsq/stability.hpp"

#include <chrono>

#include "effsq/generator.hpp"

namespace effsq {

Report run_weak_stability_suite(const MorphismClass& m, const GeneratorConfig& cfg) {
    cfg.validate();
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.seed = cfg.seed;
    rep.config = cfg;

    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        // symmetry: effectiveness is invariant under transposition
        {
            std::uint64_t ts = derive_seed(cfg.seed, 0x51, trial);
            Rng rng(ts);
            Square sq = gen_square(rng, cfg, m);
            bool lhs = is_effective(sq, m).passed;
            bool rhs = is_effective(transpose(sq), m).passed;
            rep.record("symmetry", ts,
                       lhs == rhs ? Verdict::pass()
                                  : Verdict::fail({"transpose", "effectiveness differs across transpose",
                                                   std::nullopt, std::nullopt}));
        }
        // transitivity: pasting effective squares stays effective
        {
            std::uint64_t ts = derive_seed(cfg.seed, 0x52, trial);
            Rng rng(ts);
            Square left = gen_effective_square(rng, cfg, m);
            Square pasted;
            if (trial % 2 == 0) {
                Hom leg = gen_map_in_class(rng, cfg, m, left.k().src(), false);
                Square right = complete_span(make_span(left.k(), leg));
                if (rng.chance(0.5))
                    right = post_extend(right, gen_map_in_class(rng, cfg, m, right.corner_d(), false));
                pasted = hcompose(left, right);
            } else {
                Hom leg = gen_map_in_class(rng, cfg, m, left.h().src(), false);
                Square top = complete_span(make_span(leg, left.h()));
                if (rng.chance(0.5))
                    top = post_extend(top, gen_map_in_class(rng, cfg, m, top.corner_d(), false));
                pasted = vcompose(left, top);
            }
            rep.record("transitivity", ts, is_effective(pasted, m));
        }
        // existence: every span completes effectively, with an iso induced map
        {
            std::uint64_t ts = derive_seed(cfg.seed, 0x53, trial);
            Rng rng(ts);
            Square sq = complete_span(gen_span_in_class(rng, cfg, m));
            Verdict v = is_effective(sq, m);
            if (v.passed && !is_iso(*v.witness->map))
                v = Verdict::fail({"existence", "induced map of a pushout completion is not an isomorphism",
                                   v.witness->map, std::nullopt});
            rep.record("existence", ts, v);
        }
        // uniqueness: two effective completions amalgamate
        {
            std::uint64_t ts = derive_seed(cfg.seed, 0x54, trial);
            Rng rng(ts);
            Span sp = gen_span_in_class(rng, cfg, m);
            Square sq1 = complete_span(sp);
            Square sq2 = trial % 4 == 0
                             ? sq1
                             : post_extend(sq1, gen_map_in_class(rng, cfg, m, sq1.corner_d(), false));
            rep.record("uniqueness", ts, amalgamate_uniqueness(sp, sq1, sq2, m).verdict);
        }
    }

    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

} // namespace effsq
