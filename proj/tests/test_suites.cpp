#include <doctest.h>

#include "effsq/arrow.hpp"
#include "effsq/ncube.hpp"
#include "effsq/report.hpp"
#include "effsq/stability.hpp"

using namespace effsq;

TEST_CASE("reports are deterministic and canonical by default") {
    GeneratorConfig cfg;
    cfg.seed = 17;
    cfg.trials = 15;
    Report a = run_weak_stability_suite({ClassKind::Monos}, cfg);
    Report b = run_weak_stability_suite({ClassKind::Monos}, cfg);
    CHECK(render_json(a) == render_json(b));
    // timing is zeroed unless explicitly requested
    CHECK(render_json(a).find("\"elapsed_ms\":0") != std::string::npos);
}

TEST_CASE("report bookkeeping") {
    Report rep;
    rep.record("p", 1, Verdict::pass());
    rep.record("p", 2, Verdict::vacuous_pass());
    rep.record("p", 3, Verdict::fail({"kind", "detail", std::nullopt, std::nullopt}));
    auto& p = rep.property("p");
    CHECK(p.pass == 1);
    CHECK(p.vacuous == 1);
    CHECK(p.fail == 1);
    CHECK(p.failing_seeds == std::vector<std::uint64_t>{3});
    CHECK(!rep.all_nonvacuous_pass());
}

TEST_CASE("excellence probe smoke at dimensions 2 and 3") {
    GeneratorConfig cfg;
    cfg.seed = 19;
    cfg.trials = 6;
    Report rep = excellence_probe(3, {ClassKind::Monos}, cfg);
    CHECK(rep.all_nonvacuous_pass());
    // a scorecard entry exists for each dimension and axiom
    const char* names[] = {"n2.existence", "n2.symmetry", "n2.pasting", "n2.uniqueness",
                           "n3.existence", "n3.symmetry", "n3.pasting", "n3.uniqueness"};
    for (const char* n : names) {
        bool found = false;
        for (const auto& p : rep.properties)
            if (p.name == n) {
                found = true;
                CHECK(p.fail == 0);
                CHECK(p.pass > 0);
            }
        CHECK(found);
    }
}

TEST_CASE("suite reports replay from recorded seeds") {
    GeneratorConfig cfg;
    cfg.seed = 23;
    cfg.trials = 10;
    Report rep = check_mshriek_closure_suite({ClassKind::Monos}, cfg);
    CHECK(rep.all_nonvacuous_pass());
    Report rep2 = check_mshriek_closure_suite({ClassKind::Monos}, cfg);
    CHECK(render_json(rep) == render_json(rep2));
}
