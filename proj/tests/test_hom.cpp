#include <doctest.h>

#include <set>

#include "effsq/errors.hpp"
#include "effsq/generator.hpp"
#include "effsq/hom.hpp"

using namespace effsq;

namespace {

IntMatrix mat(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Int>> conv;
    for (const auto& r : rows) conv.emplace_back(r.begin(), r.end());
    return IntMatrix::from_rows(conv);
}

const FpAbGroup Z = free_group(1);
const FpAbGroup Z2 = cyclic_group(2);
const FpAbGroup Z3 = cyclic_group(3);
const FpAbGroup Z4 = cyclic_group(4);

Hom scale(const FpAbGroup& g, long k) {
    IntMatrix m = IntMatrix::identity(g.num_generators());
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, i) = k;
    return make_hom(g, g, m);
}

// Elementwise injectivity oracle for finite groups.
bool injective_by_enumeration(const Hom& h) {
    std::set<std::vector<Int>> images;
    for (const auto& x : h.src().elements()) images.insert(h.apply(x));
    return images.size() == h.src().elements().size();
}

} // namespace

TEST_CASE("well-definedness is validated at construction") {
    CHECK_THROWS_AS(make_hom(Z2, Z4, mat({{1}})), IllDefinedError);
    try {
        make_hom(Z2, Z4, mat({{1}}));
    } catch (const IllDefinedError& e) {
        CHECK(e.relation_index == 0);
    }
    CHECK_NOTHROW(make_hom(Z2, Z4, mat({{2}})));
    CHECK_NOTHROW(identity_hom(Z));
    CHECK_THROWS_AS(make_hom(Z, Z, mat({{1, 2}})), MismatchError);
}

TEST_CASE("hom equality is modulo the target lattice") {
    Hom a = make_hom(Z, Z4, mat({{1}}));
    Hom b = make_hom(Z, Z4, mat({{5}}));
    CHECK(a == b);
    CHECK(!(a == make_hom(Z, Z4, mat({{2}}))));
}

TEST_CASE("composition and identities") {
    CHECK(compose(identity_hom(Z), scale(Z, 5)) == scale(Z, 5));
    CHECK(compose(scale(Z, 2), scale(Z, 3)) == scale(Z, 6));
    Hom proj = make_hom(Z, Z4, mat({{1}}));
    CHECK(compose(proj, scale(Z, 2)) == make_hom(Z, Z4, mat({{2}})));
    CHECK_THROWS_AS(compose(proj, proj), MismatchError);
}

TEST_CASE("kernels of the worked examples") {
    auto k1 = kernel(scale(Z, 2));
    CHECK(k1.group.is_trivial());

    auto k2 = kernel(make_hom(Z, Z4, mat({{1}})));
    CHECK(k2.group.canonical().to_string() == "Z");
    REQUIRE(k2.inclusion.matrix().cols() == 1);
    CHECK(abs_int(k2.inclusion.matrix().at(0, 0)) == 4); // inclusion is x4

    FpAbGroup zz = free_group(2);
    Hom fold = make_hom(zz, Z, mat({{1, 1}}));
    auto k3 = kernel(fold);
    CHECK(k3.group.canonical().to_string() == "Z");
    auto gen = k3.inclusion.matrix().col(0);
    CHECK(gen[0] + gen[1] == 0);
    CHECK(abs_int(gen[0]) == 1); // generated by (1, -1)

    // compose(h, incl) = 0 on seeded maps
    Rng rng(21);
    GeneratorConfig cfg;
    for (int t = 0; t < 60; ++t) {
        FpAbGroup a = gen_group(rng, cfg), b = gen_group(rng, cfg);
        Hom h = gen_hom(rng, cfg, a, b);
        auto k = kernel(h);
        CHECK(compose(h, k.inclusion).is_zero());
        CHECK(is_mono(k.inclusion));
    }
}

TEST_CASE("cokernels of the worked examples") {
    CHECK(cokernel(scale(Z, 2)).group.canonical().to_string() == "Z/2");
    CHECK(cokernel(identity_hom(Z)).group.is_trivial());
    Hom embed = make_hom(Z, free_group(2), mat({{2}, {-3}}));
    CHECK(cokernel(embed).group.canonical().to_string() == "Z");

    Rng rng(22);
    GeneratorConfig cfg;
    for (int t = 0; t < 60; ++t) {
        FpAbGroup a = gen_group(rng, cfg), b = gen_group(rng, cfg);
        Hom h = gen_hom(rng, cfg, a, b);
        auto q = cokernel(h);
        CHECK(compose(q.projection, h).is_zero());
        CHECK(is_epi(q.projection));
    }
}

TEST_CASE("mono, epi, iso predicates") {
    CHECK(is_mono(scale(Z, 2)));
    CHECK(!is_epi(scale(Z, 2)));
    Hom proj = make_hom(Z, Z4, mat({{1}}));
    CHECK(is_epi(proj));
    CHECK(!is_mono(proj));
    Hom fold = make_hom(free_group(2), Z, mat({{1, 1}}));
    CHECK(is_epi(fold));
    CHECK(!is_mono(fold));
    CHECK(is_iso(identity_hom(Z4)));
    // kernel of a mono is 0, cokernel of an epi is 0 (by definition of the predicates)
}

TEST_CASE("exhaustive hom enumeration on finite groups") {
    CHECK(enumerate_homs(Z2, Z4).size() == 2);
    CHECK(enumerate_homs(Z2, Z3).size() == 1);
    CHECK(enumerate_homs(trivial_group(), Z4).size() == 1);
    CHECK_THROWS_AS(enumerate_homs(Z, Z4), InfiniteGroupError);
    CHECK_THROWS_AS(enumerate_homs(cyclic_group(64), cyclic_group(64), 100), BoundExceededError);

    // brute-force count: |Hom(Z/a, Z/b)| = gcd(a, b)
    for (long a = 1; a <= 6; ++a)
        for (long b = 1; b <= 6; ++b)
            CHECK(enumerate_homs(cyclic_group(a), cyclic_group(b)).size() ==
                  static_cast<std::size_t>(gcd_int(a, b)));
}

TEST_CASE("is_mono agrees with elementwise injectivity on finite groups") {
    Rng rng(23);
    GeneratorConfig cfg;
    cfg.max_generators = 2;
    int checked = 0;
    for (int t = 0; t < 200 && checked < 80; ++t) {
        FpAbGroup a = gen_group(rng, cfg, true), b = gen_group(rng, cfg, true);
        if (a.order() > 36 || b.order() > 36) continue;
        Hom h = gen_hom(rng, cfg, a, b);
        CHECK(is_mono(h) == injective_by_enumeration(h));
        ++checked;
    }
    CHECK(checked > 0);
}

TEST_CASE("factorization solving") {
    // no retraction of x2 on Z
    CHECK(!solve_factorization(scale(Z, 2), identity_hom(Z), FactorSide::Left).has_value());
    // through identity: t = target
    Hom f = make_hom(Z, Z4, mat({{3}}));
    auto t = solve_factorization(identity_hom(Z), f, FactorSide::Left);
    REQUIRE(t.has_value());
    CHECK(*t == f);
    // retraction of the first-coordinate inclusion Z -> Z + Z/2
    Hom incl = inclusion_first(Z, Z2);
    auto r = solve_factorization(incl, identity_hom(Z), FactorSide::Left);
    REQUIRE(r.has_value());
    CHECK(compose(*r, incl) == identity_hom(Z));

    // right side: lift 1 -> 2 in Z/4 through x2
    Hom target = make_hom(Z, Z4, mat({{2}}));
    Hom through = make_hom(Z, Z4, mat({{2}}));
    auto lift = solve_factorization(through, target, FactorSide::Right);
    REQUIRE(lift.has_value());
    CHECK(compose(through, *lift) == target);
    // unsolvable right side: nothing maps onto an epi's missing image
    Hom two = make_hom(Z, Z4, mat({{2}}));
    Hom one = make_hom(Z, Z4, mat({{1}}));
    CHECK(!solve_factorization(two, one, FactorSide::Right).has_value());

    CHECK_THROWS_AS(solve_factorization(scale(Z, 2), identity_hom(Z4), FactorSide::Left),
                    MismatchError);
}

TEST_CASE("solved factorizations verify on seeded instances") {
    Rng rng(24);
    GeneratorConfig cfg;
    for (int t = 0; t < 40; ++t) {
        FpAbGroup a = gen_group(rng, cfg), b = gen_group(rng, cfg), c = gen_group(rng, cfg);
        Hom through = gen_hom(rng, cfg, a, b);
        Hom tail = gen_hom(rng, cfg, b, c);
        // target built to be solvable
        Hom target = compose(tail, through);
        auto sol = solve_factorization(through, target, FactorSide::Left);
        REQUIRE(sol.has_value());
        CHECK(compose(*sol, through) == target);
    }
}
