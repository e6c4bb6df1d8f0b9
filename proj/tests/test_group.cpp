#include <doctest.h>

#include "effsq/errors.hpp"
#include "effsq/generator.hpp"
#include "effsq/group.hpp"
#include "effsq/rng.hpp"

using namespace effsq;

namespace {

IntMatrix mat(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Int>> conv;
    for (const auto& r : rows) conv.emplace_back(r.begin(), r.end());
    return IntMatrix::from_rows(conv);
}

} // namespace

TEST_CASE("canonical forms of small presentations") {
    FpAbGroup z2 = make_group(1, mat({{2}}));
    CHECK(z2.canonical().free_rank == 0);
    CHECK(z2.canonical().invariant_factors == std::vector<Int>{Int(2)});
    CHECK(z2.canonical().to_string() == "Z/2");

    FpAbGroup g = make_group(2, mat({{2, 4}, {6, 8}}));
    CHECK(g.canonical().free_rank == 0);
    CHECK(g.canonical().invariant_factors == std::vector<Int>{Int(2), Int(4)});

    FpAbGroup z = make_group(1, IntMatrix(0, 1));
    CHECK(z.canonical().free_rank == 1);
    CHECK(z.canonical().invariant_factors.empty());
    CHECK(z.canonical().to_string() == "Z");

    CHECK(trivial_group().canonical().to_string() == "0");
    CHECK_THROWS_AS(make_group(2, mat({{1, 2, 3}})), MismatchError);
}

TEST_CASE("unit factors are dropped, zero factors become free rank") {
    // <x, y | 3x> = Z/3 + Z
    FpAbGroup g = make_group(2, mat({{3, 0}}));
    CHECK(g.canonical().free_rank == 1);
    CHECK(g.canonical().invariant_factors == std::vector<Int>{Int(3)});
    // <x | x> = 0
    CHECK(make_group(1, mat({{1}})).is_trivial());
}

TEST_CASE("canonical form is stable under re-presentation") {
    Rng rng(101);
    GeneratorConfig cfg;
    for (int t = 0; t < 200; ++t) {
        FpAbGroup g = gen_group(rng, cfg);
        // change of generators
        IntMatrix q = gen_unimodular(rng, g.num_generators());
        FpAbGroup g2 = make_group(g.num_generators(), g.relations() * q);
        CHECK(g.canonical() == g2.canonical());
        // redundant relations: random combinations of existing rows
        if (g.relations().rows() > 0) {
            IntMatrix extra(2, g.num_generators());
            for (int e = 0; e < 2; ++e) {
                std::size_t r = rng.index(g.relations().rows());
                Int k = rng.int_in(-3, 3);
                for (std::size_t j = 0; j < g.num_generators(); ++j)
                    extra.at(e, j) = k * g.relations().at(r, j);
            }
            FpAbGroup g3 = make_group(g.num_generators(), g.relations().vstack(extra));
            CHECK(g.canonical() == g3.canonical());
        }
    }
}

TEST_CASE("orders, exponents, element enumeration") {
    FpAbGroup g = make_group(2, mat({{2, 0}, {0, 3}}));
    CHECK(g.is_finite());
    CHECK(g.order() == 6);
    CHECK(g.exponent() == 6);
    CHECK(g.elements().size() == 6);

    FpAbGroup z4 = make_group(1, mat({{4}}));
    CHECK(z4.elements().size() == 4);
    CHECK(trivial_group().elements().size() == 1);

    CHECK(!free_group(1).is_finite());
    CHECK_THROWS_AS(free_group(1).elements(), InfiniteGroupError);
}

TEST_CASE("element reduction is canonical") {
    FpAbGroup z4 = make_group(1, mat({{4}}));
    CHECK(z4.reduce({Int(7)}) == std::vector<Int>{Int(3)});
    CHECK(z4.is_zero_element({Int(8)}));
    CHECK(!z4.is_zero_element({Int(2)}));
}

TEST_CASE("direct sums") {
    FpAbGroup s = direct_sum(cyclic_group(2), free_group(1));
    CHECK(s.canonical().free_rank == 1);
    CHECK(s.canonical().invariant_factors == std::vector<Int>{Int(2)});
    CHECK(isomorphic(direct_sum(cyclic_group(2), cyclic_group(3)), cyclic_group(6)));
}
