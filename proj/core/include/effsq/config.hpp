#pragma once

#include <cstdint>
#include <stdexcept>

namespace effsq {

// Knobs for seeded instance generation. The cutoffs are configuration,
// not theory: they keep presentations small enough for exhaustive oracles
// while still exercising the degenerate shapes the axioms hinge on.
struct GeneratorConfig {
    std::uint64_t seed = 1;
    std::size_t max_generators = 3;
    long entry_bound = 5;
    std::size_t max_relations = 3;
    std::size_t trials = 200;

    struct Quotas {
        double zero_source = 0.15;    // spans out of the zero group
        double identity_edges = 0.15; // identity legs / edges
        double finite_only = 0.25;    // all groups finite
    } quotas;

    std::size_t max_dimension = 4; // cap for the n-cube recursion

    void validate() const {
        if (max_generators == 0 || entry_bound <= 0 || trials == 0)
            throw std::invalid_argument("GeneratorConfig: bounds must be positive");
        double s = quotas.zero_source + quotas.identity_edges + quotas.finite_only;
        if (quotas.zero_source < 0 || quotas.identity_edges < 0 || quotas.finite_only < 0 ||
            s > 1.0)
            throw std::invalid_argument("GeneratorConfig: quotas must be nonnegative and sum <= 1");
    }
};

} // namespace effsq
