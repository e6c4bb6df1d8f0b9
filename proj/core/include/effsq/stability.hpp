#pragma once

#include "effsq/config.hpp"
#include "effsq/report.hpp"
#include "effsq/square.hpp"

namespace effsq {

// Seeded instance suite for the weakly-stable axioms of the effective-
// square independence notion over K_M: symmetry, transitivity, existence,
// uniqueness-with-amalgam. Failures are reported with replayable seeds.
Report run_weak_stability_suite(const MorphismClass& m, const GeneratorConfig& cfg);

} // namespace effsq
