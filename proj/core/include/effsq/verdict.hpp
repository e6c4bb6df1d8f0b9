#pragma once

#include <optional>
#include <string>
#include <vector>

#include "effsq/hom.hpp"

namespace effsq {

// Structured evidence attached to a Verdict: the induced map of an
// effectiveness check, a kernel generator, an amalgam leg, or a short
// description of the violated equation.
struct Witness {
    std::string kind;
    std::string detail;
    std::optional<Hom> map;
    std::optional<std::vector<Int>> element;
};

struct Verdict {
    bool passed = false;
    bool vacuous = false;
    std::optional<Witness> witness;

    static Verdict pass() { return {true, false, std::nullopt}; }
    static Verdict pass_with(Witness w) { return {true, false, std::move(w)}; }
    static Verdict vacuous_pass() { return {true, true, std::nullopt}; }
    // Failures always carry a witness.
    static Verdict fail(Witness w) { return {false, false, std::move(w)}; }
};

} // namespace effsq
