#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "effsq/config.hpp"
#include "effsq/verdict.hpp"

namespace effsq {

struct WitnessNote {
    std::string kind;
    std::string detail;
    std::string map;     // rendered matrix with endpoints, possibly empty
    std::string element; // rendered vector, possibly empty
};

struct PropertyResult {
    std::string name;
    std::uint64_t pass = 0;
    std::uint64_t fail = 0;
    std::uint64_t vacuous = 0;
    std::vector<std::uint64_t> failing_seeds;
    std::vector<WitnessNote> witnesses;
};

// Aggregated outcome of a property suite. Reports are pure functions of
// (schema version, seed, config); timing is carried separately because it
// is the one non-reproducible field.
struct Report {
    std::string schema = "effsq-report/1";
    std::uint64_t seed = 0;
    GeneratorConfig config;
    std::vector<PropertyResult> properties;
    std::int64_t elapsed_ms = 0;

    PropertyResult& property(const std::string& name);
    void record(const std::string& property_name, std::uint64_t trial_seed, const Verdict& v,
                std::size_t witness_cap = 5);
    bool all_nonvacuous_pass() const;
    void append(const Report& other, const std::string& prefix);
};

// Canonical JSON rendering: keys sorted, no insignificant whitespace.
// elapsed_ms is emitted as 0 unless include_timings is set, keeping the
// default output byte-identical across re-runs with equal (seed, config).
std::string render_json(const Report& r, bool include_timings = false);

// Human-readable table, always with wall-clock.
std::string render_table(const Report& r);

WitnessNote note_from_witness(const Witness& w);

} // namespace effsq
