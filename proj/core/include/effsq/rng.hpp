#pragma once

#include <cstdint>
#include <random>

#include "effsq/ints.hpp"

namespace effsq {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives a replayable per-trial seed from a suite seed, a property tag,
// and the trial index.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) {
    return splitmix64(splitmix64(master ^ 0x5851f42d4c957f2dULL * stream) + index);
}

// Deterministic RNG. mt19937_64 output is pinned by the standard; all
// range reductions are done by hand so streams are identical across
// platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform-ish integer in [lo, hi] (modulo reduction; the bias is
    // irrelevant for instance generation and determinism is what matters).
    long pick(long lo, long hi) {
        if (hi <= lo) return lo;
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    std::size_t index(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(next() % n); }

    bool chance(double p) {
        if (p <= 0) return false;
        if (p >= 1) return true;
        return next() < static_cast<std::uint64_t>(p * 18446744073709551615.0);
    }

    Int int_in(long lo, long hi) { return Int(pick(lo, hi)); }

private:
    std::mt19937_64 eng_;
};

} // namespace effsq
