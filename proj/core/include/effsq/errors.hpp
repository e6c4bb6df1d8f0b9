#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace effsq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A generator-image matrix sends some source relation outside the target
// relation lattice; carries the index of the violated relation.
struct IllDefinedError : Error {
    std::size_t relation_index;
    explicit IllDefinedError(std::size_t idx)
        : Error("ill-defined homomorphism: relation " + std::to_string(idx) +
                " is not mapped into the target relation lattice"),
          relation_index(idx) {}
};

struct MismatchError : Error {
    using Error::Error;
};

struct InfiniteGroupError : Error {
    InfiniteGroupError() : Error("operation requires a finite group") {}
};

struct BoundExceededError : Error {
    using Error::Error;
};

struct DimensionError : Error {
    using Error::Error;
};

} // namespace effsq
