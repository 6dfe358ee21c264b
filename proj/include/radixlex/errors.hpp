#pragma once

#include <stdexcept>
#include <string>

namespace radixlex {

/// A machine failed structural validation (bad state ids, incomplete delta,
/// output-producing epsilon cycles, ...).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A transducer produced more than one accepting run for a single input.
/// Raised by apply_transducer; indicates a broken construction.
struct AmbiguityError : std::runtime_error {
    explicit AmbiguityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace radixlex
