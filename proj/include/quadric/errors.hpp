#pragma once

#include <stdexcept>
#include <string>

namespace quadric {

// A formal Whitney quotient whose Chern data is not integral. Signals an
// impossible short exact sequence of vector bundles.
struct NonIntegerQuotient : std::runtime_error {
    explicit NonIntegerQuotient(const std::string& what) : std::runtime_error(what) {}
};

// Chern-character conversion landed outside integral Chern data.
struct NonIntegerResult : std::runtime_error {
    explicit NonIntegerResult(const std::string& what) : std::runtime_error(what) {}
};

// Cohomology index outside the supported range (bad p/q, or n above the cap).
struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

// Tensor-pair cohomology is a closed catalogue; this pair/twist is not in it.
struct UnsupportedPair : std::runtime_error {
    explicit UnsupportedPair(const std::string& what) : std::runtime_error(what) {}
};

// Classification tables exist for c1 in {1,2} only.
struct InvalidC1 : std::invalid_argument {
    explicit InvalidC1(const std::string& what) : std::invalid_argument(what) {}
};

// Decomposable-sum catalogue covers c1 = 2, c2 in {4,5,6} only.
struct OutOfCatalogue : std::invalid_argument {
    explicit OutOfCatalogue(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace quadric
