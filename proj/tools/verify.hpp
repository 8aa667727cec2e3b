#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pmonoid::cli {

struct ExampleResult {
    std::string name;
    bool passed = false;
    std::string detail;  ///< failure reason or thrown error; empty on success
};

/// Runs the built-in catalogue of worked examples. `seed` drives the random
/// sample points used by the action comparison.
std::vector<ExampleResult> verify_examples(std::uint64_t seed);

/// Number of entries in the catalogue.
std::size_t example_count();

}  // namespace pmonoid::cli
