#pragma once

#include "stanley/sdepth.hpp"

#include <functional>
#include <string>
#include <vector>

namespace stanley {

/// A named regression check: `compute` produces JSON text that must equal
/// `expected` (compared as JSON values, not as strings).
struct Fixture {
    std::string name;
    std::string description;
    std::string expected;
    std::function<std::string()> compute;
};

struct FixtureResult {
    std::string name;
    bool passed = false;
    std::string expected;
    std::string actual;
    /// Exception text when compute threw.
    std::string error;
};

/// The built-in reference fixtures (16- and 6-variable counterexamples, small
/// maximal ideals, 4-cycle, 5-path, small complete graphs).
std::vector<Fixture> builtin_fixtures(const SearchOptions& search = {});

std::vector<FixtureResult> run_fixtures(const std::vector<Fixture>& fixtures);

} // namespace stanley
