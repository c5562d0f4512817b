#pragma once

#include <string>
#include <vector>

#include "g2ido/rootsys.hpp"

namespace g2ido {

struct FixtureResult {
    std::string name;
    bool passed = false;
    std::string expected;
    std::string actual;
};

/// Regression harness over the tabulated multiplet data. Fixtures run in a
/// fixed order and never abort early; a throwing fixture is reported as a
/// failure. The root-system fixtures read the supplied system, everything
/// else runs on the canonical engine.
std::vector<FixtureResult> verify_fixtures(const RootSystem &rs = g2());

} // namespace g2ido
