#pragma once

#include "schurweyl/young.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace schurweyl::cli {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = true;
    bool skipped = false;
    std::string detail;
};

struct SuiteOptions {
    /// Random probe states per projector check.
    int samples = 4;
    std::uint64_t seed = 1;
    /// Tolerance for the projector-algebra, closed-form and orthogonal-form checks.
    double tolerance = 1e-9;
    double confinement_tolerance = 1e-8;
    double saturation_tolerance = 1e-8;
    double fixed_point_tolerance = 1e-7;
};

/// Runs every structural check for the block V^nu ⊗ S^nu of (C^d)^{⊗N}:
/// projector algebra, closed forms, the orthogonal-form action on an aligned
/// basis, subspace ranks, Schmidt confinement, coherent-state membership and
/// optimizer-state saturation.
std::vector<CheckResult> run_invariant_suite(const YoungDiagram &diagram, int d, const SuiteOptions &options = {});

} // namespace schurweyl::cli
