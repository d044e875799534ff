#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rtw/model.hpp"

namespace rtw {

// The weighted K_6 attaining density 5/6: five red vertices in the pentagon
// coloring, one blue vertex joined red to all, every weight 1.
WCCG rho36_extremal();

// The three weighted K_8 attaining density 7/8: all vertices red, all
// weights 1, edge colors per the chosen member of the eight-vertex family.
WCCG rho37_extremal(int variant);

// The three weighted K_10 instances with all colors red and the half edges
// of, in order: three independent pairs plus one sharing an endpoint with
// the first; three independent pairs plus one inside their span; a
// four-cycle plus one pendant pair. The first is cross-validated against a
// hard-coded literal of its full 10x10 matrix.
std::array<WCCG, 3> fact_t10_matrices();

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    uint64_t seed = 0;
    bool all_passed = true;
    std::vector<CheckResult> checks;

    std::string text() const;
    std::string json() const;
};

// suite "paper": deterministic exact reproductions (solver anchors, closed
// forms, enumeration counts, extremal instances, search values, frozen-seed
// constructions, weighted Turan masses). suite "properties": randomized
// property checks driven by the seed. Reports carry no timestamps, so a
// rerun with the same arguments is byte-identical. threads is validated and
// accepted for interface stability; checks run sequentially either way.
// inject_fault corrupts one member of the eight-vertex family inside the
// enumeration comparison, which must then fail with a diff.
SuiteReport run_suite(const std::string& suite, uint64_t seed, int threads,
                      bool inject_fault = false);

}  // namespace rtw
