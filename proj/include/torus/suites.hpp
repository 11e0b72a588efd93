#pragma once
// Named verification suites shared by the CLI and the acceptance runner.

#include "torus/canonical.hpp"
#include "torus/limits.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace torus {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tol = 0.0;
    bool gated = true;  // informational checks never fail the suite
    bool passed() const { return !gated || residual <= tol; }
};

struct SuiteReport {
    std::string suite;
    int D = 0;
    std::vector<CheckResult> checks;
    std::vector<std::string> warnings;
    bool passed() const;
    void add(const std::string& name, double residual, double tol, bool gated = true);
    void merge(const SuiteReport& other);
};

struct SuiteOptions {
    double tol = 1e-10;
    std::uint64_t seed = 12345;
    int samples = 20;
};

struct AlgebraResiduals {
    double adjoint = 0.0;      // S_m^dagger = S_{-m}
    double trace = 0.0;        // Tr S_m = D delta_{m,0}
    double composition = 0.0;  // S_a S_b = e^{i gamma0 a x b / 2} S_{a+b}, exact labels
    double window_composition = 0.0;  // same with the product labelled in the window
    double unit = 0.0;         // S_0 = I
    double inverse = 0.0;      // S_m S_{-m} = I
    double power = 0.0;        // S_m^D = (-1)^{D m1 m2}
    double unitarity = 0.0;
    int pairs = 0;
    double max() const;
};

// All window labels, all window pairs, plus `samples` random pairs of
// unreduced labels in [-3D, 3D].
AlgebraResiduals schwinger_algebra(const Dimension& dim, Pair pair, std::mt19937_64& rng, int samples);

const std::vector<std::string>& suite_names();
// Throws InvalidArgument for an unknown suite.
SuiteReport run_suite(const std::string& name, const Dimension& dim, const SuiteOptions& opt);

}  // namespace torus
