#pragma once
// Discrete Wigner-Kirkwood kernel on Z_D x Z_D and the Wigner function.

#include "torus/schwinger.hpp"

#include <random>

namespace torus {

enum class Normalisation { Torus, ActionAngle };  // 1/D^2 and 1/(2 pi D)

struct WignerKernel {
    Dimension dim;
    double V1 = 0.0, V2 = 0.0;
    OperatorMatrix matrix;
    Normalisation norm = Normalisation::Torus;
    bool exact = true;  // false for off-grid V
};

// Delta(V) = D^{-2} sum_m e^{-i gamma0 m x V} S_m over the canonical window.
// Throws OffGrid for non-integer V unless allow_off_grid is set.
WignerKernel build_kernel(const Dimension& dim, double V1, double V2, bool allow_off_grid = false);

// All D^2 grid kernels, index V1 * D + V2.
std::vector<Matrix> grid_kernels(const Dimension& dim);

struct WignerGrid {
    Dimension dim;
    Eigen::MatrixXd values;  // (V1, V2) or (J, theta)
    std::vector<double> rows, cols;  // coordinate of each row / column
    std::string state_ref;
    Normalisation norm = Normalisation::Torus;
    double max_imag = 0.0;
};

WignerGrid wigner_function(const StateVector& psi, const std::string& state_ref = "");

// f(V) = Tr{F Delta(V)^dagger}
Eigen::MatrixXcd classical_symbol(const Matrix& op, const Dimension& dim);
// inverse map: F = D sum_V f(V) Delta(V)
Matrix operator_from_symbol(const Eigen::MatrixXcd& symbol, const Dimension& dim);

struct WignerPropertyReport {
    double kernel_hermitian = 0.0;
    double dual = 0.0;           // sum_V e^{i gamma0 m x V} Delta(V) = S_m
    double kernel_trace = 0.0;   // sum_V Tr Delta(V) = D
    double reality = 0.0;
    double mass = 0.0;
    double marginal_u = 0.0;     // sum_V2 W = |<u_V1|psi>|^2
    double marginal_v = 0.0;     // sum_V1 W = |<v_V2|psi>|^2
    double translation_u = 0.0;  // W_{U psi}(V) = W_psi(V1 - 1, V2)
    double translation_v = 0.0;  // W_{V psi}(V) = W_psi(V1, V2 - 1)
    double time_inversion = 0.0; // W_{psi^*}(V) = W_psi(V1, -V2)
    double parity = 0.0;         // W_{F^2 psi}(V) = W_psi(-V1, -V2)
    double overlap = 0.0;        // sum W W' = |<psi|psi'>|^2 / D
    double self_overlap = 0.0;   // sum W^2 = 1/D
    double orthogonal_overlap = 0.0;
    double symbol_pairing = 0.0; // <psi|F|psi>/D = sum f W
    double trace_pairing = 0.0;  // Tr(F G)/D = sum f g
    double reconstruction = 0.0; // op -> symbol -> op
    int states = 0;
    double max() const;
};

// Runs every check on each state; consecutive states are paired for the
// overlap identity and random operators are drawn from rng.
WignerPropertyReport property_suite(const Dimension& dim, const std::vector<StateVector>& states, std::mt19937_64& rng);

// Seeded complex-normal random state in the u basis.
StateVector random_state(const Dimension& dim, std::mt19937_64& rng);
Matrix random_matrix(const Dimension& dim, std::mt19937_64& rng);

}  // namespace torus
