#pragma once
// Unitary phase operator E_phi, number exponential E_N, operator Fourier
// expansion of number functions and the action-angle Wigner function.

#include "torus/deformed.hpp"
#include "torus/wigner.hpp"

namespace torus {

struct PhasePair {
    Dimension dim;
    OperatorMatrix E_phi;  // sum_n |n-1><n|
    OperatorMatrix E_N;    // exp(-i gamma0 N)
    Matrix phase_states;   // column l is |phi>_l
    double phase_eigen_residual = 0.0;   // E_phi |phi_l> = e^{i gamma0 l} |phi_l>
    double number_eigen_residual = 0.0;  // E_N |n> = e^{-i gamma0 n} |n>
    double ladder_residual = 0.0;        // E_N |phi_l> = |phi_{l-1}>
    double commutation_residual = 0.0;   // E_N^a E_phi^b = e^{i gamma0 a b} E_phi^b E_N^a, all a, b
    double orthonormality_residual = 0.0;
    double completeness_residual = 0.0;
    double identification_residual = 0.0;  // S_m from (E_N, E_phi) vs the NumberPhase Schwinger matrices
};

PhasePair build_phase_pair(const Dimension& dim);

struct ExpansionTerm {
    int k = 0;
    cplx coefficient;     // f~_k = sum_n e^{i gamma0 k n} f(n)
    long long power = 0;  // k' with e^{-i gamma0 k N} = (q^{-N})^{k'}
    LatticeVector label;  // e^{-i gamma0 k N} = phase * S_label
    cplx phase;
};

struct NumberExpansion {
    Dimension dim;
    LatticeVector m, mp;
    std::vector<ExpansionTerm> terms;
    OperatorMatrix reconstruction;
    Matrix number_basis;          // N eigenbasis of the q-oscillator
    double spectral_residual = 0.0;  // |reconstruction - sum f(n) P_n|
    double diagonal_residual = 0.0;  // |reconstruction - diag(f)| in the standard number basis
    double phase_residual = 0.0;     // worst proportionality residual of a term
};

// F(N) = (1/D) sum_k f~_k e^{-i gamma0 k N}, each exponential written as a
// Schwinger element of the NumberPhase pair built from (m, m').
// Throws CollinearVectors or DegenerateDeformation.
NumberExpansion expand_number_function(const Dimension& dim, const std::vector<double>& f,
                                       LatticeVector m = {0, 1}, LatticeVector mp = {1, 1});

struct ActionAngleKernel {
    Dimension dim;
    double J = 0.0, theta = 0.0;
    OperatorMatrix matrix;
    Normalisation norm = Normalisation::ActionAngle;
    bool exact = true;
};

// Delta(J, theta) = (2 pi D)^{-1} sum_m e^{i (gamma0 m1 J - m2 theta)} S_m(E_N, E_phi)
ActionAngleKernel build_action_angle_kernel(const Dimension& dim, double J, double theta);
// Same kernel assembled from phase-state dyads.
Matrix action_angle_kernel_phase_form(const Dimension& dim, double J, double theta);

// Grid J in {0..D-1} (or {0, 1/2, .., D - 1/2} when half_integer), theta_l = gamma0 l.
WignerGrid wigner_number_phase(const StateVector& psi, bool half_integer = false, const std::string& state_ref = "");
// Partial sum over m with m2 of the given parity (0 even, 1 odd).
WignerGrid wigner_number_phase_parity(const StateVector& psi, bool half_integer, int m2_parity);
// sum_J (2 pi / D) w_J sum_theta W with w_J = 1 or 1/2 on the half-integer grid
double action_angle_mass(const WignerGrid& g);

struct NumberPhaseWignerReport {
    double reality = 0.0;
    double mass = 0.0;
    double marginal_J = 0.0;      // (2 pi / D) sum_theta W = |<J|psi>|^2
    double marginal_theta = 0.0;  // sum_J W = (D / 2 pi) |<phi|psi>|^2
};
NumberPhaseWignerReport number_phase_wigner_checks(const StateVector& psi);

}  // namespace torus
