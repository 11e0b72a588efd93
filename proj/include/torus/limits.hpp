#pragma once
// Finite-D diagnostics of the large-D limit, the Fujikawa index, limiting
// q-oscillator spectra and continuously shifted Fock spaces.

#include "torus/number_phase.hpp"

#include <functional>

namespace torus {

enum class Observable { NumberExp, PhaseExp };
const char* to_string(Observable o);

enum class FamilyKind { Gaussian, NumberState, PhaseDelta };

// Test states on the phase circle: a(phi) = G(phi - center) e^{-i n0 phi}
// with G the wrapped Gaussian exp(-x^2 / (4 sigma^2)), so that the number
// amplitudes go like exp(-sigma^2 (n - n0)^2); a number state |n0>; or a
// phase-grid delta at center.
struct StateFamily {
    FamilyKind kind = FamilyKind::Gaussian;
    int n0 = 5;
    double sigma = 0.5;
    double center = 3.141592653589793;
    bool smooth() const { return kind != FamilyKind::PhaseDelta; }
    cplx amplitude(double phi) const;       // continuum a(phi), unnormalised
    StateVector state(const Dimension& dim) const;  // sampled on the phase grid, normalised
};

struct ConvergenceReport {
    std::vector<int> primes;
    std::string observable;
    std::vector<double> residuals;
    double gamma = 0.0;
    bool monotone_decreasing = false;
};

// E_N: picks m1 = round(gamma D / 2 pi) and returns ||(E_N^{m1} - e^{-i gamma N}) psi||^2.
// E_phi: int dphi |a(phi)|^2 |e^{i gamma0 l(phi)} - e^{i phi}|^2 with l(phi) the nearest grid index.
// Throws EmptyPrimeList.
ConvergenceReport weak_convergence_sweep(const std::vector<int>& primes, double gamma, Observable obs,
                                         const StateFamily& family = {});

struct CommutatorLimit {
    double restricted = 0.0;         // [N, E^l] + l E^l away from the wrap columns
    double full = 0.0;
    double nested[3] = {0.0, 0.0, 0.0};  // r-fold ad_N^r(E^l) - (-l)^r E^l, restricted
};
CommutatorLimit commutator_limit_check(const Dimension& dim, long long ell);

enum class ProfileCase { Linear, QOscillator, UnitCross, QuarterCross, Admissible, Custom };
const char* to_string(ProfileCase c);
ProfileCase profile_case_from_string(const std::string& s);

struct SpectrumProfile {
    int D = 0;
    long long cross = 0;
    ProfileCase tag = ProfileCase::Custom;
    int sign = 1;
    std::function<double(long long)> formula;  // f(n) for any integer n
    std::vector<double> f;                     // f(0..D-1)
    double index = 0.0;
};

SpectrumProfile make_profile(int D, ProfileCase tag, int sign = 1, long long cross = 1);
SpectrumProfile custom_profile(int D, std::function<double(long long)> formula);

// I = sum_{n=0}^{D-1} (e^{-f(n)} - e^{-f(n+1)}), f(D) from the formula.
double fujikawa_index(const SpectrumProfile& profile);

// f(n) = (1 + sign sin(gamma0 n')) / |sin(gamma0 c)| with n' = n c mod D,
// c = 1 (UnitCross) or (D-1)/4 (QuarterCross, throws CaseConditionUnmet).
SpectrumProfile limiting_spectrum(const Dimension& dim, ProfileCase tag, int sign = 1);

// Spectral fractional power E_phi^beta, eigenvalue e^{i gamma0 l beta} on |phi_l>, l = 0..D-1.
Matrix phase_power(const Dimension& dim, double beta);

struct ShiftedFockBasis {
    Dimension dim;
    double alpha = 0.0;
    Matrix vectors;  // column n is |n + alpha>
    double gram_residual = 0.0;
    double completeness_residual = 0.0;
    double shift_residual = 0.0;  // E_phi^{-alpha}|n> = |n + alpha>
};
ShiftedFockBasis build_shifted_fock(const Dimension& dim, double alpha);

struct OverlapReport {
    double exact = 0.0;     // |sin(pi a)| / (D |sin(pi a / D)|)
    double direct = 0.0;    // |<n|n+a>| from the vectors
    double residual = 0.0;
    double sinc_limit = 0.0;             // |sin(pi a)| / (pi a)
    double expansion_exact = 0.0;        // (1 - 1/D^2) / 6, coefficient of (pi a)^2
    double expansion_truncated = 0.0;    // (1 - 1/D) / 6
};
OverlapReport shifted_overlap(const Dimension& dim, double alpha);
double shifted_overlap_exact(int D, double alpha);

// max_n |E_phi^beta |n+alpha> - |n+alpha-beta>|
double shift_isomorphism_check(const Dimension& dim, double alpha, double beta);

struct EvenOddDecomposition {
    WignerGrid even, odd, full;  // half-integer J grid
    double reconstruction = 0.0;
    double even_mass = 0.0;
    double odd_mass = 0.0;
};
// Even and odd m2 partial sums of the action-angle Wigner function.
EvenOddDecomposition wigner_even_odd_decomposition(const StateVector& psi);

// max |W(J, theta) - W_c(J, theta)| with
// W_c = (1/2pi) sum_{m1} e^{i gamma0 m1 J} a^*(theta - gamma0 m1/2) a(theta + gamma0 m1/2).
double continuum_wigner_deviation(const Dimension& dim, const StateFamily& family);
ConvergenceReport phase_basis_wigner_limit(const std::vector<int>& primes, const StateFamily& family);

struct FockMatch {
    double alpha = 0.0;
    double residual = 0.0;  // max_n (1 - |<n+alpha|e_n>|) against the q-oscillator N eigenbasis
};
// NumberPhase q-oscillator with m = (0,1), m' = (1,1). Throws DegenerateDeformation for D = 2.
FockMatch qoscillator_fock_match(const Dimension& dim);

}  // namespace torus
