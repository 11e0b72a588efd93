#pragma once
// Deformed subalgebras spanned by A = d S_m + d' S_m': the u_{p^{1/2}}(sl(2))
// realisation and the spectrum-shifted q-oscillator.

#include "torus/schwinger.hpp"

#include <functional>
#include <optional>

namespace torus {

// [x] = sin(theta x) / sin(theta / 2), the p^{1/2} bracket with p = e^{-i theta}
double sl2_bracket(double theta, double x);
// [x] = sin(theta x) / sin(theta), the q bracket with q = e^{-i theta}
double q_bracket(double theta, double x);

// Ladder values J with e^{-i gamma0 c J} = w for unit-modulus w: J = h0 + k,
// k integer, wrapped into [-D/2, D/2). h0 is 0 when every w is a D-th root
// of unity and frac(D / 2c) otherwise.
struct LadderValues {
    std::vector<double> values;
    double offset = 0.0;
};
LadderValues ladder_values(const Dimension& dim, long long c, const std::vector<cplx>& w);

struct UqSl2Realisation {
    Dimension dim;
    LatticeVector m, mp;
    long long cross = 0;
    cplx d, dp;
    cplx p, p_half, s_p, s_tilde_p;
    OperatorMatrix A, Adag, J3;
    Matrix eigvecs;                  // orthonormal eigenbasis of S_{m-m'}
    std::vector<double> j3_values;   // J3 eigenvalue per eigvecs column
    double j3_offset = 0.0;
    double coefficient_residual = 0.0;
    double intertwine_residual = 0.0;      // A S = p S A
    double intertwine_conj_residual = 0.0; // A S^dagger = p^{-1} S^dagger A
    double j3_residual = 0.0;              // S_{m-m'} = s_p p^{J3}
    double commutator_residual = 0.0;      // [A, A^dagger] + [J3 + D/2]
    double ladder_residual = 0.0;          // A J3 = (J3 + 1) A away from the cyclic wrap
    double ladder_full_residual = 0.0;
    double ladder_cyclic_residual = 0.0;   // A p^{J3} = p p^{J3} A
};

// Throws CollinearVectors when m x m' = 0 mod D and BranchAmbiguity when
// m x m' is not invertible mod D.
UqSl2Realisation build_uq_sl2(const Dimension& dim, LatticeVector m, LatticeVector mp);
// f(J3) evaluated spectrally
Matrix sl2_function(const UqSl2Realisation& r, const std::function<cplx(double)>& f);

struct CasimirReport {
    Matrix form1;  // A^dagger A + [(J3 + D/2 - 1/2)/2]^2
    Matrix form2;  // A A^dagger + [(J3 + D/2 + 1/2)/2]^2
    double forms_residual = 0.0;
    double commutes_A = 0.0;
    double commutes_Adag = 0.0;
    double commutes_J3 = 0.0;
    double value = 0.0;            // Tr C / D
    double scalar_residual = 0.0;  // |C - value I|
    double predicted = 0.0;        // 1 / sin^2(gamma0 c / 2)
    bool vanishes = false;
};
CasimirReport casimir_uq_sl2(const UqSl2Realisation& r);

struct QOscillator {
    Dimension dim;
    LatticeVector m, mp;
    Pair pair = Pair::ClockShift;
    long long cross = 0;
    cplx q;
    cplx d, dp;
    int sigma = 1;   // d d'^* = sigma / (q^{-1} - q)
    double C = 0.0;
    cplx c_q;
    OperatorMatrix A, Adag, N, Q;
    Matrix n_basis;              // column n is the N eigenvector with eigenvalue n
    std::vector<double> spectrum;  // f(n) = C + [n + (D-1)/2]
    double q_commutator_residual = 0.0;  // A A^dag - q A^dag A - C(1-q) - Q
    double aq_residual = 0.0;            // A Q = q^{-1} Q A
    double q_power_residual = 0.0;       // Q = c_q q^{-N}
    double casimir_residual = 0.0;       // A^dag A - C - [N]
    double ladder_residual = 0.0;        // A N = (N+1) A off the wrap
    double ladder_conj_residual = 0.0;   // A^dag N = (N-1) A^dag off the wrap
    double ladder_full_residual = 0.0;
    double ladder_cyclic_residual = 0.0; // A q^N = q q^N A
    double centrality_residual = 0.0;    // [A^D, A], [A^D, A^dag]
};

// Throws CollinearVectors, DegenerateDeformation (sin(gamma0 c) = 0) or
// BranchAmbiguity (c not invertible mod D).
QOscillator build_q_oscillator(const Dimension& dim, LatticeVector m, LatticeVector mp, Pair pair = Pair::ClockShift);
double q_oscillator_spectrum(const Dimension& dim, long long cross, double n);

struct LowestWeightReport {
    bool degenerate = false;       // sin(gamma0 c) = 0; C is not finite
    bool solution_exists = false;  // C = -[n0] for some n0
    int n0 = -1;
    double margin = 0.0;           // min_n |C + [n]|
    bool irreducible = true;
};
LowestWeightReport lowest_weight_scan(const Dimension& dim, LatticeVector m, LatticeVector mp, double tol = 1e-9);
LowestWeightReport lowest_weight_scan(const QOscillator& osc, double tol = 1e-9);

struct EigenCorrespondence {
    std::vector<int> r;
    std::vector<int> n;
    std::vector<cplx> g, f, lambda;
    int r_offset = 0;                 // r = n c + r_offset mod D
    bool r_map_consistent = false;
    double leakage = 0.0;             // S_m |r> outside span |r - c>
    double unit_modulus = 0.0;
    double amplitude_residual = 0.0;  // |d g + d' f|^2 - f(n)
    double ratio_residual = 0.0;      // g/f = sigma e^{-i gamma0 (n + (D-1)/2) c}
    double lambda_residual = 0.0;     // lambda = sigma e^{-i gamma0 (n + D/2) c}
    double conjugate_ratio_residual = 0.0;  // against g/f = e^{+i gamma0 (n + (D-1)/2) c}
    double shifted_lambda_residual = 0.0;  // against lambda = e^{i gamma0 (n - D/2) c}
    cplx holonomy;                    // prod_r g_r f_r, gauge invariant
    bool conjugate_gauge_reachable = false;  // g = f^* attainable iff holonomy = 1
};

// Throws PhaseMismatch when a gauge-invariant identity fails.
EigenCorrespondence eigenbasis_correspondence(const QOscillator& osc, double tol = 1e-9);

struct CoproductReport {
    double commutator_residual = 0.0;  // [dX, dX^dag] + s [dH]
    double intertwine_residual = 0.0;  // dX p^{dH} = p p^{dH} dX
    double single_residual = 0.0;      // same relations on one factor
    double additivity_residual = 0.0;  // dH spectrum = pairwise sums
    long long even_cross = 0;          // representative of c used for the root p^{1/2}
    int sign = 1;
    double residual() const;
};
// Second factor defaults to the first. Throws DimensionTooLarge for D > 7.
CoproductReport coproduct_check(const Dimension& dim, LatticeVector m, LatticeVector mp,
                                std::optional<std::pair<LatticeVector, LatticeVector>> second = std::nullopt);

struct TranslatedDeformation {
    long long delta_alpha = 0;
    cplx p, p_prime;
    double residual = 0.0;
};
TranslatedDeformation translated_lattice_deformation(const Dimension& dim, LatticeVector m, LatticeVector mp, LatticeVector r);

}  // namespace torus
