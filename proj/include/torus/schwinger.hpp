#pragma once
// Schwinger unitary operator basis S_m = e^{-i g0 m1 m2 / 2} X^{m1} Y^{m2}.

#include "torus/lattice.hpp"

#include <optional>

namespace torus {

// Which conjugate pair (X, Y) plays the role of (U, V).
enum class Pair {
    ClockShift,   // X = U (shift), Y = V (clock)
    NumberPhase,  // X = E_N, Y = E_phi
};

struct SchwingerOperator {
    Dimension dim;
    LatticeVector m;  // label exactly as used to build the matrix
    OperatorMatrix op;
};

// Built from the exact integers of m; no reduction is applied, so labels
// differing by multiples of D may differ by a sign.
Matrix schwinger_matrix(const Dimension& dim, LatticeVector m, Pair pair = Pair::ClockShift);
Vector apply_schwinger(const Dimension& dim, LatticeVector m, const Vector& psi, Pair pair = Pair::ClockShift);
SchwingerOperator build_schwinger(const Dimension& dim, LatticeVector m, Pair pair = Pair::ClockShift);

// S_m (exact label) = eta * S_{reduce(m)}; eta is +1 or -1
int window_sign(const Dimension& dim, LatticeVector m);

struct Composition {
    cplx phase;                 // a.b = phase * result
    SchwingerOperator result;   // labelled in the canonical window
    double residual = 0.0;
    double trace_residual = 0.0;  // |Tr S_result - D delta|
};

Composition compose_schwinger(const SchwingerOperator& a, const SchwingerOperator& b, Pair pair = Pair::ClockShift);

struct PowerCheck {
    cplx scalar;          // (S_m)^D = scalar * I
    int predicted = 1;    // (-1)^{D m1 m2}
    double nonscalar = 0.0;
    double residual = 0.0;  // |scalar - predicted|
};

// Throws NonscalarPower if (S_m)^D is not proportional to the identity.
PowerCheck schwinger_power_check(const SchwingerOperator& s, double tol = 1e-9);

struct SchwingerEigensystem {
    Dimension dim;
    LatticeVector m;
    std::vector<cplx> eigenvalues;   // sorted by r
    std::vector<Vector> eigenvectors;
    std::vector<int> r_index;
    std::vector<double> beta;        // beta_k, k = 0..D-1
    bool degenerate = false;
    bool non_prime_warning = false;
};

// Eigenvalue index r recovered from lambda = e^{i pi m1 m2} e^{-2 pi i r/D}.
int eigen_index(const Dimension& dim, LatticeVector m, cplx lambda);
cplx closed_form_eigenvalue(const Dimension& dim, LatticeVector m, int r);

SchwingerEigensystem eigensystem_by_recursion(const Dimension& dim, LatticeVector m, Pair pair = Pair::ClockShift);

struct EigenOracleReport {
    double closed_form = 0.0;     // max |lambda_r - closed form|
    double eigen_equation = 0.0;  // max |S e - lambda e|
    double orthonormality = 0.0;
    double dense_eigenvalues = 0.0;
    double dense_eigenvectors = 0.0;  // after per-vector phase alignment
};

// Cross-checks against a dense complex eigensolver.
EigenOracleReport compare_with_dense(const SchwingerEigensystem& es, Pair pair = Pair::ClockShift);

double sine_commutator_check(const Dimension& dim, LatticeVector m, LatticeVector n, Pair pair = Pair::ClockShift);

struct WeylMatrices {
    OperatorMatrix g;
    OperatorMatrix h;
    double braid_residual = 0.0;   // |hg - w gh|
    double cyclic_residual = 0.0;  // max(|g^D - I|, |h^D - I|)
};

WeylMatrices weyl_matrices(const Dimension& dim);
// J_m = w^{m1 m2 / 2} g^{m1} h^{m2}
Matrix weyl_generator(const Dimension& dim, LatticeVector m);
// residual of [J_m, J_n] = -i (2/g0) sin(g0 m x n / 2) J_{m+n} for the D/2pi scaled J.
// The orientation sign is reversed with respect to the S_m algebra because J_m = S_{(-m2,-m1)}.
double weyl_sine_check(const Dimension& dim, LatticeVector m, LatticeVector n);

// Hilbert-Schmidt Gram rank of {S_m} over the canonical window.
int schwinger_gram_rank(const Dimension& dim, double tol = 1e-9);

}  // namespace torus
