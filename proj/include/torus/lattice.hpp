#pragma once
// Dimension and lattice arithmetic on Z_D x Z_D, the clock/shift pair and
// the Fourier operator.

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace torus {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

enum class ErrorKind {
    InvalidDimension,
    InvalidArgument,
    UnsupportedBasis,
    NonscalarPower,
    DegenerateSpectrum,
    CollinearVectors,
    BranchAmbiguity,
    DimensionTooLarge,
    NonSymplecticMap,
    DegenerateEigensystem,
    OffGrid,
    CaseConditionUnmet,
    EmptyPrimeList,
    PhaseMismatch,
    DegenerateDeformation,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

bool is_prime(long long n);

class Dimension {
public:
    explicit Dimension(int d);
    int value() const noexcept { return d_; }
    double gamma0() const noexcept;
    bool is_prime() const noexcept { return prime_; }
    cplx omega() const;
    bool operator==(const Dimension& o) const noexcept { return d_ == o.d_; }

private:
    int d_;
    bool prime_;
};

// e^{i pi k / D} with k an exact integer; reduction is done mod 2D so that
// half-integer multiples of gamma0 keep their sign.
cplx half_phase(long long k, int d);
// e^{i gamma0 k} = e^{2 pi i k / D}
cplx root_phase(long long k, int d);

long long mod(long long a, long long n);
// inverse of a modulo n; throws InvalidArgument when gcd(a, n) != 1
long long mod_inverse(long long a, long long n);
// canonical window: {-(D-1)/2..(D-1)/2} for odd D, {0..D-1} for even D
long long window(long long a, int d);

struct LatticeVector {
    long long m1 = 0;
    long long m2 = 0;
    bool operator==(const LatticeVector& o) const noexcept { return m1 == o.m1 && m2 == o.m2; }
    bool operator!=(const LatticeVector& o) const noexcept { return !(*this == o); }
};

LatticeVector reduce(const Dimension& dim, LatticeVector v);
LatticeVector reduce(const Dimension& dim, long long a, long long b);
LatticeVector add(LatticeVector a, LatticeVector b);
LatticeVector neg(LatticeVector a);
LatticeVector scale(long long k, LatticeVector a);
bool is_zero_mod(const Dimension& dim, LatticeVector v);
// all D^2 vectors of the canonical window, m1 outer
std::vector<LatticeVector> window_vectors(const Dimension& dim);

// m1*b2 - m2*b1, exact
long long lattice_cross(LatticeVector a, LatticeVector b);
long long lattice_cross_mod(const Dimension& dim, LatticeVector a, LatticeVector b);

struct OperatorMatrix {
    Dimension dim;
    Matrix entries;
    std::string provenance;
};

enum class Basis { U, V, Number, Phase, ShiftedFock };

const char* to_string(Basis b);

struct StateVector {
    Dimension dim;
    Vector amplitudes;
    Basis basis = Basis::U;
    double alpha = 0.0;  // only meaningful for ShiftedFock
};

OperatorMatrix build_shift_operator(const Dimension& dim);
OperatorMatrix build_clock_operator(const Dimension& dim);
OperatorMatrix build_fourier_operator(const Dimension& dim);

// Columns are the basis vectors written in the standard (u) coordinates.
// Number basis coincides with the u basis; |phi>_l = |v>_{-l}.
Matrix basis_matrix(const Dimension& dim, Basis b, double alpha = 0.0);

StateVector change_basis(const StateVector& s, Basis target, double alpha = 0.0);
StateVector basis_state(const Dimension& dim, Basis b, int index, double alpha = 0.0);

// small helpers shared across modules
template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix matrix_power(const Matrix& m, long long k);
double unitarity_residual(const Matrix& m);
// V diag(values) V^dagger for orthonormal columns V
Matrix spectral_matrix(const Matrix& vecs, const std::vector<cplx>& values);
// max |A - c B| minimised over the complex scalar c; returns residual and c
double proportionality_residual(const Matrix& a, const Matrix& b, cplx* factor = nullptr);
double proportionality_residual(const Vector& a, const Vector& b, cplx* factor = nullptr);

}  // namespace torus
