#include "torus/lattice.hpp"

#include <cmath>
#include <numbers>
#include <tuple>
#include <utility>

namespace torus {

const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidDimension: return "invalid-dimension";
        case ErrorKind::InvalidArgument: return "invalid-argument";
        case ErrorKind::UnsupportedBasis: return "unsupported-basis";
        case ErrorKind::NonscalarPower: return "nonscalar-power";
        case ErrorKind::DegenerateSpectrum: return "degenerate-spectrum";
        case ErrorKind::CollinearVectors: return "collinear-vectors";
        case ErrorKind::BranchAmbiguity: return "branch-ambiguity";
        case ErrorKind::DimensionTooLarge: return "dimension-too-large";
        case ErrorKind::NonSymplecticMap: return "non-symplectic-map";
        case ErrorKind::DegenerateEigensystem: return "degenerate-eigensystem";
        case ErrorKind::OffGrid: return "off-grid";
        case ErrorKind::CaseConditionUnmet: return "case-condition-unmet";
        case ErrorKind::EmptyPrimeList: return "empty-prime-list";
        case ErrorKind::PhaseMismatch: return "phase-mismatch";
        case ErrorKind::DegenerateDeformation: return "degenerate-deformation";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

Dimension::Dimension(int d) : d_(d), prime_(torus::is_prime(d)) {
    if (d < 2) throw Error(ErrorKind::InvalidDimension, "D must be >= 2, got " + std::to_string(d));
}

double Dimension::gamma0() const noexcept { return 2.0 * std::numbers::pi / d_; }

cplx Dimension::omega() const { return root_phase(1, d_); }

long long mod(long long a, long long n) {
    long long r = a % n;
    return r < 0 ? r + n : r;
}

long long mod_inverse(long long a, long long n) {
    long long r0 = n, r1 = mod(a, n), s0 = 0, s1 = 1;
    while (r1 != 0) {
        const long long q = r0 / r1;
        std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
        std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
    }
    if (r0 != 1) throw Error(ErrorKind::InvalidArgument, std::to_string(a) + " is not invertible mod " + std::to_string(n));
    return mod(s0, n);
}

cplx half_phase(long long k, int d) {
    long long r = mod(k, 2LL * d);
    double ang = std::numbers::pi * static_cast<double>(r) / d;
    return {std::cos(ang), std::sin(ang)};
}

cplx root_phase(long long k, int d) { return half_phase(2 * mod(k, d), d); }

long long window(long long a, int d) {
    long long r = mod(a, d);
    if (d % 2 == 1 && r > (d - 1) / 2) r -= d;
    return r;
}

LatticeVector reduce(const Dimension& dim, LatticeVector v) {
    return {window(v.m1, dim.value()), window(v.m2, dim.value())};
}

LatticeVector reduce(const Dimension& dim, long long a, long long b) { return reduce(dim, LatticeVector{a, b}); }

LatticeVector add(LatticeVector a, LatticeVector b) { return {a.m1 + b.m1, a.m2 + b.m2}; }
LatticeVector neg(LatticeVector a) { return {-a.m1, -a.m2}; }
LatticeVector scale(long long k, LatticeVector a) { return {k * a.m1, k * a.m2}; }

bool is_zero_mod(const Dimension& dim, LatticeVector v) {
    return mod(v.m1, dim.value()) == 0 && mod(v.m2, dim.value()) == 0;
}

std::vector<LatticeVector> window_vectors(const Dimension& dim) {
    const int d = dim.value();
    const long long lo = d % 2 == 1 ? -(d - 1) / 2 : 0;
    std::vector<LatticeVector> out;
    out.reserve(static_cast<size_t>(d) * d);
    for (long long a = lo; a < lo + d; ++a)
        for (long long b = lo; b < lo + d; ++b) out.push_back({a, b});
    return out;
}

long long lattice_cross(LatticeVector a, LatticeVector b) { return a.m1 * b.m2 - a.m2 * b.m1; }

long long lattice_cross_mod(const Dimension& dim, LatticeVector a, LatticeVector b) {
    return mod(lattice_cross(a, b), dim.value());
}

const char* to_string(Basis b) {
    switch (b) {
        case Basis::U: return "u";
        case Basis::V: return "v";
        case Basis::Number: return "number";
        case Basis::Phase: return "phase";
        case Basis::ShiftedFock: return "shifted-fock";
    }
    return "unknown";
}

OperatorMatrix build_shift_operator(const Dimension& dim) {
    const int d = dim.value();
    Matrix u = Matrix::Zero(d, d);
    for (int k = 0; k < d; ++k) u((k + 1) % d, k) = 1.0;
    return {dim, u, "shift"};
}

OperatorMatrix build_clock_operator(const Dimension& dim) {
    const int d = dim.value();
    Matrix v = Matrix::Zero(d, d);
    for (int k = 0; k < d; ++k) v(k, k) = root_phase(-k, d);
    return {dim, v, "clock"};
}

OperatorMatrix build_fourier_operator(const Dimension& dim) {
    const int d = dim.value();
    const double s = 1.0 / std::sqrt(static_cast<double>(d));
    Matrix f(d, d);
    for (int k = 0; k < d; ++k)
        for (int j = 0; j < d; ++j) f(k, j) = s * root_phase(-static_cast<long long>(k) * j, d);
    return {dim, f, "fourier"};
}

Matrix basis_matrix(const Dimension& dim, Basis b, double alpha) {
    const int d = dim.value();
    const double s = 1.0 / std::sqrt(static_cast<double>(d));
    Matrix out(d, d);
    switch (b) {
        case Basis::U:
        case Basis::Number:
            return Matrix::Identity(d, d);
        case Basis::V:
            // |v>_l = D^{-1/2} sum_k e^{-i g0 k l} |u>_k
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) out(k, l) = s * root_phase(-static_cast<long long>(k) * l, d);
            return out;
        case Basis::Phase:
            // |phi>_l = D^{-1/2} sum_n e^{i g0 n l} |n>
            for (int n = 0; n < d; ++n)
                for (int l = 0; l < d; ++l) out(n, l) = s * root_phase(static_cast<long long>(n) * l, d);
            return out;
        case Basis::ShiftedFock: {
            // |n+a> = D^{-1/2} sum_l e^{-i g0 (n+a) l} |phi>_l
            const Matrix phi = basis_matrix(dim, Basis::Phase);
            Matrix coef(d, d);
            const double g0 = dim.gamma0();
            for (int l = 0; l < d; ++l)
                for (int n = 0; n < d; ++n) {
                    const double ang = -g0 * (n + alpha) * l;
                    coef(l, n) = s * cplx(std::cos(ang), std::sin(ang));
                }
            return phi * coef;
        }
    }
    throw Error(ErrorKind::UnsupportedBasis, "unknown basis tag");
}

StateVector change_basis(const StateVector& s, Basis target, double alpha) {
    if (s.amplitudes.size() != s.dim.value())
        throw Error(ErrorKind::InvalidArgument, "state length does not match dimension");
    const Matrix from = basis_matrix(s.dim, s.basis, s.alpha);
    const Matrix to = basis_matrix(s.dim, target, alpha);
    Vector std_amp = from * s.amplitudes;
    StateVector out{s.dim, to.adjoint() * std_amp, target, target == Basis::ShiftedFock ? alpha : 0.0};
    return out;
}

StateVector basis_state(const Dimension& dim, Basis b, int index, double alpha) {
    const int d = dim.value();
    Vector e = Vector::Zero(d);
    e(static_cast<int>(mod(index, d))) = 1.0;
    StateVector s{dim, e, b, b == Basis::ShiftedFock ? alpha : 0.0};
    return change_basis(s, Basis::U);
}


Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix matrix_power(const Matrix& m, long long k) {
    if (k < 0) return matrix_power(m.inverse(), -k);
    Matrix result = Matrix::Identity(m.rows(), m.cols());
    Matrix base = m;
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

double unitarity_residual(const Matrix& m) {
    return max_abs(m.adjoint() * m - Matrix::Identity(m.rows(), m.cols()));
}

Matrix spectral_matrix(const Matrix& vecs, const std::vector<cplx>& values) {
    Matrix scaled = vecs;
    for (int j = 0; j < scaled.cols(); ++j) scaled.col(j) *= values[j];
    return scaled * vecs.adjoint();
}

double proportionality_residual(const Matrix& a, const Matrix& b, cplx* factor) {
    const cplx num = (b.adjoint() * a).trace();
    const double den = b.squaredNorm();
    const cplx c = den > 0 ? num / den : cplx(0.0);
    if (factor) *factor = c;
    return max_abs(Matrix(a - c * b));
}

double proportionality_residual(const Vector& a, const Vector& b, cplx* factor) {
    const cplx num = b.dot(a);
    const double den = b.squaredNorm();
    const cplx c = den > 0 ? num / den : cplx(0.0);
    if (factor) *factor = c;
    return max_abs(Vector(a - c * b));
}

}  // namespace torus
