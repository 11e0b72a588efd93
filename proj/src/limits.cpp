#include "torus/limits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace torus {

namespace {

constexpr double kPi = std::numbers::pi;

cplx expi(double a) { return {std::cos(a), std::sin(a)}; }

// Neumaier compensated sum
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        comp_ += std::abs(sum_) >= std::abs(x) ? (sum_ - t) + x : (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0, comp_ = 0.0;
};

bool strictly_decreasing(const std::vector<double>& v) {
    for (size_t i = 1; i < v.size(); ++i)
        if (!(v[i] < v[i - 1])) return false;
    return true;
}

// sin(gamma0 k) with k reduced exactly
double sin_root(long long k, int d) { return root_phase(k, d).imag(); }

}  // namespace

const char* to_string(Observable o) { return o == Observable::NumberExp ? "E_N" : "E_phi"; }

cplx StateFamily::amplitude(double phi) const {
    switch (kind) {
        case FamilyKind::Gaussian: {
            double g = 0.0;
            for (int w = -3; w <= 3; ++w) {
                const double x = phi - center + 2.0 * kPi * w;
                g += std::exp(-x * x / (4.0 * sigma * sigma));
            }
            return g * expi(-n0 * phi);
        }
        case FamilyKind::NumberState:
            return expi(-n0 * phi);
        case FamilyKind::PhaseDelta:
            break;
    }
    throw Error(ErrorKind::InvalidArgument, "phase delta has no continuum amplitude");
}

StateVector StateFamily::state(const Dimension& dim) const {
    const int d = dim.value();
    Vector a = Vector::Zero(d);
    if (kind == FamilyKind::PhaseDelta) {
        a(mod(std::llround(center / dim.gamma0()), d)) = 1.0;
    } else {
        for (int l = 0; l < d; ++l) a(l) = amplitude(dim.gamma0() * l);
    }
    a.normalize();
    return change_basis(StateVector{dim, a, Basis::Phase, 0.0}, Basis::U);
}

ConvergenceReport weak_convergence_sweep(const std::vector<int>& primes, double gamma, Observable obs, const StateFamily& family) {
    if (primes.empty()) throw Error(ErrorKind::EmptyPrimeList, "no dimensions to sweep");
    ConvergenceReport rep{primes, to_string(obs), {}, gamma, false};
    for (int p : primes) {
        const Dimension dim(p);
        const double g0 = dim.gamma0();
        double r = 0.0;
        if (obs == Observable::NumberExp) {
            const Vector psi = family.state(dim).amplitudes;
            const long long m1 = std::llround(gamma * p / (2.0 * kPi));
            for (int n = 0; n < p; ++n)
                r += std::norm(psi(n)) * std::norm(root_phase(-m1 * n, p) - expi(-gamma * n));
        } else if (family.kind == FamilyKind::PhaseDelta) {
            const long long l = std::llround(family.center / g0);
            r = std::norm(root_phase(l, p) - expi(family.center));
        } else {
            // per-cell midpoint rule; the grid phase is constant on each cell
            const int sub = 256;
            CompensatedSum num, den;
            for (int l = 0; l < p; ++l) {
                const cplx e = root_phase(l, p);
                for (int s = 0; s < sub; ++s) {
                    const double phi = g0 * (l - 0.5 + (s + 0.5) / sub);
                    const double w = std::norm(family.amplitude(phi));
                    num.add(w * std::norm(e - expi(phi)));
                    den.add(w);
                }
            }
            r = num.value() / den.value();
        }
        rep.residuals.push_back(r);
    }
    rep.monotone_decreasing = strictly_decreasing(rep.residuals);
    return rep;
}

CommutatorLimit commutator_limit_check(const Dimension& dim, long long ell) {
    const int d = dim.value();
    ell %= d;
    Matrix ephi = Matrix::Zero(d, d);
    for (int k = 0; k < d; ++k) ephi(mod(k - 1, d), k) = 1.0;
    const Matrix e = ell >= 0 ? matrix_power(ephi, ell) : matrix_power(Matrix(ephi.adjoint()), -ell);
    Matrix n = Matrix::Zero(d, d);
    for (int k = 0; k < d; ++k) n(k, k) = k;
    // entries (a, b) of E^l with a != b - l come from the cyclic wrap
    auto restricted = [&](const Matrix& m) {
        double r = 0.0;
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                const bool wrap = std::abs(e(a, b)) > 0.5 && a != b - ell;
                if (!wrap) r = std::max(r, std::abs(m(a, b)));
            }
        return r;
    };
    CommutatorLimit out;
    const Matrix c = commutator(n, e) + static_cast<double>(ell) * e;
    out.restricted = restricted(c);
    out.full = max_abs(c);
    Matrix x = e;
    double coeff = 1.0;
    for (int r = 0; r < 3; ++r) {
        x = commutator(n, x);
        coeff *= -static_cast<double>(ell);
        out.nested[r] = restricted(Matrix(x - coeff * e));
    }
    return out;
}

const char* to_string(ProfileCase c) {
    switch (c) {
        case ProfileCase::Linear: return "linear";
        case ProfileCase::QOscillator: return "qosc";
        case ProfileCase::UnitCross: return "unit-cross";
        case ProfileCase::QuarterCross: return "quarter-cross";
        case ProfileCase::Admissible: return "admissible";
        case ProfileCase::Custom: return "custom";
    }
    return "custom";
}

ProfileCase profile_case_from_string(const std::string& s) {
    for (ProfileCase c : {ProfileCase::Linear, ProfileCase::QOscillator, ProfileCase::UnitCross, ProfileCase::QuarterCross,
                          ProfileCase::Admissible, ProfileCase::Custom})
        if (s == to_string(c)) return c;
    throw Error(ErrorKind::InvalidArgument, "unknown profile case: " + s);
}

SpectrumProfile make_profile(int D, ProfileCase tag, int sign, long long cross) {
    const Dimension dim(D);
    const double g0 = dim.gamma0();
    const double sg = sign >= 0 ? 1.0 : -1.0;
    SpectrumProfile p;
    p.D = D;
    p.tag = tag;
    p.sign = sign >= 0 ? 1 : -1;
    p.cross = cross;
    switch (tag) {
        case ProfileCase::Linear:
            p.formula = [g0](long long n) { return 1.0 / g0 + static_cast<double>(n); };
            break;
        case ProfileCase::QOscillator: {
            if (mod(2 * cross, D) == 0) throw Error(ErrorKind::DegenerateDeformation, "sin(gamma0 c) = 0");
            // C + sin(theta (n + (D-1)/2)) / sin(theta), theta = gamma0 c
            const double st = sin_root(cross, D);
            p.formula = [D, cross, st](long long n) {
                return 1.0 / std::abs(st) + half_phase(cross * (2 * n + D - 1), D).imag() / st;
            };
            break;
        }
        case ProfileCase::UnitCross:
        case ProfileCase::QuarterCross:
        case ProfileCase::Custom: {
            if (mod(cross, D) == 0 || mod(2 * cross, D) == 0) throw Error(ErrorKind::DegenerateDeformation, "sin(gamma0 c) = 0");
            const double st = std::abs(sin_root(cross, D));
            p.formula = [D, cross, st, sg](long long n) { return (1.0 + sg * sin_root(mod(n * cross, D), D)) / st; };
            break;
        }
        case ProfileCase::Admissible:
            p.formula = [D, g0, sg](long long n) { return (1.0 + sg * sin_root(mod(n, D), D)) / g0; };
            break;
    }
    for (int n = 0; n < D; ++n) p.f.push_back(p.formula(n));
    p.index = fujikawa_index(p);
    return p;
}

SpectrumProfile custom_profile(int D, std::function<double(long long)> formula) {
    SpectrumProfile p;
    p.D = D;
    p.tag = ProfileCase::Custom;
    p.formula = std::move(formula);
    for (int n = 0; n < D; ++n) p.f.push_back(p.formula(n));
    p.index = fujikawa_index(p);
    return p;
}

double fujikawa_index(const SpectrumProfile& profile) {
    CompensatedSum s;
    for (long long n = 0; n < profile.D; ++n) {
        s.add(std::exp(-profile.formula(n)));
        s.add(-std::exp(-profile.formula(n + 1)));
    }
    return s.value();
}

SpectrumProfile limiting_spectrum(const Dimension& dim, ProfileCase tag, int sign) {
    const int d = dim.value();
    long long c = 1;
    if (tag == ProfileCase::QuarterCross) {
        if ((d - 1) % 4 != 0) throw Error(ErrorKind::CaseConditionUnmet, "(D-1)/4 is not an integer");
        c = (d - 1) / 4;
    } else if (tag != ProfileCase::UnitCross) {
        throw Error(ErrorKind::InvalidArgument, "limiting cases are unit-cross and quarter-cross");
    }
    return make_profile(d, tag, sign, c);
}

Matrix phase_power(const Dimension& dim, double beta) {
    const int d = dim.value();
    const Matrix ph = basis_matrix(dim, Basis::Phase);
    std::vector<cplx> vals(d);
    for (int l = 0; l < d; ++l) vals[l] = expi(dim.gamma0() * l * beta);
    return spectral_matrix(ph, vals);
}

ShiftedFockBasis build_shifted_fock(const Dimension& dim, double alpha) {
    const int d = dim.value();
    ShiftedFockBasis b{dim, alpha, basis_matrix(dim, Basis::ShiftedFock, alpha)};
    const Matrix id = Matrix::Identity(d, d);
    b.gram_residual = max_abs(Matrix(b.vectors.adjoint() * b.vectors - id));
    b.completeness_residual = max_abs(Matrix(b.vectors * b.vectors.adjoint() - id));
    b.shift_residual = max_abs(Matrix(phase_power(dim, -alpha) - b.vectors));
    return b;
}

double shifted_overlap_exact(int D, double alpha) {
    const double den = D * std::abs(std::sin(kPi * alpha / D));
    if (den < 1e-300) return 1.0;
    return std::abs(std::sin(kPi * alpha)) / den;
}

OverlapReport shifted_overlap(const Dimension& dim, double alpha) {
    const int d = dim.value();
    OverlapReport r;
    r.exact = shifted_overlap_exact(d, alpha);
    if (d <= 64) {
        const Matrix v = basis_matrix(dim, Basis::ShiftedFock, alpha);
        r.direct = std::abs(v(0, 0));
        for (int n = 0; n < d; ++n) r.residual = std::max(r.residual, std::abs(std::abs(v(n, n)) - r.exact));
    } else {
        // <0|alpha> = D^{-1} sum_l e^{-i gamma0 alpha l}
        CompensatedSum re, im;
        for (int l = 0; l < d; ++l) {
            const cplx z = expi(-dim.gamma0() * alpha * l);
            re.add(z.real());
            im.add(z.imag());
        }
        r.direct = std::abs(cplx(re.value(), im.value())) / d;
        r.residual = std::abs(r.direct - r.exact);
    }
    r.sinc_limit = alpha == 0.0 ? 1.0 : std::abs(std::sin(kPi * alpha)) / (kPi * std::abs(alpha));
    r.expansion_exact = (1.0 - 1.0 / (static_cast<double>(d) * d)) / 6.0;
    r.expansion_truncated = (1.0 - 1.0 / d) / 6.0;
    return r;
}

double shift_isomorphism_check(const Dimension& dim, double alpha, double beta) {
    const Matrix lhs = phase_power(dim, beta) * basis_matrix(dim, Basis::ShiftedFock, alpha);
    return max_abs(Matrix(lhs - basis_matrix(dim, Basis::ShiftedFock, alpha - beta)));
}

EvenOddDecomposition wigner_even_odd_decomposition(const StateVector& psi) {
    EvenOddDecomposition out{wigner_number_phase_parity(psi, true, 0), wigner_number_phase_parity(psi, true, 1),
                             wigner_number_phase(psi, true, "full")};
    out.reconstruction = max_abs(Eigen::MatrixXd(out.even.values + out.odd.values - out.full.values));
    out.even_mass = action_angle_mass(out.even);
    out.odd_mass = action_angle_mass(out.odd);
    return out;
}

double continuum_wigner_deviation(const Dimension& dim, const StateFamily& family) {
    if (!family.smooth()) throw Error(ErrorKind::InvalidArgument, "continuum comparison needs a smooth family");
    const int d = dim.value();
    const double g0 = dim.gamma0();
    const WignerGrid w = wigner_number_phase(family.state(dim));
    double norm = 0.0;
    for (int l = 0; l < d; ++l) norm += std::norm(family.amplitude(g0 * l));
    const int h = d / 2;
    const int lo = d % 2 == 0 ? 0 : -h;
    double dev = 0.0;
    for (int l = 0; l < d; ++l) {
        const double theta = g0 * l;
        std::vector<cplx> prod(d);
        for (int i = 0; i < d; ++i) {
            const double m1 = i + lo;
            prod[i] = std::conj(family.amplitude(theta - g0 * m1 / 2.0)) * family.amplitude(theta + g0 * m1 / 2.0) / norm;
        }
        for (int J = 0; J < d; ++J) {
            cplx s = 0.0;
            for (int i = 0; i < d; ++i) s += root_phase(static_cast<long long>(i + lo) * J, d) * prod[i];
            s /= 2.0 * kPi;
            dev = std::max(dev, std::abs(s - w.values(J, l)));
        }
    }
    return dev;
}

ConvergenceReport phase_basis_wigner_limit(const std::vector<int>& primes, const StateFamily& family) {
    if (primes.empty()) throw Error(ErrorKind::EmptyPrimeList, "no dimensions to sweep");
    ConvergenceReport rep{primes, "continuum-wigner", {}, 0.0, false};
    for (int p : primes) rep.residuals.push_back(continuum_wigner_deviation(Dimension(p), family));
    rep.monotone_decreasing = strictly_decreasing(rep.residuals);
    return rep;
}

FockMatch qoscillator_fock_match(const Dimension& dim) {
    const int d = dim.value();
    const QOscillator osc = build_q_oscillator(dim, {0, 1}, {1, 1}, Pair::NumberPhase);
    FockMatch m;
    m.alpha = std::fmod((d - 1) / 2.0, 1.0);
    const Matrix fock = basis_matrix(dim, Basis::ShiftedFock, m.alpha);
    for (int n = 0; n < d; ++n)
        m.residual = std::max(m.residual, 1.0 - std::abs(fock.col(n).dot(osc.n_basis.col(n))));
    return m;
}

}  // namespace torus
