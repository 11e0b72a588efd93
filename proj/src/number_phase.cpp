#include "torus/number_phase.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace torus {

namespace {

// table of e^{i pi k / D}, k = 0..2D-1
std::vector<cplx> half_table(int d) {
    std::vector<cplx> t(2 * d);
    for (int k = 0; k < 2 * d; ++k) t[k] = half_phase(k, d);
    return t;
}

cplx expi(double a) { return {std::cos(a), std::sin(a)}; }

bool integral(double x) { return std::abs(x - std::round(x)) < 1e-12; }

}  // namespace

PhasePair build_phase_pair(const Dimension& dim) {
    const int d = dim.value();
    Matrix ephi = Matrix::Zero(d, d);
    for (int n = 0; n < d; ++n) ephi(mod(n - 1, d), n) = 1.0;
    Matrix en = Matrix::Zero(d, d);
    for (int n = 0; n < d; ++n) en(n, n) = root_phase(-n, d);

    PhasePair p{dim, {dim, ephi, "phase-operator"}, {dim, en, "number-exponential"}, basis_matrix(dim, Basis::Phase)};
    const Matrix& ph = p.phase_states;
    for (int l = 0; l < d; ++l) {
        p.phase_eigen_residual = std::max(p.phase_eigen_residual, max_abs(Vector(ephi * ph.col(l) - root_phase(l, d) * ph.col(l))));
        p.ladder_residual = std::max(p.ladder_residual, max_abs(Vector(en * ph.col(l) - ph.col(mod(l - 1, d)))));
        Vector n = Vector::Zero(d);
        n(l) = 1.0;
        p.number_eigen_residual = std::max(p.number_eigen_residual, max_abs(Vector(en * n - root_phase(-l, d) * n)));
    }
    const Matrix id = Matrix::Identity(d, d);
    p.orthonormality_residual = max_abs(Matrix(ph.adjoint() * ph - id));
    p.completeness_residual = max_abs(Matrix(ph * ph.adjoint() - id));

    // E_N^a is diagonal, so products with it are row or column scalings
    std::vector<Vector> en_pow(d);
    std::vector<Matrix> ephi_pow(d);
    en_pow[0] = Vector::Ones(d);
    ephi_pow[0] = id;
    for (int k = 1; k < d; ++k) {
        en_pow[k] = en.diagonal().cwiseProduct(en_pow[k - 1]);
        ephi_pow[k] = ephi * ephi_pow[k - 1];
    }
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const Matrix lhs = en_pow[a].asDiagonal() * ephi_pow[b];
            const Matrix rhs = ephi_pow[b] * en_pow[a].asDiagonal();
            p.commutation_residual = std::max(p.commutation_residual, max_abs(Matrix(lhs - root_phase(static_cast<long long>(a) * b, d) * rhs)));
        }
    for (const LatticeVector& m : window_vectors(dim)) {
        const Matrix built = half_phase(-m.m1 * m.m2, d) * (en_pow[mod(m.m1, d)].asDiagonal() * ephi_pow[mod(m.m2, d)]);
        p.identification_residual = std::max(p.identification_residual, max_abs(Matrix(built - schwinger_matrix(dim, m, Pair::NumberPhase))));
    }
    return p;
}

NumberExpansion expand_number_function(const Dimension& dim, const std::vector<double>& f, LatticeVector m, LatticeVector mp) {
    const int d = dim.value();
    if (static_cast<int>(f.size()) != d) throw Error(ErrorKind::InvalidArgument, "f must have D values");
    const QOscillator osc = build_q_oscillator(dim, m, mp, Pair::NumberPhase);
    const long long cinv = mod_inverse(mod(osc.cross, d), d);
    const Matrix base = osc.Q.entries / osc.c_q;  // q^{-N}
    const LatticeVector step = add(mp, neg(m));

    NumberExpansion out{dim, m, mp, {}, {dim, Matrix::Zero(d, d), "number-function"}, osc.n_basis};
    Matrix& rec = out.reconstruction.entries;
    for (int k = 0; k < d; ++k) {
        ExpansionTerm t;
        t.k = k;
        for (int n = 0; n < d; ++n) t.coefficient += root_phase(static_cast<long long>(k) * n, d) * f[n];
        t.power = mod(-k * cinv, d);
        t.label = reduce(dim, scale(t.power, step));
        const Matrix tk = matrix_power(base, t.power);
        out.phase_residual = std::max(out.phase_residual, proportionality_residual(tk, schwinger_matrix(dim, t.label, Pair::NumberPhase), &t.phase));
        rec += t.coefficient * t.phase * schwinger_matrix(dim, t.label, Pair::NumberPhase);
        out.terms.push_back(t);
    }
    rec /= static_cast<double>(d);
    std::vector<cplx> fc(f.begin(), f.end());
    out.spectral_residual = max_abs(Matrix(rec - spectral_matrix(osc.n_basis, fc)));
    Matrix diag = Matrix::Zero(d, d);
    for (int n = 0; n < d; ++n) diag(n, n) = f[n];
    out.diagonal_residual = max_abs(Matrix(rec - diag));
    return out;
}

ActionAngleKernel build_action_angle_kernel(const Dimension& dim, double J, double theta) {
    const int d = dim.value();
    const double g0 = dim.gamma0();
    const bool exact = integral(2.0 * J) && integral(theta / g0);
    Matrix k = Matrix::Zero(d, d);
    for (const LatticeVector& m : window_vectors(dim)) {
        const cplx ph = exact ? half_phase(m.m1 * std::llround(2.0 * J) - 2 * m.m2 * std::llround(theta / g0), d)
                              : expi(g0 * static_cast<double>(m.m1) * J - static_cast<double>(m.m2) * theta);
        k += ph * schwinger_matrix(dim, m, Pair::NumberPhase);
    }
    k /= 2.0 * std::numbers::pi * d;
    return {dim, J, theta, {dim, k, "action-angle-kernel"}, Normalisation::ActionAngle, exact};
}

Matrix action_angle_kernel_phase_form(const Dimension& dim, double J, double theta) {
    const int d = dim.value();
    const double g0 = dim.gamma0();
    const Matrix ph = basis_matrix(dim, Basis::Phase);
    Matrix k = Matrix::Zero(d, d);
    for (const LatticeVector& m : window_vectors(dim)) {
        const double a = g0 * static_cast<double>(m.m1) * J - static_cast<double>(m.m2) * theta + g0 * static_cast<double>(m.m1 * m.m2) / 2.0;
        for (int l = 0; l < d; ++l) {
            const cplx w = expi(a + g0 * static_cast<double>(l * m.m2));
            k += w * ph.col(l) * ph.col(mod(l + m.m1, d)).adjoint();
        }
    }
    return k / (2.0 * std::numbers::pi * d);
}

namespace {

WignerGrid np_grid(const StateVector& psi, bool half_integer, const std::string& state_ref, int parity) {
    const Dimension& dim = psi.dim;
    const int d = dim.value();
    const Vector x = change_basis(psi, Basis::Number).amplitudes;
    const int h = d / 2;
    const auto tab = half_table(d);
    auto ph = [&](long long k) { return tab[mod(k, 2 * d)]; };

    // c(m) = <psi|S_m|psi>, indexed by window offsets
    const auto labels = window_vectors(dim);
    const long long lo = d % 2 == 0 ? 0 : -h;
    Matrix c(d, d);
    for (const LatticeVector& m : labels)
        c(m.m1 - lo, m.m2 - lo) = parity >= 0 && mod(m.m2, 2) != parity ? cplx(0.0)
                                                                         : x.dot(apply_schwinger(dim, m, x, Pair::NumberPhase));

    const int nj = half_integer ? 2 * d : d;
    // B(m1, l) = sum_m2 e^{-i gamma0 m2 l} c(m1, m2)
    Matrix b = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i)
        for (int l = 0; l < d; ++l)
            for (int j = 0; j < d; ++j) b(i, l) += ph(-2 * (j + lo) * l) * c(i, j);

    WignerGrid g{dim, Eigen::MatrixXd(nj, d), {}, {}, state_ref, Normalisation::ActionAngle, 0.0};
    const double norm = 2.0 * std::numbers::pi * d;
    for (int jj = 0; jj < nj; ++jj) {
        const long long twoJ = half_integer ? jj : 2 * jj;
        for (int l = 0; l < d; ++l) {
            cplx s = 0.0;
            for (int i = 0; i < d; ++i) s += ph((i + lo) * twoJ) * b(i, l);
            s /= norm;
            g.values(jj, l) = s.real();
            g.max_imag = std::max(g.max_imag, std::abs(s.imag()));
        }
        g.rows.push_back(twoJ / 2.0);
    }
    for (int l = 0; l < d; ++l) g.cols.push_back(dim.gamma0() * l);
    return g;
}

}  // namespace

WignerGrid wigner_number_phase(const StateVector& psi, bool half_integer, const std::string& state_ref) {
    return np_grid(psi, half_integer, state_ref, -1);
}

WignerGrid wigner_number_phase_parity(const StateVector& psi, bool half_integer, int m2_parity) {
    return np_grid(psi, half_integer, m2_parity == 0 ? "even" : "odd", m2_parity);
}

double action_angle_mass(const WignerGrid& g) {
    const int d = g.dim.value();
    const double w = (2.0 * std::numbers::pi / d) * (static_cast<int>(g.rows.size()) == 2 * d ? 0.5 : 1.0);
    return w * g.values.sum();
}

NumberPhaseWignerReport number_phase_wigner_checks(const StateVector& psi) {
    const Dimension& dim = psi.dim;
    const int d = dim.value();
    const WignerGrid g = wigner_number_phase(psi);
    const Vector x = change_basis(psi, Basis::Number).amplitudes;
    const Vector p = basis_matrix(dim, Basis::Phase).adjoint() * x;
    NumberPhaseWignerReport r;
    r.reality = g.max_imag;
    r.mass = std::abs(action_angle_mass(g) - 1.0);
    const double tp = 2.0 * std::numbers::pi;
    for (int k = 0; k < d; ++k) {
        r.marginal_J = std::max(r.marginal_J, std::abs(tp / d * g.values.row(k).sum() - std::norm(x(k))));
        r.marginal_theta = std::max(r.marginal_theta, std::abs(g.values.col(k).sum() - d / tp * std::norm(p(k))));
    }
    return r;
}

}  // namespace torus
