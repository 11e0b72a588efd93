#include "torus/wigner.hpp"

#include <algorithm>
#include <cmath>

namespace torus {

namespace {

cplx expi(double a) { return {std::cos(a), std::sin(a)}; }

bool on_grid(double x) { return std::abs(x - std::round(x)) < 1e-12; }

// e^{-i gamma0 m x V} for integer V, exact via half phases
cplx grid_phase(const Dimension& dim, LatticeVector m, long long v1, long long v2) {
    return root_phase(-lattice_cross(m, {v1, v2}), dim.value());
}

Vector u_column(const Vector& psi) { return psi; }

Eigen::MatrixXd wigner_values(const Dimension& dim, const Vector& psi, double* max_imag) {
    const int d = dim.value();
    const auto labels = window_vectors(dim);
    std::vector<cplx> c(labels.size());
    for (size_t i = 0; i < labels.size(); ++i) c[i] = psi.dot(apply_schwinger(dim, labels[i], psi));
    Eigen::MatrixXd w(d, d);
    double imag = 0.0;
    for (int v1 = 0; v1 < d; ++v1)
        for (int v2 = 0; v2 < d; ++v2) {
            cplx s = 0.0;
            for (size_t i = 0; i < labels.size(); ++i) s += grid_phase(dim, labels[i], v1, v2) * c[i];
            s /= static_cast<double>(d) * d;
            w(v1, v2) = s.real();
            imag = std::max(imag, std::abs(s.imag()));
        }
    if (max_imag) *max_imag = imag;
    return w;
}

}  // namespace

WignerKernel build_kernel(const Dimension& dim, double V1, double V2, bool allow_off_grid) {
    const bool exact = on_grid(V1) && on_grid(V2);
    if (!exact && !allow_off_grid) throw Error(ErrorKind::OffGrid, "V must lie on the integer grid");
    const int d = dim.value();
    Matrix k = Matrix::Zero(d, d);
    for (const LatticeVector& m : window_vectors(dim)) {
        const cplx ph = exact ? grid_phase(dim, m, std::llround(V1), std::llround(V2))
                              : expi(-dim.gamma0() * (static_cast<double>(m.m1) * V2 - static_cast<double>(m.m2) * V1));
        k += ph * schwinger_matrix(dim, m);
    }
    k /= static_cast<double>(d) * d;
    return {dim, V1, V2, {dim, k, exact ? "wigner-kernel" : "wigner-kernel-off-grid"}, Normalisation::Torus, exact};
}

std::vector<Matrix> grid_kernels(const Dimension& dim) {
    const int d = dim.value();
    const auto labels = window_vectors(dim);
    std::vector<Matrix> s;
    s.reserve(labels.size());
    for (const auto& m : labels) s.push_back(schwinger_matrix(dim, m));
    std::vector<Matrix> out;
    out.reserve(static_cast<size_t>(d) * d);
    for (int v1 = 0; v1 < d; ++v1)
        for (int v2 = 0; v2 < d; ++v2) {
            Matrix k = Matrix::Zero(d, d);
            for (size_t i = 0; i < labels.size(); ++i) k += grid_phase(dim, labels[i], v1, v2) * s[i];
            out.push_back(k / (static_cast<double>(d) * d));
        }
    return out;
}

WignerGrid wigner_function(const StateVector& psi, const std::string& state_ref) {
    const Dimension& dim = psi.dim;
    const int d = dim.value();
    const StateVector u = change_basis(psi, Basis::U);
    WignerGrid g{dim, {}, {}, {}, state_ref, Normalisation::Torus, 0.0};
    g.values = wigner_values(dim, u_column(u.amplitudes), &g.max_imag);
    for (int k = 0; k < d; ++k) {
        g.rows.push_back(k);
        g.cols.push_back(k);
    }
    return g;
}

Eigen::MatrixXcd classical_symbol(const Matrix& op, const Dimension& dim) {
    const int d = dim.value();
    const auto ks = grid_kernels(dim);
    Eigen::MatrixXcd f(d, d);
    for (int v1 = 0; v1 < d; ++v1)
        for (int v2 = 0; v2 < d; ++v2) f(v1, v2) = (op * ks[v1 * d + v2].adjoint()).trace();
    return f;
}

Matrix operator_from_symbol(const Eigen::MatrixXcd& symbol, const Dimension& dim) {
    const int d = dim.value();
    const auto ks = grid_kernels(dim);
    Matrix out = Matrix::Zero(d, d);
    for (int v1 = 0; v1 < d; ++v1)
        for (int v2 = 0; v2 < d; ++v2) out += symbol(v1, v2) * ks[v1 * d + v2];
    return static_cast<double>(d) * out;
}

double WignerPropertyReport::max() const {
    return std::max({kernel_hermitian, dual, kernel_trace, reality, mass, marginal_u, marginal_v, translation_u,
                     translation_v, time_inversion, parity, overlap, self_overlap, orthogonal_overlap, symbol_pairing,
                     trace_pairing, reconstruction});
}

StateVector random_state(const Dimension& dim, std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Vector v(dim.value());
    for (int i = 0; i < dim.value(); ++i) {
        const double re = n(rng);
        const double im = n(rng);
        v(i) = cplx(re, im);
    }
    return {dim, v.normalized(), Basis::U, 0.0};
}

Matrix random_matrix(const Dimension& dim, std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    const int d = dim.value();
    Matrix m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const double re = n(rng);
            const double im = n(rng);
            m(i, j) = cplx(re, im);
        }
    return m;
}

WignerPropertyReport property_suite(const Dimension& dim, const std::vector<StateVector>& states, std::mt19937_64& rng) {
    const int d = dim.value();
    WignerPropertyReport rep;
    const auto ks = grid_kernels(dim);
    const auto labels = window_vectors(dim);

    double trace_sum = 0.0;
    cplx tsum = 0.0;
    for (const Matrix& k : ks) {
        rep.kernel_hermitian = std::max(rep.kernel_hermitian, max_abs(Matrix(k - k.adjoint())));
        tsum += k.trace();
    }
    trace_sum = std::abs(tsum - cplx(d));
    rep.kernel_trace = trace_sum;
    for (const auto& m : labels) {
        Matrix acc = Matrix::Zero(d, d);
        for (int v1 = 0; v1 < d; ++v1)
            for (int v2 = 0; v2 < d; ++v2) acc += std::conj(grid_phase(dim, m, v1, v2)) * ks[v1 * d + v2];
        rep.dual = std::max(rep.dual, max_abs(Matrix(acc - schwinger_matrix(dim, m))));
    }

    const Matrix u = build_shift_operator(dim).entries;
    const Matrix v = build_clock_operator(dim).entries;
    const Matrix f = build_fourier_operator(dim).entries;
    const Matrix vb = basis_matrix(dim, Basis::V);
    auto wig = [&](const Vector& x) {
        double im = 0.0;
        Eigen::MatrixXd w = wigner_values(dim, x, &im);
        rep.reality = std::max(rep.reality, im);
        return w;
    };

    std::vector<Vector> psis;
    for (const auto& s : states) psis.push_back(change_basis(s, Basis::U).amplitudes);
    for (size_t i = 0; i < psis.size(); ++i) {
        const Vector& psi = psis[i];
        const Eigen::MatrixXd w = wig(psi);
        rep.mass = std::max(rep.mass, std::abs(w.sum() - 1.0));
        const Vector pv = vb.adjoint() * psi;
        for (int k = 0; k < d; ++k) {
            rep.marginal_u = std::max(rep.marginal_u, std::abs(w.row(k).sum() - std::norm(psi(k))));
            rep.marginal_v = std::max(rep.marginal_v, std::abs(w.col(k).sum() - std::norm(pv(k))));
        }
        const Eigen::MatrixXd wu = wig(u * psi);
        const Eigen::MatrixXd wv = wig(v * psi);
        const Eigen::MatrixXd wt = wig(psi.conjugate());
        const Eigen::MatrixXd wp = wig(f * f * psi);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                const int am = static_cast<int>(mod(a - 1, d)), bm = static_cast<int>(mod(b - 1, d));
                const int an = static_cast<int>(mod(-a, d)), bn = static_cast<int>(mod(-b, d));
                rep.translation_u = std::max(rep.translation_u, std::abs(wu(a, b) - w(am, b)));
                rep.translation_v = std::max(rep.translation_v, std::abs(wv(a, b) - w(a, bm)));
                rep.time_inversion = std::max(rep.time_inversion, std::abs(wt(a, b) - w(a, bn)));
                rep.parity = std::max(rep.parity, std::abs(wp(a, b) - w(an, bn)));
            }
        rep.self_overlap = std::max(rep.self_overlap, std::abs((w.array() * w.array()).sum() - 1.0 / d));

        const Vector& phi = psis[(i + 1) % psis.size()];
        const Eigen::MatrixXd w2 = wig(phi);
        rep.overlap = std::max(rep.overlap, std::abs((w.array() * w2.array()).sum() - std::norm(psi.dot(phi)) / d));
        Vector perp = phi - psi.dot(phi) * psi;
        if (perp.norm() > 1e-6) {
            perp.normalize();
            const Eigen::MatrixXd w3 = wig(perp);
            rep.orthogonal_overlap = std::max(rep.orthogonal_overlap, std::abs((w.array() * w3.array()).sum()));
        }

        const Matrix x = random_matrix(dim, rng);
        const Matrix y = random_matrix(dim, rng);
        Eigen::MatrixXcd fx(d, d), fy(d, d);
        for (int k = 0; k < d * d; ++k) {
            fx(k / d, k % d) = (x * ks[k].adjoint()).trace();
            fy(k / d, k % d) = (y * ks[k].adjoint()).trace();
        }
        const cplx pairing = (fx.array() * w.array().cast<cplx>()).sum();
        rep.symbol_pairing = std::max(rep.symbol_pairing, std::abs(psi.dot(x * psi) / static_cast<double>(d) - pairing));
        rep.trace_pairing = std::max(rep.trace_pairing, std::abs((x * y).trace() / static_cast<double>(d) - (fx.array() * fy.array()).sum()));
        Matrix back = Matrix::Zero(d, d);
        for (int k = 0; k < d * d; ++k) back += fx(k / d, k % d) * ks[k];
        rep.reconstruction = std::max(rep.reconstruction, max_abs(Matrix(static_cast<double>(d) * back - x)));
        ++rep.states;
    }
    return rep;
}

}  // namespace torus
