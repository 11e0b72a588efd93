#include "doctest.h"
#include "torus/wigner.hpp"

using namespace torus;

namespace {

// W(V) = D^{-2} sum_m e^{-i g0 m x V} <psi|S_m|psi> over the window, with S_m from scratch
Eigen::MatrixXd wigner_oracle(const Dimension& dim, const Vector& psi) {
    const int d = dim.value();
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            cplx acc = 0;
            for (const auto& m : window_vectors(dim)) {
                Matrix s = Matrix::Zero(d, d);
                for (int k = 0; k < d; ++k)
                    s(static_cast<int>(mod(k + m.m1, d)), k) =
                        std::polar(1.0, -dim.gamma0() * (double(m.m1) * double(m.m2) / 2.0 + double(m.m2) * k));
                const double cross = double(m.m1) * b - double(m.m2) * a;
                acc += std::polar(1.0, -dim.gamma0() * cross) * psi.dot(s * psi);
            }
            w(a, b) = acc.real() / (double(d) * d);
        }
    return w;
}

}  // namespace

TEST_CASE("D=2 origin kernel") {
    const Dimension d2(2);
    const WignerKernel k = build_kernel(d2, 0, 0);
    Matrix expect = Matrix::Identity(2, 2);
    expect(0, 1) += 1.0;
    expect(1, 0) += 1.0;
    expect(0, 0) += 1.0;
    expect(1, 1) -= 1.0;
    expect(0, 1) += cplx(0, 1);
    expect(1, 0) += cplx(0, -1);
    expect /= 4.0;
    CHECK(max_abs(k.matrix.entries - expect) < 1e-15);
    CHECK(max_abs(Matrix(k.matrix.entries - k.matrix.entries.adjoint())) < 1e-15);
}

TEST_CASE("off-grid kernels need the diagnostic flag") {
    const Dimension d3(3);
    try {
        build_kernel(d3, 0.5, 1);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OffGrid);
    }
    const WignerKernel k = build_kernel(d3, 0.5, 1, true);
    CHECK(!k.exact);
}

TEST_CASE("kernel duality and trace") {
    const Dimension d3(3);
    const auto ks = grid_kernels(d3);
    Matrix s = Matrix::Zero(3, 3);
    double tr = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            const double cross = 1.0 * b - 0.0 * a;
            s += std::polar(1.0, d3.gamma0() * cross) * ks[a * 3 + b];
            tr += ks[a * 3 + b].trace().real();
        }
    CHECK(max_abs(s - schwinger_matrix(d3, {1, 0})) < 1e-12);
    CHECK(tr == doctest::Approx(3.0));
}

TEST_CASE("Wigner function against the oracle") {
    std::mt19937_64 rng(5);
    for (int d : {3, 5}) {
        const Dimension dim(d);
        const StateVector psi = random_state(dim, rng);
        const WignerGrid g = wigner_function(psi);
        CHECK((g.values - wigner_oracle(dim, psi.amplitudes)).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(g.values.sum() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(g.max_imag < 1e-12);
    }
}

TEST_CASE("marginals of basis states") {
    const Dimension d2(2);
    const WignerGrid g = wigner_function(basis_state(d2, Basis::U, 0));
    CHECK(g.values.row(0).sum() == doctest::Approx(1.0));
    CHECK(std::abs(g.values.row(1).sum()) < 1e-12);

    const Dimension d3(3);
    const WignerGrid h = wigner_function(basis_state(d3, Basis::V, 0));
    CHECK(h.values.col(0).sum() == doctest::Approx(1.0));
    CHECK(std::abs(h.values.col(1).sum()) < 1e-12);
    CHECK(std::abs(h.values.col(2).sum()) < 1e-12);
}

TEST_CASE("translation covariance moves the grid") {
    const Dimension d3(3);
    const StateVector u0 = basis_state(d3, Basis::U, 0);
    const StateVector u1{d3, build_shift_operator(d3).entries * u0.amplitudes, Basis::U, 0.0};
    const WignerGrid a = wigner_function(u0), b = wigner_function(u1);
    for (int v1 = 0; v1 < 3; ++v1)
        for (int v2 = 0; v2 < 3; ++v2) CHECK(b.values(v1, v2) == doctest::Approx(a.values((v1 + 2) % 3, v2)).epsilon(1e-12));
}

TEST_CASE("symbols") {
    const Dimension d3(3);
    const Eigen::MatrixXcd one = classical_symbol(Matrix::Identity(3, 3), d3);
    CHECK((one.array() - 1.0 / 3.0).abs().maxCoeff() < 1e-12);
    const Eigen::MatrixXcd s10 = classical_symbol(schwinger_matrix(d3, {1, 0}), d3);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) CHECK(std::abs(s10(a, b) - std::polar(1.0 / 3, d3.gamma0() * b)) < 1e-12);

    std::mt19937_64 rng(9);
    const Dimension d5(5);
    Matrix f = random_matrix(d5, rng);
    f = (f + f.adjoint()).eval();
    const StateVector psi = random_state(d5, rng);
    const Eigen::MatrixXcd sym = classical_symbol(f, d5);
    const Eigen::MatrixXd w = wigner_function(psi).values;
    cplx pairing = 0;
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) pairing += sym(a, b) * w(a, b);
    CHECK(std::abs(pairing - psi.amplitudes.dot(f * psi.amplitudes) / 5.0) < 1e-10);
    CHECK(max_abs(Matrix(operator_from_symbol(sym, d5) - f)) < 1e-10);
}

TEST_CASE("overlap identity") {
    const Dimension d5(5);
    std::mt19937_64 rng(2);
    const StateVector a = random_state(d5, rng), b = random_state(d5, rng);
    const Eigen::MatrixXd wa = wigner_function(a).values, wb = wigner_function(b).values;
    CHECK(wa.cwiseProduct(wa).sum() == doctest::Approx(1.0 / 5).epsilon(1e-12));
    CHECK(wa.cwiseProduct(wb).sum() == doctest::Approx(std::norm(a.amplitudes.dot(b.amplitudes)) / 5).epsilon(1e-10));
    const Eigen::MatrixXd w0 = wigner_function(basis_state(d5, Basis::U, 0)).values;
    const Eigen::MatrixXd w1 = wigner_function(basis_state(d5, Basis::U, 1)).values;
    CHECK(std::abs(w0.cwiseProduct(w1).sum()) < 1e-12);
}

TEST_CASE("property suite on odd primes") {
    std::mt19937_64 rng(12345);
    for (int d : {3, 5, 7}) {
        const Dimension dim(d);
        std::vector<StateVector> states;
        for (int i = 0; i < 6; ++i) states.push_back(random_state(dim, rng));
        const WignerPropertyReport r = property_suite(dim, states, rng);
        CHECK(r.states == 6);
        CHECK(r.max() < 1e-10);
    }
}
