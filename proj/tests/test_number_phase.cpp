#include "doctest.h"
#include "torus/number_phase.hpp"

using namespace torus;

namespace {

const double pi = 3.141592653589793;

}  // namespace

TEST_CASE("phase operator entries at D=3") {
    const PhasePair p = build_phase_pair(Dimension(3));
    Matrix expect = Matrix::Zero(3, 3);
    expect(2, 0) = 1;
    expect(0, 1) = 1;
    expect(1, 2) = 1;
    CHECK(max_abs(p.E_phi.entries - expect) < 1e-15);
}

TEST_CASE("number exponential eigenvalue") {
    const Dimension d5(5);
    const PhasePair p = build_phase_pair(d5);
    const Vector n2 = basis_state(d5, Basis::Number, 2).amplitudes;
    CHECK(max_abs(Vector(p.E_N.entries * n2 - std::polar(1.0, -4 * pi / 5) * n2)) < 1e-14);
}

TEST_CASE("phase pair residuals") {
    for (int d : {2, 3, 7, 11}) {
        const PhasePair p = build_phase_pair(Dimension(d));
        CHECK(p.phase_eigen_residual < 1e-12);
        CHECK(p.number_eigen_residual < 1e-12);
        CHECK(p.ladder_residual < 1e-12);
        CHECK(p.commutation_residual < 1e-11);
        CHECK(p.orthonormality_residual < 1e-12);
        CHECK(p.completeness_residual < 1e-12);
        CHECK(p.identification_residual < 1e-12);
    }
}

TEST_CASE("commutation at D=7, checked directly") {
    const Dimension d7(7);
    const PhasePair p = build_phase_pair(d7);
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b) {
            const Matrix en = matrix_power(p.E_N.entries, a), ep = matrix_power(p.E_phi.entries, b);
            CHECK(max_abs(Matrix(en * ep - std::polar(1.0, d7.gamma0() * a * b) * ep * en)) < 1e-11);
        }
}

TEST_CASE("number-function expansion") {
    const Dimension d5(5);
    const NumberExpansion one = expand_number_function(d5, std::vector<double>(5, 1.0));
    CHECK(std::abs(one.terms[0].coefficient - 5.0) < 1e-12);
    for (int k = 1; k < 5; ++k) CHECK(std::abs(one.terms[k].coefficient) < 1e-12);
    CHECK(max_abs(Matrix(one.reconstruction.entries - Matrix::Identity(5, 5))) < 1e-10);

    std::vector<double> delta(5, 0.0);
    delta[3] = 1.0;
    const NumberExpansion e = expand_number_function(d5, delta);
    for (int k = 0; k < 5; ++k) CHECK(std::abs(e.terms[k].coefficient - std::polar(1.0, d5.gamma0() * k * 3)) < 1e-12);
    Matrix proj = Matrix::Zero(5, 5);
    proj(3, 3) = 1;
    CHECK(max_abs(Matrix(e.reconstruction.entries - proj)) < 1e-10);

    const QOscillator o = build_q_oscillator(d5, {1, 0}, {0, 1});
    const NumberExpansion q = expand_number_function(d5, o.spectrum);
    CHECK(q.diagonal_residual < 1e-10);
    CHECK(q.spectral_residual < 1e-10);
    CHECK(q.phase_residual < 1e-10);

    CHECK_THROWS_AS(expand_number_function(d5, delta, {1, 1}, {2, 2}), Error);
}

TEST_CASE("action-angle kernel forms agree") {
    const Dimension d3(3);
    const ActionAngleKernel k = build_action_angle_kernel(d3, 1, 2 * pi / 3);
    CHECK(max_abs(Matrix(k.matrix.entries - action_angle_kernel_phase_form(d3, 1, 2 * pi / 3))) < 1e-11);
    const Dimension d5(5);
    for (int j = 0; j < 5; ++j)
        for (int l = 0; l < 5; ++l) {
            const Matrix m = build_action_angle_kernel(d5, j, d5.gamma0() * l).matrix.entries;
            CHECK(max_abs(Matrix(m - m.adjoint())) < 1e-12);
            CHECK(max_abs(Matrix(m - build_action_angle_kernel(d5, j + 5, d5.gamma0() * l).matrix.entries)) < 1e-12);
            CHECK(max_abs(Matrix(m - action_angle_kernel_phase_form(d5, j, d5.gamma0() * l))) < 1e-11);
        }
}

TEST_CASE("number-state Wigner function") {
    for (int d : {5, 31}) {
        const Dimension dim(d);
        const WignerGrid g = wigner_number_phase(basis_state(dim, Basis::Number, 3));
        for (int j = 0; j < d; ++j)
            for (int l = 0; l < d; ++l) CHECK(std::abs(g.values(j, l) - (j == 3 ? 1 / (2 * pi) : 0.0)) < 1e-10);
        CHECK(action_angle_mass(g) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("phase-state Wigner function") {
    const Dimension d7(7);
    const WignerGrid g = wigner_number_phase(basis_state(d7, Basis::Phase, 2));
    for (int j = 0; j < 7; ++j)
        for (int l = 0; l < 7; ++l) CHECK(std::abs(g.values(j, l) - (l == 2 ? 1 / (2 * pi) : 0.0)) < 1e-10);
    CHECK(action_angle_mass(g) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("random-state mass and marginals") {
    std::mt19937_64 rng(4);
    const Dimension d7(7);
    for (int i = 0; i < 5; ++i) {
        const StateVector psi = random_state(d7, rng);
        const NumberPhaseWignerReport r = number_phase_wigner_checks(psi);
        CHECK(r.reality < 1e-12);
        CHECK(r.mass < 1e-10);
        CHECK(r.marginal_J < 1e-10);
        CHECK(r.marginal_theta < 1e-10);
        CHECK(action_angle_mass(wigner_number_phase(psi, true)) == doctest::Approx(1.0).epsilon(1e-10));
    }
}
