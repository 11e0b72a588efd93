#include "doctest.h"
#include "torus/limits.hpp"

#include <algorithm>

using namespace torus;

namespace {

const double pi = 3.141592653589793;

}  // namespace

TEST_CASE("index of the linear profile") {
    for (int d : {5, 13, 101}) {
        const SpectrumProfile p = make_profile(d, ProfileCase::Linear);
        const double f0 = d / (2 * pi);
        CHECK(std::abs(p.index - std::exp(-f0) * (1 - std::exp(-double(d)))) < 1e-12);
    }
    CHECK(make_profile(5, ProfileCase::Linear).index == doctest::Approx(0.4483).epsilon(1e-3));
}

TEST_CASE("cyclic profiles have zero index") {
    for (int d : {5, 13, 101}) {
        CHECK(std::abs(make_profile(d, ProfileCase::QOscillator).index) < 1e-14);
        CHECK(std::abs(make_profile(d, ProfileCase::Admissible).index) < 1e-14);
        CHECK(std::abs(limiting_spectrum(Dimension(d), ProfileCase::UnitCross, 1).index) < 1e-14);
        CHECK(std::abs(limiting_spectrum(Dimension(d), ProfileCase::UnitCross, -1).index) < 1e-14);
    }
    CHECK(std::abs(limiting_spectrum(Dimension(13), ProfileCase::QuarterCross).index) < 1e-14);
}

TEST_CASE("custom index by hand") {
    const SpectrumProfile p = custom_profile(4, [](long long n) { return 0.5 * double(n); });
    CHECK(fujikawa_index(p) == doctest::Approx(1 - std::exp(-2.0)).epsilon(1e-14));
}

TEST_CASE("limiting spectra") {
    const SpectrumProfile u = limiting_spectrum(Dimension(101), ProfileCase::UnitCross);
    const double g0 = 2 * pi / 101;
    CHECK(*std::max_element(u.f.begin(), u.f.end()) == doctest::Approx(2 / g0).epsilon(1e-3));
    CHECK(*std::min_element(u.f.begin(), u.f.end()) >= 0.0);

    const SpectrumProfile q = limiting_spectrum(Dimension(13), ProfileCase::QuarterCross);
    CHECK(q.cross == 3);
    const double bound = 2 / std::sin(6 * pi / 13);
    for (double v : q.f) {
        CHECK(v >= 0.0);
        CHECK(v <= bound + 1e-12);
    }
    try {
        limiting_spectrum(Dimension(7), ProfileCase::QuarterCross);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CaseConditionUnmet);
    }
}

TEST_CASE("shifted Fock bases") {
    const Dimension d5(5);
    const ShiftedFockBasis b0 = build_shifted_fock(d5, 0.0);
    CHECK(max_abs(Matrix(b0.vectors - Matrix::Identity(5, 5))) < 1e-12);
    const ShiftedFockBasis b = build_shifted_fock(d5, 0.37);
    CHECK(max_abs(Matrix(b.vectors.adjoint() * b.vectors - Matrix::Identity(5, 5))) < 1e-12);
    CHECK(b.gram_residual < 1e-12);
    CHECK(b.completeness_residual < 1e-12);
    CHECK(b.shift_residual < 1e-12);
    // approaching alpha = 1 recovers the alpha = 0 space: column n tends to |n+1>
    const ShiftedFockBasis b1 = build_shifted_fock(d5, 1 - 1e-9);
    for (int n = 0; n < 5; ++n) {
        const Vector target = b0.vectors.col((n + 1) % 5);
        CHECK(std::abs(std::abs(target.dot(b1.vectors.col(n))) - 1.0) < 1e-6);
    }
}

TEST_CASE("shifted overlaps") {
    CHECK(shifted_overlap(Dimension(2), 0.5).exact == doctest::Approx(0.7071068).epsilon(1e-7));
    CHECK(shifted_overlap(Dimension(2), 0.5).residual < 1e-13);
    CHECK(shifted_overlap(Dimension(7), 0.0).exact == doctest::Approx(1.0));
    CHECK(std::abs(shifted_overlap_exact(10000, 0.5) - 2 / pi) < 1e-6);
    for (double a : {0.1, 0.37, 0.5, 0.9}) {
        const OverlapReport r = shifted_overlap(Dimension(7), a);
        // geometric-sum oracle
        cplx s = 0;
        for (int l = 0; l < 7; ++l) s += std::polar(1.0, -2 * pi * a * l / 7);
        CHECK(std::abs(r.direct - std::abs(s) / 7) < 1e-13);
        CHECK(r.residual < 1e-13);
    }
}

TEST_CASE("fractional shifts") {
    const Dimension d3(3);
    CHECK(shift_isomorphism_check(d3, 0.3, 0.0) < 1e-12);
    CHECK(shift_isomorphism_check(d3, 0.5, 0.5) < 1e-12);
    CHECK(shift_isomorphism_check(d3, 0.25, 1.0) < 1e-12);
    CHECK(shift_isomorphism_check(Dimension(7), 0.4, 0.3) < 1e-12);
}

TEST_CASE("even/odd decomposition") {
    const Dimension d5(5);
    const EvenOddDecomposition n = wigner_even_odd_decomposition(basis_state(d5, Basis::Number, 2));
    CHECK(n.odd.values.cwiseAbs().maxCoeff() < 1e-12);
    std::mt19937_64 rng(8);
    for (int d : {3, 5, 7}) {
        const EvenOddDecomposition e = wigner_even_odd_decomposition(random_state(Dimension(d), rng));
        CHECK(e.reconstruction < 1e-10);
        CHECK((e.even.values + e.odd.values - e.full.values).cwiseAbs().maxCoeff() < 1e-10);
        CHECK(e.even_mass == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(std::abs(e.odd_mass) < 1e-10);
    }
}

TEST_CASE("commutator limit") {
    const CommutatorLimit c = commutator_limit_check(Dimension(7), 1);
    CHECK(c.restricted < 1e-12);
    CHECK(c.full > 1.0);
    for (double r : c.nested) CHECK(r < 1e-10);
    const CommutatorLimit z = commutator_limit_check(Dimension(7), 0);
    CHECK(z.full == 0.0);
}

TEST_CASE("weak convergence") {
    const std::vector<int> primes{11, 23, 47, 101};
    const ConvergenceReport en = weak_convergence_sweep(primes, 1.0, Observable::NumberExp);
    const ConvergenceReport ep = weak_convergence_sweep(primes, 1.0, Observable::PhaseExp);
    CHECK(en.monotone_decreasing);
    CHECK(ep.monotone_decreasing);
    // gamma exactly representable at D=11
    const ConvergenceReport exact = weak_convergence_sweep({11}, 2 * pi * 3 / 11, Observable::NumberExp);
    CHECK(exact.residuals[0] < 1e-24);
    StateFamily delta;
    delta.kind = FamilyKind::PhaseDelta;
    CHECK(!weak_convergence_sweep(primes, 1.0, Observable::NumberExp, delta).monotone_decreasing);
    try {
        weak_convergence_sweep({}, 1.0, Observable::NumberExp);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptyPrimeList);
    }
}

TEST_CASE("continuum Wigner comparison") {
    StateFamily number;
    number.kind = FamilyKind::NumberState;
    for (int d : {5, 11, 23}) CHECK(continuum_wigner_deviation(Dimension(d), number) < 1e-10);
    const ConvergenceReport g = phase_basis_wigner_limit({11, 23, 47}, StateFamily{});
    CHECK(g.monotone_decreasing);
}

TEST_CASE("q-oscillator vacuum sits in the alpha=0 space for odd D") {
    for (int d : {3, 5, 7}) {
        const FockMatch m = qoscillator_fock_match(Dimension(d));
        CHECK(m.alpha == doctest::Approx(0.0));
        CHECK(m.residual < 1e-10);
    }
}
