// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "torus/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace torus;

namespace {

const double pi = 3.141592653589793;

struct Outcome {
    bool ok = true;
    double worst = 0.0;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (ok) detail = what;
            ok = false;
        }
    }
    void residual(double r, double tol, const std::string& what) {
        worst = std::max(worst, r);
        require(r < tol, what + " residual " + std::to_string(r));
    }
};

int failures = 0;

void criterion(int id, const std::string& name, double budget_s, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs < budget_s, "runtime over budget");
    if (!o.ok) ++failures;
    std::printf("%s  %2d  %-48s worst=%.3e  time=%.2fs/%.0fs%s%s\n", o.ok ? "PASS" : "FAIL", id, name.c_str(), o.worst, secs, budget_s,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
}

}  // namespace

int main() {
    criterion(1, "schwinger algebra, D in {2,3,5,7,11,13}", 10, [](Outcome& o) {
        std::mt19937_64 rng(1);
        for (int d : {2, 3, 5, 7, 11, 13}) {
            const AlgebraResiduals r = schwinger_algebra(Dimension(d), Pair::ClockShift, rng, 200);
            o.residual(r.max(), 1e-11, "D=" + std::to_string(d));
        }
    });

    criterion(2, "eigensystem closed form vs dense, D in {3,5,7}", 5, [](Outcome& o) {
        for (int d : {3, 5, 7}) {
            const Dimension dim(d);
            for (const auto& m : window_vectors(dim)) {
                if (is_zero_mod(dim, m)) continue;
                const EigenOracleReport r = compare_with_dense(eigensystem_by_recursion(dim, m));
                const std::string tag = "D=" + std::to_string(d) + " m=(" + std::to_string(m.m1) + "," + std::to_string(m.m2) + ")";
                o.residual(r.closed_form, 1e-8, tag + " closed form");
                o.residual(r.eigen_equation, 1e-8, tag + " eigen equation");
                o.residual(r.dense_eigenvectors, 1e-8, tag + " dense vectors");
            }
        }
    });

    criterion(3, "q-oscillator admissibility, D in {3,5,7,11}", 30, [](Outcome& o) {
        for (int d : {3, 5, 7, 11}) {
            const Dimension dim(d);
            const auto labels = window_vectors(dim);
            for (const auto& m : labels)
                for (const auto& mp : labels) {
                    if (lattice_cross_mod(dim, m, mp) == 0) continue;
                    const QOscillator q = build_q_oscillator(dim, m, mp);
                    const double c = 1 / std::abs(std::sin(dim.gamma0() * double(lattice_cross(m, mp))));
                    o.residual(std::abs(q.C - c) / c, 1e-12, "shift constant");
                    double fmin = q.spectrum[0];
                    for (double f : q.spectrum) fmin = std::min(fmin, f);
                    o.require(fmin >= 0.0, "negative spectrum at D=" + std::to_string(d));
                    o.residual(q.casimir_residual, 1e-10, "A^dag A - C - [N]");
                    const LowestWeightReport lw = lowest_weight_scan(q);
                    o.require(!lw.solution_exists, "lowest weight found at odd D=" + std::to_string(d));
                }
        }
    });

    criterion(4, "u_q(sl2) relations and Casimir, D in {3,5,7}", 5, [](Outcome& o) {
        for (int d : {3, 5, 7}) {
            const Dimension dim(d);
            const auto labels = window_vectors(dim);
            for (const auto& m : labels)
                for (const auto& mp : labels) {
                    if (lattice_cross_mod(dim, m, mp) == 0) continue;
                    const UqSl2Realisation r = build_uq_sl2(dim, m, mp);
                    o.residual(r.intertwine_residual, 1e-10, "intertwining");
                    o.residual(r.commutator_residual, 1e-10, "commutator");
                    const CasimirReport c = casimir_uq_sl2(r);
                    o.residual(c.forms_residual, 1e-10, "Casimir forms");
                    o.residual(std::max({c.commutes_A, c.commutes_Adag, c.commutes_J3}), 1e-10, "Casimir centrality");
                }
        }
    });

    criterion(5, "Wigner properties, 50 states, D in {3,5,7,11}", 60, [](Outcome& o) {
        std::mt19937_64 rng(5);
        for (int d : {3, 5, 7, 11}) {
            const Dimension dim(d);
            std::vector<StateVector> states;
            for (int i = 0; i < 50; ++i) states.push_back(random_state(dim, rng));
            const WignerPropertyReport r = property_suite(dim, states, rng);
            o.residual(r.max(), 1e-10, "D=" + std::to_string(d));
            o.residual(r.self_overlap, 1e-10, "self overlap 1/D");
        }
        std::vector<StateVector> two;
        for (int i = 0; i < 50; ++i) two.push_back(random_state(Dimension(2), rng));
        const WignerPropertyReport r2 = property_suite(Dimension(2), two, rng);
        std::printf("      D=2 (reported, not gated): max residual %.3e, time inversion %.3e, overlap %.3e\n", r2.max(), r2.time_inversion,
                    r2.overlap);
    });

    criterion(6, "metaplectic covariance, 10 maps, D in {5,7}", 10, [](Outcome& o) {
        std::mt19937_64 rng(6);
        for (int d : {5, 7}) {
            const Dimension dim(d);
            for (int i = 0; i < 10; ++i) {
                const MetaplecticOperator g = build_metaplectic(dim, random_symplectic(dim, rng));
                o.residual(g.unitary_residual, 1e-12, "unitarity");
                o.residual(g.max_residual, 1e-9, "covariance");
            }
            const MetaplecticOperator f = build_metaplectic(dim, map_from_rows(0, -1, 1, 0));
            o.residual(proportionality_residual(f.G.entries, build_fourier_operator(dim).entries), 1e-10, "Fourier");
        }
    });

    criterion(7, "number-phase identification", 20, [](Outcome& o) {
        std::mt19937_64 rng(7);
        for (int d : {2, 3, 5, 7, 11, 13}) {
            const Dimension dim(d);
            o.residual(schwinger_algebra(dim, Pair::NumberPhase, rng, 200).max(), 1e-11, "algebra D=" + std::to_string(d));
            o.residual(build_phase_pair(dim).identification_residual, 1e-11, "identification D=" + std::to_string(d));
        }
        for (int d : {5, 31}) {
            const Dimension dim(d);
            for (int n0 = 0; n0 < d; ++n0) {
                const WignerGrid g = wigner_number_phase(basis_state(dim, Basis::Number, n0));
                for (int j = 0; j < d; ++j)
                    for (int l = 0; l < d; ++l) o.residual(std::abs(g.values(j, l) - (j == n0 ? 1 / (2 * pi) : 0.0)), 1e-10, "number state");
            }
            for (int i = 0; i < 10; ++i)
                o.residual(std::abs(action_angle_mass(wigner_number_phase(random_state(dim, rng))) - 1.0), 1e-10, "mass");
        }
    });

    criterion(8, "index theorem, D in {5,13,101}", 1, [](Outcome& o) {
        for (int d : {5, 13, 101}) {
            o.residual(std::abs(make_profile(d, ProfileCase::QOscillator).index), 1e-14, "qosc");
            o.residual(std::abs(make_profile(d, ProfileCase::Admissible).index), 1e-14, "admissible");
            o.residual(std::abs(limiting_spectrum(Dimension(d), ProfileCase::UnitCross, 1).index), 1e-14, "unit cross");
            o.residual(std::abs(limiting_spectrum(Dimension(d), ProfileCase::UnitCross, -1).index), 1e-14, "unit cross -");
            if (d % 4 == 1) o.residual(std::abs(limiting_spectrum(Dimension(d), ProfileCase::QuarterCross).index), 1e-14, "quarter cross");
            const SpectrumProfile lin = make_profile(d, ProfileCase::Linear);
            const double expect = std::exp(-lin.f[0]) * (1 - std::exp(-double(d)));
            o.residual(std::abs(lin.index - expect), 1e-12, "linear");
        }
    });

    criterion(9, "shifted Fock spaces", 10, [](Outcome& o) {
        std::mt19937_64 rng(9);
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        for (int d : {3, 5, 7}) {
            const Dimension dim(d);
            for (int i = 0; i < 20; ++i) {
                const double a = u01(rng);
                o.residual(build_shifted_fock(dim, a).gram_residual, 1e-12, "Gram");
                o.residual(shifted_overlap(dim, a).residual, 1e-13, "overlap");
            }
            for (int i = 0; i < 10; ++i) o.residual(wigner_even_odd_decomposition(random_state(dim, rng)).reconstruction, 1e-10, "even/odd");
        }
    });

    criterion(10, "convergence diagnostics", 60, [](Outcome& o) {
        const std::vector<int> primes{11, 23, 47, 101};
        for (Observable obs : {Observable::NumberExp, Observable::PhaseExp}) {
            const ConvergenceReport r = weak_convergence_sweep(primes, 1.0, obs);
            std::string seq;
            for (double x : r.residuals) seq += " " + std::to_string(x);
            std::printf("      %s residuals:%s\n", r.observable.c_str(), seq.c_str());
            o.require(r.monotone_decreasing, std::string(to_string(obs)) + " not monotone");
        }
        for (int d : primes)
            for (long long ell : {1, 2, 3}) o.residual(commutator_limit_check(Dimension(d), ell).restricted, 1e-11, "SGCN");
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
