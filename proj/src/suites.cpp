#include "torus/suites.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace torus {

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

void SuiteReport::add(const std::string& name, double residual, double tol, bool gated) {
    checks.push_back({name, residual, tol, gated});
}

void SuiteReport::merge(const SuiteReport& other) {
    for (const auto& c : other.checks) checks.push_back({other.suite + "." + c.name, c.residual, c.tol, c.gated});
    for (const auto& w : other.warnings) warnings.push_back(other.suite + ": " + w);
}

double AlgebraResiduals::max() const {
    return std::max({adjoint, trace, composition, window_composition, unit, inverse, power, unitarity});
}

AlgebraResiduals schwinger_algebra(const Dimension& dim, Pair pair, std::mt19937_64& rng, int samples) {
    const int d = dim.value();
    const auto labels = window_vectors(dim);
    AlgebraResiduals r;
    const Matrix id = Matrix::Identity(d, d);
    std::vector<Matrix> s;
    for (const auto& m : labels) s.push_back(schwinger_matrix(dim, m, pair));
    for (size_t i = 0; i < labels.size(); ++i) {
        const LatticeVector m = labels[i];
        const Matrix minus = schwinger_matrix(dim, neg(m), pair);
        r.adjoint = std::max(r.adjoint, max_abs(Matrix(s[i].adjoint() - minus)));
        const cplx tr = is_zero_mod(dim, m) ? cplx(d) : cplx(0.0);
        r.trace = std::max(r.trace, std::abs(s[i].trace() - tr));
        r.inverse = std::max(r.inverse, max_abs(Matrix(s[i] * minus - id)));
        r.unitarity = std::max(r.unitarity, unitarity_residual(s[i]));
        r.power = std::max(r.power, schwinger_power_check({dim, m, {dim, s[i], ""}}).residual);
    }
    r.unit = max_abs(Matrix(schwinger_matrix(dim, {0, 0}, pair) - id));
    auto compose = [&](LatticeVector a, LatticeVector b, const Matrix& sa, const Matrix& sb) {
        const Matrix prod = sa * sb;
        const Matrix exact = half_phase(lattice_cross(a, b), d) * schwinger_matrix(dim, add(a, b), pair);
        r.composition = std::max(r.composition, max_abs(Matrix(prod - exact)));
        const LatticeVector w = reduce(dim, add(a, b));
        const cplx ph = half_phase(lattice_cross(a, b), d) * static_cast<double>(window_sign(dim, add(a, b)));
        r.window_composition = std::max(r.window_composition, max_abs(Matrix(prod - ph * schwinger_matrix(dim, w, pair))));
        ++r.pairs;
    };
    for (size_t i = 0; i < labels.size(); ++i)
        for (size_t k = 0; k < labels.size(); ++k) compose(labels[i], labels[k], s[i], s[k]);
    std::uniform_int_distribution<long long> u(-3LL * d, 3LL * d);
    for (int n = 0; n < samples; ++n) {
        const LatticeVector a{u(rng), u(rng)};
        const LatticeVector b{u(rng), u(rng)};
        const Matrix sa = schwinger_matrix(dim, a, pair);
        const Matrix sb = schwinger_matrix(dim, b, pair);
        compose(a, b, sa, sb);
        r.adjoint = std::max(r.adjoint, max_abs(Matrix(sa.adjoint() - schwinger_matrix(dim, neg(a), pair))));
        r.power = std::max(r.power, schwinger_power_check({dim, a, {dim, sa, ""}}).residual);
    }
    return r;
}

namespace {

std::vector<std::pair<LatticeVector, LatticeVector>> pairs_for(const Dimension& dim, int samples, std::mt19937_64& rng,
                                                               bool need_sine) {
    const int d = dim.value();
    auto ok = [&](LatticeVector m, LatticeVector mp) {
        const long long c = lattice_cross_mod(dim, m, mp);
        if (c == 0 || std::gcd(c, static_cast<long long>(d)) != 1) return false;
        return !need_sine || mod(2 * c, d) != 0;
    };
    const auto labels = window_vectors(dim);
    std::vector<std::pair<LatticeVector, LatticeVector>> all;
    for (const auto& m : labels)
        for (const auto& mp : labels)
            if (ok(m, mp)) all.emplace_back(m, mp);
    if (samples <= 0 || all.empty()) return all;
    std::vector<std::pair<LatticeVector, LatticeVector>> out;
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    for (int i = 0; i < samples; ++i) out.push_back(all[pick(rng)]);
    return out;
}

void add_algebra(SuiteReport& rep, const AlgebraResiduals& a, double tol, const std::string& prefix = "") {
    rep.add(prefix + "adjoint", a.adjoint, tol);
    rep.add(prefix + "trace", a.trace, tol);
    rep.add(prefix + "composition", a.composition, tol);
    rep.add(prefix + "window_composition", a.window_composition, tol);
    rep.add(prefix + "unit", a.unit, tol);
    rep.add(prefix + "inverse", a.inverse, tol);
    rep.add(prefix + "power_rule", a.power, tol);
    rep.add(prefix + "unitarity", a.unitarity, tol);
}

SuiteReport schwinger_suite(const Dimension& dim, const SuiteOptions& opt) {
    const int d = dim.value();
    SuiteReport rep{"schwinger", d, {}, {}};
    if (!dim.is_prime()) rep.warnings.push_back("D = " + std::to_string(d) + " is not prime; the Schwinger representation is reducible");
    std::mt19937_64 rng(opt.seed);
    add_algebra(rep, schwinger_algebra(dim, Pair::ClockShift, rng, opt.samples), opt.tol);

    double closed = 0.0, eq = 0.0, orth = 0.0, dval = 0.0, dvec = 0.0;
    int degenerate = 0;
    for (const auto& m : window_vectors(dim)) {
        if (is_zero_mod(dim, m)) continue;
        const SchwingerEigensystem es = eigensystem_by_recursion(dim, m);
        degenerate += es.degenerate;
        const EigenOracleReport o = compare_with_dense(es);
        closed = std::max(closed, o.closed_form);
        eq = std::max(eq, o.eigen_equation);
        orth = std::max(orth, o.orthonormality);
        dval = std::max(dval, o.dense_eigenvalues);
        dvec = std::max(dvec, o.dense_eigenvectors);
    }
    if (degenerate > 0) rep.warnings.push_back(std::to_string(degenerate) + " labels have a degenerate spectrum");
    rep.add("eigen_closed_form", closed, opt.tol);
    rep.add("eigen_equation", eq, opt.tol);
    rep.add("eigen_orthonormality", orth, opt.tol);
    rep.add("eigen_dense_values", dval, std::max(opt.tol, 1e-8));
    rep.add("eigen_dense_vectors", dvec, std::max(opt.tol, 1e-8));

    double sine = 0.0, weyl = 0.0;
    const auto labels = window_vectors(dim);
    std::uniform_int_distribution<size_t> pick(0, labels.size() - 1);
    for (int i = 0; i < std::max(opt.samples, 1); ++i) {
        const LatticeVector a = labels[pick(rng)], b = labels[pick(rng)];
        sine = std::max(sine, sine_commutator_check(dim, a, b));
        weyl = std::max(weyl, weyl_sine_check(dim, a, b));
    }
    const WeylMatrices w = weyl_matrices(dim);
    rep.add("sine_commutator", sine, opt.tol);
    rep.add("weyl_sine_commutator", weyl, opt.tol);
    rep.add("weyl_braid", std::max(w.braid_residual, w.cyclic_residual), opt.tol);
    rep.add("gram_rank_defect", std::abs(schwinger_gram_rank(dim) - d * d), 0.0);
    return rep;
}

SuiteReport qosc_suite(const Dimension& dim, const SuiteOptions& opt) {
    const int d = dim.value();
    SuiteReport rep{"qosc", d, {}, {}};
    if (d == 2) {
        rep.warnings.push_back("D = 2: sin(gamma0 m x m') = 0 for every non-collinear pair; the q-oscillator is degenerate");
        return rep;
    }
    if (!dim.is_prime()) rep.warnings.push_back("composite D: only pairs with m x m' invertible mod D are checked");
    std::mt19937_64 rng(opt.seed);
    const auto pairs = pairs_for(dim, opt.samples, rng, true);
    double qc = 0, aq = 0, qp = 0, cas = 0, lad = 0, ladc = 0, cyc = 0, cen = 0, cdef = 0, minf = 0;
    double corr = 0;
    int lowest = 0;
    for (const auto& [m, mp] : pairs) {
        for (Pair p : {Pair::ClockShift, Pair::NumberPhase}) {
            const QOscillator o = build_q_oscillator(dim, m, mp, p);
            qc = std::max(qc, o.q_commutator_residual);
            aq = std::max(aq, o.aq_residual);
            qp = std::max(qp, o.q_power_residual);
            cas = std::max(cas, o.casimir_residual);
            lad = std::max(lad, o.ladder_residual);
            ladc = std::max(ladc, o.ladder_conj_residual);
            cyc = std::max(cyc, o.ladder_cyclic_residual);
            cen = std::max(cen, o.centrality_residual);
            cdef = std::max(cdef, std::abs(o.C - 1.0 / std::abs(std::sin(dim.gamma0() * o.cross))));
            minf = std::max(minf, -*std::min_element(o.spectrum.begin(), o.spectrum.end()));
            if (dim.is_prime()) {
                const EigenCorrespondence ec = eigenbasis_correspondence(o);
                corr = std::max({corr, ec.amplitude_residual, ec.ratio_residual, ec.lambda_residual});
            }
        }
        const LowestWeightReport l = lowest_weight_scan(dim, m, mp);
        lowest += l.solution_exists;
    }
    rep.add("q_commutator", qc, opt.tol);
    rep.add("A_Q_intertwine", aq, opt.tol);
    rep.add("Q_power_form", qp, opt.tol);
    rep.add("casimir_AdagA", cas, opt.tol);
    rep.add("ladder_off_wrap", lad, opt.tol);
    rep.add("ladder_conj_off_wrap", ladc, opt.tol);
    rep.add("ladder_cyclic", cyc, opt.tol);
    rep.add("A_power_central", cen, std::max(opt.tol, 1e-9));
    rep.add("shift_constant", cdef, opt.tol);
    rep.add("spectrum_negativity", std::max(0.0, minf), 0.0);
    if (dim.is_prime()) rep.add("eigenbasis_correspondence", corr, std::max(opt.tol, 1e-9));
    rep.add("lowest_weight_solutions", lowest, 0.0, d % 2 == 1);
    rep.warnings.push_back(std::to_string(pairs.size()) + " (m, m') pairs checked");
    return rep;
}

SuiteReport sl2_suite(const Dimension& dim, const SuiteOptions& opt) {
    const int d = dim.value();
    SuiteReport rep{"sl2", d, {}, {}};
    std::mt19937_64 rng(opt.seed);
    const auto pairs = pairs_for(dim, opt.samples, rng, false);
    double coef = 0, in = 0, inc = 0, j3 = 0, com = 0, lad = 0, cyc = 0;
    double forms = 0, central = 0, scalar = 0, value = 0, cop = 0, tr = 0;
    int cop_done = 0;
    for (const auto& [m, mp] : pairs) {
        const UqSl2Realisation r = build_uq_sl2(dim, m, mp);
        coef = std::max(coef, r.coefficient_residual);
        in = std::max(in, r.intertwine_residual);
        inc = std::max(inc, r.intertwine_conj_residual);
        j3 = std::max(j3, r.j3_residual);
        com = std::max(com, r.commutator_residual);
        lad = std::max(lad, r.ladder_residual);
        cyc = std::max(cyc, r.ladder_cyclic_residual);
        const CasimirReport c = casimir_uq_sl2(r);
        forms = std::max(forms, c.forms_residual);
        central = std::max({central, c.commutes_A, c.commutes_Adag, c.commutes_J3});
        scalar = std::max(scalar, c.scalar_residual);
        value = std::max(value, std::abs(c.value - c.predicted));
        if (d <= 7 && cop_done < 3) {
            cop = std::max(cop, coproduct_check(dim, m, mp).residual());
            ++cop_done;
        }
        const LatticeVector shift{1, 2};
        tr = std::max(tr, translated_lattice_deformation(dim, m, mp, shift).residual);
    }
    rep.add("coefficients", coef, opt.tol);
    rep.add("intertwine", in, opt.tol);
    rep.add("intertwine_conj", inc, opt.tol);
    rep.add("J3_spectral", j3, opt.tol);
    rep.add("commutator", com, opt.tol);
    rep.add("ladder_off_wrap", lad, opt.tol);
    rep.add("ladder_cyclic", cyc, opt.tol);
    rep.add("casimir_forms_agree", forms, opt.tol);
    rep.add("casimir_central", central, opt.tol);
    rep.add("casimir_scalar", scalar, opt.tol);
    rep.add("casimir_value", value, opt.tol);
    if (cop_done > 0) rep.add("coproduct", cop, opt.tol);
    else rep.warnings.push_back("coproduct skipped for D > 7");
    rep.add("translated_deformation", tr, opt.tol);
    rep.warnings.push_back(std::to_string(pairs.size()) + " (m, m') pairs checked");
    return rep;
}

SuiteReport wigner_suite(const Dimension& dim, const SuiteOptions& opt) {
    const int d = dim.value();
    SuiteReport rep{"wigner", d, {}, {}};
    const bool gate = d % 2 == 1;
    if (!gate) rep.warnings.push_back("even D: Wigner properties are reported but not gated");
    std::mt19937_64 rng(opt.seed);
    std::vector<StateVector> states;
    for (int i = 0; i < std::max(opt.samples, 2); ++i) states.push_back(random_state(dim, rng));
    for (int k = 0; k < d; ++k) {
        states.push_back(basis_state(dim, Basis::U, k));
        states.push_back(basis_state(dim, Basis::V, k));
    }
    const WignerPropertyReport w = property_suite(dim, states, rng);
    rep.add("kernel_hermitian", w.kernel_hermitian, opt.tol, gate);
    rep.add("kernel_dual", w.dual, opt.tol, gate);
    rep.add("kernel_trace", w.kernel_trace, opt.tol, gate);
    rep.add("reality", w.reality, opt.tol, gate);
    rep.add("mass", w.mass, opt.tol, gate);
    rep.add("marginal_u", w.marginal_u, opt.tol, gate);
    rep.add("marginal_v", w.marginal_v, opt.tol, gate);
    rep.add("translation_u", w.translation_u, opt.tol, gate);
    rep.add("translation_v", w.translation_v, opt.tol, gate);
    rep.add("time_inversion", w.time_inversion, opt.tol, gate);
    rep.add("parity", w.parity, opt.tol, gate);
    rep.add("overlap", w.overlap, opt.tol, gate);
    rep.add("self_overlap", w.self_overlap, opt.tol, gate);
    rep.add("orthogonal_overlap", w.orthogonal_overlap, opt.tol, gate);
    rep.add("symbol_pairing", w.symbol_pairing, opt.tol, gate);
    rep.add("trace_pairing", w.trace_pairing, opt.tol, gate);
    rep.add("symbol_reconstruction", w.reconstruction, std::max(opt.tol, 1e-9), gate);
    const FourierWignerReport fw = fourier_wigner_rotation_check(dim);
    rep.add("fourier_rotation", fw.rotation, opt.tol, gate);
    rep.add("fourier_inverse_rotation", fw.inverse_rotation, opt.tol, false);
    rep.add("fourier_order_four", fw.order_four, opt.tol);
    return rep;
}

SuiteReport numberphase_suite(const Dimension& dim, const SuiteOptions& opt) {
    const int d = dim.value();
    SuiteReport rep{"numberphase", d, {}, {}};
    const double tp = 2.0 * std::numbers::pi;
    const PhasePair p = build_phase_pair(dim);
    rep.add("phase_eigen", p.phase_eigen_residual, opt.tol);
    rep.add("number_eigen", p.number_eigen_residual, opt.tol);
    rep.add("phase_ladder", p.ladder_residual, opt.tol);
    rep.add("commutation", p.commutation_residual, std::max(opt.tol, 1e-11));
    rep.add("phase_orthonormal", std::max(p.orthonormality_residual, p.completeness_residual), opt.tol);
    rep.add("identification", p.identification_residual, opt.tol);
    std::mt19937_64 rng(opt.seed);
    add_algebra(rep, schwinger_algebra(dim, Pair::NumberPhase, rng, opt.samples), opt.tol, "np_");

    double forms = 0, herm = 0, cyc = 0;
    for (int l = 0; l < d; ++l) {
        const double th = dim.gamma0() * l;
        for (double J : {0.0, 1.0, 0.5}) {
            const ActionAngleKernel k = build_action_angle_kernel(dim, J, th);
            forms = std::max(forms, max_abs(Matrix(k.matrix.entries - action_angle_kernel_phase_form(dim, J, th))));
            herm = std::max(herm, max_abs(Matrix(k.matrix.entries - k.matrix.entries.adjoint())));
            cyc = std::max(cyc, max_abs(Matrix(k.matrix.entries - build_action_angle_kernel(dim, J + d, th + tp).matrix.entries)));
        }
    }
    rep.add("kernel_forms_agree", forms, std::max(opt.tol, 1e-11));
    rep.add("kernel_hermitian", herm, opt.tol, d % 2 == 1);
    rep.add("kernel_cyclic", cyc, std::max(opt.tol, 1e-11));

    double number = 0, phase = 0, mass = 0, marg = 0, real = 0, eo = 0, eo_mass = 0;
    for (int n = 0; n < d; ++n) {
        const WignerGrid w = wigner_number_phase(basis_state(dim, Basis::Number, n));
        for (int J = 0; J < d; ++J)
            for (int l = 0; l < d; ++l) number = std::max(number, std::abs(w.values(J, l) - (J == n ? 1.0 / tp : 0.0)));
        const WignerGrid wp = wigner_number_phase(basis_state(dim, Basis::Phase, n));
        for (int J = 0; J < d; ++J)
            for (int l = 0; l < d; ++l) phase = std::max(phase, std::abs(wp.values(J, l) - (l == n ? 1.0 / tp : 0.0)));
    }
    for (int i = 0; i < std::max(opt.samples, 1); ++i) {
        const StateVector s = random_state(dim, rng);
        const NumberPhaseWignerReport c = number_phase_wigner_checks(s);
        mass = std::max(mass, c.mass);
        marg = std::max({marg, c.marginal_J, c.marginal_theta});
        real = std::max(real, c.reality);
        const EvenOddDecomposition e = wigner_even_odd_decomposition(s);
        eo = std::max(eo, e.reconstruction);
        eo_mass = std::max({eo_mass, std::abs(e.even_mass - 1.0), std::abs(e.odd_mass)});
    }
    rep.add("number_state_wigner", number, opt.tol);
    rep.add("phase_state_wigner", phase, opt.tol);
    rep.add("aa_mass", mass, opt.tol);
    rep.add("aa_marginals", marg, opt.tol);
    rep.add("aa_reality", real, opt.tol);
    rep.add("even_odd_reconstruction", eo, opt.tol);
    rep.add("even_odd_masses", eo_mass, opt.tol);

    if (d > 2 && dim.is_prime()) {
        std::vector<double> f(d), g(d);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int n = 0; n < d; ++n) {
            f[n] = q_oscillator_spectrum(dim, 1, n);
            g[n] = u(rng);
        }
        const NumberExpansion ef = expand_number_function(dim, f);
        const NumberExpansion eg = expand_number_function(dim, g);
        rep.add("number_function_expansion", std::max({ef.diagonal_residual, eg.diagonal_residual, ef.spectral_residual}), std::max(opt.tol, 1e-9));
        rep.add("qosc_fock_space", qoscillator_fock_match(dim).residual, opt.tol);
    } else {
        rep.warnings.push_back("number-function expansion needs a non-degenerate q-oscillator; skipped");
    }

    double sgcn = 0;
    for (long long l = 0; l < std::min(d, 4); ++l) {
        const CommutatorLimit c = commutator_limit_check(dim, l);
        sgcn = std::max({sgcn, c.restricted, c.nested[0], c.nested[1], c.nested[2]});
    }
    rep.add("sgcn_restricted", sgcn, std::max(opt.tol, 1e-11));

    double gram = 0, ov = 0, iso = 0;
    std::uniform_real_distribution<double> ua(0.0, 1.0);
    for (int i = 0; i < 5; ++i) {
        const double a = ua(rng), b = ua(rng);
        const ShiftedFockBasis sb = build_shifted_fock(dim, a);
        gram = std::max({gram, sb.gram_residual, sb.completeness_residual, sb.shift_residual});
        ov = std::max(ov, shifted_overlap(dim, a).residual);
        iso = std::max(iso, shift_isomorphism_check(dim, a, b));
    }
    rep.add("shifted_fock_gram", gram, opt.tol);
    rep.add("shifted_overlap", ov, std::max(opt.tol, 1e-13));
    rep.add("shift_isomorphism", iso, opt.tol);

    const double lin = make_profile(d, ProfileCase::Linear).index;
    const double g0 = dim.gamma0();
    rep.add("index_linear", std::abs(lin - std::exp(-1.0 / g0) * (1.0 - std::exp(-static_cast<double>(d)))), std::max(opt.tol, 1e-12));
    double cyc_index = std::abs(make_profile(d, ProfileCase::Admissible).index);
    if (d > 2) cyc_index = std::max(cyc_index, std::abs(limiting_spectrum(dim, ProfileCase::UnitCross).index));
    if (d > 2 && dim.is_prime()) cyc_index = std::max(cyc_index, std::abs(make_profile(d, ProfileCase::QOscillator).index));
    rep.add("index_cyclic", cyc_index, 1e-14);
    return rep;
}

SuiteReport transforms_suite(const Dimension& dim, const SuiteOptions& opt) {
    const int d = dim.value();
    SuiteReport rep{"transforms", d, {}, {}};
    if (!dim.is_prime()) {
        rep.warnings.push_back("composite D: the metaplectic construction is not defined; only symplectic arithmetic is checked");
    }
    std::mt19937_64 rng(opt.seed);
    const SymplecticMap fourier = map_from_rows(0, -1, 1, 0);
    int bad = !verify_symplectic(dim, {}) + !verify_symplectic(dim, fourier) + !verify_symplectic(dim, map_from_rows(1, 1, 0, 1));
    double area = 0;
    std::vector<SymplecticMap> maps;
    for (int i = 0; i < std::max(opt.samples, 1); ++i) {
        const SymplecticMap r = random_symplectic(dim, rng);
        maps.push_back(r);
        bad += !verify_symplectic(dim, r);
        const LatticeVector a{1, 2}, b{-1, 3};
        area = std::max(area, static_cast<double>(std::abs(equivalence_class_label(dim, apply(r, a), apply(r, b)) - equivalence_class_label(dim, a, b))));
    }
    rep.add("symplectic_examples", bad, 0.0);
    rep.add("area_preservation", area, 0.0);
    if (!dim.is_prime()) return rep;

    const MetaplecticOperator f = build_metaplectic(dim, fourier);
    rep.add("fourier_map_is_F", proportionality_residual(f.G.entries, build_fourier_operator(dim).entries), opt.tol);
    const MetaplecticOperator id = build_metaplectic(dim, {});
    rep.add("identity_map_is_I", proportionality_residual(id.G.entries, Matrix(Matrix::Identity(d, d))), opt.tol);
    double unit = 0, cov = 0, modulus = 0, closure = 0;
    for (size_t i = 0; i < maps.size(); ++i) {
        const MetaplecticOperator g = build_metaplectic(dim, maps[i]);
        unit = std::max(unit, g.unitary_residual);
        cov = std::max(cov, g.max_residual);
        modulus = std::max(modulus, g.max_modulus_defect);
        closure = std::max(closure, group_closure(dim, maps[i], maps[(i + 1) % maps.size()]).residual);
    }
    rep.add("unitary", unit, std::max(opt.tol, 1e-12));
    rep.add("covariance", cov, std::max(opt.tol, 1e-9));
    rep.add("phase_modulus", modulus, opt.tol);
    rep.add("group_closure", closure, std::max(opt.tol, 1e-8), d > 2);
    if (d == 2) rep.warnings.push_back("D = 2: group closure is reported but not gated");
    return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"schwinger", "qosc", "sl2", "wigner", "numberphase", "transforms", "all"};
    return names;
}

SuiteReport run_suite(const std::string& name, const Dimension& dim, const SuiteOptions& opt) {
    if (name == "schwinger") return schwinger_suite(dim, opt);
    if (name == "qosc") return qosc_suite(dim, opt);
    if (name == "sl2") return sl2_suite(dim, opt);
    if (name == "wigner") return wigner_suite(dim, opt);
    if (name == "numberphase") return numberphase_suite(dim, opt);
    if (name == "transforms") return transforms_suite(dim, opt);
    if (name == "all") {
        SuiteReport all{"all", dim.value(), {}, {}};
        for (const auto& n : suite_names())
            if (n != "all") all.merge(run_suite(n, dim, opt));
        return all;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown suite: " + name);
}

}  // namespace torus
