#include "torus/deformed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace torus {

namespace {

cplx expi(double a) { return {std::cos(a), std::sin(a)}; }

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Matrix eigvec_matrix(const SchwingerEigensystem& es) {
    const int d = es.dim.value();
    Matrix v(d, d);
    for (int i = 0; i < d; ++i) v.col(i) = es.eigenvectors[i];
    return v;
}

template <class F>
std::vector<cplx> map_values(const std::vector<double>& xs, F f) {
    std::vector<cplx> out;
    out.reserve(xs.size());
    for (double x : xs) out.push_back(f(x));
    return out;
}

// max |M_ab (x_b - x_a - shift)| in the eigenbasis, with and without the
// entries whose offset is a nonzero multiple of D (cyclic wraparound)
std::pair<double, double> ladder_defect(const Matrix& m_eig, const std::vector<double>& x, double shift, int d) {
    double restricted = 0.0, full = 0.0;
    for (int a = 0; a < m_eig.rows(); ++a)
        for (int b = 0; b < m_eig.cols(); ++b) {
            const double diff = x[b] - x[a] - shift;
            const double v = std::abs(m_eig(a, b)) * std::abs(diff);
            full = std::max(full, v);
            const double wraps = std::round(diff / d);
            const bool wrap = wraps != 0.0 && std::abs(diff - wraps * d) < 1e-6;
            if (!wrap) restricted = std::max(restricted, v);
        }
    return {restricted, full};
}

long long checked_cross(const Dimension& dim, LatticeVector m, LatticeVector mp) {
    const long long c = lattice_cross(m, mp);
    if (mod(c, dim.value()) == 0) throw Error(ErrorKind::CollinearVectors, "m x m' = 0 mod D");
    return c;
}

long long checked_inverse(const Dimension& dim, long long c) {
    try {
        return mod_inverse(c, dim.value());
    } catch (const Error&) {
        throw Error(ErrorKind::BranchAmbiguity, "m x m' is not invertible mod D");
    }
}

}  // namespace

double sl2_bracket(double theta, double x) { return std::sin(theta * x) / std::sin(theta / 2.0); }
double q_bracket(double theta, double x) { return std::sin(theta * x) / std::sin(theta); }

LadderValues ladder_values(const Dimension& dim, long long c, const std::vector<cplx>& w) {
    const int d = dim.value();
    const double g0 = dim.gamma0();
    bool roots = true;
    for (const cplx& x : w) {
        const double k = std::arg(x) * d / (2.0 * std::numbers::pi);
        if (std::abs(k - std::round(k)) > 1e-8) roots = false;
    }
    LadderValues out;
    if (!roots) {
        const double t = static_cast<double>(d) / (2.0 * static_cast<double>(c));
        out.offset = t - std::floor(t);
    }
    const long long cinv = checked_inverse(dim, c);
    const cplx base = expi(-g0 * static_cast<double>(c) * out.offset);
    for (const cplx& x : w) {
        const cplx y = x / base;
        const long long r = mod(std::llround(-std::arg(y) * d / (2.0 * std::numbers::pi)), d);
        double j = out.offset + static_cast<double>(mod(r * cinv, d));
        while (j >= d / 2.0 - 1e-9) j -= d;
        while (j < -d / 2.0 - 1e-9) j += d;
        out.values.push_back(j);
    }
    return out;
}

UqSl2Realisation build_uq_sl2(const Dimension& dim, LatticeVector m, LatticeVector mp) {
    const int d = dim.value();
    const long long c = checked_cross(dim, m, mp);
    checked_inverse(dim, c);
    const double theta = dim.gamma0() * static_cast<double>(c);

    UqSl2Realisation r{dim, m, mp, c, {}, {}, {}, {}, {}, {}, {dim, {}, "sl2-A"}, {dim, {}, "sl2-Adag"}, {dim, {}, "sl2-J3"}, {}, {}};
    r.p = root_phase(-c, d);
    r.p_half = half_phase(-c, d);
    r.s_p = half_phase(-c * d, d);
    r.s_tilde_p = half_phase(-c * (d - 1), d);
    const cplx gap = r.p_half - 1.0 / r.p_half;
    const cplx target = -1.0 / (gap * gap);
    const double kappa = 1.0 / (4.0 * std::pow(std::sin(theta / 2.0), 2));
    r.d = std::sqrt(kappa);
    r.dp = std::sqrt(kappa);
    r.coefficient_residual = std::abs(r.d * std::conj(r.dp) - target);

    const Matrix sm = schwinger_matrix(dim, m);
    const Matrix smp = schwinger_matrix(dim, mp);
    const Matrix a = r.d * sm + r.dp * smp;
    const Matrix ad = a.adjoint();
    r.A.entries = a;
    r.Adag.entries = ad;

    const LatticeVector diff = add(m, neg(mp));
    const Matrix sa = schwinger_matrix(dim, diff);
    const SchwingerEigensystem es = eigensystem_by_recursion(dim, diff);
    if (es.degenerate) throw Error(ErrorKind::BranchAmbiguity, "S_{m-m'} has a degenerate spectrum");
    r.eigvecs = eigvec_matrix(es);
    std::vector<cplx> w;
    for (const cplx& lam : es.eigenvalues) w.push_back(lam / r.s_p);
    const LadderValues lad = ladder_values(dim, c, w);
    r.j3_values = lad.values;
    r.j3_offset = lad.offset;
    const auto& j = r.j3_values;
    r.J3.entries = spectral_matrix(r.eigvecs, map_values(j, [](double x) { return cplx(x); }));

    r.intertwine_residual = max_abs(Matrix(a * sa - r.p * sa * a));
    r.intertwine_conj_residual = max_abs(Matrix(a * sa.adjoint() - sa.adjoint() * a / r.p));
    const Matrix pj = spectral_matrix(r.eigvecs, map_values(j, [&](double x) { return expi(-theta * x); }));
    r.j3_residual = max_abs(Matrix(sa - r.s_p * pj));
    const Matrix bracket = spectral_matrix(r.eigvecs, map_values(j, [&](double x) { return cplx(sl2_bracket(theta, x + d / 2.0)); }));
    r.commutator_residual = max_abs(Matrix(commutator(a, ad) + bracket));
    const auto [restricted, full] = ladder_defect(r.eigvecs.adjoint() * a * r.eigvecs, j, 1.0, d);
    r.ladder_residual = restricted;
    r.ladder_full_residual = full;
    r.ladder_cyclic_residual = max_abs(Matrix(a * pj - r.p * pj * a));
    return r;
}

Matrix sl2_function(const UqSl2Realisation& r, const std::function<cplx(double)>& f) {
    return spectral_matrix(r.eigvecs, map_values(r.j3_values, f));
}

CasimirReport casimir_uq_sl2(const UqSl2Realisation& r) {
    const int d = r.dim.value();
    const double theta = r.dim.gamma0() * static_cast<double>(r.cross);
    const Matrix& a = r.A.entries;
    const Matrix& ad = r.Adag.entries;
    CasimirReport rep;
    rep.form1 = ad * a + sl2_function(r, [&](double j) { return cplx(std::pow(sl2_bracket(theta, 0.5 * (j + d / 2.0 - 0.5)), 2)); });
    rep.form2 = a * ad + sl2_function(r, [&](double j) { return cplx(std::pow(sl2_bracket(theta, 0.5 * (j + d / 2.0 + 0.5)), 2)); });
    rep.forms_residual = max_abs(Matrix(rep.form1 - rep.form2));
    rep.commutes_A = max_abs(commutator(rep.form1, a));
    rep.commutes_Adag = max_abs(commutator(rep.form1, ad));
    rep.commutes_J3 = max_abs(commutator(rep.form1, r.J3.entries));
    rep.value = rep.form1.trace().real() / d;
    rep.scalar_residual = max_abs(Matrix(rep.form1 - rep.value * Matrix::Identity(d, d)));
    rep.predicted = 1.0 / std::pow(std::sin(theta / 2.0), 2);
    rep.vanishes = std::abs(rep.value) < 1e-9;
    return rep;
}

double q_oscillator_spectrum(const Dimension& dim, long long cross, double n) {
    const double theta = dim.gamma0() * static_cast<double>(cross);
    const double h = (dim.value() - 1) / 2.0;
    return 1.0 / std::abs(std::sin(theta)) + q_bracket(theta, n + h);
}

QOscillator build_q_oscillator(const Dimension& dim, LatticeVector m, LatticeVector mp, Pair pair) {
    const int d = dim.value();
    const long long c = checked_cross(dim, m, mp);
    if (mod(2 * c, d) == 0) throw Error(ErrorKind::DegenerateDeformation, "sin(gamma0 m x m') = 0; C is not finite");
    const long long cinv = checked_inverse(dim, c);
    const double g0 = dim.gamma0();
    const double theta = g0 * static_cast<double>(c);
    const double h = (d - 1) / 2.0;

    QOscillator o{dim, m, mp, pair, c, {}, {}, {}, 1, 0.0, {},
                  {dim, {}, "qosc-A"}, {dim, {}, "qosc-Adag"}, {dim, {}, "qosc-N"}, {dim, {}, "qosc-Q"}, {}, {}};
    o.q = root_phase(-c, d);
    o.c_q = half_phase(c * (d - 1), d);

    const Matrix sm = schwinger_matrix(dim, m, pair);
    const Matrix smp = schwinger_matrix(dim, mp, pair);
    const Matrix base = schwinger_matrix(dim, neg(m), pair) * smp;
    // Q^D must equal c_q^D q^{-D N} = (-1)^{c (D-1)}
    const cplx want = mod(c * (d - 1), 2) == 0 ? 1.0 : -1.0;
    const cplx base_power = matrix_power(base, d).trace() / static_cast<double>(d);
    bool found = false;
    for (int s : {1, -1}) {
        if (std::abs(std::pow(static_cast<double>(s), d) * base_power - want) < 1e-8) {
            o.sigma = s;
            found = true;
            break;
        }
    }
    if (!found) throw Error(ErrorKind::BranchAmbiguity, "no sign choice gives Q^D = c_q^D");

    const cplx z = static_cast<double>(o.sigma) / (1.0 / o.q - o.q);
    o.d = std::sqrt(std::abs(z));
    o.dp = z / o.d;
    o.C = 2.0 * std::abs(z);
    const Matrix a = o.d * sm + o.dp * smp;
    const Matrix ad = a.adjoint();
    const Matrix q = static_cast<double>(o.sigma) * base;
    o.A.entries = a;
    o.Adag.entries = ad;
    o.Q.entries = q;

    const SchwingerEigensystem es = eigensystem_by_recursion(dim, add(mp, neg(m)), pair);
    o.n_basis = Matrix::Zero(d, d);
    std::vector<bool> used(d, false);
    for (int i = 0; i < d; ++i) {
        const Vector& e = es.eigenvectors[i];
        const cplx x = e.dot(q * e);
        const long long t = mod(std::llround(std::arg(x) / g0 - static_cast<double>(c) * h), d);
        const int n = static_cast<int>(mod(t * cinv, d));
        if (used[n]) throw Error(ErrorKind::BranchAmbiguity, "number assignment is not a bijection");
        used[n] = true;
        o.n_basis.col(n) = e;
    }
    std::vector<double> ns(d);
    for (int n = 0; n < d; ++n) {
        ns[n] = n;
        o.spectrum.push_back(o.C + q_bracket(theta, n + h));
    }
    o.N.entries = spectral_matrix(o.n_basis, map_values(ns, [](double x) { return cplx(x); }));

    const Matrix id = Matrix::Identity(d, d);
    o.q_commutator_residual = max_abs(Matrix(a * ad - o.q * ad * a - o.C * (1.0 - o.q) * id - q));
    o.aq_residual = max_abs(Matrix(a * q - q * a / o.q));
    o.q_power_residual = max_abs(Matrix(q - o.c_q * spectral_matrix(o.n_basis, map_values(ns, [&](double n) { return expi(theta * n); }))));
    o.casimir_residual = max_abs(Matrix(ad * a - o.C * id - spectral_matrix(o.n_basis, map_values(ns, [&](double n) { return cplx(q_bracket(theta, n + h)); }))));
    const auto lad = ladder_defect(o.n_basis.adjoint() * a * o.n_basis, ns, 1.0, d);
    const auto lad_conj = ladder_defect(o.n_basis.adjoint() * ad * o.n_basis, ns, -1.0, d);
    o.ladder_residual = lad.first;
    o.ladder_full_residual = std::max(lad.second, lad_conj.second);
    o.ladder_conj_residual = lad_conj.first;
    const Matrix qn = spectral_matrix(o.n_basis, map_values(ns, [&](double n) { return expi(-theta * n); }));
    o.ladder_cyclic_residual = max_abs(Matrix(a * qn - o.q * qn * a));
    const Matrix apow = matrix_power(a, d);
    o.centrality_residual = std::max(max_abs(commutator(apow, a)), max_abs(commutator(apow, ad)));
    return o;
}

LowestWeightReport lowest_weight_scan(const Dimension& dim, LatticeVector m, LatticeVector mp, double tol) {
    const int d = dim.value();
    const long long c = checked_cross(dim, m, mp);
    LowestWeightReport rep;
    if (mod(2 * c, d) == 0) {
        rep.degenerate = true;
        rep.irreducible = false;
        rep.margin = std::numeric_limits<double>::infinity();
        return rep;
    }
    rep.margin = std::numeric_limits<double>::infinity();
    for (int n = 0; n < d; ++n) {
        const double v = std::abs(q_oscillator_spectrum(dim, c, n));
        if (v < rep.margin) {
            rep.margin = v;
            if (v < tol) rep.n0 = n;
        }
    }
    rep.solution_exists = rep.n0 >= 0;
    return rep;
}

LowestWeightReport lowest_weight_scan(const QOscillator& osc, double tol) {
    return lowest_weight_scan(osc.dim, osc.m, osc.mp, tol);
}

EigenCorrespondence eigenbasis_correspondence(const QOscillator& osc, double tol) {
    const Dimension& dim = osc.dim;
    if (!dim.is_prime()) throw Error(ErrorKind::InvalidDimension, "eigenbasis correspondence requires prime D");
    const int d = dim.value();
    const long long c = osc.cross;
    const double g0 = dim.gamma0();
    const double theta = g0 * static_cast<double>(c);
    const double h = (d - 1) / 2.0;
    const long long cinv = checked_inverse(dim, c);
    const SchwingerEigensystem es = eigensystem_by_recursion(dim, add(osc.m, neg(osc.mp)), osc.pair);
    const Matrix sm = schwinger_matrix(dim, osc.m, osc.pair);
    const Matrix smp = schwinger_matrix(dim, osc.mp, osc.pair);
    const Matrix& q = osc.Q.entries;

    std::vector<int> index_of_r(d, -1);
    for (int i = 0; i < d; ++i) index_of_r[es.r_index[i]] = i;

    EigenCorrespondence out;
    out.holonomy = 1.0;
    out.r_map_consistent = true;
    for (int i = 0; i < d; ++i) {
        const int r = es.r_index[i];
        const Vector& e = es.eigenvectors[i];
        const Vector& e2 = es.eigenvectors[index_of_r[mod(r - c, d)]];
        const cplx g = e2.dot(sm * e);
        const cplx f = e2.dot(smp * e);
        out.leakage = std::max({out.leakage, max_abs(Vector(sm * e - g * e2)), max_abs(Vector(smp * e - f * e2))});
        const cplx x = e.dot(q * e);
        const long long t = mod(std::llround(std::arg(x) / g0 - static_cast<double>(c) * h), d);
        const int n = static_cast<int>(mod(t * cinv, d));
        const int offset = static_cast<int>(mod(r - static_cast<long long>(n) * c, d));
        if (i == 0) out.r_offset = offset;
        else if (offset != out.r_offset) out.r_map_consistent = false;

        out.r.push_back(r);
        out.n.push_back(n);
        out.g.push_back(g);
        out.f.push_back(f);
        out.lambda.push_back(es.eigenvalues[i]);
        out.holonomy *= g * f;
        out.unit_modulus = std::max({out.unit_modulus, std::abs(std::abs(g) - 1.0), std::abs(std::abs(f) - 1.0)});
        out.amplitude_residual = std::max(out.amplitude_residual, std::abs(std::norm(osc.d * g + osc.dp * f) - osc.spectrum[n]));
        const cplx ratio = g / f;
        out.ratio_residual = std::max(out.ratio_residual, std::abs(ratio - static_cast<double>(osc.sigma) * std::exp(cplx(0.0, -theta * (n + h)))));
        out.conjugate_ratio_residual = std::max(out.conjugate_ratio_residual, std::abs(ratio - std::exp(cplx(0.0, theta * (n + h)))));
        const cplx lam_pred = static_cast<double>(osc.sigma) * std::exp(cplx(0.0, -theta * (n + d / 2.0)));
        out.lambda_residual = std::max(out.lambda_residual, std::abs(es.eigenvalues[i] - lam_pred));
        out.shifted_lambda_residual = std::max(out.shifted_lambda_residual, std::abs(es.eigenvalues[i] - std::exp(cplx(0.0, theta * (n - d / 2.0)))));
    }
    out.conjugate_gauge_reachable = std::abs(out.holonomy - 1.0) < 1e-8;
    if (out.leakage > tol || out.amplitude_residual > tol || out.unit_modulus > tol)
        throw Error(ErrorKind::PhaseMismatch, "S_m, S_m' do not act as the expected ladder on the S_{m-m'} eigenbasis");
    return out;
}

double CoproductReport::residual() const {
    return std::max({commutator_residual, intertwine_residual, single_residual, additivity_residual});
}

CoproductReport coproduct_check(const Dimension& dim, LatticeVector m, LatticeVector mp,
                                std::optional<std::pair<LatticeVector, LatticeVector>> second) {
    const int d = dim.value();
    if (d > 7) throw Error(ErrorKind::DimensionTooLarge, "coproduct check runs in dimension D^2; D <= 7 supported");
    const auto [n, np] = second.value_or(std::pair{m, mp});
    const long long c = checked_cross(dim, m, mp);
    if (mod(lattice_cross(n, np) - c, d) != 0)
        throw Error(ErrorKind::InvalidArgument, "coproduct factors must share the equivalence class m x m' mod D");

    const double g0 = dim.gamma0();
    const cplx p = root_phase(-c, d);
    CoproductReport rep;

    struct Factor {
        Matrix a, ad, v;
        std::vector<double> h;
        double theta_e;
        int sign;
        long long ce;
    };
    auto factor = [&](LatticeVector x, LatticeVector y) {
        const UqSl2Realisation r = build_uq_sl2(dim, x, y);
        const long long cx = r.cross;
        long long ce = cx;
        if (d % 2 == 1 && mod(cx, 2) != 0) ce = cx > 0 ? cx - d : cx + d;
        const Matrix sa = schwinger_matrix(dim, add(x, neg(y)));
        std::vector<cplx> w;
        for (int i = 0; i < d; ++i) w.push_back(r.eigvecs.col(i).dot(sa * r.eigvecs.col(i)));
        Factor f{r.A.entries, r.Adag.entries, r.eigvecs, ladder_values(dim, ce, w).values, g0 * static_cast<double>(ce), 1, ce};
        const double th = g0 * static_cast<double>(cx);
        f.sign = std::sin(th / 2.0) / std::sin(f.theta_e / 2.0) > 0 ? 1 : -1;
        return f;
    };
    const Factor f1 = factor(m, mp);
    const Factor f2 = factor(n, np);
    rep.even_cross = f1.ce;
    rep.sign = f1.sign;
    const double te = f1.theta_e;
    if (f2.sign != f1.sign || std::abs(std::remainder(f2.theta_e - te, 4.0 * std::numbers::pi)) > 1e-9)
        throw Error(ErrorKind::BranchAmbiguity, "coproduct factors select different square-root branches");
    const double s = f1.sign;

    auto spec = [&](const Factor& f, auto fn) { return spectral_matrix(f.v, map_values(f.h, fn)); };
    const Matrix k2 = spec(f2, [&](double x) { return expi(-te * x / 2.0); });
    const Matrix k1inv = spec(f1, [&](double x) { return expi(te * x / 2.0); });
    const Matrix dx = kron(f1.a, k2) + kron(k1inv, f2.a);
    const Matrix dxd = kron(f1.ad, k2) + kron(k1inv, f2.ad);

    const Matrix v2 = kron(f1.v, f2.v);
    std::vector<double> hh;
    for (double x : f1.h)
        for (double y : f2.h) hh.push_back(x + y);
    const Matrix bracket = spectral_matrix(v2, map_values(hh, [&](double x) { return cplx(sl2_bracket(te, x)); }));
    rep.commutator_residual = max_abs(Matrix(commutator(dx, dxd) + s * bracket));
    const Matrix ph = spectral_matrix(v2, map_values(hh, [&](double x) { return expi(-te * x); }));
    rep.intertwine_residual = max_abs(Matrix(dx * ph - p * ph * dx));

    const Matrix h1 = spec(f1, [](double x) { return cplx(x); });
    const Matrix h2 = spec(f2, [](double x) { return cplx(x); });
    const Matrix id = Matrix::Identity(d, d);
    rep.additivity_residual = max_abs(Matrix(kron(h1, id) + kron(id, h2) - spectral_matrix(v2, map_values(hh, [](double x) { return cplx(x); }))));

    for (const Factor* f : {&f1, &f2}) {
        const Matrix br = spec(*f, [&](double x) { return cplx(sl2_bracket(te, x)); });
        const Matrix pf = spec(*f, [&](double x) { return expi(-te * x); });
        rep.single_residual = std::max({rep.single_residual, max_abs(Matrix(commutator(f->a, f->ad) + s * br)),
                                        max_abs(Matrix(f->a * pf - p * pf * f->a))});
    }
    return rep;
}

TranslatedDeformation translated_lattice_deformation(const Dimension& dim, LatticeVector m, LatticeVector mp, LatticeVector r) {
    const int d = dim.value();
    const long long c = checked_cross(dim, m, mp);
    const LatticeVector diff = add(m, neg(mp));
    TranslatedDeformation out;
    out.delta_alpha = lattice_cross(r, diff);
    out.p = root_phase(-c, d);
    out.p_prime = out.p * root_phase(out.delta_alpha, d);
    const double kappa = 1.0 / (4.0 * std::pow(std::sin(dim.gamma0() * static_cast<double>(c) / 2.0), 2));
    const double coef = std::sqrt(kappa);
    const Matrix a = coef * (schwinger_matrix(dim, add(m, r)) + schwinger_matrix(dim, add(mp, r)));
    const Matrix ad = a.adjoint();
    const Matrix sa = schwinger_matrix(dim, diff);
    out.residual = std::max(max_abs(Matrix(a * sa - out.p_prime * sa * a)), max_abs(Matrix(ad * sa - sa * ad / out.p_prime)));
    return out;
}

}  // namespace torus
