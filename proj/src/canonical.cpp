#include "torus/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace torus {

SymplecticMap map_from_rows(long long a, long long b, long long c, long long d) { return {a, b, c, d}; }

LatticeVector apply(const SymplecticMap& r, LatticeVector m) {
    return {r.s1 * m.m1 + r.t1 * m.m2, r.s2 * m.m1 + r.t2 * m.m2};
}

SymplecticMap compose(const SymplecticMap& a, const SymplecticMap& b) {
    const LatticeVector s = apply(a, b.s());
    const LatticeVector t = apply(a, b.t());
    return {s.m1, t.m1, s.m2, t.m2};
}

SymplecticMap reduce(const Dimension& dim, const SymplecticMap& r) {
    const int d = dim.value();
    return {window(r.s1, d), window(r.t1, d), window(r.s2, d), window(r.t2, d)};
}

bool verify_symplectic(const Dimension& dim, const SymplecticMap& r) {
    const int d = dim.value();
    // R^t P R with P = [[0,1],[-1,0]]
    const long long a = r.s1, b = r.t1, c = r.s2, e = r.t2;
    const long long q01 = a * e - c * b;
    const long long q10 = b * c - e * a;
    const long long q00 = a * c - c * a;
    const long long q11 = b * e - e * b;
    if (mod(q00, d) != 0 || mod(q11, d) != 0 || mod(q01 - 1, d) != 0 || mod(q10 + 1, d) != 0) return false;
    if (mod(r.determinant() - 1, d) != 0) return false;
    const LatticeVector probes[] = {{1, 0}, {0, 1}, {1, 1}, {2, -1}, {-1, 3}};
    for (const auto& m : probes)
        for (const auto& mp : probes)
            if (lattice_cross_mod(dim, apply(r, m), apply(r, mp)) != lattice_cross_mod(dim, m, mp)) return false;
    return true;
}

long long equivalence_class_label(const Dimension& dim, LatticeVector m, LatticeVector mp) {
    return lattice_cross_mod(dim, m, mp);
}

SymplecticMap random_symplectic(const Dimension& dim, std::mt19937_64& rng) {
    const int d = dim.value();
    std::uniform_int_distribution<long long> u(0, d - 1);
    for (;;) {
        const long long s1 = u(rng), s2 = u(rng);
        if (s1 == 0 && s2 == 0) continue;
        const long long free = u(rng);
        // s1 t2 - s2 t1 = 1
        if (std::gcd(s1, static_cast<long long>(d)) == 1) {
            const long long t1 = free;
            const long long t2 = mod((1 + s2 * t1) * mod_inverse(s1, d), d);
            return reduce(dim, {s1, t1, s2, t2});
        }
        if (std::gcd(s2, static_cast<long long>(d)) == 1) {
            const long long t2 = free;
            const long long t1 = mod((s1 * t2 - 1) * mod_inverse(s2, d), d);
            return reduce(dim, {s1, t1, s2, t2});
        }
    }
}

namespace {

Matrix tilde_schwinger(const Dimension& dim, LatticeVector m) {
    Matrix s = schwinger_matrix(dim, m);
    if (mod(m.m1 * m.m2, 2) != 0) s = -s;
    return s;
}

}  // namespace

MetaplecticOperator build_metaplectic(const Dimension& dim, const SymplecticMap& map) {
    if (!verify_symplectic(dim, map)) throw Error(ErrorKind::NonSymplecticMap, "map is not in Sp(2, Z_D)");
    if (!dim.is_prime()) throw Error(ErrorKind::DegenerateEigensystem, "metaplectic construction requires prime D");
    const int d = dim.value();
    const SymplecticMap r = reduce(dim, map);
    const LatticeVector s = r.s(), t = r.t();

    const SchwingerEigensystem es = eigensystem_by_recursion(dim, s);
    Vector g0 = es.eigenvectors.front();
    if (d > 2) {
        const cplx target = mod(s.m1 * s.m2, 2) == 0 ? cplx(1.0) : cplx(-1.0);
        size_t best = 0;
        for (size_t i = 0; i < es.eigenvalues.size(); ++i)
            if (std::abs(es.eigenvalues[i] - target) < std::abs(es.eigenvalues[best] - target)) best = i;
        g0 = es.eigenvectors[best];
    }

    const Matrix st = d > 2 ? tilde_schwinger(dim, t) : schwinger_matrix(dim, t);
    const Matrix vb = basis_matrix(dim, Basis::V);
    Matrix g = Matrix::Zero(d, d);
    Vector col = g0;
    for (int k = 0; k < d; ++k) {
        g += col * vb.col(k).adjoint();
        col = st * col;
    }

    MetaplecticOperator out{dim, map, {dim, g, "metaplectic"}, unitarity_residual(g), {}, 0.0, 0.0, false};
    const Matrix gi = g.adjoint();
    cplx first = 0.0;
    out.chi_flat = true;
    for (const LatticeVector& m : window_vectors(dim)) {
        const LatticeVector image = reduce(dim, apply(r, m));
        ConjugationPhase cp{m, image, 0.0, 0.0};
        const Matrix lhs = g * schwinger_matrix(dim, m) * gi;
        const Matrix rhs = schwinger_matrix(dim, image);
        cp.residual = proportionality_residual(lhs, rhs, &cp.phase);
        out.max_residual = std::max(out.max_residual, cp.residual);
        out.max_modulus_defect = std::max(out.max_modulus_defect, std::abs(std::abs(cp.phase) - 1.0));
        if (out.per_m.empty()) first = cp.phase;
        else if (std::abs(cp.phase - first) > 1e-9) out.chi_flat = false;
        out.per_m.push_back(cp);
    }
    return out;
}

ClosureReport group_closure(const Dimension& dim, const SymplecticMap& a, const SymplecticMap& b) {
    const Matrix ga = build_metaplectic(dim, a).G.entries;
    const Matrix gb = build_metaplectic(dim, b).G.entries;
    const Matrix gab = build_metaplectic(dim, compose(a, b)).G.entries;
    ClosureReport rep;
    rep.residual = proportionality_residual(gab, Matrix(ga * gb), &rep.factor);
    return rep;
}

FourierWignerReport fourier_wigner_rotation_check(const Dimension& dim) {
    const int d = dim.value();
    const Matrix f = build_fourier_operator(dim).entries;
    const Matrix fi = f.adjoint();
    const auto ks = grid_kernels(dim);
    auto at = [&](long long a, long long b) -> const Matrix& { return ks[mod(a, d) * d + mod(b, d)]; };
    FourierWignerReport rep;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const Matrix conj = f * at(a, b) * fi;
            rep.rotation = std::max(rep.rotation, max_abs(Matrix(conj - at(-b, a))));
            rep.inverse_rotation = std::max(rep.inverse_rotation, max_abs(Matrix(conj - at(b, -a))));
            Matrix four = at(a, b);
            for (int i = 0; i < 4; ++i) four = f * four * fi;
            rep.order_four = std::max(rep.order_four, max_abs(Matrix(four - at(a, b))));
        }
    rep.origin = max_abs(Matrix(f * at(0, 0) * fi - at(0, 0)));
    return rep;
}

}  // namespace torus
