#include "torus/schwinger.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace torus {

namespace {

// S_m |u_k> = e^{-i pi (m1 m2 + 2 k m2)/D} |u_{k+m1}>
struct Column {
    int target;
    cplx phase;
};

Column clock_shift_column(int d, LatticeVector m, int k) {
    const long long t = m.m1 * m.m2 + 2LL * k * m.m2;
    return {static_cast<int>(mod(k + m.m1, d)), half_phase(-t, d)};
}

// S_m |n> = e^{-i pi (m1 m2 + 2 m1 j)/D} |j>,  j = n - m2
Column number_phase_column(int d, LatticeVector m, int n) {
    const long long j = mod(n - m.m2, d);
    const long long t = m.m1 * m.m2 + 2LL * m.m1 * j;
    return {static_cast<int>(j), half_phase(-t, d)};
}

Column column(int d, LatticeVector m, int k, Pair pair) {
    return pair == Pair::ClockShift ? clock_shift_column(d, m, k) : number_phase_column(d, m, k);
}

}  // namespace

Matrix schwinger_matrix(const Dimension& dim, LatticeVector m, Pair pair) {
    const int d = dim.value();
    Matrix s = Matrix::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        const Column c = column(d, m, k, pair);
        s(c.target, k) = c.phase;
    }
    return s;
}

Vector apply_schwinger(const Dimension& dim, LatticeVector m, const Vector& psi, Pair pair) {
    const int d = dim.value();
    Vector out = Vector::Zero(d);
    for (int k = 0; k < d; ++k) {
        const Column c = column(d, m, k, pair);
        out(c.target) += c.phase * psi(k);
    }
    return out;
}

SchwingerOperator build_schwinger(const Dimension& dim, LatticeVector m, Pair pair) {
    return {dim, m, {dim, schwinger_matrix(dim, m, pair), pair == Pair::ClockShift ? "schwinger" : "schwinger-number-phase"}};
}

int window_sign(const Dimension& dim, LatticeVector m) {
    const int d = dim.value();
    const LatticeVector w = reduce(dim, m);
    const long long t1 = (m.m1 - w.m1) / d;
    const long long t2 = (m.m2 - w.m2) / d;
    const long long e = t1 * w.m2 + t2 * w.m1 + static_cast<long long>(d) * t1 * t2;
    return mod(e, 2) == 0 ? 1 : -1;
}

Composition compose_schwinger(const SchwingerOperator& a, const SchwingerOperator& b, Pair pair) {
    if (!(a.dim == b.dim)) throw Error(ErrorKind::InvalidArgument, "dimension mismatch in composition");
    const Dimension& dim = a.dim;
    const int d = dim.value();
    const LatticeVector sum = add(a.m, b.m);
    const cplx phase = half_phase(lattice_cross(a.m, b.m), d) * static_cast<double>(window_sign(dim, sum));
    SchwingerOperator res = build_schwinger(dim, reduce(dim, sum), pair);
    Composition c{phase, res, 0.0, 0.0};
    c.residual = max_abs(Matrix(a.op.entries * b.op.entries - phase * res.op.entries));
    const cplx expected = is_zero_mod(dim, sum) ? cplx(d) : cplx(0.0);
    c.trace_residual = std::abs(res.op.entries.trace() - expected);
    return c;
}

PowerCheck schwinger_power_check(const SchwingerOperator& s, double tol) {
    const int d = s.dim.value();
    const Matrix p = matrix_power(s.op.entries, d);
    PowerCheck out;
    out.scalar = p.trace() / static_cast<double>(d);
    out.nonscalar = max_abs(Matrix(p - out.scalar * Matrix::Identity(d, d)));
    out.predicted = mod(static_cast<long long>(d) * s.m.m1 * s.m.m2, 2) == 0 ? 1 : -1;
    out.residual = std::abs(out.scalar - cplx(out.predicted));
    if (out.nonscalar > tol)
        throw Error(ErrorKind::NonscalarPower, "(S_m)^D is not a multiple of the identity");
    return out;
}

int eigen_index(const Dimension& dim, LatticeVector m, cplx lambda) {
    const int d = dim.value();
    const cplx x = lambda * half_phase(-m.m1 * m.m2 * d, d);
    const double r = -static_cast<double>(d) * std::arg(x) / (2.0 * std::numbers::pi);
    return static_cast<int>(mod(std::llround(r), d));
}

cplx closed_form_eigenvalue(const Dimension& dim, LatticeVector m, int r) {
    const int d = dim.value();
    // e^{i pi m1 m2} e^{-2 pi i r / D}
    return half_phase(static_cast<long long>(d) * m.m1 * m.m2, d) * root_phase(-r, d);
}

SchwingerEigensystem eigensystem_by_recursion(const Dimension& dim, LatticeVector m, Pair pair) {
    const int d = dim.value();
    SchwingerEigensystem es{dim, m, {}, {}, {}, {}, false, !dim.is_prime()};
    es.beta.resize(d);
    for (int j = 0; j < d; ++j) {
        const long long t = 2LL * j * m.m2 - m.m1 * m.m2;
        es.beta[j] = std::numbers::pi * static_cast<double>(mod(t, 2LL * d)) / d;
    }

    struct Entry {
        int r;
        cplx lambda;
        Vector e;
    };
    std::vector<Entry> entries;
    const long long step = mod(m.m1, d);

    if (step == 0) {
        for (int k = 0; k < d; ++k) {
            const Column c = clock_shift_column(d, m, k);
            Vector e = Vector::Zero(d);
            e(k) = 1.0;
            entries.push_back({eigen_index(dim, m, c.phase), c.phase, e});
        }
    } else {
        std::vector<bool> seen(d, false);
        for (int s = 0; s < d; ++s) {
            if (seen[s]) continue;
            std::vector<int> orbit;
            for (long long j = s; !seen[j]; j = mod(j + step, d)) {
                seen[j] = true;
                orbit.push_back(static_cast<int>(j));
            }
            const long long len = static_cast<long long>(orbit.size());
            long long total = 0;  // sum of t_k, mod 2 D L
            for (int k : orbit) total = mod(total + m.m1 * m.m2 + 2LL * k * m.m2, 2LL * d * len);
            for (long long jr = 0; jr < len; ++jr) {
                // lambda^L = e^{-i pi T / D}
                const double ang = -std::numbers::pi * static_cast<double>(total) / (static_cast<double>(d) * len) +
                                   2.0 * std::numbers::pi * static_cast<double>(jr) / static_cast<double>(len);
                const cplx lambda(std::cos(ang), std::sin(ang));
                Vector e = Vector::Zero(d);
                e(orbit[0]) = 1.0;
                for (size_t i = 0; i + 1 < orbit.size(); ++i) {
                    const Column c = clock_shift_column(d, m, orbit[i]);
                    e(c.target) = c.phase * e(orbit[i]) / lambda;
                }
                e /= std::sqrt(static_cast<double>(len));
                entries.push_back({eigen_index(dim, m, lambda), lambda, e});
            }
        }
    }

    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.r < b.r; });
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i > 0 && entries[i].r == entries[i - 1].r) es.degenerate = true;
        es.r_index.push_back(entries[i].r);
        es.eigenvalues.push_back(entries[i].lambda);
        es.eigenvectors.push_back(entries[i].e);
    }
    if (pair == Pair::NumberPhase) {
        // the number-phase pair is the Fourier conjugate of the clock/shift pair
        const Matrix f = build_fourier_operator(dim).entries;
        for (auto& e : es.eigenvectors) e = f * e;
    }
    return es;
}

EigenOracleReport compare_with_dense(const SchwingerEigensystem& es, Pair pair) {
    const Dimension& dim = es.dim;
    const int d = dim.value();
    const Matrix s = schwinger_matrix(dim, es.m, pair);
    EigenOracleReport rep;

    for (size_t i = 0; i < es.eigenvalues.size(); ++i) {
        rep.closed_form = std::max(rep.closed_form, std::abs(es.eigenvalues[i] - closed_form_eigenvalue(dim, es.m, es.r_index[i])));
        rep.eigen_equation = std::max(rep.eigen_equation, max_abs(Vector(s * es.eigenvectors[i] - es.eigenvalues[i] * es.eigenvectors[i])));
    }
    Matrix basis(d, d);
    for (int i = 0; i < d; ++i) basis.col(i) = es.eigenvectors[i];
    rep.orthonormality = unitarity_residual(basis);

    Eigen::ComplexEigenSolver<Matrix> solver(s, true);
    const Vector vals = solver.eigenvalues();
    const Matrix vecs = solver.eigenvectors();
    std::vector<bool> used(d, false);
    for (size_t i = 0; i < es.eigenvalues.size(); ++i) {
        int best = -1;
        double bd = 1e300;
        for (int j = 0; j < d; ++j) {
            if (used[j]) continue;
            const double dd = std::abs(vals(j) - es.eigenvalues[i]);
            if (dd < bd) { bd = dd; best = j; }
        }
        used[best] = true;
        rep.dense_eigenvalues = std::max(rep.dense_eigenvalues, bd);

        // project onto the dense eigenspace belonging to this eigenvalue
        std::vector<int> cluster;
        for (int j = 0; j < d; ++j)
            if (std::abs(vals(j) - es.eigenvalues[i]) < 1e-6) cluster.push_back(j);
        Matrix sub(d, static_cast<int>(cluster.size()));
        for (size_t c = 0; c < cluster.size(); ++c) sub.col(static_cast<int>(c)) = vecs.col(cluster[c]);
        Eigen::HouseholderQR<Matrix> qr(sub);
        const Matrix q = qr.householderQ() * Matrix::Identity(d, static_cast<int>(cluster.size()));
        const Vector proj = q * (q.adjoint() * es.eigenvectors[i]);
        rep.dense_eigenvectors = std::max(rep.dense_eigenvectors, max_abs(Vector(es.eigenvectors[i] - proj)));
    }
    return rep;
}

double sine_commutator_check(const Dimension& dim, LatticeVector m, LatticeVector n, Pair pair) {
    const double scale = dim.value() / (2.0 * std::numbers::pi);
    const double g0 = dim.gamma0();
    const Matrix dm = scale * schwinger_matrix(dim, m, pair);
    const Matrix dn = scale * schwinger_matrix(dim, n, pair);
    const Matrix dmn = scale * schwinger_matrix(dim, add(m, n), pair);
    const double s = std::sin(g0 * static_cast<double>(lattice_cross(m, n)) / 2.0);
    const Matrix rhs = cplx(0.0, 2.0 / g0 * s) * dmn;
    return max_abs(Matrix(commutator(dm, dn) - rhs));
}

WeylMatrices weyl_matrices(const Dimension& dim) {
    const int d = dim.value();
    Matrix g = Matrix::Zero(d, d), h = Matrix::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        g(k, k) = root_phase(k, d);
        h(k, (k + 1) % d) = 1.0;
    }
    WeylMatrices w{{dim, g, "weyl-g"}, {dim, h, "weyl-h"}, 0.0, 0.0};
    w.braid_residual = max_abs(Matrix(h * g - dim.omega() * g * h));
    const Matrix id = Matrix::Identity(d, d);
    w.cyclic_residual = std::max(max_abs(Matrix(matrix_power(g, d) - id)), max_abs(Matrix(matrix_power(h, d) - id)));
    return w;
}

Matrix weyl_generator(const Dimension& dim, LatticeVector m) {
    const int d = dim.value();
    const WeylMatrices w = weyl_matrices(dim);
    return half_phase(m.m1 * m.m2, d) * matrix_power(w.g.entries, mod(m.m1, d)) * matrix_power(w.h.entries, mod(m.m2, d));
}

double weyl_sine_check(const Dimension& dim, LatticeVector m, LatticeVector n) {
    const double scale = dim.value() / (2.0 * std::numbers::pi);
    const double g0 = dim.gamma0();
    const Matrix jm = scale * weyl_generator(dim, m);
    const Matrix jn = scale * weyl_generator(dim, n);
    const Matrix jmn = scale * weyl_generator(dim, add(m, n));
    const double s = std::sin(g0 * static_cast<double>(lattice_cross(m, n)) / 2.0);
    return max_abs(Matrix(commutator(jm, jn) + cplx(0.0, 2.0 / g0 * s) * jmn));
}

int schwinger_gram_rank(const Dimension& dim, double tol) {
    const auto labels = window_vectors(dim);
    const int d = dim.value();
    const int n = static_cast<int>(labels.size());
    Matrix cols(d * d, n);
    for (int i = 0; i < n; ++i) {
        const Matrix s = schwinger_matrix(dim, labels[i]);
        cols.col(i) = Eigen::Map<const Vector>(s.data(), d * d);
    }
    const Matrix gram = cols.adjoint() * cols;
    Eigen::SelfAdjointEigenSolver<Matrix> sol(gram);
    int rank = 0;
    for (int i = 0; i < n; ++i)
        if (sol.eigenvalues()(i) > tol * d) ++rank;
    return rank;
}

}  // namespace torus
