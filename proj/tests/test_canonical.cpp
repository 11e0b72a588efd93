#include "doctest.h"
#include "torus/canonical.hpp"

using namespace torus;

TEST_CASE("symplectic predicate") {
    const Dimension d5(5);
    CHECK(verify_symplectic(d5, SymplecticMap{}));
    CHECK(verify_symplectic(d5, map_from_rows(0, -1, 1, 0)));
    CHECK(verify_symplectic(d5, map_from_rows(1, 1, 0, 1)));
    CHECK(!verify_symplectic(d5, map_from_rows(2, 0, 0, 1)));
    // det = 6 = 1 mod 5
    CHECK(verify_symplectic(d5, map_from_rows(2, 0, 0, 3)));
}

TEST_CASE("map arithmetic") {
    const SymplecticMap rot = map_from_rows(0, -1, 1, 0);
    const LatticeVector a = apply(rot, {1, 0});
    CHECK(a.m1 == 0);
    CHECK(a.m2 == 1);
    SymplecticMap p = SymplecticMap{};
    for (int i = 0; i < 4; ++i) p = compose(rot, p);
    const Dimension d7(7);
    const SymplecticMap id = reduce(d7, p);
    CHECK(id.s1 == 1);
    CHECK(id.t1 == 0);
    CHECK(id.s2 == 0);
    CHECK(id.t2 == 1);
    // composition matches applying twice
    const SymplecticMap sh = map_from_rows(1, 2, 0, 1);
    const LatticeVector m{3, -2};
    const LatticeVector lhs = apply(compose(sh, rot), m), rhs = apply(sh, apply(rot, m));
    CHECK(lhs.m1 == rhs.m1);
    CHECK(lhs.m2 == rhs.m2);
}

TEST_CASE("equivalence class labels") {
    const Dimension d5(5);
    CHECK(equivalence_class_label(d5, {1, 0}, {0, 1}) == 1);
    CHECK(equivalence_class_label(d5, {1, 0}, {0, 2}) == 2);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 20; ++i) {
        const SymplecticMap r = random_symplectic(d5, rng);
        CHECK(verify_symplectic(d5, r));
        CHECK(equivalence_class_label(d5, apply(r, {1, 0}), apply(r, {0, 1})) == 1);
        CHECK(equivalence_class_label(d5, apply(r, {2, 1}), apply(r, {-1, 3})) == equivalence_class_label(d5, {2, 1}, {-1, 3}));
    }
}

TEST_CASE("metaplectic operator of the quarter rotation is the Fourier operator") {
    for (int d : {3, 5, 7}) {
        const Dimension dim(d);
        const MetaplecticOperator g = build_metaplectic(dim, map_from_rows(0, -1, 1, 0));
        CHECK(g.unitary_residual < 1e-12);
        CHECK(proportionality_residual(g.G.entries, build_fourier_operator(dim).entries) < 1e-10);
        CHECK(g.max_residual < 1e-9);
    }
}

TEST_CASE("identity map gives the identity up to phase") {
    const Dimension d5(5);
    const MetaplecticOperator g = build_metaplectic(d5, SymplecticMap{});
    CHECK(proportionality_residual(g.G.entries, Matrix(Matrix::Identity(5, 5))) < 1e-10);
    CHECK(g.chi_flat);
}

TEST_CASE("shear covariance, checked directly") {
    const Dimension d5(5);
    const SymplecticMap sh = map_from_rows(1, 0, 1, 1);
    const MetaplecticOperator g = build_metaplectic(d5, sh);
    CHECK(g.unitary_residual < 1e-12);
    int nonzero = 0;
    for (const auto& m : window_vectors(d5)) {
        if (is_zero_mod(d5, m)) continue;
        ++nonzero;
        const Matrix lhs = g.G.entries * schwinger_matrix(d5, m) * g.G.entries.adjoint();
        const Matrix rhs = schwinger_matrix(d5, apply(sh, m));
        cplx c;
        CHECK(proportionality_residual(lhs, rhs, &c) < 1e-9);
        CHECK(std::abs(std::abs(c) - 1.0) < 1e-9);
    }
    CHECK(nonzero == 24);
}

TEST_CASE("random maps at D=7") {
    const Dimension d7(7);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 5; ++i) {
        const MetaplecticOperator g = build_metaplectic(d7, random_symplectic(d7, rng));
        CHECK(g.unitary_residual < 1e-12);
        CHECK(g.max_residual < 1e-9);
        CHECK(g.max_modulus_defect < 1e-9);
    }
}

TEST_CASE("closure up to a phase") {
    const Dimension d5(5);
    const ClosureReport c = group_closure(d5, map_from_rows(1, 1, 0, 1), map_from_rows(0, -1, 1, 0));
    CHECK(c.residual < 1e-10);
    CHECK(std::abs(std::abs(c.factor) - 1.0) < 1e-10);
}

TEST_CASE("errors") {
    try {
        build_metaplectic(Dimension(5), map_from_rows(2, 0, 0, 1));
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonSymplecticMap);
    }
    try {
        build_metaplectic(Dimension(6), map_from_rows(1, 1, 0, 1));
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateEigensystem);
    }
}

TEST_CASE("fourier conjugation rotates the kernel") {
    for (int d : {3, 5}) {
        const FourierWignerReport r = fourier_wigner_rotation_check(Dimension(d));
        CHECK(r.rotation < 1e-10);
        CHECK(r.origin < 1e-12);
        CHECK(r.order_four < 1e-10);
    }
}
