#pragma once
// Symplectic maps on Z_D x Z_D and their unitary (metaplectic) realisation.

#include "torus/wigner.hpp"

#include <random>

namespace torus {

// R = [[s1, t1], [s2, t2]]; columns are s = R(1,0) and t = R(0,1).
struct SymplecticMap {
    long long s1 = 1, t1 = 0, s2 = 0, t2 = 1;
    long long determinant() const { return s1 * t2 - t1 * s2; }
    LatticeVector s() const { return {s1, s2}; }
    LatticeVector t() const { return {t1, t2}; }
};

// row-major a,b,c,d -> [[a,b],[c,d]]
SymplecticMap map_from_rows(long long a, long long b, long long c, long long d);
LatticeVector apply(const SymplecticMap& r, LatticeVector m);
SymplecticMap compose(const SymplecticMap& a, const SymplecticMap& b);  // a * b
SymplecticMap reduce(const Dimension& dim, const SymplecticMap& r);

// R^t P R = P mod D, det R = 1 mod D, and m x m' preserved for sample pairs
bool verify_symplectic(const Dimension& dim, const SymplecticMap& r);
long long equivalence_class_label(const Dimension& dim, LatticeVector m, LatticeVector mp);
// Uniform over Sp(2, Z_D) for prime D.
SymplecticMap random_symplectic(const Dimension& dim, std::mt19937_64& rng);

struct ConjugationPhase {
    LatticeVector m;
    LatticeVector image;  // reduce(R m)
    cplx phase;           // G S_m G^{-1} = phase * S_image
    double residual = 0.0;
};

struct MetaplecticOperator {
    Dimension dim;
    SymplecticMap map;
    OperatorMatrix G;
    double unitary_residual = 0.0;
    std::vector<ConjugationPhase> per_m;
    double max_residual = 0.0;        // worst per-m residual
    double max_modulus_defect = 0.0;  // max ||phase| - 1|
    bool chi_flat = false;            // every phase equal
};

// Columns G|v_k> = S~_t^k g0 with S~_m = (-1)^{m1 m2} S_m and g0 the
// recursion-fixed eigenvector of S_s with S~_s g0 = g0.
// Throws NonSymplecticMap, or DegenerateEigensystem for composite D.
MetaplecticOperator build_metaplectic(const Dimension& dim, const SymplecticMap& r);

struct ClosureReport {
    double residual = 0.0;  // |G(R1 R2) - c G(R1) G(R2)| after best c
    cplx factor;
};
ClosureReport group_closure(const Dimension& dim, const SymplecticMap& a, const SymplecticMap& b);

struct FourierWignerReport {
    double rotation = 0.0;          // F Delta(V) F^{-1} = Delta(R V), R(a,b) = (-b, a)
    double inverse_rotation = 0.0;  // against Delta(R^{-1} V)
    double origin = 0.0;
    double order_four = 0.0;
};
FourierWignerReport fourier_wigner_rotation_check(const Dimension& dim);

}  // namespace torus
