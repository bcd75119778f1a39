#pragma once

#include "braidcalc/hopfbimod.hpp"

namespace braidcalc {

/// Right H-module algebra: carrier algebra whose multiplication and unit
/// are H-linear for the diagonal/trivial actions.
struct ModuleAlgebra {
  int dim = 0;
  LinMap mul;   // A (x) A -> A
  LinMap unit;  // 1 -> A
  LinMap ract;  // A (x) H -> A
};

/// Right H-comodule coalgebra (dual data).
struct ComoduleCoalgebra {
  int dim = 0;
  LinMap comul;   // C -> C (x) C
  LinMap counit;  // C -> 1
  LinMap rcoact;  // C -> C (x) H
};

struct SmashProduct {
  int dim = 0;    // n * dim(A), carrier H (x) A
  LinMap mul;     // twisted multiplication
  LinMap unit;
  LinMap incl_a;  // i: A -> H (x) A
  LinMap incl_h;  // j: H -> H (x) A
};

/// Cross-product algebra on H (x) A. Throws NotModuleAlgebra when the
/// module-algebra conditions fail; associativity and unitality of the
/// result are asserted.
SmashProduct smash_product(const HopfAlgebra& h, const ModuleAlgebra& a);

/// The universal morphism g x| f = m_U o (g (x) f) induced by an algebra
/// morphism g: H -> U and an H-linear algebra morphism f: A -> U.
LinMap smash_universal_map(const AlgebraView& u, const LinMap& g, const LinMap& f);

struct SmashCoproduct {
  int dim = 0;
  LinMap comul;
  LinMap counit;
};

SmashCoproduct smash_coproduct(const HopfAlgebra& h, const ComoduleCoalgebra& c);

/// Carrier with algebra, coalgebra, action and coaction data; candidate
/// for a bialgebra cross product over H.
struct AdmissibleObject {
  int dim = 0;
  LinMap mul, unit, comul, counit;
  LinMap ract;    // X (x) H -> X
  LinMap rcoact;  // X -> X (x) H
};

/// Module-algebra and comodule-coalgebra conditions, the bialgebra axioms
/// of the cross product on H (x) X, the admissibility relations, and the
/// induced bialgebra projection.
Report check_admissible(const HopfAlgebra& h, const AdmissibleObject& x);

/// The cross-product bialgebra H |x X; requires check_admissible to pass.
Bialgebra smash_bialgebra(const HopfAlgebra& h, const AdmissibleObject& x);

struct BialgebraProjection {
  HopfAlgebra b1;
  Bialgebra b2;
  std::optional<LinMap> s2;  // antipode of b2, when Hopf
  LinMap eta_bar;            // B1 -> B2
  LinMap eps_bar;            // B2 -> B1, eps_bar o eta_bar = id
};

Report check_projection(const BialgebraProjection& p);

BialgebraProjection identity_projection(const HopfAlgebra& h);
BialgebraProjection smash_projection(const HopfAlgebra& h, const AdmissibleObject& x);

/// Bialgebra in the category of Hopf bimodules over b1: the carrier with
/// pulled-back (co)actions and the underline structure maps against the
/// tensor product over H.
struct UnderlineBialgebra {
  HopfBimodule carrier;
  LinMap mul_u;     // B (x) inv(B) -> B
  LinMap unit_u;    // H -> B (the projection unit)
  LinMap comul_u;   // B -> B (x) inv(B)
  LinMap counit_u;  // B -> H
  SplitPair split;  // splitting of the carrier invariants
};

/// Forward direction of the projection/bimodule-bialgebra isomorphism;
/// verifies the Hopf-bimodule axioms, the morphism property of all four
/// underline maps, and that the transfer back to the base category
/// recovers a bialgebra. Throws NotProjection.
UnderlineBialgebra projection_to_bimodule_bialgebra(const BialgebraProjection& p);

/// Reverse direction: the base-category bialgebra with m = mul_u o lambda,
/// Delta = rho o comul_u, eta = unit_u o eta_H, eps = eps_H o counit_u.
/// Throws NotBialgebraInCategory when the result fails the axioms.
BialgebraProjection bimodule_bialgebra_to_projection(const HopfAlgebra& h,
                                                     const UnderlineBialgebra& ub);

/// Underline antipode of a Hopf-algebra projection.
LinMap underline_antipode(const BialgebraProjection& p);
/// Recovers the big antipode from the underline one; the two orderings
/// with the relative antipode are computed and must agree (NoAntipode
/// otherwise).
LinMap antipode_from_underline(const HopfAlgebra& h, const UnderlineBialgebra& ub,
                               const LinMap& underline_s);

/// Bialgebra structure on a crossed module: the invariant part of a
/// bialgebra projection.
struct YDBialgebra {
  YDModule module;
  LinMap mul;     // X (x) X -> X
  LinMap unit;    // 1 -> X
  LinMap comul;   // X -> X (x) X
  LinMap counit;  // X -> 1
};

AdmissibleObject as_admissible(const YDBialgebra& b);

/// Invariant-part decomposition of a bialgebra projection; asserts that
/// the cross product of the result is isomorphic to b2 via the canonical
/// map m o (eta_bar (x) i) (an equality of matrices for cross-product
/// projections).
YDBialgebra radford_majid_decompose(const BialgebraProjection& p);

struct QTBialgebra {
  Bialgebra a;
  LinMap delta_bar;             // second comultiplication
  LinMap r;                     // 1 -> A (x) A
  std::optional<LinMap> r_inv;  // cached convolution inverse
  std::optional<LinMap> s;      // antipode, when Hopf
};

/// Both bialgebra structures, the pairing axioms, convolution
/// invertibility of R (cached into r_inv), the intertwining identity, and
/// the antipode-conjugation relation when antipodes exist.
Report check_quasitriangular(QTBialgebra& q);

/// A right module over a quasitriangular bialgebra satisfying the
/// double-comultiplication membership identity becomes a crossed module
/// via the R-induced coaction. Throws NotInCategoryO / NotQuasitriangular.
YDModule from_qt_module(const QTBialgebra& q, int dim, const LinMap& ract);

/// Quasitriangular bialgebra in the module category of A: carrier data
/// plus the action; the braided QT axioms use the crossed-module braiding.
struct QTModuleBialgebra {
  Bialgebra b;        // carrier algebra/coalgebra over the same field
  LinMap delta_bar;   // second comultiplication of B
  LinMap r;           // 1 -> B (x) B
  LinMap ract;        // B (x) A -> B
};

/// QT axioms for B evaluated inside the crossed-module category (braiding
/// in place of the flip).
Report check_qt_in_category(const QTBialgebra& qa, const QTModuleBialgebra& qb);

/// The cross product (A |x B, Abar |x Bbar, R) with the product R-matrix.
/// The output passes check_quasitriangular (asserted).
QTBialgebra bosonize_qt(const QTBialgebra& qa, const QTModuleBialgebra& qb);

/// Quantum group projection: compatible pair of projections together with
/// the R-matrices. On success the decomposition carries a QT structure,
/// which is extracted and checked.
Report check_qt_projection(const BialgebraProjection& p, const BialgebraProjection& p_bar,
                           const LinMap& r_a, const LinMap& r_h);

}  // namespace braidcalc
