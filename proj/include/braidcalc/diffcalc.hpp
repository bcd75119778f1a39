#pragma once

#include "braidcalc/crossprod.hpp"
#include "braidcalc/graded.hpp"

namespace braidcalc {

/// First-order bicovariant calculus: a Hopf bimodule with a differential
/// d: H -> X satisfying Leibniz, both covariances, and surjectivity of
/// H . dH.
struct FirstOrderCalculus {
  HopfAlgebra h;
  HopfBimodule x;
  LinMap d;  // H -> X
};

/// X = ker(m) < H (x) H with the structures inherited from the outer
/// actions and diagonal coactions, d(a) = 1 (x) a - a (x) 1 in the kernel
/// basis.
FirstOrderCalculus universal_first_order(const HopfAlgebra& h);

Report check_first_order(const FirstOrderCalculus& c);

/// Graded bialgebra with degreewise (co)actions over H per degree.
struct GradedWithCovariance {
  GradedBialgebra graded;
  std::vector<HopfBimodule> cov;
};

/// Degreewise bialgebra in the crossed-module category, the input to the
/// base-category transfer.
struct YDGradedBialgebra {
  std::vector<YDModule> components;
  std::map<std::pair<int, int>, LinMap> mul, comul;
  LinMap unit;    // 1 -> T_0
  LinMap counit;  // T_0 -> 1
  std::vector<LinMap> antipode;  // optional
};

/// Carrier-by-carrier transfer H (x) T_j with the coequalizer-composed
/// structure maps; degree-wise covariance structures come from the smash
/// inclusions. The graded bialgebra axioms of the result are asserted.
GradedWithCovariance transfer_to_base(const HopfAlgebra& h, const YDGradedBialgebra& g);

struct ExteriorCalculus {
  HopfAlgebra h;
  GradedBialgebra xw;             // degree 0 carrier H, degree 1 carrier X
  std::vector<HopfBimodule> cov;  // degreewise bicovariance structures
  std::vector<LinMap> diffs;      // d_j: Xw_j -> Xw_{j+1}, j < max_degree
  int max_degree = 0;
  // construction data (used by the universal property and the tests)
  YDModule yd;          // invariants of the first-order part
  ExteriorHopf ext;     // braided exterior algebra of yd
  LinMap phi;           // H (x) Y -> X carrier identification
  LinMap phi_inv;
};

/// Pipeline: invariants -> braided exterior algebra -> transfer -> exact
/// degree-by-degree solve for the unique differential (Leibniz, d^2 = 0,
/// bicovariance, d_0 given). Throws NoSolution / NonUniqueSolution.
ExteriorCalculus build_exterior_calculus(const FirstOrderCalculus& c, int max_degree);

/// Full verification: d^2 = 0, graded Leibniz for every component,
/// bicovariance, d_0 equality, and the graded bialgebra axioms.
Report check_exterior_calculus(const ExteriorCalculus& xc, const FirstOrderCalculus& c);

/// Extends a degree-(0,1) bialgebra morphism along the multiplication
/// surjections; uniqueness comes from surjectivity at every stage.
/// Throws NotGenerated, NotTruncatedMorphism, FactorizationObstruction.
std::vector<LinMap> universal_map(const GradedBialgebra& yhat, const LinMap& f0,
                                  const LinMap& f1, const ExteriorCalculus& target);

}  // namespace braidcalc
