#pragma once

#include "braidcalc/hopf.hpp"

namespace braidcalc {

/// Simultaneous right module and right comodule over H subject to the
/// crossed compatibility relation.
struct YDModule {
  int dim = 0;
  LinMap ract;    // X (x) H -> X
  LinMap rcoact;  // X -> X (x) H
};

/// Module axioms, comodule axioms, and the crossed compatibility relation,
/// all as exact matrix identities X (x) H -> X (x) H.
Report check_crossed(const Bialgebra& h, const YDModule& x);

/// Both sides of the crossed compatibility relation (for diagnostics and
/// oracle tests).
std::pair<LinMap, LinMap> crossed_relation_sides(const Bialgebra& h, const YDModule& x);

/// The braiding X (x) Y -> Y (x) X of the crossed-module category.
/// Throws NotCrossed unless both arguments pass check_crossed.
LinMap yd_braiding(const Bialgebra& h, const YDModule& x, const YDModule& y);

/// Exact inverse of yd_braiding, built from S^-1. Requires h.s_inv
/// (AntipodeNotInverted otherwise); the postcondition is asserted.
LinMap yd_braiding_inverse(const HopfAlgebra& h, const YDModule& x, const YDModule& y);

/// Tensor product with diagonal action and diagonal coaction.
YDModule yd_tensor(const Bialgebra& h, const YDModule& x, const YDModule& y);

/// Trivial structure on k^d: x . h = eps(h) x, x -> x (x) 1.
YDModule trivial_yd(const Bialgebra& h, int d);
/// H over itself with right adjoint action and regular coaction.
YDModule adjoint_regular_yd(const HopfAlgebra& h);
/// H over itself with regular action and right coadjoint coaction.
YDModule regular_coadjoint_yd(const HopfAlgebra& h);

/// Plain-map morphism test: f: X -> Y commuting with both structures.
bool is_crossed_morphism(const Bialgebra& h, const YDModule& x, const YDModule& y,
                         const LinMap& f);

}  // namespace braidcalc
