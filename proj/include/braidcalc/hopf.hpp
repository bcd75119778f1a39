#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "braidcalc/linmap.hpp"
#include "braidcalc/report.hpp"

namespace braidcalc {

struct AlgebraView {
  int dim = 0;
  LinMap mul;   // dim^2 -> dim
  LinMap unit;  // 1 -> dim
};

struct CoalgebraView {
  int dim = 0;
  LinMap comul;   // dim -> dim^2
  LinMap counit;  // dim -> 1
};

/// Bialgebra over the base category of vector spaces; the categorical
/// transposition is the flip throughout this layer.
struct Bialgebra {
  FieldPtr field;
  int dim = 0;
  LinMap m;      // dim^2 -> dim
  LinMap eta;    // 1 -> dim
  LinMap delta;  // dim -> dim^2
  LinMap eps;    // dim -> 1
  std::string name;

  AlgebraView algebra() const { return {dim, m, eta}; }
  CoalgebraView coalgebra() const { return {dim, delta, eps}; }
};

struct HopfAlgebra : Bialgebra {
  LinMap s;  // antipode
  std::optional<LinMap> s_inv;
};

/// Throws ShapeMismatch unless all structure maps have the shapes implied
/// by dim.
void require_bialgebra_shapes(const Bialgebra& b);
void require_hopf_shapes(const HopfAlgebra& h);

Report check_bialgebra(const Bialgebra& b);
Report check_hopf(const HopfAlgebra& h);

/// Exact inverse of the antipode; stores the result in h.s_inv.
/// Throws NotInvertible when S is singular.
const LinMap& invert_antipode(HopfAlgebra& h);

/// m_dst o (f (x) g) o Delta_src.
LinMap convolution(const LinMap& f, const LinMap& g, const CoalgebraView& src,
                   const AlgebraView& dst);

/// Convolution inverse of the identity, i.e. the antipode, obtained by an
/// exact linear solve; nullopt when the bialgebra is not Hopf.
std::optional<LinMap> solve_antipode(const Bialgebra& b);

/// Convolution inverse of an element r: 1 -> A (x) A of the tensor-square
/// algebra; nullopt when not invertible.
std::optional<LinMap> convolution_inverse_of_element(const Bialgebra& a, const LinMap& r);

// ---- builtin algebras ----

std::vector<std::vector<int>> cyclic_group_table(int n);
std::vector<std::vector<int>> symmetric_group_table_s3();

HopfAlgebra group_algebra(FieldPtr f, const std::vector<std::vector<int>>& table,
                          const std::string& name);
HopfAlgebra function_algebra(FieldPtr f, const std::vector<std::vector<int>>& table,
                             const std::string& name);
HopfAlgebra sweedler_algebra();
/// Taft algebra of dimension n^2; `root` must be a primitive n-th root of
/// unity in `f`.
HopfAlgebra taft_algebra(int n, FieldPtr f, const Scalar& root);

// ---- (bi)modules over H ----

struct Bimodule {
  int dim = 0;
  LinMap lact;  // H (x) X -> X
  LinMap ract;  // X (x) H -> X
};

struct Bicomodule {
  int dim = 0;
  LinMap lcoact;  // X -> H (x) X
  LinMap rcoact;  // X -> X (x) H
};

Report check_right_module(const Bialgebra& h, int dim, const LinMap& ract);
Report check_left_module(const Bialgebra& h, int dim, const LinMap& lact);
Report check_right_comodule(const Bialgebra& h, int dim, const LinMap& rcoact);
Report check_left_comodule(const Bialgebra& h, int dim, const LinMap& lcoact);
Report check_bimodule(const Bialgebra& h, const Bimodule& x);
Report check_bicomodule(const Bialgebra& h, const Bicomodule& x);

Bimodule regular_bimodule(const Bialgebra& h);
Bicomodule regular_bicomodule(const Bialgebra& h);

/// A becomes an H-bimodule via pullback along the algebra morphism
/// f: H -> A. Throws NotAlgebraMorphism.
Bimodule pullback_bimodule(const LinMap& f, const AlgebraView& a, const Bialgebra& h);

/// Right adjoint action X (x) H -> X of a bimodule.
LinMap adjoint_action(const HopfAlgebra& h, const Bimodule& x);
/// Left adjoint action H (x) X -> X.
LinMap left_adjoint_action(const HopfAlgebra& h, const Bimodule& x);
/// Right coadjoint coaction X -> X (x) H of a bicomodule.
LinMap coadjoint_coaction(const HopfAlgebra& h, const Bicomodule& x);

/// Matrix of U |-> op(U) acting on ucod x udom matrices, with both matrix
/// spaces vectorized row-major. op must be linear.
LinMap operator_matrix(FieldPtr f, int ucod, int udom, int ocod, int odom,
                       const std::function<LinMap(const LinMap&)>& op);
LinMap vec(const LinMap& u);                       // (cod*dom) x 1, row-major
LinMap unvec(const LinMap& v, int cod, int dom);   // inverse of vec

}  // namespace braidcalc
