#pragma once

#include <map>

#include "braidcalc/ydmod.hpp"

namespace braidcalc {

/// A based space with an invertible self-braiding satisfying the braid
/// relation; the only datum the antisymmetrizer construction needs.
struct BraidedObject {
  FieldPtr field;
  int dim = 0;
  LinMap braiding;  // X (x) X -> X (x) X
};

Report check_braided(const BraidedObject& x);

BraidedObject flip_braided(FieldPtr f, int dim);
BraidedObject neg_flip_braided(FieldPtr f, int dim);
/// Hecke braiding on dim 2, normalized so the symmetric part is fixed:
/// e_ii -> e_ii, e_01 -> (1/q) e_10, e_10 -> (1/q) e_01 + (1 - 1/q^2) e_10.
BraidedObject hecke_qplane(FieldPtr f, const Rational& q);
BraidedObject yd_braided(const Bialgebra& h, const YDModule& x);

// ---- permutations and the braid-group section ----

int inversion_count(const std::vector<int>& perm);
/// Adjacent-transposition word (left-to-right bubble), reduced.
std::vector<int> bubble_reduced_word(const std::vector<int>& perm);
std::vector<std::vector<int>> all_permutations(int j);
/// Shuffle permutations whose inverse is increasing on the first k and the
/// last l slots (the coset representatives used by the coproduct side).
std::vector<std::vector<int>> unshuffles(int k, int l);
std::vector<int> inverse_permutation(const std::vector<int>& perm);
std::vector<int> reversal_permutation(int j);

/// Lift of a permutation to Aut(X^(x)j) through the braiding: the place
/// transposition s_i maps to id^(i) (x) Psi (x) id^(j-i-2), composed along
/// a fixed reduced word. Throws NotPermutation.
LinMap braid_rep(const BraidedObject& x, int degree, const std::vector<int>& perm);

inline constexpr int kMaxAntisymDegree = 8;

struct Antisymmetrizers {
  LinMap total;      // A_{k+l}
  LinMap shuffle;    // A_{(k,l)}
  LinMap coshuffle;  // A^{(k,l)}
};

/// Signed sums of braid lifts over S_{k+l}, the unshuffles, and their
/// inverses. Throws DegreeTooLarge beyond the factorial guard.
Antisymmetrizers antisymmetrizers(const BraidedObject& x, int k, int l);
LinMap total_antisymmetrizer(const BraidedObject& x, int j);

// ---- graded objects ----

struct ComplexObject {
  std::vector<int> dims;     // degrees 0..maxDegree
  std::vector<LinMap> diffs;  // d_j: X_j -> X_{j+1}, j = 0..maxDegree-1
};

Report check_complex(const ComplexObject& c);
ComplexObject tensor_complex(const ComplexObject& a, const ComplexObject& b);

struct GradedPairBraidings {
  std::vector<int> xdims, ydims;
  std::map<std::pair<int, int>, LinMap> blocks;  // Psi_{X_k, Y_l}
};

/// Degree-j component of the graded braiding: the direct sum of the
/// blocks (-1)^(kl) Psi_{X_k,Y_l} over k+l = j. Throws MissingBlock.
LinMap graded_braiding(const GradedPairBraidings& p, int j);

/// Degreewise bialgebra with block braidings; the unit and counit live in
/// degree 0. Compatibility is checked against the sign-graded braiding.
struct GradedBialgebra {
  FieldPtr field;
  int max_degree = 0;
  std::vector<int> dims;
  std::map<std::pair<int, int>, LinMap> mul;    // X_k (x) X_l -> X_{k+l}
  std::map<std::pair<int, int>, LinMap> comul;  // X_{k+l} -> X_k (x) X_l
  LinMap unit;                                  // 1 -> X_0
  LinMap counit;                                // X_0 -> 1
  std::vector<LinMap> antipode;                 // optional, per degree
  std::map<std::pair<int, int>, LinMap> braid;  // unsigned Psi_{X_k,X_l}
};

Report check_graded_bialgebra(const GradedBialgebra& g);

/// Tensor bialgebra of a braided object: identification products and
/// unshuffle coproducts; axioms verified degreewise up to max_degree.
GradedBialgebra tensor_hopf(const BraidedObject& x, int max_degree);
/// Dual structure: shuffle products, identification coproducts.
GradedBialgebra cotensor_hopf(const BraidedObject& x, int max_degree);

struct ExteriorHopf {
  GradedBialgebra hopf;           // quotient structure on the coimages
  std::vector<int> dims;          // rank of A_j per degree
  std::vector<LinMap> hat_a;      // A_j
  std::vector<LinMap> coim_proj;  // X^(x)j -> coim(A_j)
  std::vector<LinMap> section;    // right inverse of coim_proj
  Report morphisms;               // the degreewise bialgebra-morphism squares
};

/// Verifies that the total antisymmetrizer is a degreewise bialgebra
/// morphism from the tensor to the cotensor structure and induces the
/// quotient bialgebra on its coimages (well-definedness checked by
/// kernel annihilation). Throws NotBialgebraMorphism, DegreeTooLarge.
ExteriorHopf exterior_hopf(const BraidedObject& x, int max_degree);

}  // namespace braidcalc
