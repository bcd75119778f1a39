#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "braidcalc/field.hpp"

namespace braidcalc {

struct EchelonForm;
struct LinearSolution;

/// A linear map between based vector spaces: cod() x dom() matrix over the
/// field, stored sparse row-major. Tensor indices are row-major throughout:
/// index(i (x) j) = i * dim_second + j, for domain and codomain alike.
class LinMap {
 public:
  LinMap() = default;

  static LinMap zero(FieldPtr f, int cod, int dom);
  static LinMap identity(FieldPtr f, int n);
  /// The transposition X (x) Y -> Y (x) X, dims (a, b).
  static LinMap flip(FieldPtr f, int a, int b);
  /// cod x dom matrix from a dense row-major initializer of rationals.
  static LinMap from_rows(FieldPtr f, const std::vector<std::vector<Rational>>& rows);

  int cod() const { return cod_; }
  int dom() const { return dom_; }
  const FieldPtr& field() const { return field_; }

  Scalar at(int r, int c) const;
  void set(int r, int c, const Scalar& v);
  void add_to(int r, int c, const Scalar& v);

  /// this o g (matrix product this * g); inner dimensions must agree.
  LinMap compose(const LinMap& g) const;
  LinMap kron(const LinMap& b) const;
  LinMap add(const LinMap& b) const;
  LinMap sub(const LinMap& b) const;
  LinMap neg() const;
  LinMap scale(const Scalar& s) const;
  LinMap transpose() const;
  /// Block-diagonal direct sum.
  LinMap dsum(const LinMap& b) const;

  bool is_zero() const;
  bool operator==(const LinMap& o) const;
  bool operator!=(const LinMap& o) const { return !(*this == o); }

  void for_each(const std::function<void(int, int, const Scalar&)>& fn) const;
  int nnz() const;

  /// First entry (lexicographic by row, col) where the two maps differ;
  /// nullopt when equal. Shapes must agree.
  std::optional<std::pair<int, int>> first_difference(const LinMap& o) const;

  std::string to_pretty_string() const;

 private:
  int cod_ = 0, dom_ = 0;
  FieldPtr field_;
  std::vector<std::vector<std::pair<int, Scalar>>> rows_;  // rows_[r]: sorted by col, nonzero

  friend EchelonForm echelon(const LinMap& f);
  friend LinearSolution solve_right(const LinMap& a, const LinMap& b);
};

inline LinMap operator*(const LinMap& a, const LinMap& b) { return a.compose(b); }
inline LinMap operator+(const LinMap& a, const LinMap& b) { return a.add(b); }
inline LinMap operator-(const LinMap& a, const LinMap& b) { return a.sub(b); }

/// id_left (x) f (x) id_right.
LinMap id_tensor(int left, const LinMap& f, int right);

/// Exact row-reduction data shared by the factorization routines.
/// Pivoting is deterministic: columns are scanned left to right, and the
/// pivot row for a column is the first remaining row with a nonzero entry.
struct EchelonForm {
  LinMap rref;                // reduced row echelon form of the input
  std::vector<int> pivot_cols;  // increasing
  int rank = 0;
};
EchelonForm echelon(const LinMap& f);

struct Factorization {
  LinMap kernel_basis;  // dom x nullity, columns span ker f
  LinMap image_basis;   // cod x rank, the pivot columns of f
  LinMap coim_proj;     // rank x dom surjection with ker = ker f
  int rank = 0;
};
/// f = image_basis o coim_proj exactly (CR decomposition via RREF).
Factorization factorize(const LinMap& f);

struct SplitPair {
  LinMap section;     // i_e: X_e -> X
  LinMap retraction;  // p_e: X -> X_e
  int rank = 0;
};
/// Splits an idempotent e = e^2 as e = section o retraction with
/// retraction o section = id. Throws NotIdempotent.
SplitPair split_idempotent(const LinMap& e);

LinMap inverse(const LinMap& f);  // throws NotInvertible

struct LinearSolution {
  bool consistent = false;
  LinMap solution;  // a particular X with A o X = B (free variables zero)
  int nullity = 0;  // dim ker A
};
/// Solve A o X = B for X.
LinearSolution solve_right(const LinMap& a, const LinMap& b);
/// Solve X o A = B for X.
LinearSolution solve_left(const LinMap& a, const LinMap& b);

int rank_of(const LinMap& f);

}  // namespace braidcalc
