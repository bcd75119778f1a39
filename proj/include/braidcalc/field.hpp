#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace braidcalc {

using Rational = mpq_class;

/// Element of the active field, stored as rational coefficients of
/// 1, t, ..., t^(d-1) where t is the extension generator (d = 1 over Q).
struct Scalar {
  std::vector<Rational> c;

  bool operator==(const Scalar& o) const { return c == o.c; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// The base field: either Q or Q[t]/(minpoly) for a monic irreducible
/// minpoly. All arithmetic is exact; scalars are coefficient vectors of
/// length degree().
class Field {
 public:
  static FieldPtr rationals();

  /// minpoly: coefficients c0..cd with cd = 1, degree >= 1. Irreducibility
  /// over Q is verified (rational-root test for degree <= 3, mod-p
  /// certificates otherwise) unless `certified` is set.
  static FieldPtr extension(std::vector<Rational> minpoly, bool certified = false);

  bool is_rationals() const { return minpoly_.empty(); }
  int degree() const { return is_rationals() ? 1 : int(minpoly_.size()) - 1; }
  const std::vector<Rational>& minpoly() const { return minpoly_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_rational(const Rational& r) const;
  Scalar from_int(long n) const { return from_rational(Rational(n)); }
  /// The class of t in Q[t]/(minpoly); equals 1 over Q.
  Scalar gen() const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar inv(const Scalar& a) const;  // throws NotInvertible on zero
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  Scalar pow(const Scalar& a, long e) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;

  /// "a/b" over Q; "[a0, a1, ...]" over an extension (constants also accepted
  /// in plain "a/b" form).
  std::string to_string(const Scalar& a) const;
  Scalar parse(const std::string& s) const;

  bool same_as(const Field& o) const {
    return minpoly_ == o.minpoly_;
  }

 private:
  Field() = default;
  std::vector<Rational> minpoly_;  // empty for Q; else monic, degree >= 1
  // x^(d+k) mod minpoly, k = 0..d-2, used to reduce products.
  std::vector<std::vector<Rational>> red_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

}  // namespace braidcalc
