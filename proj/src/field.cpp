#include "braidcalc/field.hpp"

#include <algorithm>
#include <sstream>

#include "braidcalc/error.hpp"

namespace braidcalc {

const char* err_name(Err e) {
  switch (e) {
    case Err::ShapeMismatch: return "ShapeMismatch";
    case Err::NotIdempotent: return "NotIdempotent";
    case Err::NotInvertible: return "NotInvertible";
    case Err::BadParams: return "BadParams";
    case Err::NotAlgebraMorphism: return "NotAlgebraMorphism";
    case Err::NotCrossed: return "NotCrossed";
    case Err::AntipodeNotInverted: return "AntipodeNotInverted";
    case Err::NotInCategoryO: return "NotInCategoryO";
    case Err::NotQuasitriangular: return "NotQuasitriangular";
    case Err::NotModuleAlgebra: return "NotModuleAlgebra";
    case Err::NotComoduleCoalgebra: return "NotComoduleCoalgebra";
    case Err::NotProjection: return "NotProjection";
    case Err::NotBialgebraInCategory: return "NotBialgebraInCategory";
    case Err::NoAntipode: return "NoAntipode";
    case Err::MissingBlock: return "MissingBlock";
    case Err::NotPermutation: return "NotPermutation";
    case Err::DegreeTooLarge: return "DegreeTooLarge";
    case Err::NotBialgebraMorphism: return "NotBialgebraMorphism";
    case Err::NoSolution: return "NoSolution";
    case Err::NonUniqueSolution: return "NonUniqueSolution";
    case Err::NotGenerated: return "NotGenerated";
    case Err::NotTruncatedMorphism: return "NotTruncatedMorphism";
    case Err::FactorizationObstruction: return "FactorizationObstruction";
    case Err::ParseError: return "ParseError";
  }
  return "UnknownError";
}

Error::Error(Err code, const std::string& msg)
    : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}

void fail(Err code, const std::string& msg) { throw Error(code, msg); }

namespace {

// --- polynomial helpers over Q (dense coefficient vectors, low degree) ---

void trim(std::vector<Rational>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<Rational> poly_rem(std::vector<Rational> a, const std::vector<Rational>& b) {
  // b nonzero
  while (a.size() >= b.size() && !a.empty()) {
    Rational q = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
    trim(a);
    if (!a.empty() && a.size() >= b.size() && a.back() == 0) trim(a);
  }
  return a;
}

// extended gcd: returns g and u with u*a = g mod m (g constant when coprime)
struct ExtGcd {
  std::vector<Rational> g, u;
};

ExtGcd ext_gcd_mod(const std::vector<Rational>& a, const std::vector<Rational>& m) {
  // standard extended Euclid tracking only the coefficient of `a`
  std::vector<Rational> r0 = m, r1 = a;
  std::vector<Rational> u0 = {}, u1 = {Rational(1)};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    // divide r0 by r1
    std::vector<Rational> q;
    std::vector<Rational> rem = r0;
    if (rem.size() >= r1.size()) {
      q.assign(rem.size() - r1.size() + 1, Rational(0));
      while (rem.size() >= r1.size() && !rem.empty()) {
        Rational c = rem.back() / r1.back();
        size_t off = rem.size() - r1.size();
        q[off] = c;
        for (size_t i = 0; i < r1.size(); ++i) rem[off + i] -= c * r1[i];
        trim(rem);
      }
    }
    // u2 = u0 - q*u1
    std::vector<Rational> u2 = u0;
    if (!q.empty() && !u1.empty()) {
      u2.resize(std::max(u0.size(), q.size() + u1.size() - 1), Rational(0));
      for (size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        for (size_t j = 0; j < u1.size(); ++j) u2[i + j] -= q[i] * u1[j];
      }
      trim(u2);
    }
    r0 = r1;
    r1 = rem;
    u0 = u1;
    u1 = u2;
  }
  return {r0, u0};
}

// --- irreducibility over Q ---

bool has_rational_root(const std::vector<mpz_class>& p) {
  // p primitive integer poly, degree >= 1; rational root theorem
  mpz_class a0 = p.front(), ad = p.back();
  if (a0 == 0) return true;  // root 0
  std::vector<mpz_class> nums, dens;
  auto divisors = [](mpz_class n) {
    std::vector<mpz_class> out;
    n = abs(n);
    for (mpz_class d = 1; d * d <= n; ++d)
      if (n % d == 0) {
        out.push_back(d);
        out.push_back(n / d);
      }
    return out;
  };
  for (const auto& num : divisors(a0))
    for (const auto& den : divisors(ad))
      for (int sgn : {1, -1}) {
        // evaluate p(sgn*num/den) scaled by den^deg
        mpz_class acc = 0, npow = 1;
        mpq_class x(sgn * num, den);
        x.canonicalize();
        mpq_class val = 0, xp = 1;
        for (size_t i = 0; i < p.size(); ++i) {
          val += p[i] * xp;
          xp *= x;
        }
        (void)acc;
        (void)npow;
        if (val == 0) return true;
      }
  return false;
}

// dense poly arithmetic mod a small prime
using PolyP = std::vector<long>;

void trim_p(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyP mulmod_p(const PolyP& a, const PolyP& b, const PolyP& f, long p) {
  if (a.empty() || b.empty()) return {};
  PolyP c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  // reduce mod f (monic)
  while (c.size() >= f.size()) {
    long lead = c.back() % p;
    size_t off = c.size() - f.size();
    for (size_t i = 0; i < f.size(); ++i) c[off + i] = ((c[off + i] - lead * f[i]) % p + p) % p;
    trim_p(c);
    if (c.size() >= f.size() && !c.empty() && c.back() == 0) trim_p(c);
  }
  trim_p(c);
  return c;
}

PolyP powmod_xp(const PolyP& base, mpz_class e, const PolyP& f, long p) {
  PolyP result = {1}, b = base;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = mulmod_p(result, b, f, p);
    b = mulmod_p(b, b, f, p);
    e >>= 1;
  }
  return result;
}

PolyP gcd_p(PolyP a, PolyP b, long p) {
  trim_p(a);
  trim_p(b);
  while (!b.empty()) {
    // a mod b
    long binv = 1;
    {  // inverse of b.back() mod p
      long x = b.back() % p, r = 1, e = p - 2;
      while (e) {
        if (e & 1) r = (r * x) % p;
        x = (x * x) % p;
        e >>= 1;
      }
      binv = r;
    }
    while (a.size() >= b.size() && !a.empty()) {
      long c = (a.back() * binv) % p;
      size_t off = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) a[off + i] = ((a[off + i] - c * b[i]) % p + p) % p;
      trim_p(a);
    }
    std::swap(a, b);
  }
  return a;
}

bool irreducible_mod_p(const std::vector<mpz_class>& poly, long p) {
  size_t d = poly.size() - 1;
  PolyP f(poly.size());
  for (size_t i = 0; i < poly.size(); ++i) {
    mpz_class r = poly[i] % p;
    f[i] = ((r.get_si()) % p + p) % p;
  }
  if (f.back() == 0) return false;  // leading coeff vanishes mod p
  // make monic
  {
    long x = f.back(), r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = (r * x) % p;
      x = (x * x) % p;
      e >>= 1;
    }
    for (auto& c : f) c = (c * r) % p;
  }
  // x^(p^d) == x mod f, and gcd(x^(p^(d/q)) - x, f) == 1 for prime q | d
  PolyP x = {0, 1};
  mpz_class pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), p, d);
  PolyP xpd = powmod_xp(x, pd, f, p);
  PolyP diff = xpd;
  diff.resize(std::max<size_t>(diff.size(), 2), 0);
  diff[1] = ((diff[1] - 1) % p + p) % p;
  trim_p(diff);
  if (!diff.empty()) return false;
  for (size_t q = 2; q <= d; ++q) {
    if (d % q != 0) continue;
    bool prime = true;
    for (size_t t = 2; t * t <= q; ++t)
      if (q % t == 0) prime = false;
    if (!prime) continue;
    mpz_class pq;
    mpz_ui_pow_ui(pq.get_mpz_t(), p, d / q);
    PolyP xq = powmod_xp(x, pq, f, p);
    PolyP g = xq;
    g.resize(std::max<size_t>(g.size(), 2), 0);
    g[1] = ((g[1] - 1) % p + p) % p;
    trim_p(g);
    PolyP gg = gcd_p(g, f, p);
    if (gg.size() != 1) return false;
  }
  return true;
}

void verify_irreducible(const std::vector<Rational>& minpoly) {
  size_t d = minpoly.size() - 1;
  if (d == 1) return;
  // clear denominators
  mpz_class lcm = 1;
  for (const auto& c : minpoly) lcm = lcm * c.get_den() / gcd(lcm, c.get_den());
  std::vector<mpz_class> ip(minpoly.size());
  for (size_t i = 0; i < minpoly.size(); ++i) {
    mpq_class v = minpoly[i] * lcm;
    ip[i] = v.get_num();
  }
  if (has_rational_root(ip)) fail(Err::BadParams, "minimal polynomial has a rational root");
  if (d <= 3) return;  // no root and degree <= 3 => irreducible over Q
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L}) {
    if (ip.back() % p == 0) continue;
    if (irreducible_mod_p(ip, p)) return;
  }
  fail(Err::BadParams,
       "could not certify irreducibility of the minimal polynomial; "
       "pass certified=true for pre-verified input");
}

}  // namespace

FieldPtr Field::rationals() {
  static FieldPtr q = [] {
    auto f = std::shared_ptr<Field>(new Field());
    return FieldPtr(f);
  }();
  return q;
}

FieldPtr Field::extension(std::vector<Rational> minpoly, bool certified) {
  if (minpoly.size() < 2) fail(Err::BadParams, "minimal polynomial must have degree >= 1");
  if (minpoly.back() != 1) fail(Err::BadParams, "minimal polynomial must be monic");
  if (!certified) verify_irreducible(minpoly);
  auto f = std::shared_ptr<Field>(new Field());
  f->minpoly_ = std::move(minpoly);
  int d = f->degree();
  // reduction table: x^(d+k) mod minpoly
  if (d >= 1) {
    std::vector<Rational> cur(f->minpoly_.begin(), f->minpoly_.end() - 1);
    for (auto& c : cur) c = -c;  // x^d = -(c0 + ... + c_{d-1} x^{d-1})
    for (int k = 0; k <= d - 2; ++k) {
      f->red_.push_back(cur);
      // multiply by x and reduce
      std::vector<Rational> nxt(d, Rational(0));
      for (int i = 0; i < d - 1; ++i) nxt[i + 1] = cur[i];
      Rational top = cur[d - 1];
      if (top != 0)
        for (int i = 0; i < d; ++i) nxt[i] += top * -f->minpoly_[i];
      cur = nxt;
    }
  }
  return FieldPtr(f);
}

Scalar Field::zero() const { return Scalar{std::vector<Rational>(degree(), Rational(0))}; }

Scalar Field::one() const { return from_rational(Rational(1)); }

Scalar Field::from_rational(const Rational& r) const {
  Scalar s{std::vector<Rational>(degree(), Rational(0))};
  s.c[0] = r;
  return s;
}

Scalar Field::gen() const {
  if (is_rationals()) return one();
  Scalar s = zero();
  s.c[1] = 1;
  return s;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  Scalar r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  Scalar r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
  return r;
}

Scalar Field::neg(const Scalar& a) const {
  Scalar r = a;
  for (auto& v : r.c) v = -v;
  return r;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  int d = degree();
  if (d == 1) return Scalar{{a.c[0] * b.c[0]}};
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (int i = 0; i < d; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (b.c[j] == 0) continue;
      prod[i + j] += a.c[i] * b.c[j];
    }
  }
  Scalar r{std::vector<Rational>(prod.begin(), prod.begin() + d)};
  for (int k = 0; k <= d - 2; ++k) {
    const Rational& hi = prod[d + k];
    if (hi == 0) continue;
    for (int i = 0; i < d; ++i) r.c[i] += hi * red_[k][i];
  }
  return r;
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) fail(Err::NotInvertible, "division by zero");
  if (is_rationals()) return Scalar{{Rational(1) / a.c[0]}};
  std::vector<Rational> ap = a.c;
  while (!ap.empty() && ap.back() == 0) ap.pop_back();
  ExtGcd eg = ext_gcd_mod(ap, minpoly_);
  // gcd must be a nonzero constant (minpoly irreducible)
  if (eg.g.size() != 1 || eg.g[0] == 0) fail(Err::NotInvertible, "extension gcd failed");
  Rational ginv = Rational(1) / eg.g[0];
  std::vector<Rational> u = eg.u;
  u = poly_rem(u, minpoly_);
  Scalar r = zero();
  for (size_t i = 0; i < u.size(); ++i) r.c[i] = u[i] * ginv;
  return r;
}

Scalar Field::pow(const Scalar& a, long e) const {
  if (e < 0) return inv(pow(a, -e));
  Scalar r = one(), b = a;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

bool Field::is_zero(const Scalar& a) const {
  for (const auto& v : a.c)
    if (v != 0) return false;
  return true;
}

bool Field::is_one(const Scalar& a) const {
  if (a.c[0] != 1) return false;
  for (size_t i = 1; i < a.c.size(); ++i)
    if (a.c[i] != 0) return false;
  return true;
}

std::string Field::to_string(const Scalar& a) const {
  if (is_rationals()) return a.c[0].get_str();
  std::string out = "[";
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (i) out += ", ";
    out += a.c[i].get_str();
  }
  return out + "]";
}

Scalar Field::parse(const std::string& s) const {
  auto parse_q = [](const std::string& t) -> Rational {
    try {
      Rational r(t);
      r.canonicalize();
      if (r.get_den() == 0) fail(Err::ParseError, "zero denominator in '" + t + "'");
      return r;
    } catch (const std::invalid_argument&) {
      fail(Err::ParseError, "bad rational '" + t + "'");
    }
  };
  std::string t;
  for (char ch : s)
    if (!isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) fail(Err::ParseError, "empty scalar");
  if (t.front() == '[') {
    if (t.back() != ']') fail(Err::ParseError, "unterminated coefficient list");
    Scalar r = zero();
    std::string body = t.substr(1, t.size() - 2);
    size_t idx = 0, start = 0;
    if (!body.empty()) {
      for (size_t i = 0; i <= body.size(); ++i) {
        if (i == body.size() || body[i] == ',') {
          if (idx >= r.c.size()) fail(Err::ParseError, "too many coefficients for field degree");
          r.c[idx++] = parse_q(body.substr(start, i - start));
          start = i + 1;
        }
      }
    }
    return r;
  }
  return from_rational(parse_q(t));
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

}  // namespace braidcalc
