#include "braidcalc/hopf.hpp"

#include <algorithm>
#include <array>

#include "braidcalc/error.hpp"

namespace braidcalc {

namespace {

void require_shape(const LinMap& f, int cod, int dom, const char* what) {
  if (f.cod() != cod || f.dom() != dom)
    fail(Err::ShapeMismatch, std::string(what) + " must be " + std::to_string(cod) + "x" +
                                 std::to_string(dom) + ", got " + std::to_string(f.cod()) + "x" +
                                 std::to_string(f.dom()));
}

}  // namespace

void require_bialgebra_shapes(const Bialgebra& b) {
  if (!b.field) fail(Err::ShapeMismatch, "bialgebra has no field");
  require_shape(b.m, b.dim, b.dim * b.dim, "m");
  require_shape(b.eta, b.dim, 1, "eta");
  require_shape(b.delta, b.dim * b.dim, b.dim, "delta");
  require_shape(b.eps, 1, b.dim, "eps");
}

void require_hopf_shapes(const HopfAlgebra& h) {
  require_bialgebra_shapes(h);
  require_shape(h.s, h.dim, h.dim, "s");
  if (h.s_inv) require_shape(*h.s_inv, h.dim, h.dim, "sInv");
}

Report check_bialgebra(const Bialgebra& b) {
  require_bialgebra_shapes(b);
  Report rep;
  rep.subject = b.name.empty() ? "bialgebra" : b.name;
  const int n = b.dim;
  FieldPtr F = b.field;
  LinMap id = LinMap::identity(F, n);
  LinMap id1 = LinMap::identity(F, 1);
  LinMap flip = LinMap::flip(F, n, n);

  rep.check_equal("associativity", b.m * b.m.kron(id), b.m * id.kron(b.m));
  rep.check_equal("unit-left", b.m * b.eta.kron(id), id);
  rep.check_equal("unit-right", b.m * id.kron(b.eta), id);
  rep.check_equal("coassociativity", b.delta.kron(id) * b.delta, id.kron(b.delta) * b.delta);
  rep.check_equal("counit-left", b.eps.kron(id) * b.delta, id);
  rep.check_equal("counit-right", id.kron(b.eps) * b.delta, id);
  rep.check_equal("comult-multiplicative", b.delta * b.m,
                  b.m.kron(b.m) * id_tensor(n, flip, n) * b.delta.kron(b.delta));
  rep.check_equal("comult-unital", b.delta * b.eta, b.eta.kron(b.eta));
  rep.check_equal("counit-multiplicative", b.eps * b.m, b.eps.kron(b.eps));
  rep.check_equal("counit-unital", b.eps * b.eta, id1);
  return rep;
}

Report check_hopf(const HopfAlgebra& h) {
  require_hopf_shapes(h);
  Report rep = check_bialgebra(h);
  rep.subject = h.name.empty() ? "hopf-algebra" : h.name;
  const int n = h.dim;
  LinMap id = LinMap::identity(h.field, n);
  LinMap eta_eps = h.eta * h.eps;
  rep.check_equal("antipode-left", h.m * h.s.kron(id) * h.delta, eta_eps);
  rep.check_equal("antipode-right", h.m * id.kron(h.s) * h.delta, eta_eps);
  if (h.s_inv) {
    rep.check_equal("antipode-inverse-left", h.s * *h.s_inv, id);
    rep.check_equal("antipode-inverse-right", *h.s_inv * h.s, id);
  }
  return rep;
}

const LinMap& invert_antipode(HopfAlgebra& h) {
  require_hopf_shapes(h);
  if (!h.s_inv) {
    if (rank_of(h.s) != h.dim)
      fail(Err::NotInvertible, "antipode of " + h.name + " is singular");
    h.s_inv = inverse(h.s);
  }
  return *h.s_inv;
}

LinMap convolution(const LinMap& f, const LinMap& g, const CoalgebraView& src,
                   const AlgebraView& dst) {
  if (f.dom() != src.dim || g.dom() != src.dim || f.cod() != dst.dim || g.cod() != dst.dim)
    fail(Err::ShapeMismatch, "convolution operands must map the coalgebra into the algebra");
  return dst.mul * f.kron(g) * src.comul;
}

LinMap vec(const LinMap& u) {
  LinMap out = LinMap::zero(u.field(), u.cod() * u.dom(), 1);
  u.for_each([&](int r, int c, const Scalar& v) { out.set(r * u.dom() + c, 0, v); });
  return out;
}

LinMap unvec(const LinMap& v, int cod, int dom) {
  LinMap out = LinMap::zero(v.field(), cod, dom);
  v.for_each([&](int r, int, const Scalar& val) { out.set(r / dom, r % dom, val); });
  return out;
}

LinMap operator_matrix(FieldPtr f, int ucod, int udom, int ocod, int odom,
                       const std::function<LinMap(const LinMap&)>& op) {
  LinMap out = LinMap::zero(f, ocod * odom, ucod * udom);
  Scalar one = f->one();
  for (int r = 0; r < ucod; ++r)
    for (int c = 0; c < udom; ++c) {
      LinMap e = LinMap::zero(f, ucod, udom);
      e.set(r, c, one);
      LinMap img = op(e);
      img.for_each([&](int i, int j, const Scalar& v) { out.set(i * odom + j, r * udom + c, v); });
    }
  return out;
}

std::optional<LinMap> solve_antipode(const Bialgebra& b) {
  require_bialgebra_shapes(b);
  const int n = b.dim;
  LinMap id = LinMap::identity(b.field, n);
  LinMap eta_eps = b.eta * b.eps;
  LinMap conv_left = operator_matrix(b.field, n, n, n, n, [&](const LinMap& u) {
    return b.m * u.kron(id) * b.delta;
  });
  LinearSolution sol = solve_right(conv_left, vec(eta_eps));
  if (!sol.consistent || sol.nullity != 0) return std::nullopt;
  LinMap s = unvec(sol.solution, n, n);
  if (!(b.m * id.kron(s) * b.delta == eta_eps)) return std::nullopt;
  return s;
}

std::optional<LinMap> convolution_inverse_of_element(const Bialgebra& a, const LinMap& r) {
  const int n = a.dim;
  require_shape(r, n * n, 1, "r");
  LinMap id2 = LinMap::identity(a.field, n * n);
  LinMap flip = LinMap::flip(a.field, n, n);
  // multiplication of the tensor-square algebra
  LinMap m2 = a.m.kron(a.m) * id_tensor(n, flip, n);
  LinMap unit2 = a.eta.kron(a.eta);
  // x |-> r * x in A (x) A
  LinMap lmul = m2 * r.kron(id2);
  LinearSolution sol = solve_right(lmul, unit2);
  if (!sol.consistent || sol.nullity != 0) return std::nullopt;
  LinMap rinv = sol.solution;
  // two-sided: x |-> x * r applied to the candidate must give the unit too
  LinMap rmul = m2 * id2.kron(r);
  if (!(rmul * rinv == unit2)) return std::nullopt;
  return rinv;
}

// ---- builtins ----

std::vector<std::vector<int>> cyclic_group_table(int n) {
  if (n < 1) fail(Err::BadParams, "cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

std::vector<std::vector<int>> symmetric_group_table_s3() {
  // S3 elements as one-line permutations of {0,1,2} in lexicographic order
  std::vector<std::array<int, 3>> elems;
  std::array<int, 3> p = {0, 1, 2};
  do {
    elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::array<int, 3>& q) {
    for (size_t i = 0; i < elems.size(); ++i)
      if (elems[i] == q) return int(i);
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> comp;
      for (int x = 0; x < 3; ++x) comp[x] = elems[i][elems[j][x]];  // (g*h)(x) = g(h(x))
      t[i][j] = index_of(comp);
    }
  return t;
}

namespace {

struct GroupData {
  int n;
  int identity;
  std::vector<int> inv;
};

GroupData validate_group(const std::vector<std::vector<int>>& t) {
  int n = int(t.size());
  if (n == 0) fail(Err::BadParams, "empty multiplication table");
  for (const auto& row : t) {
    if (int(row.size()) != n) fail(Err::BadParams, "multiplication table is not square");
    for (int v : row)
      if (v < 0 || v >= n) fail(Err::BadParams, "table entry out of range");
  }
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int j = 0; j < n; ++j)
      if (t[e][j] != j || t[j][e] != j) ok = false;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) fail(Err::BadParams, "table has no identity element");
  std::vector<int> inv(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (t[i][j] == identity && t[j][i] == identity) inv[i] = j;
    if (inv[i] < 0) fail(Err::BadParams, "element without inverse");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (t[t[i][j]][k] != t[i][t[j][k]]) fail(Err::BadParams, "table is not associative");
  return {n, identity, inv};
}

void verify_builtin(const HopfAlgebra& h) {
  Report rep = check_hopf(h);
  if (!rep.ok())
    fail(Err::BadParams, "builtin '" + h.name + "' failed its axiom suite: " + rep.summary());
}

}  // namespace

HopfAlgebra group_algebra(FieldPtr f, const std::vector<std::vector<int>>& table,
                          const std::string& name) {
  GroupData g = validate_group(table);
  int n = g.n;
  HopfAlgebra h;
  h.field = f;
  h.dim = n;
  h.name = name;
  Scalar one = f->one();
  h.m = LinMap::zero(f, n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h.m.set(table[i][j], i * n + j, one);
  h.eta = LinMap::zero(f, n, 1);
  h.eta.set(g.identity, 0, one);
  h.delta = LinMap::zero(f, n * n, n);
  for (int i = 0; i < n; ++i) h.delta.set(i * n + i, i, one);
  h.eps = LinMap::zero(f, 1, n);
  for (int i = 0; i < n; ++i) h.eps.set(0, i, one);
  h.s = LinMap::zero(f, n, n);
  for (int i = 0; i < n; ++i) h.s.set(g.inv[i], i, one);
  verify_builtin(h);
  return h;
}

HopfAlgebra function_algebra(FieldPtr f, const std::vector<std::vector<int>>& table,
                             const std::string& name) {
  GroupData g = validate_group(table);
  int n = g.n;
  HopfAlgebra h;
  h.field = f;
  h.dim = n;
  h.name = name;
  Scalar one = f->one();
  h.m = LinMap::zero(f, n, n * n);
  for (int i = 0; i < n; ++i) h.m.set(i, i * n + i, one);
  h.eta = LinMap::zero(f, n, 1);
  for (int i = 0; i < n; ++i) h.eta.set(i, 0, one);
  h.delta = LinMap::zero(f, n * n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h.delta.set(i * n + j, table[i][j], one);
  h.eps = LinMap::zero(f, 1, n);
  h.eps.set(0, g.identity, one);
  h.s = LinMap::zero(f, n, n);
  for (int i = 0; i < n; ++i) h.s.set(g.inv[i], i, one);
  verify_builtin(h);
  return h;
}

HopfAlgebra sweedler_algebra() {
  // basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx
  FieldPtr f = Field::rationals();
  HopfAlgebra h;
  h.field = f;
  h.dim = 4;
  h.name = "sweedler";
  Scalar one = f->one(), neg = f->neg(one);
  h.m = LinMap::zero(f, 4, 16);
  auto mul = [&](int i, int j, int k, const Scalar& c) { h.m.set(k, i * 4 + j, c); };
  for (int j = 0; j < 4; ++j) mul(0, j, j, one);
  mul(1, 0, 1, one);
  mul(2, 0, 2, one);
  mul(3, 0, 3, one);
  mul(1, 1, 0, one);
  mul(1, 2, 3, one);
  mul(1, 3, 2, one);
  mul(2, 1, 3, neg);
  mul(3, 1, 2, neg);
  h.eta = LinMap::zero(f, 4, 1);
  h.eta.set(0, 0, one);
  h.delta = LinMap::zero(f, 16, 4);
  h.delta.set(0 * 4 + 0, 0, one);                     // 1 -> 1 (x) 1
  h.delta.set(1 * 4 + 1, 1, one);                     // g -> g (x) g
  h.delta.set(0 * 4 + 2, 2, one);                     // x -> 1 (x) x + x (x) g
  h.delta.set(2 * 4 + 1, 2, one);
  h.delta.set(1 * 4 + 3, 3, one);                     // gx -> g (x) gx + gx (x) 1
  h.delta.set(3 * 4 + 0, 3, one);
  h.eps = LinMap::zero(f, 1, 4);
  h.eps.set(0, 0, one);
  h.eps.set(0, 1, one);
  h.s = LinMap::zero(f, 4, 4);
  h.s.set(0, 0, one);
  h.s.set(1, 1, one);
  h.s.set(3, 2, one);   // S(x) = gx
  h.s.set(2, 3, neg);   // S(gx) = -x
  verify_builtin(h);
  return h;
}

HopfAlgebra taft_algebra(int n, FieldPtr f, const Scalar& root) {
  if (n < 2) fail(Err::BadParams, "taft algebra needs n >= 2");
  // primitive n-th root of unity
  if (!f->is_one(f->pow(root, n))) fail(Err::BadParams, "root is not an n-th root of unity");
  for (int k = 1; k < n; ++k)
    if (f->is_one(f->pow(root, k))) fail(Err::BadParams, "root is not primitive");
  const int d = n * n;
  auto idx = [n](int i, int j) { return i * n + j; };  // g^i x^j
  HopfAlgebra h;
  h.field = f;
  h.dim = d;
  h.name = "taft" + std::to_string(n);
  Scalar one = f->one();
  h.m = LinMap::zero(f, d, d * d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          if (j + l >= n) continue;  // x^n = 0
          Scalar c = f->pow(root, j * k);
          h.m.set(idx((i + k) % n, j + l), idx(i, j) * d + idx(k, l), c);
        }
  h.eta = LinMap::zero(f, d, 1);
  h.eta.set(idx(0, 0), 0, one);
  // Gaussian binomials at q = root
  std::vector<std::vector<Scalar>> qb(n, std::vector<Scalar>(n, f->zero()));
  for (int j = 0; j < n; ++j) {
    qb[j][0] = one;
    for (int t = 1; t <= j; ++t) {
      Scalar up = (t <= j - 1) ? qb[j - 1][t] : f->zero();
      Scalar diag = qb[j - 1][t - 1];
      qb[j][t] = f->add(diag, f->mul(f->pow(root, t), up));
    }
  }
  h.delta = LinMap::zero(f, d * d, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int t = 0; t <= j; ++t)
        h.delta.set(idx(i, t) * d + idx((i + t) % n, j - t), idx(i, j), qb[j][t]);
  h.eps = LinMap::zero(f, 1, d);
  for (int i = 0; i < n; ++i) h.eps.set(0, idx(i, 0), one);
  // S(g) = g^(n-1), S(x) = -zeta^(n-1) g^(n-1) x; extend antimultiplicatively
  LinMap sg = LinMap::zero(f, d, 1);
  sg.set(idx(n - 1, 0), 0, one);
  LinMap sx = LinMap::zero(f, d, 1);
  sx.set(idx(n - 1, 1), 0, f->neg(f->pow(root, n - 1)));
  auto mulvec = [&](const LinMap& u, const LinMap& v) { return h.m * u.kron(v); };
  h.s = LinMap::zero(f, d, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      LinMap acc = h.eta;
      for (int t = 0; t < j; ++t) acc = mulvec(acc, sx);
      for (int t = 0; t < i; ++t) acc = mulvec(acc, sg);
      acc.for_each([&](int r, int, const Scalar& v) { h.s.set(r, idx(i, j), v); });
    }
  verify_builtin(h);
  return h;
}

// ---- modules ----

Report check_right_module(const Bialgebra& h, int dim, const LinMap& ract) {
  require_bialgebra_shapes(h);
  require_shape(ract, dim, dim * h.dim, "right action");
  Report rep;
  rep.subject = "right-module";
  LinMap idx = LinMap::identity(h.field, dim);
  LinMap idh = LinMap::identity(h.field, h.dim);
  rep.check_equal("ract-assoc", ract * ract.kron(idh), ract * idx.kron(h.m));
  rep.check_equal("ract-unit", ract * idx.kron(h.eta), idx);
  return rep;
}

Report check_left_module(const Bialgebra& h, int dim, const LinMap& lact) {
  require_bialgebra_shapes(h);
  require_shape(lact, dim, h.dim * dim, "left action");
  Report rep;
  rep.subject = "left-module";
  LinMap idx = LinMap::identity(h.field, dim);
  LinMap idh = LinMap::identity(h.field, h.dim);
  rep.check_equal("lact-assoc", lact * idh.kron(lact), lact * h.m.kron(idx));
  rep.check_equal("lact-unit", lact * h.eta.kron(idx), idx);
  return rep;
}

Report check_right_comodule(const Bialgebra& h, int dim, const LinMap& rcoact) {
  require_bialgebra_shapes(h);
  require_shape(rcoact, dim * h.dim, dim, "right coaction");
  Report rep;
  rep.subject = "right-comodule";
  LinMap idx = LinMap::identity(h.field, dim);
  LinMap idh = LinMap::identity(h.field, h.dim);
  rep.check_equal("rcoact-coassoc", rcoact.kron(idh) * rcoact, idx.kron(h.delta) * rcoact);
  rep.check_equal("rcoact-counit", idx.kron(h.eps) * rcoact, idx);
  return rep;
}

Report check_left_comodule(const Bialgebra& h, int dim, const LinMap& lcoact) {
  require_bialgebra_shapes(h);
  require_shape(lcoact, h.dim * dim, dim, "left coaction");
  Report rep;
  rep.subject = "left-comodule";
  LinMap idx = LinMap::identity(h.field, dim);
  LinMap idh = LinMap::identity(h.field, h.dim);
  rep.check_equal("lcoact-coassoc", idh.kron(lcoact) * lcoact, h.delta.kron(idx) * lcoact);
  rep.check_equal("lcoact-counit", h.eps.kron(idx) * lcoact, idx);
  return rep;
}

Report check_bimodule(const Bialgebra& h, const Bimodule& x) {
  Report rep;
  rep.subject = "bimodule";
  rep.merge(check_left_module(h, x.dim, x.lact));
  rep.merge(check_right_module(h, x.dim, x.ract));
  LinMap idh = LinMap::identity(h.field, h.dim);
  rep.check_equal("bimodule-commute", x.lact * idh.kron(x.ract), x.ract * x.lact.kron(idh));
  return rep;
}

Report check_bicomodule(const Bialgebra& h, const Bicomodule& x) {
  Report rep;
  rep.subject = "bicomodule";
  rep.merge(check_left_comodule(h, x.dim, x.lcoact));
  rep.merge(check_right_comodule(h, x.dim, x.rcoact));
  LinMap idh = LinMap::identity(h.field, h.dim);
  rep.check_equal("bicomodule-commute", idh.kron(x.rcoact) * x.lcoact, x.lcoact.kron(idh) * x.rcoact);
  return rep;
}

Bimodule regular_bimodule(const Bialgebra& h) { return {h.dim, h.m, h.m}; }

Bicomodule regular_bicomodule(const Bialgebra& h) { return {h.dim, h.delta, h.delta}; }

Bimodule pullback_bimodule(const LinMap& f, const AlgebraView& a, const Bialgebra& h) {
  require_bialgebra_shapes(h);
  require_shape(f, a.dim, h.dim, "pullback morphism");
  if (!(f * h.m == a.mul * f.kron(f)))
    fail(Err::NotAlgebraMorphism, "pullback map does not respect multiplication");
  if (!(f * h.eta == a.unit)) fail(Err::NotAlgebraMorphism, "pullback map does not respect the unit");
  LinMap ida = LinMap::identity(f.field(), a.dim);
  return Bimodule{a.dim, a.mul * f.kron(ida), a.mul * ida.kron(f)};
}

LinMap adjoint_action(const HopfAlgebra& h, const Bimodule& x) {
  const int n = h.dim, d = x.dim;
  LinMap idx = LinMap::identity(h.field, d);
  LinMap idh = LinMap::identity(h.field, n);
  LinMap fl = LinMap::flip(h.field, d, n);
  return x.lact * idh.kron(x.ract) * fl.kron(idh) * idx.kron(h.s.kron(idh) * h.delta);
}

LinMap left_adjoint_action(const HopfAlgebra& h, const Bimodule& x) {
  const int n = h.dim, d = x.dim;
  LinMap idx = LinMap::identity(h.field, d);
  LinMap idh = LinMap::identity(h.field, n);
  LinMap fl = LinMap::flip(h.field, n, d);
  return x.ract * x.lact.kron(h.s) * idh.kron(fl) * h.delta.kron(idx);
}

LinMap coadjoint_coaction(const HopfAlgebra& h, const Bicomodule& x) {
  const int n = h.dim, d = x.dim;
  LinMap idx = LinMap::identity(h.field, d);
  LinMap idh = LinMap::identity(h.field, n);
  LinMap fl = LinMap::flip(h.field, n, d);
  return idx.kron(h.m * h.s.kron(idh)) * fl.kron(idh) * idh.kron(x.rcoact) * x.lcoact;
}

}  // namespace braidcalc
