#include "braidcalc/diffcalc.hpp"

#include "braidcalc/error.hpp"

namespace braidcalc {

FirstOrderCalculus universal_first_order(const HopfAlgebra& h) {
  Report hrep = check_hopf(h);
  if (!hrep.ok()) fail(Err::ShapeMismatch, "algebra: " + hrep.summary());
  FieldPtr F = h.field;
  const int n = h.dim;
  LinMap idh = LinMap::identity(F, n);
  // H (x) H with outer actions and diagonal coactions
  HopfBimodule hh;
  hh.dim = n * n;
  hh.lact = h.m.kron(idh);
  hh.ract = idh.kron(h.m);
  hh.lcoact = diagonal_lcoact(h, n, h.delta, n, h.delta);
  hh.rcoact = diagonal_rcoact(h, n, h.delta, n, h.delta);
  Factorization f = factorize(h.m);
  const LinMap& K = f.kernel_basis;  // n^2 x (n^2 - n)
  const int dx = K.dom();
  FirstOrderCalculus out;
  out.h = h;
  out.x.dim = dx;
  // restrict the structure maps to the kernel: solve K o f_X = f_{HH} o K(x)id
  auto restrict_map = [&](const LinMap& big, const LinMap& emb_dom, int cod_left,
                          int cod_right) {
    // big o emb_dom has image inside K (x) surrounding identities
    LinMap target = big * emb_dom;
    LinMap emb_cod = id_tensor(cod_left, K, cod_right);
    LinearSolution s = solve_right(emb_cod, target);
    if (!s.consistent) fail(Err::ShapeMismatch, "kernel is not invariant");
    return s.solution;
  };
  out.x.lact = restrict_map(hh.lact, idh.kron(K), 1, 1);
  out.x.ract = restrict_map(hh.ract, K.kron(idh), 1, 1);
  out.x.lcoact = restrict_map(hh.lcoact, K, n, 1);
  out.x.rcoact = restrict_map(hh.rcoact, K, 1, n);
  // d(a) = 1 (x) a - a (x) 1, expressed in the kernel basis
  LinMap draw = h.eta.kron(idh) - idh.kron(h.eta);
  LinearSolution ds = solve_right(K, draw);
  if (!ds.consistent) fail(Err::ShapeMismatch, "differential does not land in the kernel");
  out.d = ds.solution;
  Report rep = check_first_order(out);
  if (!rep.ok()) fail(Err::ShapeMismatch, "universal calculus: " + rep.summary());
  return out;
}

Report check_first_order(const FirstOrderCalculus& c) {
  Report rep;
  rep.subject = "first-order-calculus";
  rep.merge(check_hopf_bimodule(c.h, c.x), "bimodule");
  const int n = c.h.dim;
  FieldPtr F = c.h.field;
  LinMap idh = LinMap::identity(F, n);
  rep.check_equal("leibniz", c.d * c.h.m, c.x.lact * idh.kron(c.d) + c.x.ract * c.d.kron(idh));
  rep.check_equal("left-covariance", c.x.lcoact * c.d, idh.kron(c.d) * c.h.delta);
  rep.check_equal("right-covariance", c.x.rcoact * c.d, c.d.kron(idh) * c.h.delta);
  rep.add("surjectivity", rank_of(c.x.lact * idh.kron(c.d)) == c.x.dim,
          "H . dH does not span the bimodule");
  return rep;
}

GradedWithCovariance transfer_to_base(const HopfAlgebra& h, const YDGradedBialgebra& g) {
  FieldPtr F = h.field;
  const int n = h.dim;
  const int maxd = int(g.components.size()) - 1;
  GradedWithCovariance out;
  out.graded.field = F;
  out.graded.max_degree = maxd;
  std::vector<HopfBimodule> smash;
  for (int j = 0; j <= maxd; ++j) {
    smash.push_back(smash_inclusion(h, g.components[j]));
    out.graded.dims.push_back(n * g.components[j].dim);
  }
  out.cov = smash;
  out.graded.unit = h.eta.kron(g.unit);
  out.graded.counit = h.eps.kron(g.counit);
  for (int k = 0; k <= maxd; ++k)
    for (int l = 0; k + l <= maxd; ++l) {
      TensorOverH t = tensor_over_H(h, smash[k], smash[l]);
      LinMap under_m = LinMap::identity(F, n).kron(g.mul.at({k, l}));
      LinMap under_d = LinMap::identity(F, n).kron(g.comul.at({k, l}));
      out.graded.mul[{k, l}] = under_m * t.lambda;
      out.graded.comul[{k, l}] = t.rho * under_d;
      out.graded.braid[{k, l}] =
          LinMap::flip(F, out.graded.dims[k], out.graded.dims[l]);
    }
  if (!g.antipode.empty()) {
    for (int j = 0; j <= maxd; ++j) {
      LinMap under_s = LinMap::identity(F, n).kron(g.antipode[j]);
      LinMap srel = relative_antipode(h, smash[j]);
      LinMap s = under_s * srel;
      if (!(s == srel * under_s))
        fail(Err::NoAntipode, "transferred antipode composites disagree at degree " +
                                  std::to_string(j));
      out.graded.antipode.push_back(s);
    }
  }
  Report rep = check_graded_bialgebra(out.graded);
  if (!rep.ok()) fail(Err::NotBialgebraMorphism, "transfer: " + rep.summary());
  return out;
}

namespace {

// vertical stack of vectorized matrices; all inputs share their field
LinMap vstack_vecs(FieldPtr f, const std::vector<LinMap>& mats) {
  int rows = 0;
  for (const auto& m : mats) rows += m.cod() * m.dom();
  LinMap out = LinMap::zero(f, rows, 1);
  int off = 0;
  for (const auto& m : mats) {
    m.for_each([&](int r, int c, const Scalar& v) { out.set(off + r * m.dom() + c, 0, v); });
    off += m.cod() * m.dom();
  }
  return out;
}

}  // namespace

ExteriorCalculus build_exterior_calculus(const FirstOrderCalculus& c, int max_degree) {
  if (max_degree < 2) fail(Err::BadParams, "max degree must be at least 2");
  Report frep = check_first_order(c);
  if (!frep.ok()) fail(Err::ShapeMismatch, "first-order input: " + frep.summary());
  HopfAlgebra h = c.h;
  invert_antipode(h);
  FieldPtr F = h.field;
  const int n = h.dim;

  ExteriorCalculus out;
  out.h = h;
  out.max_degree = max_degree;

  // (1) invariant part and its braided exterior algebra
  InvariantsResult inv = invariants(h, c.x);
  out.yd = inv.yd;
  BraidedObject bo = yd_braided(h, out.yd);
  out.ext = exterior_hopf(bo, max_degree);

  // crossed-module structure on the quotients, with kernel annihilation
  YDGradedBialgebra yg;
  yg.unit = LinMap::identity(F, 1);  // degree 0 stays one-dimensional
  yg.counit = LinMap::identity(F, 1);
  YDModule powers = trivial_yd(h, 1);
  std::vector<YDModule> tensor_powers{powers};
  for (int j = 1; j <= max_degree; ++j) {
    powers = (j == 1) ? out.yd : yd_tensor(h, powers, out.yd);
    tensor_powers.push_back(powers);
  }
  LinMap idh = LinMap::identity(F, n);
  for (int j = 0; j <= max_degree; ++j) {
    const LinMap& pj = out.ext.coim_proj[j];
    const LinMap& sj = out.ext.section[j];
    YDModule t;
    t.dim = out.ext.dims[j];
    t.ract = pj * tensor_powers[j].ract * sj.kron(idh);
    t.rcoact = pj.kron(idh) * tensor_powers[j].rcoact * sj;
    // the kernel of the antisymmetrizer is a crossed submodule
    Factorization fj = factorize(out.ext.hat_a[j]);
    if (!(pj * tensor_powers[j].ract * fj.kernel_basis.kron(idh)).is_zero() ||
        !(pj.kron(idh) * tensor_powers[j].rcoact * fj.kernel_basis).is_zero())
      fail(Err::NotCrossed, "antisymmetrizer kernel is not a crossed submodule");
    Report crep = check_crossed(h, t);
    if (!crep.ok()) fail(Err::NotCrossed, "quotient structure: " + crep.summary());
    yg.components.push_back(t);
  }
  // the exterior braiding agrees with the crossed braiding of the quotients
  for (int k = 0; k <= max_degree; ++k)
    for (int l = 0; k + l <= max_degree; ++l) {
      if (!(out.ext.hopf.braid.at({k, l}) ==
            yd_braiding(h, yg.components[k], yg.components[l])))
        fail(Err::NotCrossed, "braiding transport mismatch at (" + std::to_string(k) + "," +
                                  std::to_string(l) + ")");
    }
  yg.mul = out.ext.hopf.mul;
  yg.comul = out.ext.hopf.comul;
  yg.antipode = out.ext.hopf.antipode;

  // (2)+(3) transfer to the base category
  GradedWithCovariance base = transfer_to_base(h, yg);

  // degree-1 carrier identification with the input bimodule
  out.phi = c.x.lact * idh.kron(inv.split.section);
  if (rank_of(out.phi) != c.x.dim)
    fail(Err::ShapeMismatch, "degree-1 identification is not invertible");
  out.phi_inv = inverse(out.phi);
  if (!is_hopf_bimodule_morphism(h, base.cov[1], c.x, out.phi))
    fail(Err::ShapeMismatch, "degree-1 identification is not a Hopf-bimodule morphism");

  auto w = [&](int j) -> LinMap {
    if (j == 1) return out.phi;
    return LinMap::identity(F, base.graded.dims[j]);
  };
  auto w_inv = [&](int j) -> LinMap {
    if (j == 1) return out.phi_inv;
    return LinMap::identity(F, base.graded.dims[j]);
  };

  out.xw.field = F;
  out.xw.max_degree = max_degree;
  out.xw.dims = base.graded.dims;
  out.xw.dims[1] = c.x.dim;  // same number, stated for clarity
  out.xw.unit = base.graded.unit;
  out.xw.counit = base.graded.counit;
  for (int k = 0; k <= max_degree; ++k)
    for (int l = 0; k + l <= max_degree; ++l) {
      out.xw.mul[{k, l}] = w(k + l) * base.graded.mul.at({k, l}) * w_inv(k).kron(w_inv(l));
      out.xw.comul[{k, l}] = w(k).kron(w(l)) * base.graded.comul.at({k, l}) * w_inv(k + l);
      out.xw.braid[{k, l}] = LinMap::flip(F, out.xw.dims[k], out.xw.dims[l]);
    }
  for (int j = 0; j <= max_degree; ++j) {
    out.xw.antipode.push_back(w(j) * base.graded.antipode[j] * w_inv(j));
    if (j == 1) {
      out.cov.push_back(c.x);
    } else {
      out.cov.push_back(base.cov[j]);
    }
  }
  {
    Report grep = check_graded_bialgebra(out.xw);
    if (!grep.ok()) fail(Err::NotBialgebraMorphism, "graded carrier: " + grep.summary());
  }

  // (4) the differential, solved degree by degree
  out.diffs.push_back(c.d);
  for (int j = 1; j < max_degree; ++j) {
    const int ucod = out.xw.dims[j + 1], udom = out.xw.dims[j];
    std::vector<std::function<LinMap(const LinMap&)>> ops;
    std::vector<LinMap> rhs;
    // Leibniz rows with the unknown on one or both sides
    for (int k = 0; k <= j; ++k) {
      int l = j - k;
      LinMap known = LinMap::zero(F, ucod, out.xw.dims[k] * out.xw.dims[l]);
      if (k < j) {
        known = known + out.xw.mul.at({k + 1, l}) *
                            out.diffs[k].kron(LinMap::identity(F, out.xw.dims[l]));
      }
      if (l < j) {
        LinMap term = out.xw.mul.at({k, l + 1}) *
                      LinMap::identity(F, out.xw.dims[k]).kron(out.diffs[l]);
        if (k % 2 == 1) term = term.neg();
        known = known + term;
      }
      int kk = k, ll = l;
      ops.push_back([&, kk, ll, j](const LinMap& u) {
        LinMap acc = u * out.xw.mul.at({kk, ll});
        if (kk == j) {
          acc = acc - out.xw.mul.at({kk + 1, ll}) *
                          u.kron(LinMap::identity(F, out.xw.dims[ll]));
        }
        if (ll == j) {
          LinMap term = out.xw.mul.at({kk, ll + 1}) *
                        LinMap::identity(F, out.xw.dims[kk]).kron(u);
          if (kk % 2 == 1) term = term.neg();
          acc = acc - term;
        }
        return acc;
      });
      rhs.push_back(known);
    }
    // d o d = 0 against the previous differential
    ops.push_back([&, j](const LinMap& u) { return u * out.diffs[j - 1]; });
    rhs.push_back(LinMap::zero(F, ucod, out.xw.dims[j - 1]));
    // left and right covariance
    ops.push_back([&, j](const LinMap& u) {
      return out.cov[j + 1].lcoact * u - idh.kron(u) * out.cov[j].lcoact;
    });
    rhs.push_back(LinMap::zero(F, n * ucod, udom));
    ops.push_back([&, j](const LinMap& u) {
      return out.cov[j + 1].rcoact * u - u.kron(idh) * out.cov[j].rcoact;
    });
    rhs.push_back(LinMap::zero(F, ucod * n, udom));

    auto stacked = [&](const LinMap& u) {
      std::vector<LinMap> blocks;
      blocks.reserve(ops.size());
      for (const auto& op : ops) blocks.push_back(op(u));
      return vstack_vecs(F, blocks);
    };
    int total_rows = 0;
    {
      LinMap probe = stacked(LinMap::zero(F, ucod, udom));
      total_rows = probe.cod();
    }
    LinMap sys = operator_matrix(F, ucod, udom, total_rows, 1,
                                 [&](const LinMap& u) { return stacked(u); });
    LinMap rhs_vec = vstack_vecs(F, rhs);
    LinearSolution sol = solve_right(sys, rhs_vec);
    if (!sol.consistent)
      fail(Err::NoSolution, "differential system inconsistent at degree " + std::to_string(j));
    if (sol.nullity != 0)
      fail(Err::NonUniqueSolution, "solution space at degree " + std::to_string(j) +
                                       " has dimension " + std::to_string(sol.nullity));
    out.diffs.push_back(unvec(sol.solution, ucod, udom));
  }

  Report vrep = check_exterior_calculus(out, c);
  if (!vrep.ok()) fail(Err::NoSolution, "certification failed: " + vrep.summary());
  return out;
}

Report check_exterior_calculus(const ExteriorCalculus& xc, const FirstOrderCalculus& c) {
  Report rep;
  rep.subject = "exterior-calculus";
  FieldPtr F = xc.h.field;
  const int n = xc.h.dim;
  LinMap idh = LinMap::identity(F, n);
  rep.check_equal("degree0-differential", xc.diffs[0], c.d);
  for (int j = 0; j + 1 < int(xc.diffs.size()); ++j)
    rep.check_equal("d2-zero(" + std::to_string(j) + ")", xc.diffs[j + 1] * xc.diffs[j],
                    LinMap::zero(F, xc.xw.dims[j + 2], xc.xw.dims[j]));
  for (int k = 0; k + 1 <= xc.max_degree; ++k)
    for (int l = 0; k + l + 1 <= xc.max_degree; ++l) {
      LinMap lhs = xc.diffs[k + l] * xc.xw.mul.at({k, l});
      LinMap t1 = xc.xw.mul.at({k + 1, l}) *
                  xc.diffs[k].kron(LinMap::identity(F, xc.xw.dims[l]));
      LinMap t2 = xc.xw.mul.at({k, l + 1}) *
                  LinMap::identity(F, xc.xw.dims[k]).kron(xc.diffs[l]);
      if (k % 2 == 1) t2 = t2.neg();
      rep.check_equal("leibniz(" + std::to_string(k) + "," + std::to_string(l) + ")", lhs,
                      t1 + t2);
    }
  for (int j = 0; j + 1 <= xc.max_degree; ++j) {
    rep.check_equal("left-covariance(" + std::to_string(j) + ")",
                    xc.cov[j + 1].lcoact * xc.diffs[j], idh.kron(xc.diffs[j]) * xc.cov[j].lcoact);
    rep.check_equal("right-covariance(" + std::to_string(j) + ")",
                    xc.cov[j + 1].rcoact * xc.diffs[j], xc.diffs[j].kron(idh) * xc.cov[j].rcoact);
  }
  for (int j = 0; j <= xc.max_degree; ++j)
    rep.merge(check_hopf_bimodule(xc.h, xc.cov[j]), "cov" + std::to_string(j));
  rep.merge(check_graded_bialgebra(xc.xw), "graded");
  return rep;
}

std::vector<LinMap> universal_map(const GradedBialgebra& yhat, const LinMap& f0,
                                  const LinMap& f1, const ExteriorCalculus& target) {
  FieldPtr F = yhat.field;
  const int maxd = std::min(yhat.max_degree, target.max_degree);
  // degreewise generation by degrees 0 and 1
  for (int m = 0; m + 1 <= maxd; ++m) {
    if (rank_of(yhat.mul.at({1, m})) != yhat.dims[m + 1])
      fail(Err::NotGenerated, "degree " + std::to_string(m + 1) +
                                  " is not generated by degree-1 products");
  }
  // (f0, f1) is a bialgebra morphism on the (0,1) truncation
  {
    bool ok = f0 * yhat.mul.at({0, 0}) == target.xw.mul.at({0, 0}) * f0.kron(f0) &&
              f0 * yhat.unit == target.xw.unit &&
              target.xw.comul.at({0, 0}) * f0 == f0.kron(f0) * yhat.comul.at({0, 0}) &&
              target.xw.counit * f0 == yhat.counit &&
              f1 * yhat.mul.at({0, 1}) == target.xw.mul.at({0, 1}) * f0.kron(f1) &&
              f1 * yhat.mul.at({1, 0}) == target.xw.mul.at({1, 0}) * f1.kron(f0) &&
              target.xw.comul.at({0, 1}) * f1 == f0.kron(f1) * yhat.comul.at({0, 1}) &&
              target.xw.comul.at({1, 0}) * f1 == f1.kron(f0) * yhat.comul.at({1, 0});
    if (!ok) fail(Err::NotTruncatedMorphism, "(f0, f1) is not a truncated bialgebra morphism");
  }
  std::vector<LinMap> f{f0, f1};
  for (int m = 0; m + 1 <= maxd; ++m) {
    LinMap rhs = target.xw.mul.at({1, m}) * f1.kron(f[m]);
    LinearSolution sol = solve_left(yhat.mul.at({1, m}), rhs);
    if (!sol.consistent)
      fail(Err::FactorizationObstruction,
           "degree " + std::to_string(m + 1) + ": the map does not factor");
    if (sol.nullity != 0)
      fail(Err::FactorizationObstruction, "factoring is not unique at degree " +
                                              std::to_string(m + 1));
    f.push_back(sol.solution);
  }
  // the extension is a graded bialgebra morphism wherever defined
  for (int k = 0; k <= maxd; ++k)
    for (int l = 0; k + l <= maxd; ++l) {
      if (!(f[k + l] * yhat.mul.at({k, l}) == target.xw.mul.at({k, l}) * f[k].kron(f[l])) ||
          !(target.xw.comul.at({k, l}) * f[k + l] == f[k].kron(f[l]) * yhat.comul.at({k, l})))
        fail(Err::NotTruncatedMorphism, "extension fails a bialgebra-morphism square at (" +
                                            std::to_string(k) + "," + std::to_string(l) + ")");
    }
  return f;
}

}  // namespace braidcalc
