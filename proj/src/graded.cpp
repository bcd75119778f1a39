#include "braidcalc/graded.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "braidcalc/error.hpp"

namespace braidcalc {

Report check_braided(const BraidedObject& x) {
  Report rep;
  rep.subject = "braided-object";
  if (x.braiding.cod() != x.dim * x.dim || x.braiding.dom() != x.dim * x.dim)
    fail(Err::ShapeMismatch, "braiding must be an endomorphism of the tensor square");
  rep.add("invertible", rank_of(x.braiding) == x.dim * x.dim);
  LinMap id = LinMap::identity(x.field, x.dim);
  LinMap p = x.braiding.kron(id);
  LinMap q = id.kron(x.braiding);
  rep.check_equal("braid-relation", p * q * p, q * p * q);
  return rep;
}

BraidedObject flip_braided(FieldPtr f, int dim) {
  return {f, dim, LinMap::flip(f, dim, dim)};
}

BraidedObject neg_flip_braided(FieldPtr f, int dim) {
  return {f, dim, LinMap::flip(f, dim, dim).neg()};
}

BraidedObject hecke_qplane(FieldPtr f, const Rational& q) {
  if (q == 0) fail(Err::BadParams, "q must be nonzero");
  BraidedObject x{f, 2, LinMap::zero(f, 4, 4)};
  Rational qi = Rational(1) / q;
  x.braiding.set(0, 0, f->one());
  x.braiding.set(3, 3, f->one());
  x.braiding.set(2, 1, f->from_rational(qi));         // e0 e1 -> (1/q) e1 e0
  x.braiding.set(1, 2, f->from_rational(qi));         // e1 e0 -> (1/q) e0 e1 + ...
  x.braiding.set(2, 2, f->from_rational(1 - qi * qi));
  Report rep = check_braided(x);
  if (!rep.ok()) fail(Err::BadParams, "hecke braiding: " + rep.summary());
  return x;
}

BraidedObject yd_braided(const Bialgebra& h, const YDModule& x) {
  return {h.field, x.dim, yd_braiding(h, x, x)};
}

int inversion_count(const std::vector<int>& perm) {
  int inv = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv;
}

std::vector<int> bubble_reduced_word(const std::vector<int>& perm) {
  std::vector<int> a = perm, word;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < a.size(); ++i) {
      if (a[i] > a[i + 1]) {
        std::swap(a[i], a[i + 1]);
        word.push_back(int(i));
        changed = true;
      }
    }
  }
  return word;  // perm = s_{word.back()} o ... o s_{word.front()}
}

std::vector<std::vector<int>> all_permutations(int j) {
  std::vector<int> p(j);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<int> inverse_permutation(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = int(i);
  return inv;
}

std::vector<int> reversal_permutation(int j) {
  std::vector<int> p(j);
  for (int i = 0; i < j; ++i) p[i] = j - 1 - i;
  return p;
}

std::vector<std::vector<int>> unshuffles(int k, int l) {
  // sigma^{-1} increasing on [0,k) and [k,k+l): choose the image subset
  std::vector<std::vector<int>> out;
  const int j = k + l;
  std::vector<int> subset(k);
  std::function<void(int, int)> rec = [&](int next, int depth) {
    if (depth == k) {
      std::vector<int> inv(j);
      std::vector<bool> used(j, false);
      for (int t = 0; t < k; ++t) {
        inv[t] = subset[t];
        used[subset[t]] = true;
      }
      int pos = k;
      for (int v = 0; v < j; ++v)
        if (!used[v]) inv[pos++] = v;
      out.push_back(inverse_permutation(inv));
      return;
    }
    for (int v = next; v < j; ++v) {
      subset[depth] = v;
      rec(v + 1, depth + 1);
    }
  };
  if (k == 0 || l == 0) {
    std::vector<int> id(j);
    std::iota(id.begin(), id.end(), 0);
    out.push_back(id);
    return out;
  }
  rec(0, 0);
  return out;
}

LinMap braid_rep(const BraidedObject& x, int degree, const std::vector<int>& perm) {
  if (int(perm.size()) != degree) fail(Err::NotPermutation, "length disagrees with the degree");
  {
    std::vector<bool> seen(degree, false);
    for (int v : perm) {
      if (v < 0 || v >= degree || seen[v]) fail(Err::NotPermutation, "not a permutation");
      seen[v] = true;
    }
  }
  int total = 1;
  for (int i = 0; i < degree; ++i) total *= x.dim;
  LinMap out = LinMap::identity(x.field, total);
  std::vector<int> word = bubble_reduced_word(perm);
  // perm = s_{w_last} o ... o s_{w_first}
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int i = *it;
    int left = 1, right = 1;
    for (int t = 0; t < i; ++t) left *= x.dim;
    for (int t = i + 2; t < degree; ++t) right *= x.dim;
    out = out * id_tensor(left, x.braiding, right);
  }
  return out;
}

namespace {

LinMap signed_sum(const BraidedObject& x, int degree, const std::vector<std::vector<int>>& perms) {
  int total = 1;
  for (int i = 0; i < degree; ++i) total *= x.dim;
  LinMap acc = LinMap::zero(x.field, total, total);
  for (const auto& p : perms) {
    LinMap lift = braid_rep(x, degree, p);
    if (inversion_count(p) % 2 == 1) lift = lift.neg();
    acc = acc + lift;
  }
  return acc;
}

}  // namespace

Antisymmetrizers antisymmetrizers(const BraidedObject& x, int k, int l) {
  if (k < 0 || l < 0 || k + l > kMaxAntisymDegree)
    fail(Err::DegreeTooLarge, "antisymmetrizer degree exceeds the factorial guard");
  Antisymmetrizers out;
  out.total = signed_sum(x, k + l, all_permutations(k + l));
  auto sh = unshuffles(k, l);
  out.shuffle = signed_sum(x, k + l, sh);
  std::vector<std::vector<int>> inv;
  inv.reserve(sh.size());
  for (const auto& p : sh) inv.push_back(inverse_permutation(p));
  out.coshuffle = signed_sum(x, k + l, inv);
  return out;
}

LinMap total_antisymmetrizer(const BraidedObject& x, int j) {
  if (j < 0 || j > kMaxAntisymDegree) fail(Err::DegreeTooLarge, "degree exceeds the guard");
  return signed_sum(x, j, all_permutations(j));
}

Report check_complex(const ComplexObject& c) {
  Report rep;
  rep.subject = "complex";
  for (size_t j = 0; j + 1 < c.diffs.size(); ++j) {
    LinMap z = LinMap::zero(c.diffs[j].field(), c.diffs[j + 1].cod(), c.diffs[j].dom());
    rep.check_equal("d2-zero(" + std::to_string(j) + ")", c.diffs[j + 1] * c.diffs[j], z);
  }
  return rep;
}

namespace {

void set_block(LinMap& m, int roff, int coff, const LinMap& sub) {
  sub.for_each([&](int r, int c, const Scalar& v) { m.set(roff + r, coff + c, v); });
}

}  // namespace

ComplexObject tensor_complex(const ComplexObject& a, const ComplexObject& b) {
  if (a.dims.size() != b.dims.size()) fail(Err::ShapeMismatch, "truncations disagree");
  FieldPtr F;
  for (const auto& d : a.diffs) F = d.field();
  for (const auto& d : b.diffs) F = d.field();
  if (!F) fail(Err::ShapeMismatch, "empty complexes");
  const int maxd = int(a.dims.size()) - 1;
  ComplexObject out;
  out.dims.resize(maxd + 1, 0);
  for (int j = 0; j <= maxd; ++j)
    for (int k = 0; k <= j; ++k) out.dims[j] += a.dims[k] * b.dims[j - k];
  auto block_offset = [&](int j, int k) {
    int off = 0;
    for (int t = 0; t < k; ++t) off += a.dims[t] * b.dims[j - t];
    return off;
  };
  for (int j = 0; j < maxd; ++j) {
    LinMap d = LinMap::zero(F, out.dims[j + 1], out.dims[j]);
    for (int k = 0; k <= j; ++k) {
      int l = j - k;
      int coff = block_offset(j, k);
      // d_X (x) id into block (k+1, l)
      if (k + 1 <= maxd && a.dims[k + 1] > 0 && a.dims[k] > 0 && b.dims[l] > 0) {
        LinMap blk = a.diffs[k].kron(LinMap::identity(F, b.dims[l]));
        set_block(d, block_offset(j + 1, k + 1), coff, blk);
      }
      // (-1)^k id (x) d_Y into block (k, l+1)
      if (l + 1 <= maxd && b.dims[l + 1] > 0 && a.dims[k] > 0 && b.dims[l] > 0) {
        LinMap blk = LinMap::identity(F, a.dims[k]).kron(b.diffs[l]);
        if (k % 2 == 1) blk = blk.neg();
        set_block(d, block_offset(j + 1, k), coff, blk);
      }
    }
    out.diffs.push_back(d);
  }
  Report rep = check_complex(out);
  if (!rep.ok()) fail(Err::ShapeMismatch, "tensor complex: " + rep.summary());
  return out;
}

LinMap graded_braiding(const GradedPairBraidings& p, int j) {
  FieldPtr F;
  for (const auto& [k, b] : p.blocks) F = b.field();
  if (!F) fail(Err::MissingBlock, "no blocks supplied");
  int dom = 0, cod = 0;
  for (int k = 0; k <= j; ++k) {
    int l = j - k;
    if (k < int(p.xdims.size()) && l < int(p.ydims.size())) dom += p.xdims[k] * p.ydims[l];
    if (k < int(p.ydims.size()) && l < int(p.xdims.size())) cod += p.ydims[k] * p.xdims[l];
  }
  LinMap out = LinMap::zero(F, cod, dom);
  auto dom_offset = [&](int k) {
    int off = 0;
    for (int t = 0; t < k; ++t) off += p.xdims[t] * p.ydims[j - t];
    return off;
  };
  auto cod_offset = [&](int l) {
    int off = 0;
    for (int t = 0; t < l; ++t) off += p.ydims[t] * p.xdims[j - t];
    return off;
  };
  for (int k = 0; k <= j; ++k) {
    int l = j - k;
    if (k >= int(p.xdims.size()) || l >= int(p.ydims.size())) continue;
    if (p.xdims[k] == 0 || p.ydims[l] == 0) continue;
    auto it = p.blocks.find({k, l});
    if (it == p.blocks.end())
      fail(Err::MissingBlock,
           "no braiding block (" + std::to_string(k) + "," + std::to_string(l) + ")");
    LinMap blk = it->second;
    if ((k * l) % 2 == 1) blk = blk.neg();
    set_block(out, cod_offset(l), dom_offset(k), blk);
  }
  return out;
}

Report check_graded_bialgebra(const GradedBialgebra& g) {
  Report rep;
  rep.subject = "graded-bialgebra";
  FieldPtr F = g.field;
  const int maxd = g.max_degree;
  auto id_of = [&](int j) { return LinMap::identity(F, g.dims[j]); };
  auto mul = [&](int k, int l) -> const LinMap& { return g.mul.at({k, l}); };
  auto comul = [&](int k, int l) -> const LinMap& { return g.comul.at({k, l}); };

  for (int a = 0; a <= maxd; ++a)
    for (int b = 0; a + b <= maxd; ++b)
      for (int c = 0; a + b + c <= maxd; ++c) {
        std::string tag = "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(c) + ")";
        rep.check_equal("assoc" + tag, mul(a + b, c) * mul(a, b).kron(id_of(c)),
                        mul(a, b + c) * id_of(a).kron(mul(b, c)));
        rep.check_equal("coassoc" + tag, comul(a, b).kron(id_of(c)) * comul(a + b, c),
                        id_of(a).kron(comul(b, c)) * comul(a, b + c));
      }
  for (int j = 0; j <= maxd; ++j) {
    rep.check_equal("unit-left(" + std::to_string(j) + ")", mul(0, j) * g.unit.kron(id_of(j)),
                    id_of(j));
    rep.check_equal("unit-right(" + std::to_string(j) + ")", mul(j, 0) * id_of(j).kron(g.unit),
                    id_of(j));
    rep.check_equal("counit-left(" + std::to_string(j) + ")", g.counit.kron(id_of(j)) * comul(0, j),
                    id_of(j));
    rep.check_equal("counit-right(" + std::to_string(j) + ")",
                    id_of(j).kron(g.counit) * comul(j, 0), id_of(j));
  }
  rep.check_equal("comul-unital", comul(0, 0) * g.unit, g.unit.kron(g.unit));
  rep.check_equal("counit-mult", g.counit * mul(0, 0), g.counit.kron(g.counit));

  // compatibility against the sign-graded braiding
  for (int k = 0; k <= maxd; ++k)
    for (int l = 0; k + l <= maxd; ++l)
      for (int a = 0; a <= k + l; ++a) {
        int b = k + l - a;
        LinMap lhs = comul(a, b) * mul(k, l);
        LinMap rhs = LinMap::zero(F, g.dims[a] * g.dims[b], g.dims[k] * g.dims[l]);
        for (int k1 = 0; k1 <= k; ++k1) {
          int k2 = k - k1;
          int l1 = a - k1;
          if (l1 < 0 || l1 > l) continue;
          int l2 = l - l1;
          LinMap braid = g.braid.at({k2, l1});
          if ((k2 * l1) % 2 == 1) braid = braid.neg();
          LinMap term = mul(k1, l1).kron(mul(k2, l2)) *
                        id_tensor(g.dims[k1], braid, g.dims[l2]) *
                        comul(k1, k2).kron(comul(l1, l2));
          rhs = rhs + term;
        }
        rep.check_equal("compat(" + std::to_string(k) + "," + std::to_string(l) + "->" +
                            std::to_string(a) + "," + std::to_string(b) + ")",
                        lhs, rhs);
      }

  if (!g.antipode.empty()) {
    for (int j = 0; j <= maxd; ++j) {
      LinMap lhs = LinMap::zero(F, g.dims[j], g.dims[j]);
      LinMap lhs2 = lhs;
      for (int k = 0; k <= j; ++k) {
        int l = j - k;
        lhs = lhs + mul(k, l) * g.antipode[k].kron(id_of(l)) * comul(k, l);
        lhs2 = lhs2 + mul(k, l) * id_of(k).kron(g.antipode[l]) * comul(k, l);
      }
      LinMap rhs = (j == 0) ? g.unit * g.counit : LinMap::zero(F, g.dims[j], g.dims[j]);
      rep.check_equal("antipode-left(" + std::to_string(j) + ")", lhs, rhs);
      rep.check_equal("antipode-right(" + std::to_string(j) + ")", lhs2, rhs);
    }
  }
  return rep;
}

namespace {

// Psi_{X^(x)k, X^(x)l}: the braid lift of the block transposition
LinMap block_braiding(const BraidedObject& x, int k, int l) {
  std::vector<int> chi(k + l);
  for (int i = 0; i < k; ++i) chi[i] = i + l;
  for (int i = 0; i < l; ++i) chi[k + i] = i;
  return braid_rep(x, k + l, chi);
}

GradedBialgebra tensor_like(const BraidedObject& x, int max_degree, bool cotensor) {
  if (max_degree < 0 || max_degree > kMaxAntisymDegree)
    fail(Err::DegreeTooLarge, "degree exceeds the factorial guard");
  Report brep = check_braided(x);
  if (!brep.ok()) fail(Err::BadParams, "braiding: " + brep.summary());
  FieldPtr F = x.field;
  GradedBialgebra g;
  g.field = F;
  g.max_degree = max_degree;
  g.dims.resize(max_degree + 1);
  for (int j = 0; j <= max_degree; ++j) {
    int d = 1;
    for (int t = 0; t < j; ++t) d *= x.dim;
    g.dims[j] = d;
  }
  g.unit = LinMap::identity(F, 1);
  g.counit = LinMap::identity(F, 1);
  for (int k = 0; k <= max_degree; ++k)
    for (int l = 0; k + l <= max_degree; ++l) {
      LinMap ident = LinMap::identity(F, g.dims[k + l]);
      Antisymmetrizers as = antisymmetrizers(x, k, l);
      if (cotensor) {
        g.mul[{k, l}] = as.coshuffle;
        g.comul[{k, l}] = ident;
      } else {
        g.mul[{k, l}] = ident;
        g.comul[{k, l}] = as.shuffle;
      }
      g.braid[{k, l}] = block_braiding(x, k, l);
    }
  for (int j = 0; j <= max_degree; ++j) {
    // (-1)^j times the reversal lifted through the degree-1 braiding of the
    // graded category; the Koszul signs contribute (-1)^(length of the
    // reversal) on top of the plain lift
    LinMap s = braid_rep(x, j, reversal_permutation(j));
    if ((j + j * (j - 1) / 2) % 2 == 1) s = s.neg();
    g.antipode.push_back(s);
  }
  Report rep = check_graded_bialgebra(g);
  if (!rep.ok())
    fail(Err::NotBialgebraMorphism,
         std::string(cotensor ? "cotensor" : "tensor") + " bialgebra axioms: " + rep.summary());
  return g;
}

}  // namespace

GradedBialgebra tensor_hopf(const BraidedObject& x, int max_degree) {
  return tensor_like(x, max_degree, false);
}

GradedBialgebra cotensor_hopf(const BraidedObject& x, int max_degree) {
  return tensor_like(x, max_degree, true);
}

ExteriorHopf exterior_hopf(const BraidedObject& x, int max_degree) {
  GradedBialgebra th = tensor_hopf(x, max_degree);
  GradedBialgebra ct = cotensor_hopf(x, max_degree);
  FieldPtr F = x.field;
  ExteriorHopf out;
  out.morphisms.subject = "antisymmetrizer-morphism";
  for (int j = 0; j <= max_degree; ++j) out.hat_a.push_back(total_antisymmetrizer(x, j));
  for (int k = 0; k <= max_degree; ++k)
    for (int l = 0; k + l <= max_degree; ++l) {
      std::string tag = "(" + std::to_string(k) + "," + std::to_string(l) + ")";
      out.morphisms.check_equal("m-square" + tag,
                                ct.mul.at({k, l}) * out.hat_a[k].kron(out.hat_a[l]),
                                out.hat_a[k + l] * th.mul.at({k, l}));
      out.morphisms.check_equal("delta-square" + tag,
                                out.hat_a[k].kron(out.hat_a[l]) * th.comul.at({k, l}),
                                ct.comul.at({k, l}) * out.hat_a[k + l]);
    }
  if (!out.morphisms.ok())
    fail(Err::NotBialgebraMorphism, out.morphisms.summary());

  std::vector<LinMap> kernels;
  for (int j = 0; j <= max_degree; ++j) {
    Factorization f = factorize(out.hat_a[j]);
    out.dims.push_back(f.rank);
    out.coim_proj.push_back(f.coim_proj);
    kernels.push_back(f.kernel_basis);
    LinearSolution sec = solve_right(f.coim_proj, LinMap::identity(F, f.rank));
    if (!sec.consistent) fail(Err::NotBialgebraMorphism, "coimage projection has no section");
    out.section.push_back(sec.solution);
  }

  GradedBialgebra q;
  q.field = F;
  q.max_degree = max_degree;
  q.dims = out.dims;
  q.unit = out.coim_proj[0] * th.unit;
  q.counit = th.counit * out.section[0];
  auto zero_check = [&](const std::string& name, const LinMap& m) {
    if (!m.is_zero()) fail(Err::NotBialgebraMorphism, "kernel not annihilated: " + name);
  };
  for (int k = 0; k <= max_degree; ++k)
    for (int l = 0; k + l <= max_degree; ++l) {
      std::string tag = "(" + std::to_string(k) + "," + std::to_string(l) + ")";
      int dk = th.dims[k], dl = th.dims[l];
      const LinMap& m_t = th.mul.at({k, l});
      const LinMap& d_t = th.comul.at({k, l});
      zero_check("mul-ker-left" + tag,
                 out.coim_proj[k + l] * m_t * kernels[k].kron(LinMap::identity(F, dl)));
      zero_check("mul-ker-right" + tag,
                 out.coim_proj[k + l] * m_t * LinMap::identity(F, dk).kron(kernels[l]));
      zero_check("comul-ker" + tag,
                 out.coim_proj[k].kron(out.coim_proj[l]) * d_t * kernels[k + l]);
      q.mul[{k, l}] = out.coim_proj[k + l] * m_t * out.section[k].kron(out.section[l]);
      q.comul[{k, l}] = out.coim_proj[k].kron(out.coim_proj[l]) * d_t * out.section[k + l];
      const LinMap& br = th.braid.at({k, l});
      zero_check("braid-ker-left" + tag,
                 out.coim_proj[l].kron(out.coim_proj[k]) * br *
                     kernels[k].kron(LinMap::identity(F, dl)));
      zero_check("braid-ker-right" + tag,
                 out.coim_proj[l].kron(out.coim_proj[k]) * br *
                     LinMap::identity(F, dk).kron(kernels[l]));
      q.braid[{k, l}] = out.coim_proj[l].kron(out.coim_proj[k]) * br *
                        out.section[k].kron(out.section[l]);
    }
  for (int j = 0; j <= max_degree; ++j) {
    zero_check("antipode-ker(" + std::to_string(j) + ")",
               out.coim_proj[j] * th.antipode[j] * kernels[j]);
    q.antipode.push_back(out.coim_proj[j] * th.antipode[j] * out.section[j]);
  }
  Report qrep = check_graded_bialgebra(q);
  if (!qrep.ok()) fail(Err::NotBialgebraMorphism, "quotient: " + qrep.summary());
  out.hopf = std::move(q);
  return out;
}

}  // namespace braidcalc
