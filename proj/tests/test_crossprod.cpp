#include <doctest.h>

#include "braidcalc/crossprod.hpp"
#include "braidcalc/error.hpp"
#include "test_util.hpp"

using namespace braidcalc;

namespace {

FieldPtr Q = Field::rationals();

HopfAlgebra kz2() { return group_algebra(Q, cyclic_group_table(2), "kZ2"); }

// k[x]/(x^2) with g acting by x |-> -x and coaction x |-> x (x) g:
// the admissible object whose cross product is the dim-4 algebra below
AdmissibleObject braided_line_adm() {
  AdmissibleObject x;
  x.dim = 2;
  x.mul = LinMap::zero(Q, 2, 4);
  x.mul.set(0, 0 * 2 + 0, Q->one());  // 1*1
  x.mul.set(1, 0 * 2 + 1, Q->one());  // 1*x
  x.mul.set(1, 1 * 2 + 0, Q->one());  // x*1
  x.unit = LinMap::from_rows(Q, {{1}, {0}});
  x.comul = LinMap::zero(Q, 4, 2);
  x.comul.set(0, 0, Q->one());       // 1 -> 1 (x) 1
  x.comul.set(1 * 2 + 0, 1, Q->one());  // x -> x (x) 1 + 1 (x) x
  x.comul.set(0 * 2 + 1, 1, Q->one());
  x.counit = LinMap::from_rows(Q, {{1, 0}});
  x.ract = LinMap::from_rows(Q, {{1, 1, 0, 0}, {0, 0, 1, -1}});
  x.rcoact = LinMap::zero(Q, 4, 2);
  x.rcoact.set(0, 0, Q->one());
  x.rcoact.set(3, 1, Q->one());
  return x;
}

// triangular structure on kZ2: (1/2)(1x1 + 1xg + gx1 - gxg)
LinMap kz2_triangular_r() {
  LinMap r = LinMap::zero(Q, 4, 1);
  Rational h(1, 2);
  r.set(0, 0, Q->from_rational(h));
  r.set(1, 0, Q->from_rational(h));
  r.set(2, 0, Q->from_rational(h));
  r.set(3, 0, Q->from_rational(-h));
  return r;
}

QTBialgebra kz2_qt() {
  HopfAlgebra h = kz2();
  QTBialgebra q;
  q.a = h;
  q.delta_bar = h.delta;
  q.r = kz2_triangular_r();
  q.s = h.s;
  return q;
}

QTModuleBialgebra braided_line_qt() {
  AdmissibleObject x = braided_line_adm();
  QTModuleBialgebra qb;
  qb.b.field = Q;
  qb.b.dim = 2;
  qb.b.name = "braided-line";
  qb.b.m = x.mul;
  qb.b.eta = x.unit;
  qb.b.delta = x.comul;
  qb.b.eps = x.counit;
  qb.delta_bar = x.comul;
  qb.r = qb.b.eta.kron(qb.b.eta);
  qb.ract = x.ract;
  return qb;
}

}  // namespace

TEST_CASE("smash product") {
  HopfAlgebra h = kz2();
  // trivial action: plain tensor-product algebra
  {
    ModuleAlgebra a{2, h.m, h.eta, LinMap::identity(Q, 2).kron(h.eps)};
    SmashProduct sp = smash_product(h, a);
    LinMap plain = h.m.kron(h.m) * id_tensor(2, LinMap::flip(Q, 2, 2), 2);
    CHECK(sp.mul == plain);
  }
  // A = k: the cross product is H itself
  {
    ModuleAlgebra a{1, LinMap::identity(Q, 1), LinMap::identity(Q, 1), h.eps};
    SmashProduct sp = smash_product(h, a);
    CHECK(sp.mul == h.m);
    CHECK(sp.unit == h.eta);
  }
  // k[x]/(x^2) with the sign action: gx = -xg in the result
  {
    AdmissibleObject x = braided_line_adm();
    ModuleAlgebra a{2, x.mul, x.unit, x.ract};
    SmashProduct sp = smash_product(h, a);
    // oracle: expand (h (x) a)(h' (x) a') = h h'_1 (x) (a . h'_2) a' on the
    // basis {1 (x) 1, 1 (x) x, g (x) 1, g (x) x}
    LinMap expected = LinMap::zero(Q, 4, 16);
    auto basis_mul = [&](int i, int j) {
      // i = 2*hi + ai. returns (sign, index) or -1 for zero
      int hi = i / 2, ai = i % 2, hj = j / 2, aj = j % 2;
      if (ai + aj >= 2) return std::pair<int, int>(0, -1);
      int sign = (ai == 1 && hj == 1) ? -1 : 1;  // x . g = -x
      return std::pair<int, int>(sign, ((hi + hj) % 2) * 2 + (ai + aj));
    };
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        auto [sign, k] = basis_mul(i, j);
        if (k >= 0) expected.set(k, i * 4 + j, Q->from_int(sign));
      }
    CHECK(sp.mul == expected);
    // x (x) g anticommute: (1x)(g1) = -(g1)(1x) with (g1)(1x) = g (x) x
    CHECK(is_hopf_bimodule_morphism);  // doc anchor only
  }
  // failing module-algebra condition
  {
    ModuleAlgebra bad{2, h.m, h.eta, h.m};  // regular action is not multiplicative here
    CHECK_THROWS_AS(smash_product(h, bad), Error);
  }
}

TEST_CASE("smash universal property") {
  HopfAlgebra h = kz2();
  AdmissibleObject x = braided_line_adm();
  ModuleAlgebra a{2, x.mul, x.unit, x.ract};
  SmashProduct sp = smash_product(h, a);
  AlgebraView u{4, sp.mul, sp.unit};
  // g = j, f = i: the induced map is the identity
  LinMap phi = smash_universal_map(u, sp.incl_h, sp.incl_a);
  CHECK(phi == LinMap::identity(Q, 4));
  // phi is an algebra morphism and restricts correctly
  CHECK(phi * sp.mul == sp.mul * phi.kron(phi));
  CHECK(phi * sp.incl_a == sp.incl_a);
  CHECK(phi * sp.incl_h == sp.incl_h);
  // second target: the base field, g = eps_H, f = counit of A
  AlgebraView k1{1, LinMap::identity(Q, 1), LinMap::identity(Q, 1)};
  LinMap psi = smash_universal_map(k1, h.eps, x.counit);
  CHECK(psi == h.eps.kron(x.counit));
  CHECK(psi * sp.mul == k1.mul * psi.kron(psi));
  // uniqueness: the span of j(h)i(a) products is everything
  CHECK(rank_of(sp.mul * sp.incl_h.kron(sp.incl_a)) == 4);
}

TEST_CASE("smash coproduct") {
  HopfAlgebra h = kz2();
  // trivial coaction: plain tensor coalgebra
  {
    ComoduleCoalgebra c{2, h.delta, h.eps, LinMap::identity(Q, 2).kron(h.eta)};
    SmashCoproduct sc = smash_coproduct(h, c);
    LinMap plain = id_tensor(2, LinMap::flip(Q, 2, 2), 2) * h.delta.kron(h.delta);
    CHECK(sc.comul == plain);
  }
  // C = k: Delta_H itself
  {
    ComoduleCoalgebra c{1, LinMap::identity(Q, 1), LinMap::identity(Q, 1), h.eta};
    SmashCoproduct sc = smash_coproduct(h, c);
    CHECK(sc.comul == h.delta);
  }
  // dual of the smash-product example
  {
    AdmissibleObject x = braided_line_adm();
    ComoduleCoalgebra c{2, x.comul, x.counit, x.rcoact};
    SmashCoproduct sc = smash_coproduct(h, c);
    CHECK(sc.dim == 4);  // coassociativity asserted inside
  }
  {
    ComoduleCoalgebra bad{2, h.delta, h.eps, h.delta};
    CHECK_THROWS_AS(smash_coproduct(h, bad), Error);
  }
}

TEST_CASE("check_admissible") {
  HopfAlgebra h = kz2();
  // unit object on k
  {
    LinMap one = LinMap::identity(Q, 1);
    AdmissibleObject x{1, one, one, one, one, h.eps, h.eta};
    Report rep = check_admissible(h, x);
    CHECK(rep.ok());
    Bialgebra big = smash_bialgebra(h, x);
    CHECK(big.m == h.m);
    CHECK(big.delta == h.delta);
  }
  // braided line
  {
    Report rep = check_admissible(h, braided_line_adm());
    CHECK(rep.ok());
  }
  // zero counit-unit pairing is flagged on the dedicated relation
  {
    AdmissibleObject x = braided_line_adm();
    x.counit = LinMap::zero(Q, 1, 2);
    Report rep = check_admissible(h, x);
    CHECK(!rep.ok());
    bool found = false;
    for (const auto& it : rep.items)
      if (it.name == "rel-counit-unit" && !it.pass) found = true;
    CHECK(found);
  }
}

TEST_CASE("cross product of the braided line is the dim-4 tower") {
  // as a sanity anchor: same structure constants as the builtin dim-4 Hopf
  // algebra up to the basis reordering (1, x, g, gx) -> (1, g, x, gx)
  HopfAlgebra h = kz2();
  Bialgebra big = smash_bialgebra(h, braided_line_adm());
  HopfAlgebra sw = sweedler_algebra();
  // change of basis: smash index 2*hi+ai -> sweedler index
  // (1,1)->0 (1,x)->2 (g,1)->1 (g,x)->3
  LinMap phi = LinMap::zero(Q, 4, 4);
  int img[4] = {0, 2, 1, 3};
  for (int i = 0; i < 4; ++i) phi.set(img[i], i, Q->one());
  CHECK(phi * big.m == sw.m * phi.kron(phi));
  CHECK(sw.delta * phi == phi.kron(phi) * big.delta);
  CHECK(phi * big.eta == sw.eta);
  CHECK(sw.eps * phi == big.eps);
}

TEST_CASE("projection checks") {
  HopfAlgebra h = kz2();
  CHECK(check_projection(identity_projection(h)).ok());
  BialgebraProjection p = smash_projection(h, braided_line_adm());
  CHECK(check_projection(p).ok());
  REQUIRE(p.s2.has_value());
  // corrupted retraction
  BialgebraProjection bad = p;
  bad.eps_bar = LinMap::zero(Q, 2, 4);
  CHECK(!check_projection(bad).ok());
  CHECK_THROWS_AS(projection_to_bimodule_bialgebra(bad), Error);
}

TEST_CASE("projection <-> bimodule bialgebra round trip") {
  HopfAlgebra h = kz2();
  for (BialgebraProjection p : {identity_projection(h), smash_projection(h, braided_line_adm())}) {
    UnderlineBialgebra ub = projection_to_bimodule_bialgebra(p);
    BialgebraProjection back = bimodule_bialgebra_to_projection(h, ub);
    CHECK(back.b2.m == p.b2.m);
    CHECK(back.b2.eta == p.b2.eta);
    CHECK(back.b2.delta == p.b2.delta);
    CHECK(back.b2.eps == p.b2.eps);
    CHECK(back.eta_bar == p.eta_bar);
    CHECK(back.eps_bar == p.eps_bar);
    // and forward again: identical underline structures
    UnderlineBialgebra ub2 = projection_to_bimodule_bialgebra(back);
    CHECK(ub2.mul_u == ub.mul_u);
    CHECK(ub2.comul_u == ub.comul_u);
  }
}

TEST_CASE("antipode transfer") {
  HopfAlgebra h = kz2();
  {
    BialgebraProjection p = identity_projection(h);
    LinMap us = underline_antipode(p);
    // h1 S(h2) h3 collapses to the identity
    CHECK(us == LinMap::identity(Q, 2));
    UnderlineBialgebra ub = projection_to_bimodule_bialgebra(p);
    CHECK(antipode_from_underline(h, ub, us) == h.s);
  }
  {
    BialgebraProjection p = smash_projection(h, braided_line_adm());
    LinMap us = underline_antipode(p);
    UnderlineBialgebra ub = projection_to_bimodule_bialgebra(p);
    LinMap s = antipode_from_underline(h, ub, us);
    CHECK(s == *p.s2);
    // convolution inverse of the identity
    CoalgebraView co{4, p.b2.delta, p.b2.eps};
    AlgebraView al{4, p.b2.m, p.b2.eta};
    CHECK(convolution(LinMap::identity(Q, 4), s, co, al) == p.b2.eta * p.b2.eps);
    CHECK(convolution(s, LinMap::identity(Q, 4), co, al) == p.b2.eta * p.b2.eps);
  }
}

TEST_CASE("radford-majid decomposition") {
  HopfAlgebra h = kz2();
  {
    YDBialgebra x = radford_majid_decompose(identity_projection(h));
    CHECK(x.module.dim == 1);
    CHECK(x.mul == LinMap::identity(Q, 1));
    CHECK(x.counit == LinMap::identity(Q, 1));
  }
  {
    AdmissibleObject bl = braided_line_adm();
    BialgebraProjection p = smash_projection(h, bl);
    YDBialgebra x = radford_majid_decompose(p);
    CHECK(x.module.dim == 2);
    CHECK(x.mul == bl.mul);
    CHECK(x.unit == bl.unit);
    CHECK(x.comul == bl.comul);
    CHECK(x.counit == bl.counit);
    CHECK(x.module.ract == bl.ract);
    CHECK(x.module.rcoact == bl.rcoact);
  }
}

TEST_CASE("check_quasitriangular") {
  {
    // trivial R on a cocommutative bialgebra
    HopfAlgebra h = kz2();
    QTBialgebra q;
    q.a = h;
    q.delta_bar = h.delta;
    q.r = h.eta.kron(h.eta);
    q.s = h.s;
    Report rep = check_quasitriangular(q);
    CHECK(rep.ok());
    REQUIRE(q.r_inv.has_value());
    CHECK(*q.r_inv == h.eta.kron(h.eta));
  }
  {
    QTBialgebra q = kz2_qt();
    Report rep = check_quasitriangular(q);
    CHECK(rep.ok());
    // u = m(id (x) S)R = g for this structure
    HopfAlgebra h = kz2();
    LinMap u = h.m * LinMap::identity(Q, 2).kron(h.s) * q.r;
    LinMap g = LinMap::from_rows(Q, {{0}, {1}});
    CHECK(u == g);
  }
  {
    QTBialgebra q = kz2_qt();
    q.r.add_to(3, 0, Q->one());  // perturb the g (x) g coefficient
    Report rep = check_quasitriangular(q);
    CHECK(!rep.ok());
    bool flagged = false;
    for (const auto& it : rep.items)
      if (!it.pass && !it.witness.empty()) flagged = true;
    CHECK(flagged);
  }
}

TEST_CASE("from_qt_module") {
  HopfAlgebra h = kz2();
  {
    // trivial R: any module gets the trivial coaction
    QTBialgebra q;
    q.a = h;
    q.delta_bar = h.delta;
    q.r = h.eta.kron(h.eta);
    LinMap sign_act = LinMap::from_rows(Q, {{1, -1}});
    YDModule yd = from_qt_module(q, 1, sign_act);
    CHECK(yd.rcoact == LinMap::identity(Q, 1).kron(h.eta));
  }
  {
    // triangular R + sign representation: the signed one-dimensional object
    QTBialgebra q = kz2_qt();
    LinMap sign_act = LinMap::from_rows(Q, {{1, -1}});
    YDModule yd = from_qt_module(q, 1, sign_act);
    CHECK(yd.rcoact == LinMap::from_rows(Q, {{0}, {1}}));  // x -> x (x) g
    CHECK(check_crossed(h, yd).ok());
  }
  {
    // trivial module: coaction forced to (id (x) eps (x) id)(id (x) R)
    QTBialgebra q = kz2_qt();
    LinMap triv = LinMap::identity(Q, 2).kron(h.eps);
    YDModule yd = from_qt_module(q, 2, triv);
    LinMap expected = triv.kron(LinMap::identity(Q, 2)) * LinMap::identity(Q, 2).kron(q.r);
    CHECK(yd.rcoact == expected);
    CHECK(yd.rcoact == LinMap::identity(Q, 2).kron(h.eta));  // pairing collapses it
  }
  {
    // membership failure: noncocommutative function algebra with the
    // opposite comultiplication as the second structure
    HopfAlgebra fs3 = function_algebra(Q, symmetric_group_table_s3(), "fnS3");
    QTBialgebra q;
    q.a = fs3;
    q.delta_bar = LinMap::flip(Q, 6, 6) * fs3.delta;
    q.r = fs3.eta.kron(fs3.eta);
    CHECK_THROWS_AS(from_qt_module(q, 6, fs3.m), Error);
  }
}

TEST_CASE("bosonization") {
  QTBialgebra qa = kz2_qt();
  {
    // B = k leaves the quasitriangular structure unchanged
    QTModuleBialgebra triv;
    triv.b.field = Q;
    triv.b.dim = 1;
    triv.b.name = "k";
    triv.b.m = LinMap::identity(Q, 1);
    triv.b.eta = LinMap::identity(Q, 1);
    triv.b.delta = LinMap::identity(Q, 1);
    triv.b.eps = LinMap::identity(Q, 1);
    triv.delta_bar = LinMap::identity(Q, 1);
    triv.r = LinMap::identity(Q, 1);
    triv.ract = qa.a.eps;
    QTBialgebra out = bosonize_qt(qa, triv);
    CHECK(out.a.m == qa.a.m);
    CHECK(out.a.delta == qa.a.delta);
    CHECK(out.r == qa.r);
  }
  {
    // the braided line bosonizes to the dim-4 quasitriangular tower
    QTModuleBialgebra qb = braided_line_qt();
    CHECK(check_qt_in_category(qa, qb).ok());
    QTBialgebra out = bosonize_qt(qa, qb);
    CHECK(out.a.dim == 4);
    // the product equals the cross-product bialgebra of the admissible pair
    HopfAlgebra h = kz2();
    Bialgebra big = smash_bialgebra(h, braided_line_adm());
    CHECK(out.a.m == big.m);
    CHECK(out.a.delta == big.delta);
    CHECK(out.delta_bar == big.delta);  // bars coincide here
    // R collapses to the iota_A images of R_A
    LinMap iota_a = LinMap::identity(Q, 2).kron(qb.b.eta);
    CHECK(out.r == iota_a.kron(iota_a) * qa.r);
    QTBialgebra copy = out;
    CHECK(check_quasitriangular(copy).ok());
  }
  {
    // trivial R_A with a trivially-braided inner factor (kZ2 again, acting
    // trivially): the product R-matrix is the iota_B image of R_B
    QTBialgebra qtriv;
    HopfAlgebra h = kz2();
    qtriv.a = h;
    qtriv.delta_bar = h.delta;
    qtriv.r = h.eta.kron(h.eta);
    qtriv.s = h.s;
    QTModuleBialgebra qb;
    qb.b = h;
    qb.delta_bar = h.delta;
    qb.r = kz2_triangular_r();
    qb.ract = LinMap::identity(Q, 2).kron(h.eps);
    QTBialgebra out = bosonize_qt(qtriv, qb);
    LinMap iota_b = h.eta.kron(LinMap::identity(Q, 2));
    CHECK(out.r == iota_b.kron(iota_b) * qb.r);
  }
}

TEST_CASE("quantum group projection") {
  HopfAlgebra h = kz2();
  QTBialgebra qa = kz2_qt();
  {
    // identity projection with rH = rA
    BialgebraProjection p = identity_projection(h);
    Report rep = check_qt_projection(p, p, qa.r, qa.r);
    CHECK(rep.ok());
  }
  {
    // bosonization projected back onto A
    QTModuleBialgebra qb = braided_line_qt();
    QTBialgebra out = bosonize_qt(qa, qb);
    BialgebraProjection p;
    p.b1 = h;
    p.b2 = out.a;
    p.s2 = out.s;
    p.eta_bar = LinMap::identity(Q, 2).kron(qb.b.eta);
    p.eps_bar = LinMap::identity(Q, 2).kron(qb.b.eps);
    Report rep = check_qt_projection(p, p, qa.r, out.r);
    CHECK(rep.ok());
  }
  {
    // mismatched R-matrices are flagged on condition 3
    BialgebraProjection p = identity_projection(h);
    Report rep = check_qt_projection(p, p, qa.r, h.eta.kron(h.eta));
    CHECK(!rep.ok());
    bool flagged = false;
    for (const auto& it : rep.items)
      if (!it.pass && it.name.rfind("r-compat", 0) == 0) flagged = true;
    CHECK(flagged);
  }
}
