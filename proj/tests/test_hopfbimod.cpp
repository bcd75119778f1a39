#include <doctest.h>

#include "braidcalc/error.hpp"
#include "braidcalc/hopfbimod.hpp"
#include "test_util.hpp"

using namespace braidcalc;

namespace {

FieldPtr Q = Field::rationals();

HopfAlgebra kz2() { return group_algebra(Q, cyclic_group_table(2), "kZ2"); }

YDModule sign_yd() {
  YDModule m;
  m.dim = 1;
  m.ract = LinMap::from_rows(Q, {{1, -1}});
  m.rcoact = LinMap::from_rows(Q, {{0}, {1}});
  return m;
}

YDModule braided_line_yd() {
  YDModule m;
  m.dim = 2;
  m.ract = LinMap::from_rows(Q, {{1, 1, 0, 0}, {0, 0, 1, -1}});
  m.rcoact = LinMap::zero(Q, 4, 2);
  m.rcoact.set(0, 0, Q->one());
  m.rcoact.set(3, 1, Q->one());
  return m;
}

std::vector<std::pair<HopfAlgebra, YDModule>> yd_library() {
  HopfAlgebra z2 = kz2();
  HopfAlgebra sw = sweedler_algebra();
  return {
      {z2, trivial_yd(z2, 1)},         {z2, trivial_yd(z2, 2)},
      {z2, adjoint_regular_yd(z2)},    {z2, sign_yd()},
      {z2, braided_line_yd()},         {sw, trivial_yd(sw, 1)},
      {sw, adjoint_regular_yd(sw)},    {sw, regular_coadjoint_yd(sw)},
  };
}

}  // namespace

TEST_CASE("regular Hopf bimodule passes all checks") {
  for (HopfAlgebra h : {kz2(), sweedler_algebra()}) {
    INFO(h.name);
    CHECK(check_hopf_bimodule(h, regular_hopf_bimodule(h)).ok());
  }
  // vacuous zero-dimensional object
  HopfAlgebra z2 = kz2();
  HopfBimodule empty{0, LinMap::zero(Q, 0, 0), LinMap::zero(Q, 0, 0), LinMap::zero(Q, 0, 0),
                     LinMap::zero(Q, 0, 0)};
  CHECK(check_hopf_bimodule(z2, empty).ok());
}

TEST_CASE("trivial coactions on the regular bimodule violate compatibility") {
  HopfAlgebra z2 = kz2();
  HopfBimodule bad;
  bad.dim = 2;
  bad.lact = z2.m;
  bad.ract = z2.m;
  bad.lcoact = z2.eta.kron(LinMap::identity(Q, 2));
  bad.rcoact = LinMap::identity(Q, 2).kron(z2.eta);
  // the right coaction of x.g must pick up a g in the second leg; with the
  // trivial coaction both sides differ already on the basis vector 1 (x) g
  Report rep = check_hopf_bimodule(z2, bad);
  CHECK(!rep.ok());
  const CheckItem* f = rep.first_failure();
  REQUIRE(f != nullptr);
  CHECK(!f->witness.empty());
}

TEST_CASE("pi idempotent") {
  {
    HopfAlgebra z2 = kz2();
    LinMap pi = pi_idempotent(z2, regular_hopf_bimodule(z2));
    // S(h1)h2 = eps(h)1: the rank-one projection onto the unit line
    CHECK(pi == z2.eta * z2.eps);
    CHECK(rank_of(pi) == 1);
  }
  for (auto& [h, y] : yd_library()) {
    HopfBimodule smash = smash_inclusion(h, y);
    LinMap pi = pi_idempotent(h, smash);
    CHECK(pi == (h.eta * h.eps).kron(LinMap::identity(Q, y.dim)));
    CHECK(pi * pi == pi);
  }
  {
    HopfAlgebra z2 = kz2();
    HopfBimodule empty{0, LinMap::zero(Q, 0, 0), LinMap::zero(Q, 0, 0), LinMap::zero(Q, 0, 0),
                       LinMap::zero(Q, 0, 0)};
    CHECK(pi_idempotent(z2, empty).dom() == 0);
  }
}

TEST_CASE("invariants of the regular bimodule are trivial of rank one") {
  for (HopfAlgebra h : {kz2(), sweedler_algebra()}) {
    InvariantsResult inv = invariants(h, regular_hopf_bimodule(h));
    CHECK(inv.split.rank == 1);
    CHECK(inv.yd.ract == trivial_yd(h, 1).ract);
    CHECK(inv.yd.rcoact == trivial_yd(h, 1).rcoact);
  }
}

TEST_CASE("equivalence round trip: invariants(smash_inclusion(Y)) == Y") {
  for (auto& [h, y] : yd_library()) {
    HopfBimodule smash = smash_inclusion(h, y);
    InvariantsResult inv = invariants(h, smash);
    CHECK(inv.split.rank == y.dim);
    CHECK(inv.yd.ract == y.ract);
    CHECK(inv.yd.rcoact == y.rcoact);
  }
}

TEST_CASE("smash inclusion of the unit object is the regular Hopf bimodule") {
  HopfAlgebra z2 = kz2();
  HopfBimodule s = smash_inclusion(z2, trivial_yd(z2, 1));
  HopfBimodule reg = regular_hopf_bimodule(z2);
  CHECK(s.lact == reg.lact);
  CHECK(s.ract == reg.ract);
  CHECK(s.lcoact == reg.lcoact);
  CHECK(s.rcoact == reg.rcoact);
  // trivial(d): induced/regular structure, all checks pass (done inside)
  HopfBimodule t = smash_inclusion(z2, trivial_yd(z2, 3));
  CHECK(t.dim == 6);
  // adjoint-regular: nontrivial dim-4 object
  HopfBimodule a = smash_inclusion(z2, adjoint_regular_yd(z2));
  CHECK(a.dim == 4);
}

TEST_CASE("tensor over H: unit laws via canonical isomorphisms") {
  HopfAlgebra z2 = kz2();
  HopfBimodule reg = regular_hopf_bimodule(z2);
  HopfBimodule m = smash_inclusion(z2, braided_line_yd());
  {
    // H (x)_H M = M through lact o (id (x) i)
    TensorOverH t = tensor_over_H(z2, reg, m);
    LinMap theta = m.lact * LinMap::identity(Q, 2).kron(t.split_m.section);
    CHECK(rank_of(theta) == m.dim);
    CHECK(is_hopf_bimodule_morphism(z2, t.object, m, theta));
  }
  {
    // N (x)_H H = N through ract o (id (x) i)
    TensorOverH t = tensor_over_H(z2, m, reg);
    LinMap theta = m.ract * LinMap::identity(Q, m.dim).kron(t.split_m.section);
    CHECK(rank_of(theta) == m.dim);
    CHECK(is_hopf_bimodule_morphism(z2, t.object, m, theta));
  }
  {
    // H (x)_H H = H
    TensorOverH t = tensor_over_H(z2, reg, reg);
    CHECK(t.object.dim == 2);
    LinMap theta = reg.lact * LinMap::identity(Q, 2).kron(t.split_m.section);
    CHECK(is_hopf_bimodule_morphism(z2, t.object, reg, theta));
    CHECK(rank_of(theta) == 2);
  }
}

TEST_CASE("hopf bimodule braiding") {
  HopfAlgebra z2 = kz2();
  HopfAlgebra sw = sweedler_algebra();
  // unit object: identity on the rank-one carrier
  CHECK(hopf_bimodule_braiding(z2, regular_hopf_bimodule(z2), regular_hopf_bimodule(z2)) ==
        LinMap::identity(Q, 2));
  CHECK(hopf_bimodule_braiding(sw, regular_hopf_bimodule(sw), regular_hopf_bimodule(sw)) ==
        LinMap::identity(Q, 4));
  // transport: on smash inclusions the braiding is id_H (x) (crossed braiding)
  std::vector<YDModule> objs = {sign_yd(), braided_line_yd(), adjoint_regular_yd(z2)};
  for (const YDModule& y1 : objs)
    for (const YDModule& y2 : objs) {
      LinMap big = hopf_bimodule_braiding(z2, smash_inclusion(z2, y1), smash_inclusion(z2, y2));
      LinMap small = yd_braiding(z2, y1, y2);
      CHECK(big == LinMap::identity(Q, 2).kron(small));
    }
}

TEST_CASE("relative antipode") {
  {
    // S_{H/H} = S
    for (HopfAlgebra h : {kz2(), sweedler_algebra()}) {
      CHECK(relative_antipode(h, regular_hopf_bimodule(h)) == h.s);
    }
  }
  {
    // trivial left structures reduce the formula to the right-leg twist
    HopfAlgebra sw = sweedler_algebra();
    HopfBimodule x;
    x.dim = 4;
    x.lact = sw.eps.kron(LinMap::identity(Q, 4));
    x.ract = sw.m;
    x.lcoact = sw.eta.kron(LinMap::identity(Q, 4));
    x.rcoact = sw.delta;
    CHECK(relative_antipode(sw, x) == sw.m * LinMap::identity(Q, 4).kron(sw.s) * sw.delta);
  }
  {
    // polarized relations on smash inclusions over kZ2
    HopfAlgebra z2 = kz2();
    for (const YDModule& y : {sign_yd(), braided_line_yd(), adjoint_regular_yd(z2)}) {
      HopfBimodule x = smash_inclusion(z2, y);
      LinMap srel = relative_antipode(z2, x);
      const int d = x.dim;
      LinMap idh = LinMap::identity(Q, 2), idx = LinMap::identity(Q, d);
      CHECK(srel * x.ract == x.lact * LinMap::flip(Q, d, 2) * srel.kron(z2.s));
      CHECK(srel * x.lact == x.ract * LinMap::flip(Q, 2, d) * z2.s.kron(srel));
      CHECK(x.rcoact * srel == srel.kron(z2.s) * LinMap::flip(Q, 2, d) * x.lcoact);
      CHECK(x.lcoact * srel == z2.s.kron(srel) * LinMap::flip(Q, d, 2) * x.rcoact);
    }
  }
}
