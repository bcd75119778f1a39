#include "braidcalc/ydmod.hpp"

#include "braidcalc/error.hpp"

namespace braidcalc {

std::pair<LinMap, LinMap> crossed_relation_sides(const Bialgebra& h, const YDModule& x) {
  const int n = h.dim, d = x.dim;
  FieldPtr F = h.field;
  LinMap idx = LinMap::identity(F, d);
  LinMap idh = LinMap::identity(F, n);
  LinMap flip_xh = LinMap::flip(F, d, n);
  LinMap flip_hx = LinMap::flip(F, n, d);
  LinMap flip_hh = LinMap::flip(F, n, n);
  // lhs: (id_X (x) m) (Psi_HX (x) id) (id_H (x) rcoact o ract) (Psi_XH (x) id) (id_X (x) Delta)
  LinMap lhs = idx.kron(h.m) * flip_hx.kron(idh) * idh.kron(x.rcoact * x.ract) *
               flip_xh.kron(idh) * idx.kron(h.delta);
  // rhs: (ract (x) m) (id_X (x) Psi_HH (x) id) (rcoact (x) Delta)
  LinMap rhs = x.ract.kron(h.m) * id_tensor(d, flip_hh, n) * x.rcoact.kron(h.delta);
  return {lhs, rhs};
}

Report check_crossed(const Bialgebra& h, const YDModule& x) {
  require_bialgebra_shapes(h);
  Report rep;
  rep.subject = "crossed-module";
  rep.merge(check_right_module(h, x.dim, x.ract));
  rep.merge(check_right_comodule(h, x.dim, x.rcoact));
  auto [lhs, rhs] = crossed_relation_sides(h, x);
  rep.check_equal("crossed-compatibility", lhs, rhs);
  return rep;
}

namespace {

void require_crossed(const Bialgebra& h, const YDModule& x, const char* who) {
  Report rep = check_crossed(h, x);
  if (!rep.ok()) fail(Err::NotCrossed, std::string(who) + ": " + rep.summary());
}

}  // namespace

LinMap yd_braiding(const Bialgebra& h, const YDModule& x, const YDModule& y) {
  require_crossed(h, x, "yd_braiding lhs");
  require_crossed(h, y, "yd_braiding rhs");
  FieldPtr F = h.field;
  LinMap idy = LinMap::identity(F, y.dim);
  LinMap flip_xy = LinMap::flip(F, x.dim, y.dim);
  return idy.kron(x.ract) * flip_xy.kron(LinMap::identity(F, h.dim)) *
         LinMap::identity(F, x.dim).kron(y.rcoact);
}

LinMap yd_braiding_inverse(const HopfAlgebra& h, const YDModule& x, const YDModule& y) {
  if (!h.s_inv) fail(Err::AntipodeNotInverted, "call invert_antipode first");
  require_crossed(h, x, "yd_braiding_inverse lhs");
  require_crossed(h, y, "yd_braiding_inverse rhs");
  FieldPtr F = h.field;
  const int n = h.dim;
  LinMap idx = LinMap::identity(F, x.dim);
  LinMap idy = LinMap::identity(F, y.dim);
  // Y (x) X -> X (x) Y, using the inverses of the base transpositions
  LinMap inv = x.ract.kron(idy)                              // X (x) H (x) Y -> X (x) Y
               * idx.kron(LinMap::flip(F, y.dim, n))         // X (x) Y (x) H -> X (x) H (x) Y
               * LinMap::flip(F, y.dim, x.dim).kron(*h.s_inv)  // Y (x) X (x) H -> X (x) Y (x) H
               * idy.kron(LinMap::flip(F, n, x.dim))         // Y (x) H (x) X -> Y (x) X (x) H
               * y.rcoact.kron(idx);                         // Y (x) X -> Y (x) H (x) X
  LinMap braid = yd_braiding(h, x, y);
  if (!(inv * braid == LinMap::identity(F, x.dim * y.dim)) ||
      !(braid * inv == LinMap::identity(F, y.dim * x.dim)))
    fail(Err::NotCrossed, "braiding inverse postcondition failed");
  return inv;
}

YDModule yd_tensor(const Bialgebra& h, const YDModule& x, const YDModule& y) {
  require_crossed(h, x, "yd_tensor lhs");
  require_crossed(h, y, "yd_tensor rhs");
  FieldPtr F = h.field;
  const int n = h.dim, dx = x.dim, dy = y.dim;
  LinMap idx = LinMap::identity(F, dx);
  LinMap idy = LinMap::identity(F, dy);
  YDModule out;
  out.dim = dx * dy;
  // diagonal action: (x (x) y) . h = (x . h1) (x) (y . h2)
  out.ract = x.ract.kron(y.ract) * idx.kron(LinMap::flip(F, dy, n)).kron(LinMap::identity(F, n)) *
             idx.kron(idy).kron(h.delta);
  // diagonal coaction: x (x) y -> x0 (x) y0 (x) x1 y1
  out.rcoact = idx.kron(idy).kron(h.m) * idx.kron(LinMap::flip(F, n, dy)).kron(LinMap::identity(F, n)) *
               x.rcoact.kron(y.rcoact);
  Report rep = check_crossed(h, out);
  if (!rep.ok()) fail(Err::NotCrossed, "yd_tensor output: " + rep.summary());
  return out;
}

YDModule trivial_yd(const Bialgebra& h, int d) {
  LinMap idx = LinMap::identity(h.field, d);
  return YDModule{d, idx.kron(h.eps), idx.kron(h.eta)};
}

YDModule adjoint_regular_yd(const HopfAlgebra& h) {
  return YDModule{h.dim, adjoint_action(h, regular_bimodule(h)), h.delta};
}

YDModule regular_coadjoint_yd(const HopfAlgebra& h) {
  return YDModule{h.dim, h.m, coadjoint_coaction(h, regular_bicomodule(h))};
}

bool is_crossed_morphism(const Bialgebra& h, const YDModule& x, const YDModule& y,
                         const LinMap& f) {
  if (f.dom() != x.dim || f.cod() != y.dim) fail(Err::ShapeMismatch, "morphism shape");
  LinMap idh = LinMap::identity(h.field, h.dim);
  return f * x.ract == y.ract * f.kron(idh) && y.rcoact * f == f.kron(idh) * x.rcoact;
}

}  // namespace braidcalc
