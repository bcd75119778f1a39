#pragma once

#include <cstdint>

#include "braidcalc/linmap.hpp"

namespace testutil {

using namespace braidcalc;

// deterministic small-integer generator so failures reproduce exactly
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  }
  long range(long lo, long hi) { return lo + long(next() % uint64_t(hi - lo + 1)); }
};

inline LinMap random_map(FieldPtr f, int cod, int dom, Rng& rng, int density_pct = 60) {
  LinMap m = LinMap::zero(f, cod, dom);
  for (int r = 0; r < cod; ++r)
    for (int c = 0; c < dom; ++c) {
      if (rng.range(0, 99) < density_pct) {
        long v = rng.range(-3, 3);
        if (v != 0) m.set(r, c, f->from_int(v));
      }
    }
  return m;
}

// random idempotent: e = f o (g o f)^-1 o g for random f: r -> n, g: n -> r
inline LinMap random_idempotent(FieldPtr fld, int n, int r, Rng& rng) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    LinMap f = random_map(fld, n, r, rng);
    LinMap g = random_map(fld, r, n, rng);
    LinMap gf = g * f;
    if (rank_of(gf) != r) continue;
    return f * inverse(gf) * g;
  }
  return LinMap::identity(fld, n);
}

}  // namespace testutil
