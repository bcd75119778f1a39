#include "braidcalc/linmap.hpp"

#include <algorithm>
#include <sstream>

#include "braidcalc/error.hpp"

namespace braidcalc {

namespace {

void check_field(const LinMap& a, const LinMap& b) {
  if (!same_field(a.field(), b.field())) fail(Err::ShapeMismatch, "maps over different fields");
}

using Row = std::vector<std::pair<int, Scalar>>;

// dst += s * src (sparse row combination)
Row axpy(const Field& F, const Row& dst, const Scalar& s, const Row& src) {
  Row out;
  out.reserve(dst.size() + src.size());
  size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      Scalar v = F.mul(s, src[j].second);
      if (!F.is_zero(v)) out.emplace_back(src[j].first, std::move(v));
      ++j;
    } else {
      Scalar v = F.add(dst[i].second, F.mul(s, src[j].second));
      if (!F.is_zero(v)) out.emplace_back(dst[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LinMap LinMap::zero(FieldPtr f, int cod, int dom) {
  if (cod < 0 || dom < 0) fail(Err::ShapeMismatch, "negative dimension");
  LinMap m;
  m.field_ = std::move(f);
  m.cod_ = cod;
  m.dom_ = dom;
  m.rows_.resize(cod);
  return m;
}

LinMap LinMap::identity(FieldPtr f, int n) {
  LinMap m = zero(f, n, n);
  Scalar one = m.field_->one();
  for (int i = 0; i < n; ++i) m.rows_[i].emplace_back(i, one);
  return m;
}

LinMap LinMap::flip(FieldPtr f, int a, int b) {
  LinMap m = zero(f, a * b, a * b);
  Scalar one = m.field_->one();
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) m.rows_[j * a + i].emplace_back(i * b + j, one);
  return m;
}

LinMap LinMap::from_rows(FieldPtr f, const std::vector<std::vector<Rational>>& rows) {
  int cod = int(rows.size());
  int dom = cod ? int(rows[0].size()) : 0;
  LinMap m = zero(std::move(f), cod, dom);
  for (int r = 0; r < cod; ++r) {
    if (int(rows[r].size()) != dom) fail(Err::ShapeMismatch, "ragged rows");
    for (int c = 0; c < dom; ++c)
      if (rows[r][c] != 0) m.rows_[r].emplace_back(c, m.field_->from_rational(rows[r][c]));
  }
  return m;
}

Scalar LinMap::at(int r, int c) const {
  const Row& row = rows_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const std::pair<int, Scalar>& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return field_->zero();
}

void LinMap::set(int r, int c, const Scalar& v) {
  Row& row = rows_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const std::pair<int, Scalar>& e, int col) { return e.first < col; });
  bool z = field_->is_zero(v);
  if (it != row.end() && it->first == c) {
    if (z)
      row.erase(it);
    else
      it->second = v;
  } else if (!z) {
    row.insert(it, {c, v});
  }
}

void LinMap::add_to(int r, int c, const Scalar& v) {
  if (field_->is_zero(v)) return;
  Row& row = rows_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const std::pair<int, Scalar>& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second = field_->add(it->second, v);
    if (field_->is_zero(it->second)) row.erase(it);
  } else {
    row.insert(it, {c, v});
  }
}

LinMap LinMap::compose(const LinMap& g) const {
  check_field(*this, g);
  if (dom_ != g.cod_) fail(Err::ShapeMismatch, "compose: inner dimensions disagree");
  const Field& F = *field_;
  LinMap out = zero(field_, cod_, g.dom_);
  for (int r = 0; r < cod_; ++r) {
    Row acc;
    for (const auto& [k, v] : rows_[r]) acc = axpy(F, acc, v, g.rows_[k]);
    out.rows_[r] = std::move(acc);
  }
  return out;
}

LinMap LinMap::kron(const LinMap& b) const {
  check_field(*this, b);
  LinMap out = zero(field_, cod_ * b.cod_, dom_ * b.dom_);
  const Field& F = *field_;
  for (int ra = 0; ra < cod_; ++ra) {
    if (rows_[ra].empty()) continue;
    for (int rb = 0; rb < b.cod_; ++rb) {
      if (b.rows_[rb].empty()) continue;
      Row& dst = out.rows_[ra * b.cod_ + rb];
      dst.reserve(rows_[ra].size() * b.rows_[rb].size());
      for (const auto& [ca, va] : rows_[ra])
        for (const auto& [cb, vb] : b.rows_[rb]) dst.emplace_back(ca * b.dom_ + cb, F.mul(va, vb));
      std::sort(dst.begin(), dst.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
    }
  }
  return out;
}

LinMap LinMap::add(const LinMap& b) const {
  check_field(*this, b);
  if (cod_ != b.cod_ || dom_ != b.dom_) fail(Err::ShapeMismatch, "add: shapes disagree");
  LinMap out = zero(field_, cod_, dom_);
  for (int r = 0; r < cod_; ++r) out.rows_[r] = axpy(*field_, rows_[r], field_->one(), b.rows_[r]);
  return out;
}

LinMap LinMap::sub(const LinMap& b) const {
  check_field(*this, b);
  if (cod_ != b.cod_ || dom_ != b.dom_) fail(Err::ShapeMismatch, "sub: shapes disagree");
  LinMap out = zero(field_, cod_, dom_);
  Scalar m1 = field_->neg(field_->one());
  for (int r = 0; r < cod_; ++r) out.rows_[r] = axpy(*field_, rows_[r], m1, b.rows_[r]);
  return out;
}

LinMap LinMap::neg() const { return scale(field_->neg(field_->one())); }

LinMap LinMap::scale(const Scalar& s) const {
  LinMap out = zero(field_, cod_, dom_);
  if (field_->is_zero(s)) return out;
  for (int r = 0; r < cod_; ++r) {
    out.rows_[r].reserve(rows_[r].size());
    for (const auto& [c, v] : rows_[r]) {
      Scalar w = field_->mul(s, v);
      if (!field_->is_zero(w)) out.rows_[r].emplace_back(c, std::move(w));
    }
  }
  return out;
}

LinMap LinMap::transpose() const {
  LinMap out = zero(field_, dom_, cod_);
  for (int r = 0; r < cod_; ++r)
    for (const auto& [c, v] : rows_[r]) out.rows_[c].emplace_back(r, v);
  return out;
}

LinMap LinMap::dsum(const LinMap& b) const {
  check_field(*this, b);
  LinMap out = zero(field_, cod_ + b.cod_, dom_ + b.dom_);
  for (int r = 0; r < cod_; ++r) out.rows_[r] = rows_[r];
  for (int r = 0; r < b.cod_; ++r) {
    Row row = b.rows_[r];
    for (auto& e : row) e.first += dom_;
    out.rows_[cod_ + r] = std::move(row);
  }
  return out;
}

bool LinMap::is_zero() const {
  for (const auto& row : rows_)
    if (!row.empty()) return false;
  return true;
}

bool LinMap::operator==(const LinMap& o) const {
  if (cod_ != o.cod_ || dom_ != o.dom_) return false;
  return rows_ == o.rows_;
}

void LinMap::for_each(const std::function<void(int, int, const Scalar&)>& fn) const {
  for (int r = 0; r < cod_; ++r)
    for (const auto& [c, v] : rows_[r]) fn(r, c, v);
}

int LinMap::nnz() const {
  int n = 0;
  for (const auto& row : rows_) n += int(row.size());
  return n;
}

std::optional<std::pair<int, int>> LinMap::first_difference(const LinMap& o) const {
  if (cod_ != o.cod_ || dom_ != o.dom_) fail(Err::ShapeMismatch, "first_difference: shapes disagree");
  for (int r = 0; r < cod_; ++r) {
    if (rows_[r] == o.rows_[r]) continue;
    size_t i = 0, j = 0;
    const Row& a = rows_[r];
    const Row& b = o.rows_[r];
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) return {{r, a[i].first}};
      if (i == a.size() || b[j].first < a[i].first) return {{r, b[j].first}};
      if (!(a[i].second == b[j].second)) return {{r, a[i].first}};
      ++i;
      ++j;
    }
  }
  return std::nullopt;
}

std::string LinMap::to_pretty_string() const {
  std::ostringstream os;
  os << cod_ << "x" << dom_ << " [";
  bool first = true;
  for_each([&](int r, int c, const Scalar& v) {
    if (!first) os << ", ";
    first = false;
    os << "(" << r << "," << c << ")=" << field_->to_string(v);
  });
  os << "]";
  return os.str();
}

LinMap id_tensor(int left, const LinMap& f, int right) {
  LinMap l = LinMap::identity(f.field(), left);
  LinMap r = LinMap::identity(f.field(), right);
  return l.kron(f).kron(r);
}

EchelonForm echelon(const LinMap& f) {
  const Field& F = *f.field();
  EchelonForm ef;
  LinMap work = f;
  std::vector<int> pivot_row_of_col;  // parallel to pivot_cols
  std::vector<bool> used(f.cod(), false);
  std::vector<int> pivot_rows;
  for (int col = 0; col < f.dom(); ++col) {
    int pr = -1;
    for (int r = 0; r < f.cod(); ++r) {
      if (used[r]) continue;
      Scalar v = work.at(r, col);
      if (!F.is_zero(v)) {
        pr = r;
        break;
      }
    }
    if (pr < 0) continue;
    used[pr] = true;
    ef.pivot_cols.push_back(col);
    pivot_rows.push_back(pr);
    // normalize pivot row
    Scalar pinv = F.inv(work.at(pr, col));
    {
      Row row = work.rows_[pr];
      for (auto& e : row) e.second = F.mul(pinv, e.second);
      work.rows_[pr] = std::move(row);
    }
    // eliminate the column everywhere else
    const Row prow = work.rows_[pr];
    for (int r = 0; r < f.cod(); ++r) {
      if (r == pr) continue;
      Scalar v = work.at(r, col);
      if (F.is_zero(v)) continue;
      work.rows_[r] = axpy(F, work.rows_[r], F.neg(v), prow);
    }
  }
  ef.rank = int(ef.pivot_cols.size());
  // order rows of the RREF: pivot rows sorted by pivot column, then zero rows
  LinMap rref = LinMap::zero(f.field(), f.cod(), f.dom());
  int out = 0;
  for (size_t k = 0; k < pivot_rows.size(); ++k) rref.rows_[out++] = work.rows_[pivot_rows[k]];
  ef.rref = std::move(rref);
  return ef;
}

Factorization factorize(const LinMap& f) {
  const Field& F = *f.field();
  EchelonForm ef = echelon(f);
  Factorization out;
  out.rank = ef.rank;
  // coimage projection: the nonzero rows of the RREF
  out.coim_proj = LinMap::zero(f.field(), ef.rank, f.dom());
  ef.rref.for_each([&](int row, int col, const Scalar& v) {
    if (row < ef.rank) out.coim_proj.set(row, col, v);
  });
  // image basis: pivot columns of the original map
  out.image_basis = LinMap::zero(f.field(), f.cod(), ef.rank);
  for (int k = 0; k < ef.rank; ++k) {
    int col = ef.pivot_cols[k];
    for (int r = 0; r < f.cod(); ++r) {
      Scalar v = f.at(r, col);
      if (!F.is_zero(v)) out.image_basis.set(r, k, v);
    }
  }
  // kernel basis from the RREF: free columns ascending; the vector has the
  // RREF coefficient at each pivot column and -1 at the free column
  std::vector<bool> is_pivot(f.dom(), false);
  for (int c : ef.pivot_cols) is_pivot[c] = true;
  int nullity = f.dom() - ef.rank;
  out.kernel_basis = LinMap::zero(f.field(), f.dom(), nullity);
  int kcol = 0;
  Scalar m1 = F.neg(F.one());
  for (int c = 0; c < f.dom(); ++c) {
    if (is_pivot[c]) continue;
    for (int r = 0; r < ef.rank; ++r) {
      Scalar v = out.coim_proj.at(r, c);
      if (!F.is_zero(v)) out.kernel_basis.set(ef.pivot_cols[r], kcol, v);
    }
    out.kernel_basis.set(c, kcol, m1);
    ++kcol;
  }
  return out;
}

SplitPair split_idempotent(const LinMap& e) {
  if (e.cod() != e.dom()) fail(Err::ShapeMismatch, "idempotent must be an endomorphism");
  if (!(e.compose(e) == e)) fail(Err::NotIdempotent, "e o e differs from e");
  Factorization f = factorize(e);
  // e = C o R with R o C = id on the split object
  return SplitPair{f.image_basis, f.coim_proj, f.rank};
}

LinMap inverse(const LinMap& f) {
  if (f.cod() != f.dom()) fail(Err::NotInvertible, "not a square matrix");
  LinearSolution s = solve_right(f, LinMap::identity(f.field(), f.cod()));
  if (!s.consistent || s.nullity != 0) fail(Err::NotInvertible, "matrix is singular");
  return s.solution;
}

LinearSolution solve_right(const LinMap& a, const LinMap& b) {
  check_field(a, b);
  if (a.cod() != b.cod()) fail(Err::ShapeMismatch, "solve: codomains disagree");
  const Field& F = *a.field();
  // eliminate on [a | b]
  LinMap aug = LinMap::zero(a.field(), a.cod(), a.dom() + b.dom());
  a.for_each([&](int r, int c, const Scalar& v) { aug.set(r, c, v); });
  b.for_each([&](int r, int c, const Scalar& v) { aug.set(r, a.dom() + c, v); });
  LinearSolution out;
  // run echelon restricted to pivot search in the first a.dom() columns
  std::vector<bool> used(a.cod(), false);
  std::vector<int> pivot_cols, pivot_rows;
  LinMap work = aug;
  for (int col = 0; col < a.dom(); ++col) {
    int pr = -1;
    for (int r = 0; r < a.cod(); ++r) {
      if (used[r]) continue;
      if (!F.is_zero(work.at(r, col))) {
        pr = r;
        break;
      }
    }
    if (pr < 0) continue;
    used[pr] = true;
    pivot_cols.push_back(col);
    pivot_rows.push_back(pr);
    Scalar pinv = F.inv(work.at(pr, col));
    {
      auto row = work.rows_[pr];
      for (auto& e : row) e.second = F.mul(pinv, e.second);
      work.rows_[pr] = std::move(row);
    }
    const auto prow = work.rows_[pr];
    for (int r = 0; r < a.cod(); ++r) {
      if (r == pr) continue;
      Scalar v = work.at(r, col);
      if (F.is_zero(v)) continue;
      work.rows_[r] = axpy(F, work.rows_[r], F.neg(v), prow);
    }
  }
  // consistency: rows without a pivot must vanish on the b side too
  for (int r = 0; r < a.cod(); ++r) {
    if (used[r]) continue;
    if (!work.rows_[r].empty()) {
      out.consistent = false;
      out.nullity = a.dom() - int(pivot_cols.size());
      return out;
    }
  }
  out.consistent = true;
  out.nullity = a.dom() - int(pivot_cols.size());
  out.solution = LinMap::zero(a.field(), a.dom(), b.dom());
  for (size_t k = 0; k < pivot_cols.size(); ++k) {
    for (const auto& [c, v] : work.rows_[pivot_rows[k]]) {
      if (c >= a.dom()) out.solution.set(pivot_cols[k], c - a.dom(), v);
    }
  }
  return out;
}

LinearSolution solve_left(const LinMap& a, const LinMap& b) {
  LinearSolution s = solve_right(a.transpose(), b.transpose());
  if (s.consistent) s.solution = s.solution.transpose();
  return s;
}

int rank_of(const LinMap& f) { return echelon(f).rank; }

}  // namespace braidcalc
