#include "tic/pg3.hpp"

#include <algorithm>
#include <string>

namespace tic {

namespace {
constexpr uint32_t kMaxSpaceQ = 1024;  // keeps dense point indices in 32 bits
}

Space::Space(std::shared_ptr<const FieldCtx> f) : f_(std::move(f)) {
  q_ = f_->order();
  if (q_ > kMaxSpaceQ)
    throw DegreeTooLarge("PG(3,q) enumeration supports q <= " +
                         std::to_string(kMaxSpaceQ));
  n_points_ = q_ * q_ * q_ + q_ * q_ + q_ + 1;
}

Coord4 Space::normalize(const Coord4& c) const {
  const FieldCtx& f = *f_;
  for (int i = 0; i < 4; ++i) {
    if (c[i] != 0) {
      if (c[i] == 1) return c;
      uint32_t s = f.rinv(c[i]);
      Coord4 r{};
      for (int j = 0; j < 4; ++j) r[j] = f.rmul(c[j], s);
      return r;
    }
  }
  throw Error("normalize: zero tuple");
}

uint32_t Space::index_of(const Coord4& c) const {
  // pivot 0: (1,x,y,z) -> x q^2 + y q + z
  // pivot 1: (0,1,y,z) -> q^3 + y q + z, etc.
  if (c[0] == 1)
    return (c[1] * q_ + c[2]) * q_ + c[3];
  uint32_t q3 = q_ * q_ * q_;
  if (c[0] == 0 && c[1] == 1) return q3 + c[2] * q_ + c[3];
  if (c[0] == 0 && c[1] == 0 && c[2] == 1) return q3 + q_ * q_ + c[3];
  if (c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 1)
    return q3 + q_ * q_ + q_;
  throw Error("index_of: tuple not normalized");
}

Coord4 Space::coords_of(uint32_t index) const {
  uint32_t q3 = q_ * q_ * q_;
  if (index < q3)
    return {1, index / (q_ * q_), (index / q_) % q_, index % q_};
  index -= q3;
  if (index < q_ * q_) return {0, 1, index / q_, index % q_};
  index -= q_ * q_;
  if (index < q_) return {0, 0, 1, index};
  if (index == q_) return {0, 0, 0, 1};
  throw Error("coords_of: index out of range");
}

Pluck6 Space::plucker_of(const Coord4& a, const Coord4& b) const {
  const FieldCtx& f = *f_;
  auto pij = [&](int i, int j) {
    return f.rsub(f.rmul(a[i], b[j]), f.rmul(a[j], b[i]));
  };
  return {pij(0, 1), pij(0, 2), pij(0, 3), pij(1, 2), pij(3, 1), pij(2, 3)};
}

Pluck6 Space::normalize_plucker(const Pluck6& p) const {
  const FieldCtx& f = *f_;
  for (int i = 0; i < 6; ++i) {
    if (p[i] != 0) {
      if (p[i] == 1) return p;
      uint32_t s = f.rinv(p[i]);
      Pluck6 r{};
      for (int j = 0; j < 6; ++j) r[j] = f.rmul(p[j], s);
      return r;
    }
  }
  throw Error("normalize_plucker: zero tuple");
}

ProjLine Space::line_through(const Coord4& a, const Coord4& b) const {
  const FieldCtx& f = *f_;
  Pluck6 p = plucker_of(a, b);
  bool zero = true;
  for (uint32_t v : p) zero &= (v == 0);
  if (zero) throw CoincidentPoints("line_through: coincident points");

  ProjLine l;
  l.plucker = normalize_plucker(p);
  // Points of the line: b and a + t b, t in F_q; take the two smallest
  // indices as the canonical span.
  uint32_t best1 = index_of_normalized(b), best2 = UINT32_MAX;
  for (uint32_t t = 0; t < q_; ++t) {
    Coord4 x{};
    for (int j = 0; j < 4; ++j) x[j] = f.radd(a[j], f.rmul(t, b[j]));
    uint32_t idx = index_of_normalized(x);
    if (idx < best1) {
      best2 = best1;
      best1 = idx;
    } else if (idx < best2) {
      best2 = idx;
    }
  }
  l.span = {best1, best2};
  return l;
}

ProjLine Space::line_from_plucker(const Pluck6& p) const {
  const FieldCtx& f = *f_;
  // Antisymmetric matrix P with P[i][j] = p_ij; its nonzero columns span the
  // line.
  uint32_t m[4][4] = {};
  auto set = [&](int i, int j, uint32_t v) {
    m[i][j] = v;
    m[j][i] = f.rneg(v);
  };
  set(0, 1, p[0]);
  set(0, 2, p[1]);
  set(0, 3, p[2]);
  set(1, 2, p[3]);
  set(1, 3, f.rneg(p[4]));  // stored component is p31
  set(2, 3, p[5]);

  Coord4 cols[2];
  int found = 0;
  for (int j = 0; j < 4 && found < 2; ++j) {
    Coord4 c = {m[0][j], m[1][j], m[2][j], m[3][j]};
    if (c == Coord4{0, 0, 0, 0}) continue;
    if (found == 0) {
      cols[found++] = c;
    } else {
      std::vector<Coord4> rows{cols[0], c};
      if (rank(std::move(rows)) == 2) cols[found++] = c;
    }
  }
  if (found < 2) throw Error("line_from_plucker: rank < 2");
  ProjLine l = line_through(cols[0], cols[1]);
  if (l.plucker != normalize_plucker(p))
    throw Error("line_from_plucker: tuple mismatch");
  return l;
}

std::vector<uint32_t> Space::points_on_line(const ProjLine& l) const {
  const FieldCtx& f = *f_;
  Coord4 a = coords_of(l.span[0]), b = coords_of(l.span[1]);
  std::vector<uint32_t> pts;
  pts.reserve(q_ + 1);
  pts.push_back(index_of_normalized(b));
  for (uint32_t t = 0; t < q_; ++t) {
    Coord4 x{};
    for (int j = 0; j < 4; ++j) x[j] = f.radd(a[j], f.rmul(t, b[j]));
    pts.push_back(index_of_normalized(x));
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::vector<uint32_t> Space::planes_through_line(const ProjLine& l) const {
  const FieldCtx& f = *f_;
  std::vector<Coord4> rows{coords_of(l.span[0]), coords_of(l.span[1])};
  auto ker = kernel_basis(rows);
  if (ker.size() != 2) throw Error("planes_through_line: bad kernel");
  std::vector<uint32_t> planes;
  planes.reserve(q_ + 1);
  planes.push_back(index_of_normalized(ker[1]));
  for (uint32_t t = 0; t < q_; ++t) {
    Coord4 c{};
    for (int j = 0; j < 4; ++j) c[j] = f.radd(ker[0][j], f.rmul(t, ker[1][j]));
    planes.push_back(index_of_normalized(c));
  }
  std::sort(planes.begin(), planes.end());
  return planes;
}

bool Space::point_on_line(uint32_t point, const ProjLine& l) const {
  if (point == l.span[0] || point == l.span[1]) return true;
  // x ∧ p = 0, expanded into the four alternating incidence equations.
  const FieldCtx& f = *f_;
  Coord4 x = coords_of(point);
  const Pluck6& p = l.plucker;
  uint32_t p01 = p[0], p02 = p[1], p03 = p[2], p12 = p[3],
           p13 = f.rneg(p[4]), p23 = p[5];
  auto comb = [&](uint32_t a, uint32_t pa, uint32_t b, uint32_t pb, uint32_t c,
                  uint32_t pc) {
    return f.radd(f.rsub(f.rmul(a, pa), f.rmul(b, pb)), f.rmul(c, pc));
  };
  if (comb(x[0], p12, x[1], p02, x[2], p01) != 0) return false;
  if (comb(x[0], p13, x[1], p03, x[3], p01) != 0) return false;
  if (comb(x[0], p23, x[2], p03, x[3], p02) != 0) return false;
  return comb(x[1], p23, x[2], p13, x[3], p12) == 0;
}

bool Space::line_in_plane(const ProjLine& l, uint32_t plane) const {
  Coord4 c = coords_of(plane);
  return dot(coords_of(l.span[0]), c) == 0 && dot(coords_of(l.span[1]), c) == 0;
}

bool Space::lines_meet(const ProjLine& a, const ProjLine& b) const {
  std::vector<Coord4> rows{coords_of(a.span[0]), coords_of(a.span[1]),
                           coords_of(b.span[0]), coords_of(b.span[1])};
  return rank(std::move(rows)) <= 3;
}

uint32_t Space::mutual_invariant_raw(const Pluck6& a, const Pluck6& b) const {
  const FieldCtx& f = *f_;
  // (p01,p02,p03,p12,p31,p23) pairs with the reversed tuple.
  uint32_t s = f.rmul(a[0], b[5]);
  s = f.radd(s, f.rmul(a[1], b[4]));
  s = f.radd(s, f.rmul(a[2], b[3]));
  s = f.radd(s, f.rmul(a[3], b[2]));
  s = f.radd(s, f.rmul(a[4], b[1]));
  return f.radd(s, f.rmul(a[5], b[0]));
}

uint32_t Space::mutual_invariant(const ProjLine& a, const ProjLine& b) const {
  return mutual_invariant_raw(a.plucker, b.plucker);
}

ProjLine Space::intersect_planes(const Coord4& u, const Coord4& v) const {
  auto ker = kernel_basis({u, v});
  if (ker.size() != 2) throw Error("intersect_planes: planes coincide");
  return line_through(ker[0], ker[1]);
}

int Space::rank(std::vector<Coord4> rows) const {
  const FieldCtx& f = *f_;
  int r = 0;
  for (int col = 0; col < 4 && r < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (size_t i = r; i < rows.size(); ++i)
      if (rows[i][col] != 0) {
        pivot = static_cast<int>(i);
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[r], rows[pivot]);
    uint32_t s = f.rinv(rows[r][col]);
    for (int j = 0; j < 4; ++j) rows[r][j] = f.rmul(rows[r][j], s);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r || rows[i][col] == 0) continue;
      uint32_t c = rows[i][col];
      for (int j = 0; j < 4; ++j)
        rows[i][j] = f.rsub(rows[i][j], f.rmul(c, rows[r][j]));
    }
    ++r;
  }
  return r;
}

std::vector<Coord4> Space::kernel_basis(const std::vector<Coord4>& rows_in) const {
  const FieldCtx& f = *f_;
  std::vector<Coord4> rows = rows_in;
  int pivots[4] = {-1, -1, -1, -1};
  int r = 0;
  for (int col = 0; col < 4 && r < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (size_t i = r; i < rows.size(); ++i)
      if (rows[i][col] != 0) {
        pivot = static_cast<int>(i);
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[r], rows[pivot]);
    uint32_t s = f.rinv(rows[r][col]);
    for (int j = 0; j < 4; ++j) rows[r][j] = f.rmul(rows[r][j], s);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r || rows[i][col] == 0) continue;
      uint32_t c = rows[i][col];
      for (int j = 0; j < 4; ++j)
        rows[i][j] = f.rsub(rows[i][j], f.rmul(c, rows[r][j]));
    }
    pivots[col] = r;
    ++r;
  }
  std::vector<Coord4> basis;
  for (int freecol = 0; freecol < 4; ++freecol) {
    if (pivots[freecol] >= 0) continue;
    Coord4 v{};
    v[freecol] = 1;
    for (int col = 0; col < 4; ++col)
      if (pivots[col] >= 0) v[col] = f.rneg(rows[pivots[col]][freecol]);
    basis.push_back(v);
  }
  return basis;
}

Mat4 Space::invert(const Mat4& m) const {
  const FieldCtx& f = *f_;
  uint32_t a[4][8] = {};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) a[i][j] = m[i * 4 + j];
    a[i][4 + i] = 1;
  }
  for (int col = 0; col < 4; ++col) {
    int pivot = -1;
    for (int i = col; i < 4; ++i)
      if (a[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw SingularMatrix("invert: singular matrix");
    for (int j = 0; j < 8; ++j) std::swap(a[col][j], a[pivot][j]);
    uint32_t s = f.rinv(a[col][col]);
    for (int j = 0; j < 8; ++j) a[col][j] = f.rmul(a[col][j], s);
    for (int i = 0; i < 4; ++i) {
      if (i == col || a[i][col] == 0) continue;
      uint32_t c = a[i][col];
      for (int j = 0; j < 8; ++j)
        a[i][j] = f.rsub(a[i][j], f.rmul(c, a[col][j]));
    }
  }
  Mat4 inv{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) inv[i * 4 + j] = a[i][4 + j];
  return inv;
}

Coord4 Space::apply(const Coord4& row, const Mat4& m) const {
  const FieldCtx& f = *f_;
  Coord4 out{};
  for (int j = 0; j < 4; ++j) {
    uint32_t s = f.rmul(row[0], m[j]);
    s = f.radd(s, f.rmul(row[1], m[4 + j]));
    s = f.radd(s, f.rmul(row[2], m[8 + j]));
    out[j] = f.radd(s, f.rmul(row[3], m[12 + j]));
  }
  return out;
}

Mat4 Space::transpose(const Mat4& m) const {
  Mat4 t{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[j * 4 + i] = m[i * 4 + j];
  return t;
}

// ---- null polarity ----

NullPolarity::NullPolarity(std::shared_ptr<const Space> sp) : sp_(std::move(sp)) {
  const FieldCtx& f = sp_->field();
  if (f.xi() == 0)
    throw CharacteristicThree("null polarity undefined for q ≡ 0 (mod 3)");
  uint32_t three = f.from_int(3).idx;
  uint32_t m3 = f.rneg(three), m1 = f.rneg(1);
  // row-vector convention: x -> x A = (x3, -3 x2, 3 x1, -x0)
  a_ = Mat4{0, 0,  0,     m1,
            0, 0,  three, 0,
            0, m3, 0,     0,
            1, 0,  0,     0};
  a_inv_ = sp_->invert(a_);
}

Coord4 NullPolarity::point_to_plane(const Coord4& x) const {
  return sp_->normalize(sp_->apply(x, a_));
}

Coord4 NullPolarity::plane_to_point(const Coord4& c) const {
  return sp_->normalize(sp_->apply(c, a_inv_));
}

ProjLine NullPolarity::line_image(const ProjLine& l) const {
  Coord4 u = point_to_plane(sp_->coords_of(l.span[0]));
  Coord4 v = point_to_plane(sp_->coords_of(l.span[1]));
  return sp_->intersect_planes(u, v);
}

// ---- extension-field lines ----

ExtLine ext_line_through(const QuadExt& ext, const std::array<QuadExt::Elt, 4>& a,
                         const std::array<QuadExt::Elt, 4>& b) {
  auto pij = [&](int i, int j) {
    return ext.sub(ext.mul(a[i], b[j]), ext.mul(a[j], b[i]));
  };
  ExtLine l;
  l.plucker = {pij(0, 1), pij(0, 2), pij(0, 3), pij(1, 2), pij(3, 1), pij(2, 3)};
  return l;
}

ExtLine ext_line_of_planes(const QuadExt& ext, const std::array<QuadExt::Elt, 4>& u,
                           const std::array<QuadExt::Elt, 4>& v) {
  auto qij = [&](int i, int j) {
    return ext.sub(ext.mul(u[i], v[j]), ext.mul(u[j], v[i]));
  };
  // Dual tuple (q01,q02,q03,q12,q31,q23) reversed gives the primal tuple.
  ExtLine l;
  l.plucker = {qij(2, 3), qij(3, 1), qij(1, 2), qij(0, 3), qij(0, 2), qij(0, 1)};
  return l;
}

ExtLine ext_normalize(const QuadExt& ext, const ExtLine& l) {
  for (int i = 0; i < 6; ++i) {
    if (!ext.is_zero(l.plucker[i])) {
      ExtLine r;
      auto s = ext.inv(l.plucker[i]);
      for (int j = 0; j < 6; ++j) r.plucker[j] = ext.mul(l.plucker[j], s);
      return r;
    }
  }
  throw Error("ext_normalize: zero tuple");
}

bool ext_line_rational(const ExtLine& l) {
  for (const auto& e : l.plucker)
    if (e.b != 0) return false;
  return true;
}

Pluck6 ext_line_to_rational(const ExtLine& l) {
  if (!ext_line_rational(l)) throw Error("ext line is not rational");
  return {l.plucker[0].a, l.plucker[1].a, l.plucker[2].a,
          l.plucker[3].a, l.plucker[4].a, l.plucker[5].a};
}

}  // namespace tic
