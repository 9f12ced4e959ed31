#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "tic/gf.hpp"

namespace tic {

// Raw homogeneous coordinate tuples (Fq indices; context implied by the
// owning Space).
using Coord4 = std::array<uint32_t, 4>;
// Line coordinates in the order (p01, p02, p03, p12, p31, p23) with
// pij = a_i b_j - a_j b_i.  This ordering and sign convention is frozen by
// the tangent-tuple and mutual-invariant unit tests.
using Pluck6 = std::array<uint32_t, 6>;

// 4x4 matrix over Fq, row major, acting on row vectors from the right.
using Mat4 = std::array<uint32_t, 16>;

// A line of PG(3,q), canonically identified by its two lexicographically
// smallest points (dense point indices) and carrying the normalized Plücker
// tuple.
struct ProjLine {
  Pluck6 plucker{};
  std::array<uint32_t, 2> span{};  // point indices, span[0] < span[1]

  uint64_t key() const {
    return (static_cast<uint64_t>(span[0]) << 32) | span[1];
  }
  friend bool operator==(const ProjLine& a, const ProjLine& b) {
    return a.span == b.span;
  }
};

struct LineKeyHash {
  size_t operator()(uint64_t k) const {
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    return static_cast<size_t>(k);
  }
};

// PG(3,q) with dense indexing of points and planes.  Immutable; shareable
// across threads.
class Space {
 public:
  explicit Space(std::shared_ptr<const FieldCtx> f);

  const FieldCtx& field() const { return *f_; }
  std::shared_ptr<const FieldCtx> field_ptr() const { return f_; }
  uint32_t q() const { return q_; }
  uint32_t num_points() const { return n_points_; }
  uint32_t num_planes() const { return n_points_; }
  uint64_t num_lines() const {
    uint64_t q2 = static_cast<uint64_t>(q_) * q_;
    return (q2 + 1) * (q2 + q_ + 1);
  }

  // First nonzero coordinate scaled to 1.  Throws on the zero tuple.
  Coord4 normalize(const Coord4& c) const;
  uint32_t index_of(const Coord4& normalized) const;
  Coord4 coords_of(uint32_t index) const;
  uint32_t index_of_normalized(const Coord4& any) const {
    return index_of(normalize(any));
  }

  uint32_t dot(const Coord4& x, const Coord4& c) const {
    const FieldCtx& f = *f_;
    uint32_t s = f.rmul(x[0], c[0]);
    s = f.radd(s, f.rmul(x[1], c[1]));
    s = f.radd(s, f.rmul(x[2], c[2]));
    return f.radd(s, f.rmul(x[3], c[3]));
  }

  // Plücker tuple of the line through two (distinct) points; not normalized.
  Pluck6 plucker_of(const Coord4& a, const Coord4& b) const;
  Pluck6 normalize_plucker(const Pluck6& p) const;

  ProjLine line_through(const Coord4& a, const Coord4& b) const;
  ProjLine line_through_indices(uint32_t a, uint32_t b) const {
    return line_through(coords_of(a), coords_of(b));
  }
  // Rebuilds the line from a (rational, normalized) Plücker tuple.
  ProjLine line_from_plucker(const Pluck6& p) const;

  // All q+1 point indices on the line, ascending.
  std::vector<uint32_t> points_on_line(const ProjLine& l) const;
  // All q+1 plane indices through the line, ascending.
  std::vector<uint32_t> planes_through_line(const ProjLine& l) const;

  bool point_on_plane(uint32_t point, uint32_t plane) const {
    return dot(coords_of(point), coords_of(plane)) == 0;
  }
  bool point_on_line(uint32_t point, const ProjLine& l) const;
  bool line_in_plane(const ProjLine& l, uint32_t plane) const;
  // Geometric meet test: rank of the 4x4 span matrix is <= 3.
  bool lines_meet(const ProjLine& a, const ProjLine& b) const;
  // Bilinear pairing of the stored Plücker tuples; zero iff the lines meet.
  // Defined up to a global nonzero scalar on normalized tuples.
  uint32_t mutual_invariant(const ProjLine& a, const ProjLine& b) const;
  uint32_t mutual_invariant_raw(const Pluck6& a, const Pluck6& b) const;

  ProjLine intersect_planes(const Coord4& u, const Coord4& v) const;

  // Small dense linear algebra over the field.
  int rank(std::vector<Coord4> rows) const;
  std::vector<Coord4> kernel_basis(const std::vector<Coord4>& rows) const;
  Mat4 invert(const Mat4& m) const;  // throws SingularMatrix
  Coord4 apply(const Coord4& row, const Mat4& m) const;
  Mat4 transpose(const Mat4& m) const;

 private:
  std::shared_ptr<const FieldCtx> f_;
  uint32_t q_ = 0;
  uint32_t n_points_ = 0;
};

// Null polarity A for q not divisible by 3: the antisymmetric correlation
// P(x0,x1,x2,x3) -> plane(x3, -3x2, 3x1, -x0).  An involution on points,
// planes, and lines; all three maps throw CharacteristicThree when xi == 0.
class NullPolarity {
 public:
  explicit NullPolarity(std::shared_ptr<const Space> sp);

  Coord4 point_to_plane(const Coord4& x) const;
  Coord4 plane_to_point(const Coord4& c) const;
  ProjLine line_image(const ProjLine& l) const;

 private:
  std::shared_ptr<const Space> sp_;
  Mat4 a_{};      // the correlation matrix
  Mat4 a_inv_{};
};

// Line over GF(q^2), kept only as long as needed to test rationality of
// chords and axes of the extended cubic.
struct ExtLine {
  std::array<QuadExt::Elt, 6> plucker{};
};

ExtLine ext_line_through(const QuadExt& ext, const std::array<QuadExt::Elt, 4>& a,
                         const std::array<QuadExt::Elt, 4>& b);
ExtLine ext_line_of_planes(const QuadExt& ext, const std::array<QuadExt::Elt, 4>& u,
                           const std::array<QuadExt::Elt, 4>& v);
ExtLine ext_normalize(const QuadExt& ext, const ExtLine& l);
bool ext_line_rational(const ExtLine& normalized);
Pluck6 ext_line_to_rational(const ExtLine& normalized);

}  // namespace tic
