#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <unordered_set>
#include <vector>

#include "tic/pg3.hpp"

namespace tic {

// Plane classes under the stabilizer of the cubic: osculating planes (Gamma),
// planes meeting the cubic in exactly 2 or 3 points, non-osculating
// unisecant planes (1Cbar), external planes (0C).
enum class PlaneType : uint8_t { Gamma, TwoC, ThreeC, OneCbar, ZeroC };
inline constexpr int kNumPlaneTypes = 5;

// Point classes.  For q not divisible by 3: on the cubic, on a tangent (Tr),
// or on exactly 3/1/0 osculating planes.  For q divisible by 3: on the
// cubic, on the axis of the pencil of osculating planes ((q+1)Gamma), on a
// tangent (TO), on a real chord, on an imaginary chord.
enum class PointType : uint8_t {
  C,
  Tr,
  ThreeGamma,
  OneGamma,
  ZeroGamma,
  PencilAxis,
  TO,
  RC,
  IC
};
inline constexpr int kNumPointTypes = 9;

const char* to_string(PlaneType t);
const char* to_string(PointType t);

// The point types that partition PG(3,q) for the given xi, in table order.
std::vector<PointType> point_types_for(int xi);

struct LineFlags {
  bool meets_curve = false;
  bool tangent = false;
  bool real_chord = false;
  bool imaginary_chord = false;
  bool real_axis = false;
  bool imaginary_axis = false;
  bool in_osc_plane = false;

  // External, not in an osculating plane, neither a chord nor an axis.
  bool eng() const {
    return !(meets_curve || tangent || real_chord || imaginary_chord ||
             real_axis || imaginary_axis || in_osc_plane);
  }
};

// The twisted cubic {P(t^3,t^2,t,1)} ∪ {P(1,0,0,0)} with its tangents,
// osculating planes, chords and axes, plus full point/plane type tables.
// Built once, immutable afterwards; classification lookups are pure.
class CubicModel {
 public:
  explicit CubicModel(std::shared_ptr<const Space> sp);  // QTooSmall if q < 5

  const Space& space() const { return *sp_; }
  std::shared_ptr<const Space> space_ptr() const { return sp_; }
  uint32_t q() const { return sp_->q(); }
  int xi() const { return sp_->field().xi(); }

  // Curve parameters run over F_q ∪ {∞}.  The dense accessors index the
  // parameter list 0..q (the last slot being the point at infinity); the
  // FqPlus overloads take the parameter as a value.
  uint32_t param_count() const { return q() + 1; }
  uint32_t param_index(FqPlus t) const {
    return t.is_infinity() ? q() : t.value().idx;
  }
  std::vector<FqPlus> parameters() const;
  Coord4 curve_point(uint32_t tparam) const;
  Coord4 curve_point(FqPlus t) const { return curve_point(param_index(t)); }
  uint32_t curve_point_index(uint32_t tparam) const {
    return curve_points_[tparam];
  }
  const ProjLine& tangent(uint32_t tparam) const { return tangents_[tparam]; }
  const ProjLine& tangent(FqPlus t) const { return tangents_[param_index(t)]; }
  Coord4 osc_plane_coords(uint32_t tparam) const;
  Coord4 osc_plane_coords(FqPlus t) const {
    return osc_plane_coords(param_index(t));
  }
  uint32_t osc_plane_index(uint32_t tparam) const { return osc_planes_[tparam]; }

  const std::vector<ProjLine>& real_chords() const { return real_chords_; }
  const std::vector<ProjLine>& imaginary_chords() const {
    return imaginary_chords_;
  }
  const std::vector<ProjLine>& real_axes() const { return real_axes_; }
  const std::vector<ProjLine>& imaginary_axes() const {
    return imaginary_axes_;
  }

  bool on_curve(uint32_t point_index) const {
    return curve_point_set_.count(point_index) != 0;
  }

  PlaneType plane_type(uint32_t plane_index) const {
    return plane_types_[plane_index];
  }
  PointType point_type(uint32_t point_index) const {
    return point_types_[point_index];
  }
  const std::vector<PlaneType>& plane_types() const { return plane_types_; }
  const std::vector<PointType>& point_types() const { return point_types_; }

  LineFlags classify_line(const ProjLine& l) const;
  bool is_eng(const ProjLine& l) const { return classify_line(l).eng(); }

  // Number of osculating planes through the point (recomputed on demand).
  uint32_t osc_planes_through(uint32_t point_index) const;

  // Closed-form class sizes.
  static uint64_t expected_plane_class_size(PlaneType t, uint32_t q);
  static uint64_t expected_point_class_size(PointType t, uint32_t q, int xi);
  static uint64_t expected_eng_line_count(uint32_t q) {
    uint64_t qq = q;
    return (qq * qq - qq) * (qq * qq - 1);
  }

  struct Pencil {
    uint32_t tangent_param;
    uint32_t gamma_plane;
    std::vector<uint32_t> twoc_planes;
  };
  // Partition of the Gamma- and 2C-planes into q+1 pencils, one per tangent.
  std::vector<Pencil> tangent_pencils() const;

  struct LineClassCensus {
    uint64_t total = 0;
    uint64_t tangents = 0;
    uint64_t real_chords = 0;
    uint64_t imaginary_chords = 0;
    uint64_t real_axes = 0;
    uint64_t imaginary_axes = 0;
    uint64_t eng = 0;
  };
  // Exhaustive scan over all lines of the space.
  LineClassCensus full_line_census() const;

 private:
  void build_lines();
  void build_plane_types();
  void build_point_types();

  std::shared_ptr<const Space> sp_;
  std::vector<uint32_t> curve_points_;  // point indices, by parameter
  std::vector<ProjLine> tangents_;
  std::vector<uint32_t> osc_planes_;  // plane indices, by parameter
  std::vector<ProjLine> real_chords_, imaginary_chords_;
  std::vector<ProjLine> real_axes_, imaginary_axes_;

  std::unordered_set<uint32_t> curve_point_set_;
  std::unordered_set<uint32_t> osc_plane_set_;
  std::unordered_set<uint64_t, LineKeyHash> tangent_keys_, real_chord_keys_,
      imag_chord_keys_, real_axis_keys_, imag_axis_keys_;

  std::vector<PlaneType> plane_types_;
  std::vector<PointType> point_types_;
};

}  // namespace tic
