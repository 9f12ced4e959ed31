#include "tic/twistedcubic.hpp"

#include <algorithm>
#include <string>

namespace tic {

const char* to_string(PlaneType t) {
  switch (t) {
    case PlaneType::Gamma: return "Gamma";
    case PlaneType::TwoC: return "2C";
    case PlaneType::ThreeC: return "3C";
    case PlaneType::OneCbar: return "1Cbar";
    case PlaneType::ZeroC: return "0C";
  }
  return "?";
}

const char* to_string(PointType t) {
  switch (t) {
    case PointType::C: return "C";
    case PointType::Tr: return "Tr";
    case PointType::ThreeGamma: return "3Gamma";
    case PointType::OneGamma: return "1Gamma";
    case PointType::ZeroGamma: return "0Gamma";
    case PointType::PencilAxis: return "(q+1)Gamma";
    case PointType::TO: return "TO";
    case PointType::RC: return "RC";
    case PointType::IC: return "IC";
  }
  return "?";
}

std::vector<PointType> point_types_for(int xi) {
  if (xi == 0)
    return {PointType::C, PointType::PencilAxis, PointType::TO, PointType::RC,
            PointType::IC};
  return {PointType::C, PointType::Tr, PointType::ThreeGamma,
          PointType::OneGamma, PointType::ZeroGamma};
}

CubicModel::CubicModel(std::shared_ptr<const Space> sp) : sp_(std::move(sp)) {
  if (sp_->q() < 5) throw QTooSmall("the cubic model requires q >= 5");
  build_lines();
  build_plane_types();
  build_point_types();
}

std::vector<FqPlus> CubicModel::parameters() const {
  const FieldCtx& f = sp_->field();
  std::vector<FqPlus> ts;
  ts.reserve(q() + 1);
  for (uint32_t t = 0; t < q(); ++t) ts.push_back(FqPlus::finite(f.element(t)));
  ts.push_back(FqPlus::infinity());
  return ts;
}

Coord4 CubicModel::curve_point(uint32_t tparam) const {
  const FieldCtx& f = sp_->field();
  if (tparam == q()) return {1, 0, 0, 0};
  uint32_t t = tparam;
  return {f.rmul(t, f.rmul(t, t)), f.rmul(t, t), t, 1};
}

Coord4 CubicModel::osc_plane_coords(uint32_t tparam) const {
  const FieldCtx& f = sp_->field();
  if (tparam == q()) return {0, 0, 0, 1};
  uint32_t t = tparam;
  uint32_t three = f.from_int(3).idx;
  // (1, -3t, 3t^2, -t^3)
  return {1, f.rneg(f.rmul(three, t)), f.rmul(three, f.rmul(t, t)),
          f.rneg(f.rmul(t, f.rmul(t, t)))};
}

void CubicModel::build_lines() {
  const Space& sp = *sp_;
  const FieldCtx& f = sp.field();
  const uint32_t qv = q();

  curve_points_.resize(qv + 1);
  osc_planes_.resize(qv + 1);
  tangents_.reserve(qv + 1);
  for (uint32_t t = 0; t <= qv; ++t) {
    curve_points_[t] = sp.index_of_normalized(curve_point(t));
    curve_point_set_.insert(curve_points_[t]);
    osc_planes_[t] = sp.index_of_normalized(osc_plane_coords(t));
    osc_plane_set_.insert(osc_planes_[t]);
    if (t == qv) {
      tangents_.push_back(sp.line_through({1, 0, 0, 0}, {0, 1, 0, 0}));
    } else {
      uint32_t three = f.from_int(3).idx, two = f.from_int(2).idx;
      Coord4 deriv{f.rmul(three, f.rmul(t, t)), f.rmul(two, t), 1, 0};
      tangents_.push_back(sp.line_through(curve_point(t), deriv));
    }
    tangent_keys_.insert(tangents_.back().key());
  }

  // Real chords: one per unordered pair of curve parameters.
  for (uint32_t t = 0; t <= qv; ++t)
    for (uint32_t u = t + 1; u <= qv; ++u) {
      real_chords_.push_back(
          sp.line_through(curve_point(t), curve_point(u)));
      real_chord_keys_.insert(real_chords_.back().key());
    }

  // Real axes: intersections of pairs of osculating planes.  For xi == 0 the
  // osculating planes form a pencil, so every pair meets in the same line.
  if (xi() != 0) {
    for (uint32_t t = 0; t <= qv; ++t)
      for (uint32_t u = t + 1; u <= qv; ++u) {
        real_axes_.push_back(sp.intersect_planes(osc_plane_coords(t),
                                                 osc_plane_coords(u)));
        real_axis_keys_.insert(real_axes_.back().key());
      }
  } else {
    ProjLine axis =
        sp.intersect_planes(osc_plane_coords(0), osc_plane_coords(qv));
    for (uint32_t t = 0; t <= qv; ++t)
      if (!sp.line_in_plane(axis, osc_planes_[t]))
        throw Error("pencil axis not common to all osculating planes");
    real_axes_.push_back(axis);
    real_axis_keys_.insert(axis.key());
  }

  // Imaginary chords and axes: conjugate parameter pairs {t, t^q} with
  // t in GF(q^2) \ GF(q).  The joining line (resp. plane intersection) is
  // rational even though the construction is not.
  QuadExt ext(sp.field_ptr());
  auto ext_curve_point = [&](QuadExt::Elt t) {
    std::array<QuadExt::Elt, 4> p;
    p[0] = ext.mul(t, ext.mul(t, t));
    p[1] = ext.mul(t, t);
    p[2] = t;
    p[3] = ext.embed(1);
    return p;
  };
  auto ext_osc_plane = [&](QuadExt::Elt t) {
    uint32_t three = f.from_int(3).idx;
    std::array<QuadExt::Elt, 4> c;
    c[0] = ext.embed(1);
    c[1] = ext.neg(ext.mul(ext.embed(three), t));
    c[2] = ext.mul(ext.embed(three), ext.mul(t, t));
    c[3] = ext.neg(ext.mul(t, ext.mul(t, t)));
    return c;
  };

  for (uint32_t b = 1; b < qv; ++b) {
    for (uint32_t a = 0; a < qv; ++a) {
      QuadExt::Elt t = ext.make(a, b);
      QuadExt::Elt tc = ext.conj(t);
      // visit each conjugate pair once
      if (std::make_pair(tc.a, tc.b) < std::make_pair(t.a, t.b)) continue;

      ExtLine chord = ext_normalize(
          ext, ext_line_through(ext, ext_curve_point(t), ext_curve_point(tc)));
      if (!ext_line_rational(chord))
        throw Error("imaginary chord is not rational");
      imaginary_chords_.push_back(sp.line_from_plucker(
          sp.normalize_plucker(ext_line_to_rational(chord))));
      imag_chord_keys_.insert(imaginary_chords_.back().key());

      if (xi() != 0) {
        ExtLine axis = ext_normalize(
            ext, ext_line_of_planes(ext, ext_osc_plane(t), ext_osc_plane(tc)));
        if (!ext_line_rational(axis))
          throw Error("imaginary axis is not rational");
        imaginary_axes_.push_back(sp.line_from_plucker(
            sp.normalize_plucker(ext_line_to_rational(axis))));
        imag_axis_keys_.insert(imaginary_axes_.back().key());
      }
    }
  }

  uint64_t pairs = (static_cast<uint64_t>(qv) * qv - qv) / 2;
  if (imaginary_chords_.size() != pairs || imag_chord_keys_.size() != pairs)
    throw Error("imaginary chord count mismatch");
}

void CubicModel::build_plane_types() {
  const Space& sp = *sp_;
  const uint32_t qv = q();
  plane_types_.assign(sp.num_planes(), PlaneType::ZeroC);
  std::vector<Coord4> curve_coords(qv + 1);
  for (uint32_t t = 0; t <= qv; ++t) curve_coords[t] = curve_point(t);

  for (uint32_t pl = 0; pl < sp.num_planes(); ++pl) {
    if (osc_plane_set_.count(pl)) {
      plane_types_[pl] = PlaneType::Gamma;
      continue;
    }
    Coord4 c = sp.coords_of(pl);
    int hits = 0;
    for (uint32_t t = 0; t <= qv; ++t)
      if (sp.dot(curve_coords[t], c) == 0) ++hits;
    switch (hits) {
      case 0: plane_types_[pl] = PlaneType::ZeroC; break;
      case 1: plane_types_[pl] = PlaneType::OneCbar; break;
      case 2: plane_types_[pl] = PlaneType::TwoC; break;
      case 3: plane_types_[pl] = PlaneType::ThreeC; break;
      default:
        throw InconsistentFlags("plane meets the cubic in >3 points");
    }
  }
}

void CubicModel::build_point_types() {
  const Space& sp = *sp_;
  const uint32_t qv = q();
  const uint32_t np = sp.num_points();

  std::vector<uint8_t> on_tangent(np, 0), on_real_chord(np, 0),
      on_imag_chord(np, 0);
  for (const auto& t : tangents_)
    for (uint32_t pt : sp.points_on_line(t)) on_tangent[pt] = 1;
  for (const auto& ch : real_chords_)
    for (uint32_t pt : sp.points_on_line(ch)) on_real_chord[pt] = 1;
  for (const auto& ch : imaginary_chords_)
    for (uint32_t pt : sp.points_on_line(ch)) on_imag_chord[pt] = 1;

  std::vector<uint8_t> osc_count(np, 0);
  for (uint32_t t = 0; t <= qv; ++t) {
    Coord4 c = sp.coords_of(osc_planes_[t]);
    for (uint32_t pt = 0; pt < np; ++pt)
      if (sp.dot(sp.coords_of(pt), c) == 0) ++osc_count[pt];
  }

  point_types_.assign(np, PointType::C);
  for (uint32_t pt = 0; pt < np; ++pt) {
    if (curve_point_set_.count(pt)) {
      point_types_[pt] = PointType::C;
      continue;
    }
    if (xi() != 0) {
      if (on_tangent[pt]) {
        point_types_[pt] = PointType::Tr;
        continue;
      }
      switch (osc_count[pt]) {
        case 3: point_types_[pt] = PointType::ThreeGamma; break;
        case 1: point_types_[pt] = PointType::OneGamma; break;
        case 0: point_types_[pt] = PointType::ZeroGamma; break;
        default:
          throw InconsistentFlags(
              "off-tangent point on " + std::to_string(osc_count[pt]) +
              " osculating planes");
      }
    } else {
      if (osc_count[pt] == qv + 1) {
        point_types_[pt] = PointType::PencilAxis;
      } else if (on_tangent[pt]) {
        point_types_[pt] = PointType::TO;
      } else if (on_real_chord[pt]) {
        point_types_[pt] = PointType::RC;
      } else if (on_imag_chord[pt]) {
        point_types_[pt] = PointType::IC;
      } else {
        throw InconsistentFlags("point in no class for xi = 0");
      }
    }
  }
}

LineFlags CubicModel::classify_line(const ProjLine& l) const {
  const Space& sp = *sp_;
  LineFlags flags;
  uint64_t k = l.key();
  flags.tangent = tangent_keys_.count(k) != 0;
  flags.real_chord = real_chord_keys_.count(k) != 0;
  flags.imaginary_chord = imag_chord_keys_.count(k) != 0;
  flags.real_axis = real_axis_keys_.count(k) != 0;
  flags.imaginary_axis = imag_axis_keys_.count(k) != 0;
  for (uint32_t pt : sp.points_on_line(l))
    if (curve_point_set_.count(pt)) {
      flags.meets_curve = true;
      break;
    }
  for (uint32_t t = 0; t <= q() && !flags.in_osc_plane; ++t)
    if (sp.line_in_plane(l, osc_planes_[t])) flags.in_osc_plane = true;
  return flags;
}

uint32_t CubicModel::osc_planes_through(uint32_t point_index) const {
  const Space& sp = *sp_;
  Coord4 x = sp.coords_of(point_index);
  uint32_t n = 0;
  for (uint32_t t = 0; t <= q(); ++t)
    if (sp.dot(x, sp.coords_of(osc_planes_[t])) == 0) ++n;
  return n;
}

uint64_t CubicModel::expected_plane_class_size(PlaneType t, uint32_t q) {
  uint64_t qq = q;
  uint64_t cube = qq * qq * qq - qq;
  switch (t) {
    case PlaneType::Gamma: return qq + 1;
    case PlaneType::TwoC: return qq * qq + qq;
    case PlaneType::ThreeC: return cube / 6;
    case PlaneType::OneCbar: return cube / 2;
    case PlaneType::ZeroC: return cube / 3;
  }
  return 0;
}

uint64_t CubicModel::expected_point_class_size(PointType t, uint32_t q, int xi) {
  uint64_t qq = q;
  uint64_t cube = qq * qq * qq - qq;
  if (xi != 0) {
    switch (t) {
      case PointType::C: return qq + 1;
      case PointType::Tr: return qq * qq + qq;
      case PointType::ThreeGamma: return cube / 6;
      case PointType::OneGamma: return cube / 2;
      case PointType::ZeroGamma: return cube / 3;
      default: return 0;
    }
  }
  switch (t) {
    case PointType::C: return qq + 1;
    case PointType::PencilAxis: return qq + 1;
    case PointType::TO: return qq * qq - 1;
    case PointType::RC: return cube / 2;
    case PointType::IC: return cube / 2;
    default: return 0;
  }
}

CubicModel::LineClassCensus CubicModel::full_line_census() const {
  const Space& sp = *sp_;
  struct PluckHash {
    size_t operator()(const Pluck6& p) const {
      uint64_t h = 0x9e3779b97f4a7c15ULL;
      for (uint32_t v : p) h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      return static_cast<size_t>(h);
    }
  };
  std::unordered_set<Pluck6, PluckHash> seen;
  seen.reserve(sp.num_lines());
  LineClassCensus census;
  for (uint32_t i = 0; i < sp.num_points(); ++i) {
    Coord4 a = sp.coords_of(i);
    for (uint32_t j = i + 1; j < sp.num_points(); ++j) {
      Coord4 b = sp.coords_of(j);
      Pluck6 plu = sp.normalize_plucker(sp.plucker_of(a, b));
      if (!seen.insert(plu).second) continue;
      LineFlags fl = classify_line(sp.line_through(a, b));
      census.total++;
      census.tangents += fl.tangent;
      census.real_chords += fl.real_chord;
      census.imaginary_chords += fl.imaginary_chord;
      census.real_axes += fl.real_axis;
      census.imaginary_axes += fl.imaginary_axis;
      census.eng += fl.eng();
    }
  }
  return census;
}

std::vector<CubicModel::Pencil> CubicModel::tangent_pencils() const {
  const Space& sp = *sp_;
  std::vector<Pencil> pencils;
  std::unordered_set<uint32_t> seen;
  for (uint32_t t = 0; t <= q(); ++t) {
    Pencil p;
    p.tangent_param = t;
    p.gamma_plane = UINT32_MAX;
    for (uint32_t pl : sp.planes_through_line(tangents_[t])) {
      PlaneType ty = plane_types_[pl];
      if (ty == PlaneType::Gamma) {
        if (p.gamma_plane != UINT32_MAX)
          throw Error("pencil has two Gamma-planes");
        p.gamma_plane = pl;
      } else if (ty == PlaneType::TwoC) {
        p.twoc_planes.push_back(pl);
      } else {
        throw Error("pencil plane is neither Gamma nor 2C");
      }
      if (!seen.insert(pl).second) throw Error("pencils overlap");
    }
    if (p.gamma_plane == UINT32_MAX || p.twoc_planes.size() != q())
      throw Error("pencil composition is not 1 Gamma + q 2C");
    pencils.push_back(std::move(p));
  }
  if (seen.size() !=
      expected_plane_class_size(PlaneType::Gamma, q()) +
          expected_plane_class_size(PlaneType::TwoC, q()))
    throw Error("pencils do not cover all Gamma- and 2C-planes");
  return pencils;
}

}  // namespace tic
