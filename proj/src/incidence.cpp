#include "tic/incidence.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace tic {

namespace {

constexpr PointType kPointCols[] = {PointType::Tr, PointType::ThreeGamma,
                                    PointType::OneGamma, PointType::ZeroGamma};
constexpr PlaneType kPlaneCols[] = {PlaneType::TwoC, PlaneType::ThreeC,
                                    PlaneType::OneCbar, PlaneType::ZeroC};

std::vector<size_t> sample_indices(size_t n, size_t want) {
  std::vector<size_t> idx;
  if (n <= want) {
    idx.resize(n);
    for (size_t i = 0; i < n; ++i) idx[i] = i;
    return idx;
  }
  idx.reserve(want);
  for (size_t i = 0; i < want; ++i) idx.push_back(i * n / want);
  return idx;
}

}  // namespace

bool same_counts(const IncidenceProfile& a, const IncidenceProfile& b) {
  return a.orbit_size == b.orbit_size &&
         a.planes_per_line == b.planes_per_line &&
         a.lines_per_plane == b.lines_per_plane &&
         a.points_per_line == b.points_per_line &&
         a.lines_per_point == b.lines_per_point;
}

int64_t exact_div(int64_t num, int64_t den) {
  if (den == 0 || num % den != 0)
    throw Error("non-integer table entry: " + std::to_string(num) + "/" +
                std::to_string(den));
  return num / den;
}

LineCensus census_of_line(const CubicModel& m, const ProjLine& l) {
  const Space& sp = m.space();
  LineCensus c;
  for (uint32_t pl : sp.planes_through_line(l))
    c.planes[static_cast<int>(m.plane_type(pl))]++;
  for (uint32_t pt : sp.points_on_line(l))
    c.points[static_cast<int>(m.point_type(pt))]++;
  return c;
}

IncidenceProfile profile_by_enumeration(const Orbit& orbit,
                                        const CubicModel& m, unsigned jobs) {
  (void)jobs;
  const Space& sp = m.space();
  const FieldCtx& f = sp.field();
  const uint32_t q = sp.q();

  IncidenceProfile prof;
  prof.label = orbit.label;
  prof.mu = orbit.mu;
  prof.q = q;
  prof.xi = f.xi();
  prof.orbit_size = orbit.size();
  prof.source = IncidenceProfile::Source::Enumerated;

  LineCensus rep = census_of_line(m, orbit.members.front());
  size_t want = q <= 9 ? orbit.members.size() : 25;
  for (size_t i : sample_indices(orbit.members.size(), want)) {
    LineCensus c = census_of_line(m, orbit.members[i]);
    if (c.planes != rep.planes || c.points != rep.points)
      throw NonConstantProfile("line census varies inside one orbit");
  }
  prof.planes_per_line = rep.planes;
  prof.points_per_line = rep.points;

  // Representative object of each class, by smallest index.
  std::array<int64_t, kNumPlaneTypes> plane_rep;
  plane_rep.fill(-1);
  const auto& ptypes = m.plane_types();
  for (uint32_t pl = 0; pl < ptypes.size(); ++pl) {
    int t = static_cast<int>(ptypes[pl]);
    if (plane_rep[t] < 0) plane_rep[t] = pl;
  }
  for (int t = 0; t < kNumPlaneTypes; ++t) {
    if (plane_rep[t] < 0) throw Error("plane class is empty");
    int64_t direct = 0;
    for (const auto& l : orbit.members)
      if (sp.line_in_plane(l, static_cast<uint32_t>(plane_rep[t]))) ++direct;
    int64_t via_count = exact_div(
        prof.planes_per_line[t] * static_cast<int64_t>(orbit.size()),
        static_cast<int64_t>(CubicModel::expected_plane_class_size(
            static_cast<PlaneType>(t), q)));
    if (direct != via_count)
      throw Error("lines-per-plane direct count disagrees with the identity");
    prof.lines_per_plane[t] = direct;
  }

  std::array<int64_t, kNumPointTypes> point_rep;
  point_rep.fill(-1);
  const auto& pttypes = m.point_types();
  for (uint32_t pt = 0; pt < pttypes.size(); ++pt) {
    int t = static_cast<int>(pttypes[pt]);
    if (point_rep[t] < 0) point_rep[t] = pt;
  }
  for (PointType ty : point_types_for(prof.xi)) {
    int t = static_cast<int>(ty);
    if (point_rep[t] < 0) throw Error("point class is empty");
    int64_t direct = 0;
    for (const auto& l : orbit.members)
      if (sp.point_on_line(static_cast<uint32_t>(point_rep[t]), l)) ++direct;
    int64_t via_count = exact_div(
        prof.points_per_line[t] * static_cast<int64_t>(orbit.size()),
        static_cast<int64_t>(
            CubicModel::expected_point_class_size(ty, q, prof.xi)));
    if (direct != via_count)
      throw Error("lines-per-point direct count disagrees with the identity");
    prof.lines_per_point[t] = direct;
  }

  if (orbit.label == OrbitLabel::Mu) {
    int64_t meets = 0;
    for (uint32_t t = 0; t <= q; ++t)
      if (sp.lines_meet(orbit.members.front(), m.tangent(t))) ++meets;
    prof.tangent_meets = meets;
    if (!f.even()) {
      prof.eta_mu = f.quadratic_character(f.element(*orbit.mu));
      if (f.xi() != 0 && prof.eta_mu == 1)
        prof.exceptional = mu_orbit_exceptional(f, *orbit.mu);
    }
  }
  return prof;
}

IncidenceProfile profile_by_formulas(const FieldCtx& f, OrbitLabel label,
                                     std::optional<uint32_t> mu) {
  const int64_t q = f.order();
  IncidenceProfile prof;
  prof.label = label;
  prof.mu = mu;
  prof.q = f.order();
  prof.xi = f.xi();
  prof.source = IncidenceProfile::Source::ClosedForm;
  prof.orbit_size = predicted_orbit_size(f, label, mu);

  auto fill_lambdas = [&]() {
    for (int t = 0; t < kNumPlaneTypes; ++t) {
      uint64_t cls = CubicModel::expected_plane_class_size(
          static_cast<PlaneType>(t), prof.q);
      prof.lines_per_plane[t] =
          exact_div(prof.planes_per_line[t] * static_cast<int64_t>(prof.orbit_size),
                    static_cast<int64_t>(cls));
    }
    for (PointType ty : point_types_for(prof.xi)) {
      int t = static_cast<int>(ty);
      uint64_t cls = CubicModel::expected_point_class_size(ty, prof.q, prof.xi);
      prof.lines_per_point[t] =
          exact_div(prof.points_per_line[t] * static_cast<int64_t>(prof.orbit_size),
                    static_cast<int64_t>(cls));
    }
  };

  if (label == OrbitLabel::SpecialL) {
    if (f.xi() == 0)
      throw UnsupportedCase("no closed profile for the special orbit, xi = 0");
    int64_t p_tr, p_one;
    if (f.even()) {
      p_tr = 1;
      p_one = (f.degree() % 2 == 0) ? trace_one_cube_count(f).closed : q / 2;
    } else if (f.xi() == -1) {
      p_tr = 2;
      p_one = (q - 1) / 2;
    } else {
      p_tr = f.is_cube(f.from_int(2)) ? 4 : 1;
      p_one = irreducible_hessian_count(f);
    }
    int64_t p_three = exact_div(q + 1 - p_one - 2 * p_tr, 3);
    int64_t p_zero = p_tr + 2 * p_three;
    const int64_t pts[4] = {p_tr, p_three, p_one, p_zero};
    for (int i = 0; i < 4; ++i) {
      prof.points_per_line[static_cast<int>(kPointCols[i])] = pts[i];
      prof.planes_per_line[static_cast<int>(kPlaneCols[i])] = pts[i];
    }
    fill_lambdas();
    return prof;
  }

  if (!mu) throw MuOutOfDomain("mu-profile needs a mu value");
  int64_t n = tangent_meet_count(f, *mu);
  int64_t nc = single_root_c_count(f, *mu).oracle;
  prof.tangent_meets = n;

  if (f.even()) {
    int64_t ng = single_root_gamma_count(f, *mu).oracle;
    if (n != 2) throw Error("even q: the mu-line must meet exactly 2 tangents");
    const int64_t pts[4] = {2, exact_div(q - 3 - ng, 3), ng,
                            exact_div(2 * (q - ng), 3)};
    const int64_t pls[4] = {2, exact_div(q - 3 - nc, 3), nc,
                            exact_div(2 * (q - nc), 3)};
    for (int i = 0; i < 4; ++i) {
      prof.points_per_line[static_cast<int>(kPointCols[i])] = pts[i];
      prof.planes_per_line[static_cast<int>(kPlaneCols[i])] = pls[i];
    }
    fill_lambdas();
    return prof;
  }

  prof.eta_mu = f.quadratic_character(f.element(*mu));

  if (f.xi() != 0) {
    int64_t ng = single_root_gamma_count(f, *mu).oracle;
    if (prof.eta_mu == 1) prof.exceptional = mu_orbit_exceptional(f, *mu);
    int64_t a = q - 2 * n - ng;
    int64_t at = q - 2 * n - nc;
    int64_t pts[4], pls[4];
    pts[0] = n;
    pls[0] = n;
    if (f.xi() == -1) {
      pts[1] = exact_div(a, 3);
      pts[2] = ng + 1;
    } else {
      pts[1] = exact_div(a + 1, 3);
      pts[2] = ng;
    }
    if (prof.eta_mu == 1) {
      pls[1] = exact_div(at + 1, 3);
      pls[2] = nc;
    } else {
      pls[1] = exact_div(at, 3);
      pls[2] = nc + 1;
    }
    // last columns from the external-plane/-point identities
    pts[3] = pts[0] + 2 * pts[1];
    pls[3] = pls[0] + 2 * pls[1];
    for (int i = 0; i < 4; ++i) {
      prof.points_per_line[static_cast<int>(kPointCols[i])] = pts[i];
      prof.planes_per_line[static_cast<int>(kPlaneCols[i])] = pls[i];
    }
    fill_lambdas();
    return prof;
  }

  // q divisible by 3: point side runs over tangent/real-chord/imaginary-chord
  // points, the plane side over the same columns as above.
  prof.points_per_line[static_cast<int>(PointType::TO)] = n;
  if (prof.eta_mu == -1) {
    prof.points_per_line[static_cast<int>(PointType::RC)] = q - n - nc;
    prof.points_per_line[static_cast<int>(PointType::IC)] = nc + 1;
  } else {
    prof.points_per_line[static_cast<int>(PointType::RC)] = q + 1 - n - nc;
    prof.points_per_line[static_cast<int>(PointType::IC)] = nc;
  }
  int64_t at = q - 2 * n - nc;
  int64_t pls[4];
  pls[0] = n;
  if (prof.eta_mu == 1) {
    pls[1] = exact_div(at + 1, 3);
    pls[2] = nc;
  } else {
    pls[1] = exact_div(at, 3);
    pls[2] = nc + 1;
  }
  pls[3] = pls[0] + 2 * pls[1];
  for (int i = 0; i < 4; ++i)
    prof.planes_per_line[static_cast<int>(kPlaneCols[i])] = pls[i];
  fill_lambdas();
  return prof;
}

RelationReport verify_counting_relations(const IncidenceProfile& p) {
  RelationReport rep;
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) rep.failures.push_back(what);
  };
  const int64_t q = p.q;

  for (int t = 0; t < kNumPlaneTypes; ++t)
    expect(p.planes_per_line[t] >= 0 && p.lines_per_plane[t] >= 0,
           "plane-side entries must be nonnegative");
  for (int t = 0; t < kNumPointTypes; ++t)
    expect(p.points_per_line[t] >= 0 && p.lines_per_point[t] >= 0,
           "point-side entries must be nonnegative");

  int64_t plane_sum = 0;
  for (int t = 0; t < kNumPlaneTypes; ++t) plane_sum += p.planes_per_line[t];
  expect(plane_sum == q + 1, "planes through a line must total q+1");
  expect(p.pi(PlaneType::Gamma) == 0, "Pi_Gamma must vanish");
  expect(p.lambda(PlaneType::Gamma) == 0, "Lambda_Gamma must vanish");
  expect(p.pi(PlaneType::OneCbar) + 2 * p.pi(PlaneType::TwoC) +
                 3 * p.pi(PlaneType::ThreeC) ==
             q + 1,
         "plane-side weighted sum must be q+1");
  expect(p.pi(PlaneType::ZeroC) ==
             p.pi(PlaneType::TwoC) + 2 * p.pi(PlaneType::ThreeC),
         "external-plane count identity");

  int64_t point_sum = 0;
  for (int t = 0; t < kNumPointTypes; ++t) point_sum += p.points_per_line[t];
  expect(point_sum == q + 1, "points on a line must total q+1");
  expect(p.pbar(PointType::C) == 0, "Pbar_C must vanish");
  expect(p.lbar(PointType::C) == 0, "Lbar_C must vanish");

  if (p.xi != 0) {
    expect(p.pbar(PointType::OneGamma) + 2 * p.pbar(PointType::Tr) +
                   3 * p.pbar(PointType::ThreeGamma) ==
               q + 1,
           "point-side weighted sum must be q+1");
    expect(p.pbar(PointType::ZeroGamma) ==
               p.pbar(PointType::Tr) + 2 * p.pbar(PointType::ThreeGamma),
           "zero-plane point count identity");
    expect(p.pbar(PointType::Tr) == p.pi(PlaneType::TwoC),
           "tangent points equal 2C-planes");
  } else {
    expect(p.pbar(PointType::PencilAxis) == 0,
           "no pencil-axis points on an external line");
    expect(p.pbar(PointType::TO) == p.pi(PlaneType::TwoC),
           "tangent points equal 2C-planes (xi = 0)");
    expect(p.pi(PlaneType::OneCbar) == p.pbar(PointType::IC),
           "unisecant planes equal imaginary-chord points (xi = 0)");
  }

  // double counting on both sides
  for (int t = 0; t < kNumPlaneTypes; ++t) {
    uint64_t cls = CubicModel::expected_plane_class_size(
        static_cast<PlaneType>(t), p.q);
    expect(p.lines_per_plane[t] * static_cast<int64_t>(cls) ==
               p.planes_per_line[t] * static_cast<int64_t>(p.orbit_size),
           "plane-side double counting");
  }
  for (PointType ty : point_types_for(p.xi)) {
    int t = static_cast<int>(ty);
    uint64_t cls = CubicModel::expected_point_class_size(ty, p.q, p.xi);
    expect(p.lines_per_point[t] * static_cast<int64_t>(cls) ==
               p.points_per_line[t] * static_cast<int64_t>(p.orbit_size),
           "point-side double counting");
  }

  if (p.label == OrbitLabel::SpecialL && p.xi != 0) {
    for (int i = 0; i < 4; ++i) {
      expect(p.points_per_line[static_cast<int>(kPointCols[i])] ==
                 p.planes_per_line[static_cast<int>(kPlaneCols[i])],
             "special orbit: point side must mirror the plane side");
      expect(p.lines_per_point[static_cast<int>(kPointCols[i])] ==
                 p.lines_per_plane[static_cast<int>(kPlaneCols[i])],
             "special orbit: line counts must mirror");
    }
  }

  if (p.label == OrbitLabel::Mu && p.tangent_meets >= 0) {
    PointType tp = p.xi == 0 ? PointType::TO : PointType::Tr;
    expect(p.pbar(tp) == p.tangent_meets,
           "tangent-point count equals the tangent meet count");
  }
  return rep;
}

RelationReport verify_polarity_duality(const Orbit& orbit, const CubicModel& m,
                                       size_t samples) {
  const Space& sp = m.space();
  if (sp.field().xi() == 0)
    throw CharacteristicThree("polarity duality needs q not divisible by 3");
  NullPolarity pol(m.space_ptr());

  RelationReport rep;
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) rep.failures.push_back(what);
  };
  const int64_t q = sp.q();

  for (size_t i : sample_indices(orbit.members.size(), samples)) {
    const ProjLine& l = orbit.members[i];
    ProjLine img = pol.line_image(l);
    LineCensus cl = census_of_line(m, l);
    LineCensus ci = census_of_line(m, img);

    auto pi_of = [](const LineCensus& c, PlaneType t) {
      return c.planes[static_cast<int>(t)];
    };
    auto pbar_of = [](const LineCensus& c, PointType t) {
      return c.points[static_cast<int>(t)];
    };
    expect(pi_of(ci, PlaneType::TwoC) == pbar_of(cl, PointType::Tr),
           "dual 2C-plane count");
    expect(pi_of(ci, PlaneType::ThreeC) == pbar_of(cl, PointType::ThreeGamma),
           "dual 3C-plane count");
    expect(pi_of(ci, PlaneType::OneCbar) == pbar_of(cl, PointType::OneGamma),
           "dual unisecant-plane count");
    expect(pi_of(ci, PlaneType::ZeroC) == pbar_of(cl, PointType::ZeroGamma),
           "dual external-plane count");

    for (const LineCensus* c : {&cl, &ci}) {
      expect(pi_of(*c, PlaneType::OneCbar) + 2 * pi_of(*c, PlaneType::TwoC) +
                     3 * pi_of(*c, PlaneType::ThreeC) ==
                 q + 1,
             "plane-side sum on a sampled line");
      expect(pbar_of(*c, PointType::OneGamma) +
                     2 * pbar_of(*c, PointType::Tr) +
                     3 * pbar_of(*c, PointType::ThreeGamma) ==
                 q + 1,
             "point-side sum on a sampled line");
    }
  }
  return rep;
}

namespace {

SubmatrixReport check_buckets(
    uint64_t class_size, uint64_t orbit_size,
    const std::vector<std::vector<uint32_t>>& incident_objects,
    const std::vector<uint32_t>& class_objects) {
  SubmatrixReport rep;
  rep.config.v = class_size;
  rep.config.b = orbit_size;

  rep.degrees_constant = true;
  int64_t k = static_cast<int64_t>(incident_objects.front().size());
  std::unordered_map<uint32_t, std::vector<uint32_t>> buckets;
  for (uint32_t li = 0; li < incident_objects.size(); ++li) {
    if (static_cast<int64_t>(incident_objects[li].size()) != k)
      rep.degrees_constant = false;
    for (uint32_t obj : incident_objects[li]) buckets[obj].push_back(li);
  }
  rep.config.k = k;

  int64_t total = k * static_cast<int64_t>(orbit_size);
  rep.double_count_ok = class_size != 0 && total % class_size == 0;
  int64_t r = rep.double_count_ok ? total / static_cast<int64_t>(class_size) : -1;
  rep.config.r = r;
  if (rep.double_count_ok)
    for (uint32_t obj : class_objects) {
      auto it = buckets.find(obj);
      int64_t deg = it == buckets.end() ? 0 : static_cast<int64_t>(it->second.size());
      if (deg != r) rep.degrees_constant = false;
    }

  // An all-ones 2x2 submatrix would be a line pair sharing two objects.
  std::vector<uint64_t> pairs;
  if (r > 0)
    pairs.reserve(buckets.size() * static_cast<size_t>(r) * (r - 1) / 2);
  for (auto& [obj, lines] : buckets) {
    std::sort(lines.begin(), lines.end());
    for (size_t i = 0; i < lines.size(); ++i)
      for (size_t j = i + 1; j < lines.size(); ++j)
        pairs.push_back((static_cast<uint64_t>(lines[i]) << 32) | lines[j]);
  }
  std::sort(pairs.begin(), pairs.end());
  rep.j2_free = std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
  return rep;
}

}  // namespace

std::array<SubmatrixReport, kNumPlaneTypes> submatrix_check_planes_all(
    const Orbit& orbit, const CubicModel& m) {
  const Space& sp = m.space();
  std::array<std::vector<uint32_t>, kNumPlaneTypes> class_objects;
  for (uint32_t pl = 0; pl < m.plane_types().size(); ++pl)
    class_objects[static_cast<int>(m.plane_type(pl))].push_back(pl);

  std::array<std::vector<std::vector<uint32_t>>, kNumPlaneTypes> incident;
  for (auto& v : incident) v.resize(orbit.members.size());
  for (uint32_t li = 0; li < orbit.members.size(); ++li)
    for (uint32_t pl : sp.planes_through_line(orbit.members[li]))
      incident[static_cast<int>(m.plane_type(pl))][li].push_back(pl);

  std::array<SubmatrixReport, kNumPlaneTypes> reports;
  for (int t = 0; t < kNumPlaneTypes; ++t)
    reports[t] = check_buckets(class_objects[t].size(), orbit.size(),
                               incident[t], class_objects[t]);
  return reports;
}

std::array<SubmatrixReport, kNumPointTypes> submatrix_check_points_all(
    const Orbit& orbit, const CubicModel& m) {
  const Space& sp = m.space();
  std::array<std::vector<uint32_t>, kNumPointTypes> class_objects;
  for (uint32_t pt = 0; pt < m.point_types().size(); ++pt)
    class_objects[static_cast<int>(m.point_type(pt))].push_back(pt);

  std::array<std::vector<std::vector<uint32_t>>, kNumPointTypes> incident;
  for (auto& v : incident) v.resize(orbit.members.size());
  for (uint32_t li = 0; li < orbit.members.size(); ++li)
    for (uint32_t pt : sp.points_on_line(orbit.members[li]))
      incident[static_cast<int>(m.point_type(pt))][li].push_back(pt);

  std::array<SubmatrixReport, kNumPointTypes> reports;
  for (PointType ty : point_types_for(sp.field().xi())) {
    int t = static_cast<int>(ty);
    reports[t] = check_buckets(class_objects[t].size(), orbit.size(),
                               incident[t], class_objects[t]);
  }
  return reports;
}

SubmatrixReport submatrix_check_planes(const Orbit& orbit, const CubicModel& m,
                                       PlaneType type) {
  return submatrix_check_planes_all(orbit, m)[static_cast<int>(type)];
}

SubmatrixReport submatrix_check_points(const Orbit& orbit, const CubicModel& m,
                                       PointType type) {
  return submatrix_check_points_all(orbit, m)[static_cast<int>(type)];
}

}  // namespace tic
