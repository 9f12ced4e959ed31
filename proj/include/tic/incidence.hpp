#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tic/rootcount.hpp"
#include "tic/stabilizer.hpp"
#include "tic/twistedcubic.hpp"

namespace tic {

// Incidence profile of one line orbit: planes of each type through a line of
// the orbit / orbit lines in a plane of each type, and the point-side
// analogues.  Indexed by the PlaneType / PointType enums; entries for types
// that do not occur for the given xi stay zero.
struct IncidenceProfile {
  OrbitLabel label{};
  std::optional<uint32_t> mu;
  uint32_t q = 0;
  int xi = 0;
  uint64_t orbit_size = 0;
  enum class Source { Enumerated, ClosedForm };
  Source source = Source::Enumerated;

  std::array<int64_t, kNumPlaneTypes> planes_per_line{};  // Π by PlaneType
  std::array<int64_t, kNumPlaneTypes> lines_per_plane{};  // Λ by PlaneType
  std::array<int64_t, kNumPointTypes> points_per_line{};  // P̄ by PointType
  std::array<int64_t, kNumPointTypes> lines_per_point{};  // Λ̄ by PointType

  // Context recorded for mu-orbits (q odd where applicable).
  int64_t tangent_meets = -1;
  int eta_mu = 0;
  bool exceptional = false;

  int64_t pi(PlaneType t) const {
    return planes_per_line[static_cast<int>(t)];
  }
  int64_t lambda(PlaneType t) const {
    return lines_per_plane[static_cast<int>(t)];
  }
  int64_t pbar(PointType t) const {
    return points_per_line[static_cast<int>(t)];
  }
  int64_t lbar(PointType t) const {
    return lines_per_point[static_cast<int>(t)];
  }
};

// True when all count data (both sides plus the orbit size) coincide.
bool same_counts(const IncidenceProfile& a, const IncidenceProfile& b);

// Division that must be exact; a remainder means a bookkeeping bug or an
// inconsistent table row and is reported as an error.
int64_t exact_div(int64_t num, int64_t den);

// Per-line type census: planes through the line and points on it.
struct LineCensus {
  std::array<int64_t, kNumPlaneTypes> planes{};
  std::array<int64_t, kNumPointTypes> points{};
};
LineCensus census_of_line(const CubicModel& m, const ProjLine& l);

// Profile computed from the actual orbit: type census on a representative,
// verified constant across sampled members (all members for q <= 9), with
// the per-plane and per-point line counts obtained both by direct counting
// on representatives and by the double-counting identity.
IncidenceProfile profile_by_enumeration(const Orbit& orbit,
                                        const CubicModel& m,
                                        unsigned jobs = 0);

// Profile from the closed-form tables, parametrized by the root-count
// statistics.
IncidenceProfile profile_by_formulas(const FieldCtx& f, OrbitLabel label,
                                     std::optional<uint32_t> mu = std::nullopt);

struct RelationReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// The counting relations every external-line orbit profile must satisfy:
// zero rows, the plane- and point-side sum identities, the tangent link
// between the two sides, the double-counting integrality, and for the
// special orbit the point/plane correspondence under the polarity.
RelationReport verify_counting_relations(const IncidenceProfile& p);

// Polarity duality on sampled orbit members (q not divisible by 3): the
// plane census of the image line equals the point census of the original
// under the class correspondence, plus the sum identities on both.
RelationReport verify_polarity_duality(const Orbit& orbit, const CubicModel& m,
                                       size_t samples = 25);

struct ConfigParams {
  uint64_t v = 0;  // objects of the class (planes or points)
  uint64_t b = 0;  // orbit lines
  int64_t r = 0;   // lines per object
  int64_t k = 0;   // objects per line
};

struct SubmatrixReport {
  ConfigParams config;
  bool j2_free = false;
  bool degrees_constant = false;
  bool double_count_ok = false;
  bool ok() const { return j2_free && degrees_constant && double_count_ok; }
};

// Builds the 01 incidence submatrix (orbit lines x one plane or point class)
// and verifies it is a configuration: constant degrees, v r = b k, and no
// all-ones 2x2 submatrix.  The *_all variants share one incidence sweep over
// the orbit; entries for classes that do not occur stay default-initialized.
std::array<SubmatrixReport, kNumPlaneTypes> submatrix_check_planes_all(
    const Orbit& orbit, const CubicModel& m);
std::array<SubmatrixReport, kNumPointTypes> submatrix_check_points_all(
    const Orbit& orbit, const CubicModel& m);
SubmatrixReport submatrix_check_planes(const Orbit& orbit, const CubicModel& m,
                                       PlaneType type);
SubmatrixReport submatrix_check_points(const Orbit& orbit, const CubicModel& m,
                                       PointType type);

}  // namespace tic
