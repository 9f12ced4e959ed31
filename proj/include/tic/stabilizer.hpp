#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "tic/pg3.hpp"

namespace tic {

// One projectivity of the stabilizer group of the cubic (isomorphic to
// PGL(2,q)): the fractional-linear parameters (a,b,c,d) with ad - bc != 0,
// normalized so the first nonzero of (a,b,c,d) is 1, and the induced 4x4
// matrix acting on row vectors.
struct GroupElement {
  std::array<uint32_t, 4> abcd{};
  Mat4 mat{};
};

// The 4x4 matrix induced by (a,b,c,d): row i, column j carries the
// coefficient of the cubic-power basis, so that
// P(t) . M = P((a t + b)/(c t + d)) up to scale.
Mat4 cubic_rep_matrix(const FieldCtx& f, uint32_t a, uint32_t b, uint32_t c,
                      uint32_t d);

// All q^3 - q normalized elements.  Each is verified to permute the curve.
std::vector<GroupElement> enumerate_group(const FieldCtx& f);

inline Coord4 act_point(const Space& sp, const Mat4& m, const Coord4& x) {
  return sp.apply(x, m);
}
// Plane action: coefficient vectors transform by the inverse transpose.
Coord4 act_plane(const Space& sp, const Mat4& m, const Coord4& c);
ProjLine act_line(const Space& sp, const Mat4& m, const ProjLine& l);

enum class OrbitLabel : uint8_t { SpecialL, Mu };

struct Orbit {
  OrbitLabel label{};
  std::optional<uint32_t> mu;
  ProjLine seed;
  std::vector<ProjLine> members;  // sorted by canonical key
  std::unordered_set<uint64_t, LineKeyHash> keys;

  uint64_t size() const { return members.size(); }
  bool contains(const ProjLine& l) const { return keys.count(l.key()) != 0; }
};

// Orbit of the seed under the full group, by applying every element and
// deduplicating canonically.  Deterministic for any jobs value.
Orbit orbit_of(const Space& sp, std::span<const GroupElement> group,
               const ProjLine& seed, OrbitLabel label,
               std::optional<uint32_t> mu = std::nullopt, unsigned jobs = 0);

// Seed lines: the special line through (1,0,0,1) and (0,0,1,0), and the
// mu-family line through (0,mu,0,1) and (1,0,1,0).
ProjLine seed_line_special(const Space& sp);
ProjLine seed_line_mu(const Space& sp, uint32_t mu);  // MuOutOfDomain

// Admissible mu values: F_q^* minus {1}, and additionally minus {1/9} for
// odd q not divisible by 3.
bool mu_admissible(const FieldCtx& f, uint32_t mu);
std::vector<uint32_t> admissible_mu(const FieldCtx& f);

// Exceptional condition under which the mu-orbit shrinks to (q^3-q)/12:
// mu = -1/3, q ≡ 1 (mod 12), and -1/3 is a fourth power.  Odd q with
// xi != 0 only.
bool mu_orbit_exceptional(const FieldCtx& f, uint32_t mu);

uint64_t predicted_orbit_size(const FieldCtx& f, OrbitLabel label,
                              std::optional<uint32_t> mu = std::nullopt);

}  // namespace tic
