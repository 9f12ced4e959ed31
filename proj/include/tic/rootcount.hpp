#pragma once

#include <array>
#include <cstdint>

#include "tic/gf.hpp"

namespace tic {

// Cubic polynomial over F_q, leading coefficient first: c[0] t^3 + c[1] t^2
// + c[2] t + c[3].
struct CubicPoly {
  std::array<uint32_t, 4> c{};
};

// The three cubic families attached to the seed lines: the osculating-plane
// cubic along the special line (parameter beta), the osculating-plane cubic
// along a mu-line (parameter gamma; q not divisible by 3), and the
// plane-section cubic of a mu-line (parameter c).
CubicPoly osc_cubic_special(const FieldCtx& f, uint32_t beta);
CubicPoly osc_cubic_mu(const FieldCtx& f, uint32_t mu, uint32_t gamma);
CubicPoly plane_cubic_mu(const FieldCtx& f, uint32_t mu, uint32_t c);

// Exact number of distinct roots in F_q, by exhaustive evaluation.
int distinct_roots(const FieldCtx& f, const CubicPoly& poly);

// Distribution of distinct-root counts of the special-line cubic as beta
// sweeps F_q, with the applicable closed-form prediction for the one- and
// two-root counts.
struct BetaHistogram {
  std::array<int64_t, 4> v{};  // v[m] = #beta with exactly m roots
  int64_t predicted_v1 = 0;
  int64_t predicted_v2 = 0;
};
BetaHistogram beta_root_histogram(const FieldCtx& f);  // CharacteristicThree

// #{beta : the Hessian of the special-line cubic is irreducible}, i.e.
// eta(1 + 4 beta^3) = -1.  Odd q only.  This is the count the closed
// special-orbit profiles are parametrized by.
int64_t irreducible_hessian_count(const FieldCtx& f);

// Even square fields q = 2^(2m): #{beta : Tr2(beta^3) = 1}, together with
// the closed form q/2 + (-2)^m; the two must agree.
struct TraceCount {
  int64_t sweep = 0;
  int64_t closed = 0;
};
TraceCount trace_one_cube_count(const FieldCtx& f);  // NotEvenSquareField

// Number of t in F_q with t^4 - (3 mu - 1) t^2 + mu = 0: the number of
// tangents meeting the mu-line.
int64_t tangent_meet_count(const FieldCtx& f, uint32_t mu);  // MuOutOfDomain

// A count computed along two independent routes: the exhaustive root-count
// sweep and the discriminant/trace/character criterion.  The
// routes must agree; a mismatch is a hard failure in the test suites.
struct DualCount {
  int64_t oracle = 0;
  int64_t criterion = 0;
  bool consistent() const { return oracle == criterion; }
};

// #{gamma in F_q : the mu-line osculating cubic has exactly one root}.
// q not divisible by 3.
DualCount single_root_gamma_count(const FieldCtx& f, uint32_t mu);
// #{c in F_q^* : the mu-line plane cubic has exactly one root}.
DualCount single_root_c_count(const FieldCtx& f, uint32_t mu);

}  // namespace tic
