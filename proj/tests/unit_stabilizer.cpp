#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "tic/stabilizer.hpp"
#include "tic/twistedcubic.hpp"

using namespace tic;

namespace {

struct Setup {
  std::shared_ptr<const FieldCtx> f;
  std::shared_ptr<const Space> sp;
  std::vector<GroupElement> group;
};

Setup make_setup(uint32_t p, uint32_t h) {
  Setup s;
  s.f = FieldCtx::make(p, h);
  s.sp = std::make_shared<Space>(s.f);
  s.group = enumerate_group(*s.f);
  return s;
}

}  // namespace

TEST_CASE("group enumeration: size and identity") {
  auto s = make_setup(5, 1);
  CHECK(s.group.size() == 120);  // q^3 - q

  bool found_identity = false;
  for (const auto& g : s.group)
    if (g.abcd == std::array<uint32_t, 4>{1, 0, 0, 1}) {
      found_identity = true;
      Mat4 id{};
      for (int i = 0; i < 4; ++i) id[i * 4 + i] = 1;
      CHECK(g.mat == id);
    }
  CHECK(found_identity);

  CHECK(make_setup(2, 3).group.size() == 504);
  CHECK(make_setup(3, 2).group.size() == 720);
}

TEST_CASE("action laws and incidence preservation") {
  auto s = make_setup(7, 1);
  std::mt19937 rng(5);
  std::uniform_int_distribution<size_t> dg(0, s.group.size() - 1);
  std::uniform_int_distribution<uint32_t> dp(0, s.sp->num_points() - 1);

  for (int i = 0; i < 300; ++i) {
    const auto& g = s.group[dg(rng)];
    const auto& h = s.group[dg(rng)];
    Coord4 x = s.sp->coords_of(dp(rng));

    // composition: x (Mg Mh) == (x Mg) Mh; verify via the point images
    Coord4 via1 = act_point(*s.sp, h.mat, act_point(*s.sp, g.mat, x));
    Mat4 gh{};
    {
      const FieldCtx& f = *s.f;
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
          uint32_t acc = 0;
          for (int k = 0; k < 4; ++k)
            acc = f.radd(acc, f.rmul(g.mat[r * 4 + k], h.mat[k * 4 + c]));
          gh[r * 4 + c] = acc;
        }
    }
    Coord4 via2 = act_point(*s.sp, gh, x);
    CHECK(s.sp->normalize(via1) == s.sp->normalize(via2));

    // plane incidence preserved
    uint32_t pl = dp(rng);
    Coord4 c = s.sp->coords_of(pl);
    bool on = s.sp->dot(x, c) == 0;
    Coord4 xi = act_point(*s.sp, g.mat, x);
    Coord4 ci = act_plane(*s.sp, g.mat, c);
    CHECK((s.sp->dot(xi, ci) == 0) == on);
  }

  // inverse round-trip on lines
  std::uniform_int_distribution<uint32_t> dpt(0, s.sp->num_points() - 1);
  for (int i = 0; i < 50; ++i) {
    const auto& g = s.group[dg(rng)];
    uint32_t a = dpt(rng), b = dpt(rng);
    if (a == b) continue;
    ProjLine l = s.sp->line_through_indices(a, b);
    Mat4 inv = s.sp->invert(g.mat);
    CHECK(act_line(*s.sp, inv, act_line(*s.sp, g.mat, l)) == l);
  }
}

TEST_CASE("tangents map to tangents") {
  auto s = make_setup(5, 1);
  CubicModel m(s.sp);
  std::mt19937 rng(9);
  std::uniform_int_distribution<size_t> dg(0, s.group.size() - 1);
  for (int i = 0; i < 100; ++i) {
    const auto& g = s.group[dg(rng)];
    for (uint32_t t = 0; t <= m.q(); ++t) {
      ProjLine img = act_line(*s.sp, g.mat, m.tangent(t));
      CHECK(m.classify_line(img).tangent);
    }
  }
}

TEST_CASE("seed lines") {
  auto s = make_setup(7, 1);
  // the mu-line must consist of the stated points
  ProjLine l2 = seed_line_mu(*s.sp, 2);
  CHECK(s.sp->point_on_line(s.sp->index_of_normalized({0, 2, 0, 1}), l2));
  CHECK(s.sp->point_on_line(s.sp->index_of_normalized({1, 0, 1, 0}), l2));

  CHECK_THROWS_AS(seed_line_mu(*s.sp, 1), MuOutOfDomain);
  CHECK_THROWS_AS(seed_line_mu(*s.sp, 0), MuOutOfDomain);
  // 1/9 = inv(2) = 4 in GF(7)
  CHECK_THROWS_AS(seed_line_mu(*s.sp, 4), MuOutOfDomain);
  CHECK(admissible_mu(*s.f) == std::vector<uint32_t>{2, 3, 5, 6});
}

TEST_CASE("orbit sizes match the predictions") {
  struct Case {
    uint32_t p, h;
    uint64_t special;  // 0 = unsupported
  };
  for (Case c : {Case{5, 1, 60}, {7, 1, 112}, {2, 3, 504}, {3, 2, 0}}) {
    auto s = make_setup(c.p, c.h);
    uint32_t q = s.f->order();
    if (c.special != 0) {
      CHECK(predicted_orbit_size(*s.f, OrbitLabel::SpecialL) == c.special);
      auto orbit = orbit_of(*s.sp, s.group, seed_line_special(*s.sp),
                            OrbitLabel::SpecialL);
      CHECK(orbit.size() == c.special);
    } else {
      CHECK_THROWS_AS(predicted_orbit_size(*s.f, OrbitLabel::SpecialL),
                      UnsupportedCase);
    }
    for (uint32_t mu : admissible_mu(*s.f)) {
      auto orbit =
          orbit_of(*s.sp, s.group, seed_line_mu(*s.sp, mu), OrbitLabel::Mu, mu);
      CHECK(orbit.size() == predicted_orbit_size(*s.f, OrbitLabel::Mu, mu));
      (void)q;
    }
  }
  // q = 8: every admissible mu-orbit has size 252
  {
    auto s = make_setup(2, 3);
    for (uint32_t mu : admissible_mu(*s.f)) {
      auto orbit =
          orbit_of(*s.sp, s.group, seed_line_mu(*s.sp, mu), OrbitLabel::Mu, mu);
      CHECK(orbit.size() == 252);
    }
  }
  // q = 9, square mu: (q^3-q)/4 = 180
  {
    auto s = make_setup(3, 2);
    bool found_square = false;
    for (uint32_t mu : admissible_mu(*s.f)) {
      if (s.f->quadratic_character(s.f->element(mu)) != 1) continue;
      found_square = true;
      auto orbit =
          orbit_of(*s.sp, s.group, seed_line_mu(*s.sp, mu), OrbitLabel::Mu, mu);
      CHECK(orbit.size() == 180);
      CHECK(predicted_orbit_size(*s.f, OrbitLabel::Mu, mu) == 180);
    }
    CHECK(found_square);
  }
}

TEST_CASE("orbit closure under random actions") {
  auto s = make_setup(5, 1);
  auto orbit = orbit_of(*s.sp, s.group, seed_line_special(*s.sp),
                        OrbitLabel::SpecialL);
  std::mt19937 rng(23);
  std::uniform_int_distribution<size_t> dg(0, s.group.size() - 1);
  std::uniform_int_distribution<size_t> dm(0, orbit.members.size() - 1);
  for (int i = 0; i < 500; ++i) {
    ProjLine img =
        act_line(*s.sp, s.group[dg(rng)].mat, orbit.members[dm(rng)]);
    CHECK(orbit.contains(img));
  }
}

TEST_CASE("orbit computation is deterministic across job counts") {
  auto s = make_setup(2, 3);
  auto o1 = orbit_of(*s.sp, s.group, seed_line_mu(*s.sp, 2), OrbitLabel::Mu, 2, 1);
  auto o2 = orbit_of(*s.sp, s.group, seed_line_mu(*s.sp, 2), OrbitLabel::Mu, 2, 2);
  auto o5 = orbit_of(*s.sp, s.group, seed_line_mu(*s.sp, 2), OrbitLabel::Mu, 2, 5);
  REQUIRE(o1.members.size() == o2.members.size());
  REQUIRE(o1.members.size() == o5.members.size());
  for (size_t i = 0; i < o1.members.size(); ++i) {
    CHECK(o1.members[i] == o2.members[i]);
    CHECK(o1.members[i] == o5.members[i]);
  }
}

TEST_CASE("exceptional mu condition") {
  auto f13 = FieldCtx::make(13, 1);
  // Oracle: enumerate the fourth powers of GF(13).
  std::set<uint32_t> fourth;
  for (uint32_t x = 1; x < 13; ++x) fourth.insert(f13->rpow(x, 4));
  CHECK(fourth == std::set<uint32_t>{1, 3, 9});
  for (uint32_t a = 1; a < 13; ++a)
    CHECK(f13->is_fourth_power(f13->element(a)) == (fourth.count(a) != 0));
  // -1/3 = 4 in GF(13); 4 is not a fourth power there, so no exception.
  CHECK(f13->rneg(f13->rinv(3)) == 4);
  CHECK_FALSE(mu_orbit_exceptional(*f13, 4));
  for (uint32_t mu : admissible_mu(*f13)) CHECK_FALSE(mu_orbit_exceptional(*f13, mu));

  // q = 37: -1/3 = 12 is a fourth power and 37 ≡ 1 (mod 12).
  auto f37 = FieldCtx::make(37, 1);
  CHECK(mu_orbit_exceptional(*f37, 12));
  CHECK(predicted_orbit_size(*f37, OrbitLabel::Mu, 12) == 4218);

  // q ≡ -1 (mod 12): condition never holds
  auto f11 = FieldCtx::make(11, 1);
  for (uint32_t mu : admissible_mu(*f11)) CHECK_FALSE(mu_orbit_exceptional(*f11, mu));

  auto f8 = FieldCtx::make(2, 3);
  CHECK_THROWS_AS(mu_orbit_exceptional(*f8, 2), WrongCharacteristic);
  auto f9 = FieldCtx::make(3, 2);
  CHECK_THROWS_AS(mu_orbit_exceptional(*f9, 2), WrongCharacteristic);
}

TEST_CASE("distinct-seed orbits are equal or disjoint") {
  for (auto [p, h] : {std::pair<uint32_t, uint32_t>{2, 3}, {5, 1}, {3, 2}}) {
    auto s = make_setup(p, h);
    std::vector<Orbit> orbits;
    if (s.f->xi() != 0)
      orbits.push_back(orbit_of(*s.sp, s.group, seed_line_special(*s.sp),
                                OrbitLabel::SpecialL));
    for (uint32_t mu : admissible_mu(*s.f))
      orbits.push_back(
          orbit_of(*s.sp, s.group, seed_line_mu(*s.sp, mu), OrbitLabel::Mu, mu));
    for (size_t i = 0; i < orbits.size(); ++i)
      for (size_t j = i + 1; j < orbits.size(); ++j) {
        size_t shared = 0;
        for (const auto& l : orbits[j].members) shared += orbits[i].contains(l);
        // all members shared or none
        REQUIRE((shared == 0 || shared == orbits[j].size()));
        REQUIRE((shared == 0) == !orbits[i].contains(orbits[j].seed));
      }
  }
}

TEST_CASE("every orbit member is an external line of the right class") {
  for (auto [p, h] : {std::pair<uint32_t, uint32_t>{5, 1}, {2, 3}}) {
    auto s = make_setup(p, h);
    CubicModel m(s.sp);
    if (s.f->xi() != 0) {
      auto ol = orbit_of(*s.sp, s.group, seed_line_special(*s.sp),
                         OrbitLabel::SpecialL);
      for (const auto& l : ol.members) REQUIRE(m.is_eng(l));
    }
    for (uint32_t mu : admissible_mu(*s.f)) {
      auto omu =
          orbit_of(*s.sp, s.group, seed_line_mu(*s.sp, mu), OrbitLabel::Mu, mu);
      for (const auto& l : omu.members) REQUIRE(m.is_eng(l));
    }
  }
}
