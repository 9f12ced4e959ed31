#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "tic/rootcount.hpp"
#include "tic/stabilizer.hpp"
#include "tic/twistedcubic.hpp"

using namespace tic;

TEST_CASE("distinct root counting") {
  auto f7 = FieldCtx::make(7, 1);
  // t^3 - 1 has three roots when q ≡ 1 (mod 3)
  CHECK(distinct_roots(*f7, osc_cubic_special(*f7, 0)) == 3);
  auto f5 = FieldCtx::make(5, 1);
  CHECK(distinct_roots(*f5, osc_cubic_special(*f5, 0)) == 1);
  // t^3 has a single distinct root
  CHECK(distinct_roots(*f7, CubicPoly{{1, 0, 0, 0}}) == 1);
}

TEST_CASE("beta histogram against the closed forms") {
  struct Case {
    uint32_t p, h;
    int64_t v2, v1;
  };
  for (Case c : {Case{5, 1, 1, 2}, {2, 3, 0, 4}, {7, 1, 0, 3}, {11, 1, 1, 5},
                 {13, 1, 0, 9}, {2, 4, 0, 12}, {2, 5, 0, 16}, {5, 2, 3, 6}}) {
    auto f = FieldCtx::make(c.p, c.h);
    auto hist = beta_root_histogram(*f);
    CHECK(hist.v[2] == c.v2);
    CHECK(hist.v[1] == c.v1);
    CHECK(hist.predicted_v2 == c.v2);
    CHECK(hist.predicted_v1 == c.v1);
    CHECK(hist.v[0] + hist.v[1] + hist.v[2] + hist.v[3] ==
          static_cast<int64_t>(f->order()));
  }
  auto f9 = FieldCtx::make(3, 2);
  CHECK_THROWS_AS(beta_root_histogram(*f9), CharacteristicThree);
}

TEST_CASE("Hessian character count on reference spot values") {
  struct Case {
    uint32_t p, h;
    int64_t n;
  };
  for (Case c : {Case{7, 1, 3}, {13, 1, 9}, {5, 2, 6}}) {
    auto f = FieldCtx::make(c.p, c.h);
    CHECK(irreducible_hessian_count(*f) == c.n);
  }
  auto f8 = FieldCtx::make(2, 3);
  CHECK_THROWS_AS(irreducible_hessian_count(*f8), EvenCharacteristic);
}

TEST_CASE("trace count on even square fields") {
  CHECK(trace_one_cube_count(*FieldCtx::make(2, 4)).closed == 12);
  CHECK(trace_one_cube_count(*FieldCtx::make(2, 2)).closed == 0);
  CHECK(trace_one_cube_count(*FieldCtx::make(2, 6)).closed == 24);
  CHECK_THROWS_AS(trace_one_cube_count(*FieldCtx::make(2, 3)),
                  NotEvenSquareField);
  CHECK_THROWS_AS(trace_one_cube_count(*FieldCtx::make(5, 2)),
                  NotEvenSquareField);
}

TEST_CASE("tangent meet counts") {
  // even q: always 2
  for (uint32_t h : {3u, 4u, 5u}) {
    auto f = FieldCtx::make(2, h);
    for (uint32_t mu : admissible_mu(*f))
      CHECK(tangent_meet_count(*f, mu) == 2);
  }
  // q = 5: both admissible mu are non-squares and meet no tangent
  auto f5 = FieldCtx::make(5, 1);
  for (uint32_t mu : admissible_mu(*f5)) {
    CHECK(f5->quadratic_character(f5->element(mu)) == -1);
    CHECK(tangent_meet_count(*f5, mu) == 0);
  }
  // q = 9, square mu: counts in {0, 4}
  auto f9 = FieldCtx::make(3, 2);
  for (uint32_t mu : admissible_mu(*f9)) {
    int64_t n = tangent_meet_count(*f9, mu);
    if (f9->quadratic_character(f9->element(mu)) == 1)
      CHECK((n == 0 || n == 4));
    else
      CHECK((n == 0 || n == 2));
  }
  CHECK_THROWS_AS(tangent_meet_count(*f5, 1), MuOutOfDomain);
}

TEST_CASE("tangent meet count equals the geometric count") {
  for (auto [p, h] : {std::pair<uint32_t, uint32_t>{5, 1}, {2, 3}, {3, 2}, {13, 1}}) {
    auto f = FieldCtx::make(p, h);
    auto sp = std::make_shared<Space>(f);
    CubicModel m(sp);
    for (uint32_t mu : admissible_mu(*f)) {
      ProjLine lmu = seed_line_mu(*sp, mu);
      int64_t geometric = 0;
      for (uint32_t t = 0; t <= m.q(); ++t)
        if (sp->lines_meet(lmu, m.tangent(t))) ++geometric;
      CHECK(geometric == tangent_meet_count(*f, mu));
    }
  }
}

TEST_CASE("single-root counts: oracle and criterion agree") {
  for (auto [p, h] : {std::pair<uint32_t, uint32_t>{5, 1}, {7, 1}, {11, 1},
                      {13, 1}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {5, 2}}) {
    auto f = FieldCtx::make(p, h);
    for (uint32_t mu : admissible_mu(*f)) {
      if (f->xi() != 0) {
        auto ng = single_root_gamma_count(*f, mu);
        REQUIRE(ng.consistent());
      }
      auto nc = single_root_c_count(*f, mu);
      REQUIRE(nc.consistent());
    }
  }
  auto f9 = FieldCtx::make(3, 2);
  CHECK_THROWS_AS(single_root_gamma_count(*f9, 2), CharacteristicThree);
}

TEST_CASE("q = 8 block of the example table") {
  auto f = FieldCtx::make(2, 3);
  std::map<std::pair<int64_t, int64_t>, int> cases;
  for (uint32_t mu : admissible_mu(*f)) {
    auto ng = single_root_gamma_count(*f, mu);
    auto nc = single_root_c_count(*f, mu);
    cases[{2 * ng.oracle, 2 * nc.oracle}]++;
  }
  std::map<std::pair<int64_t, int64_t>, int> expected{{{10, 4}, 3},
                                                      {{4, 10}, 3}};
  CHECK(cases == expected);
}

TEST_CASE("q = 5 and q = 9 example values") {
  auto f5 = FieldCtx::make(5, 1);
  for (uint32_t mu : admissible_mu(*f5)) {
    CHECK(2 * single_root_gamma_count(*f5, mu).oracle == 4);  // q - 1
    CHECK(2 * single_root_c_count(*f5, mu).oracle == 4);
  }
  auto f9 = FieldCtx::make(3, 2);
  int squares_with_8 = 0;
  for (uint32_t mu : admissible_mu(*f9)) {
    if (f9->quadratic_character(f9->element(mu)) != 1) continue;
    if (2 * single_root_c_count(*f9, mu).oracle == 8) ++squares_with_8;
  }
  CHECK(squares_with_8 == 3);
}
