#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "tic/gf.hpp"

namespace tic {

// Example-table rows: the doubled single-root counts (kept doubled so the
// entries stay integral), grouped over
// the admissible mu and sorted ascending.

struct EvenExampleRow {
  int64_t two_single_gamma = 0;  // 2 N̄1(mu)
  int64_t two_single_c = 0;      // 2 Ñ1(mu)
  int64_t count = 0;             // number of mu with these values
  friend auto operator<=>(const EvenExampleRow&, const EvenExampleRow&) = default;
};

struct OddExampleRow {
  int eta = 0;
  int64_t tangent_meets = 0;
  int64_t two_single_gamma = 0;
  int64_t two_single_c = 0;
  int64_t count = 0;
  friend auto operator<=>(const OddExampleRow&, const OddExampleRow&) = default;
};

struct Xi0ExampleRow {
  int eta = 0;
  int64_t tangent_meets = 0;
  int64_t two_single_c = 0;
  int64_t count = 0;
  friend auto operator<=>(const Xi0ExampleRow&, const Xi0ExampleRow&) = default;
};

std::vector<EvenExampleRow> even_example_table(const FieldCtx& f,
                                               unsigned jobs = 0);
std::vector<OddExampleRow> odd_example_table(const FieldCtx& f,
                                             unsigned jobs = 0);
std::vector<Xi0ExampleRow> xi0_example_table(const FieldCtx& f,
                                             unsigned jobs = 0);

// One row of the Hessian-count table for odd q ≡ 1 (mod 3): the normalized
// value 2 N_q - q and whether 2 is a cube in F_q.
struct HessianRow {
  uint32_t q = 0;
  int64_t two_count_minus_q = 0;
  bool two_is_cube = false;
  friend auto operator<=>(const HessianRow&, const HessianRow&) = default;
};
HessianRow hessian_row(const FieldCtx& f);

// All odd prime powers q ≡ 1 (mod 3) in [lo, hi], ascending.
std::vector<std::pair<uint32_t, uint32_t>> hessian_table_fields(uint32_t lo,
                                                                uint32_t hi);

}  // namespace tic
