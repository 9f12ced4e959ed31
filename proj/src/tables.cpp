#include "tic/tables.hpp"

#include <algorithm>
#include <map>

#include "tic/parallel.hpp"
#include "tic/rootcount.hpp"
#include "tic/stabilizer.hpp"

namespace tic {

namespace {

// Applies fn to every admissible mu, merging the per-chunk (key -> count)
// maps in chunk order.
template <class Key, class Fn>
std::map<Key, int64_t> grouped_over_mu(const FieldCtx& f, unsigned jobs,
                                       Fn&& fn) {
  auto mus = admissible_mu(f);
  unsigned nchunks = resolve_jobs(jobs);
  std::vector<std::map<Key, int64_t>> parts(nchunks);
  parallel_chunks(mus.size(), jobs,
                  [&](unsigned chunk, uint64_t lo, uint64_t hi) {
                    for (uint64_t i = lo; i < hi; ++i)
                      parts[chunk][fn(mus[i])]++;
                  });
  std::map<Key, int64_t> merged;
  for (const auto& part : parts)
    for (const auto& [key, count] : part) merged[key] += count;
  return merged;
}

}  // namespace

std::vector<EvenExampleRow> even_example_table(const FieldCtx& f,
                                               unsigned jobs) {
  if (!f.even()) throw WrongCharacteristic("even-q table needs even q");
  using Key = std::pair<int64_t, int64_t>;
  auto groups = grouped_over_mu<Key>(f, jobs, [&](uint32_t mu) {
    auto ng = single_root_gamma_count(f, mu);
    auto nc = single_root_c_count(f, mu);
    if (!ng.consistent() || !nc.consistent())
      throw Error("criterion/oracle mismatch in the even table");
    return Key{2 * ng.oracle, 2 * nc.oracle};
  });
  std::vector<EvenExampleRow> rows;
  for (const auto& [key, count] : groups)
    rows.push_back({key.first, key.second, count});
  return rows;
}

std::vector<OddExampleRow> odd_example_table(const FieldCtx& f, unsigned jobs) {
  if (f.even() || f.xi() == 0)
    throw WrongCharacteristic("odd-q table needs odd q not divisible by 3");
  using Key = std::array<int64_t, 4>;
  auto groups = grouped_over_mu<Key>(f, jobs, [&](uint32_t mu) {
    auto ng = single_root_gamma_count(f, mu);
    auto nc = single_root_c_count(f, mu);
    if (!ng.consistent() || !nc.consistent())
      throw Error("criterion/oracle mismatch in the odd table");
    return Key{f.quadratic_character(f.element(mu)), tangent_meet_count(f, mu),
               2 * ng.oracle, 2 * nc.oracle};
  });
  std::vector<OddExampleRow> rows;
  for (const auto& [key, count] : groups)
    rows.push_back({static_cast<int>(key[0]), key[1], key[2], key[3], count});
  return rows;
}

std::vector<Xi0ExampleRow> xi0_example_table(const FieldCtx& f, unsigned jobs) {
  if (f.xi() != 0) throw WrongCharacteristic("xi = 0 table needs q ≡ 0 (mod 3)");
  using Key = std::array<int64_t, 3>;
  auto groups = grouped_over_mu<Key>(f, jobs, [&](uint32_t mu) {
    auto nc = single_root_c_count(f, mu);
    if (!nc.consistent())
      throw Error("criterion/oracle mismatch in the xi = 0 table");
    return Key{f.quadratic_character(f.element(mu)), tangent_meet_count(f, mu),
               2 * nc.oracle};
  });
  std::vector<Xi0ExampleRow> rows;
  for (const auto& [key, count] : groups)
    rows.push_back({static_cast<int>(key[0]), key[1], key[2], count});
  return rows;
}

HessianRow hessian_row(const FieldCtx& f) {
  if (f.even() || f.xi() != 1)
    throw WrongCharacteristic("Hessian table rows need odd q ≡ 1 (mod 3)");
  HessianRow row;
  row.q = f.order();
  row.two_count_minus_q =
      2 * irreducible_hessian_count(f) - static_cast<int64_t>(f.order());
  row.two_is_cube = f.is_cube(f.from_int(2));
  return row;
}

std::vector<std::pair<uint32_t, uint32_t>> hessian_table_fields(uint32_t lo,
                                                                uint32_t hi) {
  // (p, h) pairs with p^h odd, ≡ 1 (mod 3), in [lo, hi]; ascending by p^h.
  std::vector<std::array<uint32_t, 3>> hits;  // q, p, h
  for (uint32_t p = 3; p <= hi; ++p) {
    bool prime = true;
    for (uint32_t d = 2; d * d <= p; ++d)
      if (p % d == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    uint64_t q = p;
    for (uint32_t h = 1; q <= hi; ++h, q *= p) {
      if (q >= lo && q % 3 == 1)
        hits.push_back({static_cast<uint32_t>(q), p, h});
      if (q > hi / p) break;
    }
  }
  std::sort(hits.begin(), hits.end());
  std::vector<std::pair<uint32_t, uint32_t>> out;
  out.reserve(hits.size());
  for (const auto& h : hits) out.emplace_back(h[1], h[2]);
  return out;
}

}  // namespace tic
