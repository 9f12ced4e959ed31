#include "tic/stabilizer.hpp"

#include <algorithm>
#include <unordered_map>

#include "tic/parallel.hpp"

namespace tic {

Mat4 cubic_rep_matrix(const FieldCtx& f, uint32_t a, uint32_t b, uint32_t c,
                      uint32_t d) {
  auto mul3 = [&](uint32_t x, uint32_t y, uint32_t z) {
    return f.rmul(x, f.rmul(y, z));
  };
  uint32_t three = f.from_int(3).idx, two = f.from_int(2).idx;
  Mat4 m{};
  m[0] = mul3(a, a, a);
  m[1] = mul3(a, a, c);
  m[2] = mul3(a, c, c);
  m[3] = mul3(c, c, c);
  m[4] = f.rmul(three, mul3(a, a, b));
  m[5] = f.radd(mul3(a, a, d), f.rmul(two, mul3(a, b, c)));
  m[6] = f.radd(mul3(b, c, c), f.rmul(two, mul3(a, c, d)));
  m[7] = f.rmul(three, mul3(c, c, d));
  m[8] = f.rmul(three, mul3(a, b, b));
  m[9] = f.radd(mul3(b, b, c), f.rmul(two, mul3(a, b, d)));
  m[10] = f.radd(mul3(a, d, d), f.rmul(two, mul3(b, c, d)));
  m[11] = f.rmul(three, mul3(c, d, d));
  m[12] = mul3(b, b, b);
  m[13] = mul3(b, b, d);
  m[14] = mul3(b, d, d);
  m[15] = mul3(d, d, d);
  return m;
}

std::vector<GroupElement> enumerate_group(const FieldCtx& f) {
  const uint32_t q = f.order();
  if (q < 5) throw QTooSmall("stabilizer group enumeration requires q >= 5");
  std::vector<GroupElement> group;
  group.reserve(static_cast<size_t>(q) * q * q - q);

  auto emit = [&](uint32_t a, uint32_t b, uint32_t c, uint32_t d) {
    if (f.rsub(f.rmul(a, d), f.rmul(b, c)) == 0) return;
    group.push_back({{a, b, c, d}, cubic_rep_matrix(f, a, b, c, d)});
  };
  for (uint32_t b = 0; b < q; ++b)
    for (uint32_t c = 0; c < q; ++c)
      for (uint32_t d = 0; d < q; ++d) emit(1, b, c, d);
  for (uint32_t c = 0; c < q; ++c)
    for (uint32_t d = 0; d < q; ++d) emit(0, 1, c, d);
  for (uint32_t d = 0; d < q; ++d) emit(0, 0, 1, d);
  emit(0, 0, 0, 1);

  uint64_t expected = static_cast<uint64_t>(q) * q * q - q;
  if (group.size() != expected) throw Error("group size != q^3 - q");

  // Every element must permute the curve points.
  std::vector<Coord4> curve(q + 1);
  for (uint32_t t = 0; t < q; ++t)
    curve[t] = {f.rmul(t, f.rmul(t, t)), f.rmul(t, t), t, 1};
  curve[q] = {1, 0, 0, 0};
  auto norm_key = [&](Coord4 x) {
    for (int i = 0; i < 4; ++i)
      if (x[i] != 0) {
        uint32_t s = f.rinv(x[i]);
        for (int j = 0; j < 4; ++j) x[j] = f.rmul(x[j], s);
        break;
      }
    uint64_t k = 0;
    for (uint32_t v : x) k = k * q + v;
    return k;
  };
  std::unordered_set<uint64_t> curve_keys;
  for (const auto& c4 : curve) curve_keys.insert(norm_key(c4));
  for (const auto& g : group)
    for (uint32_t t = 0; t <= q; ++t) {
      Coord4 img{};
      for (int j = 0; j < 4; ++j) {
        uint32_t s = f.rmul(curve[t][0], g.mat[j]);
        s = f.radd(s, f.rmul(curve[t][1], g.mat[4 + j]));
        s = f.radd(s, f.rmul(curve[t][2], g.mat[8 + j]));
        img[j] = f.radd(s, f.rmul(curve[t][3], g.mat[12 + j]));
      }
      if (!curve_keys.count(norm_key(img)))
        throw Error("group element does not fix the cubic");
    }
  return group;
}

Coord4 act_plane(const Space& sp, const Mat4& m, const Coord4& c) {
  Mat4 it = sp.transpose(sp.invert(m));
  return sp.normalize(sp.apply(c, it));
}

ProjLine act_line(const Space& sp, const Mat4& m, const ProjLine& l) {
  Coord4 a = act_point(sp, m, sp.coords_of(l.span[0]));
  Coord4 b = act_point(sp, m, sp.coords_of(l.span[1]));
  return sp.line_through(a, b);
}

namespace {

struct PluckHash {
  size_t operator()(const Pluck6& p) const {
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (uint32_t v : p) h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return static_cast<size_t>(h);
  }
};

}  // namespace

Orbit orbit_of(const Space& sp, std::span<const GroupElement> group,
               const ProjLine& seed, OrbitLabel label,
               std::optional<uint32_t> mu, unsigned jobs) {
  const Coord4 s0 = sp.coords_of(seed.span[0]);
  const Coord4 s1 = sp.coords_of(seed.span[1]);

  struct Hit {
    Pluck6 plu;
    Coord4 a, b;
  };
  unsigned nchunks = resolve_jobs(jobs);
  std::vector<std::vector<Hit>> chunks(nchunks);
  parallel_chunks(group.size(), jobs,
                  [&](unsigned chunk, uint64_t lo, uint64_t hi) {
                    auto& out = chunks[chunk];
                    out.reserve(hi - lo);
                    for (uint64_t i = lo; i < hi; ++i) {
                      const Mat4& m = group[i].mat;
                      Coord4 a = act_point(sp, m, s0);
                      Coord4 b = act_point(sp, m, s1);
                      out.push_back(
                          {sp.normalize_plucker(sp.plucker_of(a, b)), a, b});
                    }
                  });

  std::unordered_map<Pluck6, std::pair<Coord4, Coord4>, PluckHash> dedup;
  dedup.reserve(group.size());
  for (const auto& chunk : chunks)
    for (const auto& hit : chunk)
      dedup.emplace(hit.plu, std::make_pair(hit.a, hit.b));

  Orbit orbit;
  orbit.label = label;
  orbit.mu = mu;
  orbit.seed = seed;
  orbit.members.reserve(dedup.size());
  for (const auto& [plu, pts] : dedup)
    orbit.members.push_back(sp.line_through(pts.first, pts.second));
  std::sort(
      orbit.members.begin(), orbit.members.end(),
      [](const ProjLine& x, const ProjLine& y) { return x.key() < y.key(); });
  for (const auto& l : orbit.members) orbit.keys.insert(l.key());
  if (orbit.keys.size() != orbit.members.size())
    throw Error("orbit members not distinct");
  if (!orbit.contains(seed)) throw Error("orbit does not contain its seed");
  if (group.size() % orbit.members.size() != 0)
    throw Error("orbit size does not divide the group order");
  return orbit;
}

ProjLine seed_line_special(const Space& sp) {
  return sp.line_through({1, 0, 0, 1}, {0, 0, 1, 0});
}

ProjLine seed_line_mu(const Space& sp, uint32_t mu) {
  if (!mu_admissible(sp.field(), mu))
    throw MuOutOfDomain("mu = " + std::to_string(mu) + " is not admissible");
  return sp.line_through({0, mu, 0, 1}, {1, 0, 1, 0});
}

bool mu_admissible(const FieldCtx& f, uint32_t mu) {
  if (mu == 0 || mu == 1 || mu >= f.order()) return false;
  if (!f.even() && f.xi() != 0) {
    uint32_t nine = f.rmul(f.from_int(3).idx, f.from_int(3).idx);
    if (mu == f.rinv(nine)) return false;
  }
  return true;
}

std::vector<uint32_t> admissible_mu(const FieldCtx& f) {
  std::vector<uint32_t> out;
  for (uint32_t mu = 2; mu < f.order(); ++mu)
    if (mu_admissible(f, mu)) out.push_back(mu);
  return out;
}

bool mu_orbit_exceptional(const FieldCtx& f, uint32_t mu) {
  if (f.even() || f.xi() == 0)
    throw WrongCharacteristic(
        "the exceptional condition applies to odd q not divisible by 3");
  uint32_t minus_third = f.rneg(f.rinv(f.from_int(3).idx));
  if (mu != minus_third) return false;
  if (f.order() % 12 != 1) return false;
  return f.is_fourth_power(f.element(minus_third));
}

uint64_t predicted_orbit_size(const FieldCtx& f, OrbitLabel label,
                              std::optional<uint32_t> mu) {
  const uint64_t q = f.order();
  const uint64_t cube = q * q * q - q;
  if (label == OrbitLabel::SpecialL) {
    if (f.xi() == 0)
      throw UnsupportedCase(
          "no prediction for the special orbit when q ≡ 0 (mod 3)");
    if (f.xi() == 1) {
      if (f.even()) return cube / 3;
      return f.is_cube(f.from_int(2)) ? cube / 12 : cube / 3;
    }
    return f.even() ? cube : cube / 2;
  }
  if (!mu || !mu_admissible(f, *mu))
    throw MuOutOfDomain("mu-orbit prediction needs an admissible mu");
  if (f.even()) return cube / 2;
  if (f.quadratic_character(f.element(*mu)) == -1) return cube / 2;
  if (f.xi() == 0) return cube / 4;
  return mu_orbit_exceptional(f, *mu) ? cube / 12 : cube / 4;
}

}  // namespace tic
