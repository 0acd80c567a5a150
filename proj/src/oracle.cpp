// Copyright 2026 The hypcount Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hypcount/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "hypcount/error.hpp"

namespace hypcount {
namespace {

class UnionFind {
 public:
  explicit UnionFind(size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }
  uint32_t find(uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }
  uint32_t size_of(uint32_t x) { return size_[find(x)]; }

 private:
  std::vector<uint32_t> parent_;
  std::vector<uint32_t> size_;
};

struct Context {
  PrimePower q;
  uint32_t g;
  uint32_t n;
  FieldTower tower;
  ByteField bf;
  NSetCatalog catalog;
  std::vector<MoebiusElem> group;
  std::vector<FormAction> actions;

  Context(const PrimePower& pq, uint32_t genus)
      : q(pq),
        g(genus),
        n(2 * genus + 2),
        tower(make_tower(static_cast<uint32_t>(pq.p), pq.e)),
        bf(tower.base()),
        catalog(tower.base(), n),
        group(enumerate_pgl(tower.base())) {
    actions.reserve(group.size());
    for (const auto& gm : group) actions.emplace_back(tower.base(), bf, gm.rep, n);
  }
  const FieldCtx& field() const { return tower.base(); }
  RationalNSet nset(size_t i) const { return catalog.nset(field(), i); }

  bool stabilizer_flips(size_t i) const {
    const auto h = catalog.form(i);
    const RationalNSet s = nset(i);
    for (size_t idx = 0; idx < group.size(); ++idx) {
      if (group[idx].kind == MoebiusKind::D || !actions[idx].fixes(h)) continue;
      if (epsilon(tower, group[idx].rep, s, s) == Sign::Minus) return true;
    }
    return false;
  }
};

unsigned worker_count(unsigned requested, size_t jobs) {
  unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<size_t>(t, std::max<size_t>(jobs, 1)));
}

void run_burnside(const Context& ctx, unsigned threads, OracleResult& out) {
  const size_t G = ctx.group.size();
  std::vector<uint64_t> stable(G, 0), positive(G, 0);
  const unsigned T = worker_count(threads, G);
  auto work = [&](unsigned t) {
    for (size_t idx = t; idx < G; idx += T) {
      const FormAction& fa = ctx.actions[idx];
      const GlMatrix& rep = ctx.group[idx].rep;
      for (size_t i = 0; i < ctx.catalog.size(); ++i) {
        if (!fa.fixes(ctx.catalog.form(i))) continue;
        ++stable[idx];
        const RationalNSet s = ctx.nset(i);
        if (epsilon(ctx.tower, rep, s, s) == Sign::Plus) ++positive[idx];
      }
    }
  };
  if (T == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < T; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  uint64_t total = 0;
  std::map<std::pair<MoebiusKind, uint32_t>, SubtypeTally> tallies;
  for (size_t idx = 0; idx < G; ++idx) {
    total += 2 * positive[idx];
    const auto key = std::make_pair(ctx.group[idx].kind, ctx.group[idx].order);
    auto [it, fresh] = tallies.try_emplace(key);
    SubtypeTally& t = it->second;
    if (fresh) {
      t.kind = key.first;
      t.m = key.second;
      t.stable_sets = stable[idx];
      t.positive_sets = positive[idx];
    } else if (t.stable_sets != stable[idx] || t.positive_sets != positive[idx]) {
      t.constant = false;
    }
    ++t.elements;
  }
  HYPCOUNT_CHECK(total % G == 0, "Burnside sum is not divisible by the group order");
  out.hyp_burnside = total / G;
  out.tallies.clear();
  for (auto& [key, t] : tallies) out.tallies.push_back(t);
}

// Projective point count of the smooth model of y^2 = lambda f_S(x).
struct PointCounter {
  const ByteField& bf;
  std::vector<int8_t> chi;  // quadratic character, chi[0] = 0

  explicit PointCounter(const FieldCtx& k, const ByteField& b) : bf(b), chi(k.q(), 0) {
    for (uint32_t x = 1; x < k.q(); ++x) chi[x] = is_square(k, FieldElem{x}) ? 1 : -1;
  }
  // Counts for lambda = 1 and lambda = a non-square.
  std::pair<int64_t, int64_t> counts(std::span<const uint8_t> h) const {
    const uint32_t q = bf.q();
    const size_t n = h.size() - 1;
    int64_t sum = 0;
    for (uint32_t x = 0; x < q; ++x) {
      uint8_t acc = 0;
      for (size_t k = n + 1; k-- > 0;) acc = bf.add(bf.mul(acc, static_cast<uint8_t>(x)), h[k]);
      sum += chi[acc];
    }
    const bool inf = h[n] == 0;  // odd degree: one point over infinity
    const int64_t base = q;
    return {base + sum + (inf ? 1 : 2), base - sum + (inf ? 1 : 0)};
  }
};

void run_orbits(const Context& ctx, bool record, OracleResult& out) {
  const FieldCtx& k = ctx.field();
  const size_t N = ctx.catalog.size();
  HYPCOUNT_CHECK(2 * N < (1ull << 32), "catalog too large for the orbit graph");
  UnionFind twisted(2 * N), sets(N);

  const std::array<GlMatrix, 3> gens = {
      GlMatrix{k.one(), k.one(), k.zero(), k.one()},
      canonical(k, GlMatrix{k.generator(), k.zero(), k.zero(), k.one()}),
      GlMatrix{k.zero(), k.one(), k.one(), k.zero()},
  };
  std::vector<uint8_t> image(ctx.n + 1);
  for (const GlMatrix& gm : gens) {
    const FormAction fa(k, ctx.bf, gm, ctx.n);
    for (size_t i = 0; i < N; ++i) {
      fa.apply(ctx.catalog.form(i), image);
      const int64_t j = ctx.catalog.position(image);
      HYPCOUNT_CHECK(j >= 0, "image of an n-set is not an n-set");
      const RationalNSet s = ctx.nset(i);
      const RationalNSet t = ctx.nset(static_cast<size_t>(j));
      const uint32_t flip = is_square(k, global_multiplier(ctx.tower, gm, s, t)) ? 0 : 1;
      const uint32_t a = static_cast<uint32_t>(2 * i), b = static_cast<uint32_t>(2 * j);
      twisted.unite(a, b + flip);
      twisted.unite(a + 1, b + (1 - flip));
      sets.unite(static_cast<uint32_t>(i), static_cast<uint32_t>(j));
    }
  }

  uint64_t hyp = 0, y = 0;
  for (uint32_t x = 0; x < 2 * N; ++x)
    if (twisted.find(x) == x) ++hyp;
  for (uint32_t x = 0; x < N; ++x)
    if (sets.find(x) == x) ++y;
  HYPCOUNT_CHECK(2 * y >= hyp, "more twisted orbits than twice the set orbits");
  out.hyp_orbit = hyp;
  out.y_orbit = y;
  out.sd_orbit = 2 * y - hyp;

  // Self-duality two ways: the orbit graph joins (1, S) with (u, S'), or a
  // stabilizer element of S has epsilon = -1.
  std::vector<int8_t> flips_at_root(N, -1);
  uint64_t selfdual = 0;
  bool consistent = true;
  for (uint32_t i = 0; i < N; ++i) {
    if (sets.find(i) != i) continue;
    const bool by_stabilizer = ctx.stabilizer_flips(i);
    const bool by_graph = twisted.find(2 * i) == twisted.find(2 * i + 1);
    flips_at_root[i] = by_stabilizer ? 1 : 0;
    if (by_stabilizer) ++selfdual;
    if (by_stabilizer != by_graph) consistent = false;
  }
  if (N <= 20000) {
    for (uint32_t i = 0; i < N; ++i) {
      const uint32_t r = sets.find(i);
      if (r != i && (ctx.stabilizer_flips(i) ? 1 : 0) != flips_at_root[r]) consistent = false;
    }
  }
  if (selfdual != out.sd_orbit) consistent = false;
  out.selfdual_classes = selfdual;
  out.selfdual_consistent = consistent;

  // Point counts are isomorphism invariants; self-dual curves have q + 1.
  const PointCounter counter(k, ctx.bf);
  std::vector<int64_t> count_at_root(2 * N, -1);
  std::vector<std::pair<int64_t, int64_t>> counts(N);
  for (uint32_t i = 0; i < N; ++i) counts[i] = counter.counts(ctx.catalog.form(i));
  uint64_t bad = 0;
  std::string first_bad;
  for (uint32_t x = 0; x < 2 * N; ++x) {
    const int64_t c = x % 2 ? counts[x / 2].second : counts[x / 2].first;
    const uint32_t r = twisted.find(x);
    if (count_at_root[r] < 0) count_at_root[r] = c;
    const bool sd_orbit = twisted.find(x ^ 1u) == r;
    if (count_at_root[r] != c || (sd_orbit && c != static_cast<int64_t>(ctx.q.q) + 1)) {
      if (bad++ == 0)
        first_bad = to_string(k, ctx.nset(x / 2)) + (x % 2 ? " (non-square lambda)" : "");
    }
  }
  out.sanity_ok = bad == 0;
  out.sanity_detail = bad == 0 ? "point counts constant on every orbit"
                               : std::to_string(bad) + " point-count violations, first at " +
                                     first_bad;

  if (record) {
    out.orbits.clear();
    std::vector<uint8_t> seen(2 * N, 0);
    for (uint32_t x = 0; x < 2 * N; ++x) {
      const uint32_t r = twisted.find(x);
      if (seen[r]) continue;
      seen[r] = 1;
      OrbitRecord rec;
      rec.nset = to_string(k, ctx.nset(x / 2));
      rec.lambda = x % 2 ? SquareClass::NonSquare : SquareClass::One;
      rec.size = twisted.size_of(x);
      rec.selfdual = twisted.find(x ^ 1u) == r;
      out.orbits.push_back(std::move(rec));
    }
  }
}

nlohmann::ordered_json optional_count(const std::optional<uint64_t>& v) {
  return v ? nlohmann::ordered_json(std::to_string(*v)) : nlohmann::ordered_json(nullptr);
}

std::optional<uint64_t> read_count(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return std::stoull(j.at(key).get<std::string>());
}

nlohmann::ordered_json result_json(const OracleResult& r, bool with_timings) {
  nlohmann::ordered_json j;
  j["g"] = r.g;
  j["q"] = r.q.q;
  j["p"] = r.q.p;
  j["e"] = r.q.e;
  j["hyp_burnside"] = optional_count(r.hyp_burnside);
  j["hyp_orbit"] = optional_count(r.hyp_orbit);
  j["y_orbit"] = optional_count(r.y_orbit);
  j["sd_orbit"] = optional_count(r.sd_orbit);
  j["selfdual_classes"] = optional_count(r.selfdual_classes);
  j["selfdual_consistent"] = r.selfdual_consistent;
  j["sanity_ok"] = r.sanity_ok;
  j["sanity_detail"] = r.sanity_detail;
  nlohmann::ordered_json tallies = nlohmann::ordered_json::array();
  for (const auto& t : r.tallies) {
    tallies.push_back({{"kind", std::string(1, kind_letter(t.kind))},
                       {"m", t.m},
                       {"elements", t.elements},
                       {"stable_sets", t.stable_sets},
                       {"positive_sets", t.positive_sets},
                       {"constant", t.constant}});
  }
  j["tallies"] = tallies;
  if (with_timings) {
    j["elapsed_seconds"] = r.elapsed_seconds;
    j["from_cache"] = r.from_cache;
  }
  return j;
}

MoebiusKind kind_from_letter(char c) {
  switch (c) {
    case 'A':
      return MoebiusKind::A;
    case 'B':
      return MoebiusKind::B;
    case 'C':
      return MoebiusKind::C;
    case 'D':
      return MoebiusKind::D;
  }
  throw InvalidArgument("unknown element kind");
}

std::filesystem::path cache_path(const std::string& dir, const PrimePower& q, uint32_t g,
                                 const FieldCtx& k) {
  return std::filesystem::path(dir) / ("oracle-p" + std::to_string(q.p) + "-e" +
                                       std::to_string(q.e) + "-g" + std::to_string(g) + "-gen" +
                                       k.to_string(k.generator()) + ".json");
}

std::optional<OracleResult> load_cached(const std::filesystem::path& path, OracleMethod method) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const nlohmann::json j = nlohmann::json::parse(in);
    OracleResult r;
    r.g = j.at("g").get<uint32_t>();
    r.q = odd_prime_power(j.at("p").get<uint64_t>(), j.at("e").get<uint32_t>());
    r.hyp_burnside = read_count(j, "hyp_burnside");
    r.hyp_orbit = read_count(j, "hyp_orbit");
    r.y_orbit = read_count(j, "y_orbit");
    r.sd_orbit = read_count(j, "sd_orbit");
    r.selfdual_classes = read_count(j, "selfdual_classes");
    r.selfdual_consistent = j.at("selfdual_consistent").get<bool>();
    r.sanity_ok = j.at("sanity_ok").get<bool>();
    r.sanity_detail = j.at("sanity_detail").get<std::string>();
    for (const auto& t : j.at("tallies")) {
      SubtypeTally s;
      s.kind = kind_from_letter(t.at("kind").get<std::string>().at(0));
      s.m = t.at("m").get<uint32_t>();
      s.elements = t.at("elements").get<uint64_t>();
      s.stable_sets = t.at("stable_sets").get<uint64_t>();
      s.positive_sets = t.at("positive_sets").get<uint64_t>();
      s.constant = t.at("constant").get<bool>();
      r.tallies.push_back(s);
    }
    const bool need_burnside = method != OracleMethod::Orbit;
    const bool need_orbit = method != OracleMethod::Burnside;
    if (need_burnside && !r.hyp_burnside) return std::nullopt;
    if (need_orbit && !r.hyp_orbit) return std::nullopt;
    if (!need_burnside) {
      r.hyp_burnside.reset();
      r.tallies.clear();
    }
    if (!need_orbit) {
      r.hyp_orbit.reset();
      r.y_orbit.reset();
      r.sd_orbit.reset();
      r.selfdual_classes.reset();
    }
    r.from_cache = true;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable cache entries are recomputed
  }
}

}  // namespace

TwistedClass twisted_act(const FieldTower& tower, const GlMatrix& m, const TwistedClass& x) {
  const FieldCtx& k = tower.base();
  const GlMatrix rep = canonical(k, m);
  TwistedClass out;
  out.nset = apply_moebius(k, rep, x.nset);
  const FieldElem j = global_multiplier(tower, rep, x.nset, out.nset);
  out.lambda = x.lambda * (is_square(k, j) ? SquareClass::One : SquareClass::NonSquare);
  return out;
}

bool selfdual_nset(const FieldTower& tower, const RationalNSet& s) {
  for (const MoebiusElem& g : stabilizer(tower.base(), s))
    if (g.kind != MoebiusKind::D && epsilon(tower, g.rep, s, s) == Sign::Minus) return true;
  return false;
}

uint64_t oracle_work(const PrimePower& q, uint32_t g) {
  const unsigned __int128 group = static_cast<unsigned __int128>(q.q) * q.q * q.q - q.q;
  unsigned __int128 sets = 1;
  const uint32_t n = 2 * g + 2;
  for (uint32_t i = 0; i < n - 2; ++i) {
    sets *= q.q;
    if (sets > (static_cast<unsigned __int128>(1) << 80)) return UINT64_MAX;
  }
  sets = sets * q.q * q.q - sets;
  const unsigned __int128 work = group * sets;
  return work > UINT64_MAX ? UINT64_MAX : static_cast<uint64_t>(work);
}

OracleResult run_oracle(const PrimePower& q, uint32_t g, const OracleOptions& options) {
  if (g < 1) throw InvalidArgument("genus must be at least 1");
  const uint64_t work = oracle_work(q, g);
  if (work > options.max_work)
    throw BudgetExceeded("oracle for g = " + std::to_string(g) + ", q = " + std::to_string(q.q) +
                         " needs " + std::to_string(work) + " stability tests, budget is " +
                         std::to_string(options.max_work));
  const auto start = std::chrono::steady_clock::now();

  std::optional<std::filesystem::path> cache;
  if (!options.cache_dir.empty() && !options.record_orbits) {
    const FieldCtx k = make_field(static_cast<uint32_t>(q.p), q.e);
    cache = cache_path(options.cache_dir, q, g, k);
    if (auto hit = load_cached(*cache, options.method); hit && hit->g == g && hit->q == q) {
      hit->elapsed_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return *hit;
    }
  }

  const Context ctx(q, g);
  OracleResult out;
  out.g = g;
  out.q = q;
  if (options.method != OracleMethod::Orbit) run_burnside(ctx, options.threads, out);
  if (options.method != OracleMethod::Burnside) run_orbits(ctx, options.record_orbits, out);
  out.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (cache) {
    std::error_code ec;
    std::filesystem::create_directories(cache->parent_path(), ec);
    std::ofstream os(*cache);
    if (os) os << result_json(out, false).dump() << "\n";
  }
  return out;
}

uint64_t burnside_hyp(const PrimePower& q, uint32_t g, uint64_t max_work) {
  OracleOptions o;
  o.method = OracleMethod::Burnside;
  o.max_work = max_work;
  return *run_oracle(q, g, o).hyp_burnside;
}

OrbitCounts orbit_hyp(const PrimePower& q, uint32_t g, uint64_t max_work) {
  OracleOptions o;
  o.method = OracleMethod::Orbit;
  o.max_work = max_work;
  const OracleResult r = run_oracle(q, g, o);
  return {*r.hyp_orbit, *r.y_orbit, *r.sd_orbit};
}

std::string to_json(const OracleResult& r, bool with_timings) {
  return result_json(r, with_timings).dump();
}

std::string orbit_dump(const OracleResult& r) {
  std::string out;
  for (const auto& o : r.orbits) {
    nlohmann::ordered_json j;
    j["nset"] = o.nset;
    j["lambda"] = o.lambda == SquareClass::One ? "1" : "u";
    j["size"] = o.size;
    j["selfdual"] = o.selfdual;
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace hypcount
