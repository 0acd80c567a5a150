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

#include "hypcount/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>

#include <json.hpp>

#include "hypcount/census.hpp"
#include "hypcount/error.hpp"
#include "hypcount/field.hpp"
#include "hypcount/moebius.hpp"
#include "hypcount/multiplier.hpp"
#include "hypcount/nset.hpp"

namespace hypcount {
namespace {

// Signals the first counterexample; caught by verify_suite.
struct Counterexample {
  std::string what;
};

class Checker {
 public:
  explicit Checker(VerifyReport& r) : r_(r) {}
  void check(bool ok, const std::function<std::string()>& describe) {
    ++r_.assertions;
    if (!ok) throw Counterexample{describe()};
  }
  void note(std::string s) { r_.notes.push_back(std::move(s)); }
  uint64_t count() const { return r_.assertions; }

 private:
  VerifyReport& r_;
};

std::string matrix_string(const FieldCtx& k, const GlMatrix& m) {
  return "[[" + k.to_string(m.a) + "," + k.to_string(m.b) + "],[" + k.to_string(m.c) + "," +
         k.to_string(m.d) + "]]";
}

std::string point_string(const FieldCtx& k, ProjPoint t) {
  return t.infinite ? std::string("inf") : k.to_string(t.x);
}

std::string sign_string(Sign s) { return s == Sign::Plus ? "+1" : "-1"; }

FieldTower tower_for(const PrimePower& q) {
  return make_tower(static_cast<uint32_t>(q.p), q.e);
}

std::vector<GlMatrix> all_gl2(const FieldCtx& k) {
  std::vector<GlMatrix> out;
  for (uint32_t a = 0; a < k.q(); ++a)
    for (uint32_t b = 0; b < k.q(); ++b)
      for (uint32_t c = 0; c < k.q(); ++c)
        for (uint32_t d = 0; d < k.q(); ++d) {
          const GlMatrix m{{a}, {b}, {c}, {d}};
          if (det(k, m).index != 0) out.push_back(m);
        }
  return out;
}

void suite_eps(Checker& ck, const PrimePower& q, uint32_t n) {
  if (n % 2) throw InvalidArgument("eps suite needs even n");
  const FieldTower tower = tower_for(q);
  const FieldCtx& k = tower.base();
  const ByteField bf(k);
  const NSetCatalog catalog(k, n);
  const uint64_t before = ck.count();
  uint64_t pairs = 0;
  for (const MoebiusElem& g : enumerate_pgl(k)) {
    if (g.kind == MoebiusKind::D) continue;
    const FormAction fa(k, bf, g.rep, n);
    uint64_t stable = 0;
    for (size_t i = 0; i < catalog.size(); ++i) {
      if (!fa.fixes(catalog.form(i))) continue;
      ++stable;
      const RationalNSet s = catalog.nset(k, i);
      const Sign direct = epsilon(tower, g.rep, s, s);
      const Sign closed = epsilon_closed_form(tower, g, s);
      ck.check(direct == closed, [&] {
        return "q=" + std::to_string(q.q) + " n=" + std::to_string(n) + " gamma=" +
               matrix_string(k, g.rep) + " kind=" + kind_letter(g.kind) + " order=" +
               std::to_string(g.order) + " S=" + to_string(k, s) + ": J gives " +
               sign_string(direct) + ", closed form " + sign_string(closed);
      });
    }
    pairs += stable;
    const size_t by_kernel = fixed_nsets(k, g.rep, n).size();
    ck.check(by_kernel == stable, [&] {
      return "q=" + std::to_string(q.q) + " n=" + std::to_string(n) + " gamma=" +
             matrix_string(k, g.rep) + ": " + std::to_string(stable) +
             " stable sets by scan, " + std::to_string(by_kernel) + " by eigenvectors";
    });
  }
  ck.note("eps q=" + std::to_string(q.q) + " n=" + std::to_string(n) + ": " +
          std::to_string(pairs) + " stable (gamma, S) pairs, " +
          std::to_string(ck.count() - before) + " assertions");
}

void suite_counts(Checker& ck, const PrimePower& q, uint32_t n) {
  const FieldTower tower = tower_for(q);
  const FieldCtx& k = tower.base();
  const FieldExtension& quad = tower.quadratic();
  const FieldElem zeta = quad.field.generator();  // not in F_q
  uint64_t p1 = 0, a1 = 0, gm = 0, p10 = 0;
  for_each_form(k, n, [&](std::span<const FieldElem> h) {
    const bool inf = h[n].index == 0;
    const std::span<const FieldElem> f = h.first(inf ? n : n + 1);
    ++p1;
    if (!inf) {
      ++a1;
      if (f[0].index != 0) ++gm;
    }
    if (poly_eval(quad, f, zeta).index != 0) ++p10;
  });
  const auto tag = [&](const char* v) {
    return std::string(v) + " at q=" + std::to_string(q.q) + " n=" + std::to_string(n);
  };
  const BigInt qq = q.q;
  const BigInt e_p1 = a_p1(q, n), e_a1 = qq * A1(q, n), e_gm = (qq - 1) * A2(q, n),
               e_p10 = (qq + 1) * A0(q, n);
  ck.check(p1 == e_p1, [&] { return tag("P^1") + ": " + std::to_string(p1) + " vs " + e_p1.str(); });
  ck.check(a1 == e_a1, [&] { return tag("A^1") + ": " + std::to_string(a1) + " vs " + e_a1.str(); });
  ck.check(gm == e_gm, [&] { return tag("G_m") + ": " + std::to_string(gm) + " vs " + e_gm.str(); });
  ck.check(p10 == e_p10,
           [&] { return tag("P^1_0") + ": " + std::to_string(p10) + " vs " + e_p10.str(); });
  ck.note("counts q=" + std::to_string(q.q) + " n=" + std::to_string(n) + ": P^1 " +
          std::to_string(p1) + ", A^1 " + std::to_string(a1) + ", G_m " + std::to_string(gm) +
          ", P^1_0 " + std::to_string(p10));
}

void suite_norm(Checker& ck, const PrimePower& q) {
  const FieldTower tower = tower_for(q);
  const FieldExtension& quad = tower.quadratic();
  uint64_t tested = 0;
  for (uint32_t i = 1; i < quad.field.q(); ++i) {
    const FieldElem alpha{i};
    if (quad.embed.in_base(alpha)) continue;
    ++tested;
    const NormLemmaReport r = norm_lemma_check(tower, alpha);
    const auto where = [&] {
      return "q=" + std::to_string(q.q) + " alpha=" + quad.field.to_string(alpha) +
             " m=" + std::to_string(r.m);
    };
    ck.check(r.norm_claim_holds, [&] {
      return where() + ": norm is " + (r.norm_is_square ? "" : "not ") + "a square";
    });
    if (r.power_is_square)
      ck.check(r.power_claim_holds, [&] { return where() + ": alpha^m is a square"; });
  }
  ck.note("norm q=" + std::to_string(q.q) + ": " + std::to_string(tested) + " elements");
}

void suite_orbit_lemma(Checker& ck, const PrimePower& q) {
  const FieldTower tower = tower_for(q);
  const FieldCtx& k = tower.base();
  const FieldExtension& quad = tower.quadratic();
  uint64_t points = 0;
  for (const Subtype& st : subtypes(k)) {
    if (st.kind != MoebiusKind::A) continue;
    const SubtypeRep rep = subtype_representative(tower, st.kind, st.m);
    ck.check(rep.elem.rep.a.index == 0 && rep.elem.rep.b == k.one(), [&] {
      return "representative " + matrix_string(k, rep.elem.rep) + " is not of the form [[0,1],[c,d]]";
    });
    const GlMatrix m = embed(quad.embed, rep.elem.rep);
    std::vector<ProjPoint> pts{ProjPoint::infinity()};
    for (uint32_t i = 0; i < quad.field.q(); ++i) pts.push_back(ProjPoint::finite({i}));
    for (const ProjPoint& t : pts) {
      if (act(quad.field, m, t) == t) continue;
      ++points;
      const OrbitMultiplier om = orbit_multiplier_check(tower, rep, t);
      const auto where = [&] {
        return "q=" + std::to_string(q.q) + " m=" + std::to_string(st.m) + " gamma=" +
               matrix_string(k, rep.elem.rep) + " t=" + point_string(quad.field, t);
      };
      ck.check(om.orbit_size == st.m, [&] {
        return where() + ": orbit has " + std::to_string(om.orbit_size) + " points";
      });
      ck.check(om.product == om.alpha_power, [&] {
        return where() + ": J over the orbit is " + quad.field.to_string(om.product) +
               ", alpha^m is " + quad.field.to_string(om.alpha_power);
      });
    }
  }
  ck.note("orbit_lemma q=" + std::to_string(q.q) + ": " + std::to_string(points) +
          " non-fixed points over all kind-A subtypes");
}

// Uniform over rational n-sets, by rejection on squarefreeness.
RationalNSet random_nset(const FieldCtx& k, uint32_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<uint32_t> coef(0, k.q() - 1);
  std::uniform_int_distribution<uint32_t> block(0, k.q());  // 0: contains infinity
  while (true) {
    const bool inf = block(rng) == 0;
    const uint32_t deg = inf ? n - 1 : n;
    FieldPoly f(deg + 1);
    for (uint32_t i = 0; i < deg; ++i) f[i] = FieldElem{coef(rng)};
    f[deg] = k.one();
    if (is_squarefree(k, f)) return make_nset(k, std::move(f), inf);
  }
}

GlMatrix random_gl2(const FieldCtx& k, std::mt19937_64& rng) {
  std::uniform_int_distribution<uint32_t> coef(0, k.q() - 1);
  while (true) {
    const GlMatrix m{{coef(rng)}, {coef(rng)}, {coef(rng)}, {coef(rng)}};
    if (det(k, m).index != 0) return m;
  }
}

struct CocycleCheck {
  Checker& ck;
  const FieldTower& tower;
  const FieldCtx& k;

  void cocycle(const GlMatrix& g, const GlMatrix& r, const RationalNSet& s) {
    const RationalNSet rs = apply_moebius(k, r, s);
    const FieldElem lhs = global_multiplier(tower, multiply(k, g, r), s);
    const FieldElem rhs = k.mul(global_multiplier(tower, r, s, rs), global_multiplier(tower, g, rs));
    ck.check(lhs == rhs, [&] {
      return "q=" + std::to_string(k.q()) + " gamma=" + matrix_string(k, g) + " rho=" +
             matrix_string(k, r) + " S=" + to_string(k, s) + ": J(gamma rho, S)=" +
             k.to_string(lhs) + " but J(rho, S) J(gamma, rho S)=" + k.to_string(rhs);
    });
  }
  // g must stabilize s.
  void conjugation(const GlMatrix& g, const GlMatrix& r, const RationalNSet& s) {
    const GlMatrix c = multiply(k, multiply(k, r, g), adjugate(k, r));
    // adjugate(r) = det(r) r^{-1}; rescale so c = r g r^{-1} exactly.
    const GlMatrix conj = scale(k, c, k.inv(det(k, r)));
    const RationalNSet rs = apply_moebius(k, r, s);
    const FieldElem lhs = global_multiplier(tower, conj, rs);
    const FieldElem rhs = global_multiplier(tower, g, s);
    ck.check(lhs == rhs, [&] {
      return "q=" + std::to_string(k.q()) + " gamma=" + matrix_string(k, g) + " rho=" +
             matrix_string(k, r) + " S=" + to_string(k, s) + ": J(rho gamma rho^-1, rho S)=" +
             k.to_string(lhs) + " but J(gamma, S)=" + k.to_string(rhs);
    });
  }
};

void suite_cocycle(Checker& ck, const PrimePower& q, const std::vector<uint32_t>& ns,
                   const VerifyOptions& opt) {
  const FieldTower tower = tower_for(q);
  const FieldCtx& k = tower.base();
  CocycleCheck cc{ck, tower, k};
  const std::vector<MoebiusElem> group = enumerate_pgl(k);

  if (q.q == 3) {
    // Every pair of matrices against one 6-set with the largest stabilizer.
    const std::vector<RationalNSet> sets = enumerate_nsets(k, 6);
    RationalNSet best = sets.front();
    size_t best_size = 0;
    for (const auto& s : sets) {
      const size_t sz = stabilizer(k, group, s).size();
      if (sz > best_size) {
        best = s;
        best_size = sz;
      }
    }
    const std::vector<GlMatrix> gl = all_gl2(k);
    for (const GlMatrix& g : gl)
      for (const GlMatrix& r : gl) {
        cc.cocycle(g, r, best);
        if (apply_moebius(k, g, best) == best) cc.conjugation(g, r, best);
      }
    ck.note("cocycle q=3: all " + std::to_string(gl.size() * gl.size()) +
            " matrix pairs on S=" + to_string(k, best) + " (stabilizer order " +
            std::to_string(best_size) + ")");
  } else {
    std::mt19937_64 rng(opt.seed ^ q.q);
    const ByteField bf(k);
    std::vector<std::vector<FormAction>> actions;
    for (uint32_t n : ns) {
      actions.emplace_back();
      for (const auto& g : group) actions.back().emplace_back(k, bf, g.rep, n);
    }
    std::uniform_int_distribution<uint32_t> nonzero(1, k.q() - 1);
    for (uint64_t t = 0; t < opt.random_trials; ++t) {
      const size_t which = t % ns.size();
      const uint32_t n = ns[which];
      const RationalNSet s = random_nset(k, n, rng);
      const GlMatrix g = random_gl2(k, rng), r = random_gl2(k, rng);
      cc.cocycle(g, r, s);
      // A random stabilizer element, scaled by a random unit.
      const FieldPoly h = binary_form(s);
      std::vector<uint8_t> hb(h.size());
      for (size_t i = 0; i < h.size(); ++i) hb[i] = static_cast<uint8_t>(h[i].index);
      std::vector<size_t> stab;
      for (size_t i = 0; i < group.size(); ++i)
        if (actions[which][i].fixes(hb)) stab.push_back(i);
      std::uniform_int_distribution<size_t> pick(0, stab.size() - 1);
      const GlMatrix gs = scale(k, group[stab[pick(rng)]].rep, FieldElem{nonzero(rng)});
      cc.conjugation(gs, r, s);
    }
    ck.note("cocycle q=" + std::to_string(q.q) + ": " + std::to_string(opt.random_trials) +
            " random triples");
  }

  if (q.q <= 7) {
    for (uint32_t n : ns) {
      std::map<std::string, std::pair<RationalNSet, std::vector<size_t>>> stabs;
      for (size_t i = 0; i < group.size(); ++i) {
        if (group[i].kind == MoebiusKind::D) continue;
        for (RationalNSet& s : fixed_nsets(k, group[i].rep, n)) {
          auto& slot = stabs[to_string(k, s)];
          slot.first = std::move(s);
          slot.second.push_back(i);
        }
      }
      uint64_t pairs = 0;
      for (auto& [key, entry] : stabs) {
        const RationalNSet& s = entry.first;
        std::vector<GlMatrix> members{identity_matrix(k)};
        for (size_t i : entry.second) members.push_back(group[i].rep);
        std::vector<GlMatrix> sorted = members;
        for (auto& m : sorted) m = canonical(k, m);
        const auto in_stab = [&](const GlMatrix& m) {
          const GlMatrix c = canonical(k, m);
          return std::find(sorted.begin(), sorted.end(), c) != sorted.end();
        };
        for (const GlMatrix& a : members)
          for (const GlMatrix& b : members) {
            ++pairs;
            const GlMatrix ab = multiply(k, a, b);
            ck.check(in_stab(ab), [&] {
              return "q=" + std::to_string(q.q) + " S=" + key + ": stabilizer not closed under " +
                     matrix_string(k, a) + " * " + matrix_string(k, b);
            });
            const FieldElem lhs = global_multiplier(tower, ab, s, s);
            const FieldElem rhs =
                k.mul(global_multiplier(tower, a, s, s), global_multiplier(tower, b, s, s));
            ck.check(lhs == rhs, [&] {
              return "q=" + std::to_string(q.q) + " S=" + key + ": J(ab, S)=" +
                     k.to_string(lhs) + " but J(a, S) J(b, S)=" + k.to_string(rhs) + " for a=" +
                     matrix_string(k, a) + ", b=" + matrix_string(k, b);
            });
          }
      }
      ck.note("stabilizer homomorphism q=" + std::to_string(q.q) + " n=" + std::to_string(n) +
              ": " + std::to_string(stabs.size()) + " sets with nontrivial stabilizer, " +
              std::to_string(pairs) + " pairs");
    }
  }
}

void suite_quot(Checker& ck, const PrimePower& q, uint32_t max_nm) {
  const FieldTower tower = tower_for(q);
  const FieldCtx& k = tower.base();
  const FieldExtension& quad = tower.quadratic();
  const ByteField bf(k);
  for (const Subtype& st : subtypes(k)) {
    if (st.kind == MoebiusKind::D) continue;
    const SubtypeRep rep = subtype_representative(tower, st.kind, st.m);
    const std::vector<ProjPoint> fixed = fixed_points(quad, rep.elem);
    for (uint32_t n = 1; n * st.m <= max_nm; ++n) {
      const uint32_t nm = n * st.m;
      const std::vector<RationalNSet> stable = fixed_nsets(k, rep.elem.rep, nm);
      uint64_t avoiding = 0;
      for (const RationalNSet& s : stable) {
        bool meets = false;
        for (const ProjPoint& t : fixed) meets = meets || contains_point(quad, s, t);
        if (!meets) ++avoiding;
      }
      BigInt expected;
      const char* variety = "";
      switch (st.kind) {
        case MoebiusKind::C:
          expected = BigInt(q.q - 1) * A2(q, n);
          variety = "G_m";
          break;
        case MoebiusKind::B:
          expected = BigInt(q.q) * A1(q, n);
          variety = "A^1";
          break;
        default:
          expected = BigInt(q.q + 1) * A0(q, n);
          variety = "P^1_0";
          break;
      }
      const auto where = [&] {
        return "q=" + std::to_string(q.q) + " kind=" + kind_letter(st.kind) + " m=" +
               std::to_string(st.m) + " nm=" + std::to_string(nm);
      };
      ck.check(avoiding == expected, [&] {
        return where() + ": " + std::to_string(avoiding) + " stable sets in " + variety +
               ", expected " + expected.str();
      });
      // The eigenvector enumeration against a direct scan.
      if (nm >= 2 && std::pow(double(q.q), double(nm)) <= 5e6) {
        const NSetCatalog catalog(k, nm);
        const FormAction fa(k, bf, rep.elem.rep, nm);
        uint64_t scanned = 0;
        for (size_t i = 0; i < catalog.size(); ++i)
          if (fa.fixes(catalog.form(i))) ++scanned;
        ck.check(scanned == stable.size(), [&] {
          return where() + ": " + std::to_string(scanned) + " stable sets by scan, " +
                 std::to_string(stable.size()) + " by eigenvectors";
        });
      }
    }
  }
  ck.note("quot q=" + std::to_string(q.q) + ": nm <= " + std::to_string(max_nm));
}

std::vector<PrimePower> prime_powers(std::initializer_list<uint64_t> qs) {
  std::vector<PrimePower> out;
  for (uint64_t q : qs) out.push_back(odd_prime_power(q));
  return out;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"eps", "counts", "norm", "orbit_lemma",
                                                 "cocycle", "quot"};
  return names;
}

VerifyOptions default_verify_options(std::string_view suite) {
  VerifyOptions o;
  if (suite == "eps") {
    o.qs = prime_powers({3, 5});
    o.ns = {6, 8};
  } else if (suite == "counts") {
    o.qs = prime_powers({3, 5, 7});
    o.ns = {1, 2, 3, 4, 5, 6, 7, 8};
  } else if (suite == "norm") {
    o.qs = prime_powers({3, 5, 7, 9, 11, 13});
  } else if (suite == "orbit_lemma") {
    o.qs = prime_powers({3, 5, 7});
  } else if (suite == "cocycle") {
    o.qs = prime_powers({3, 5, 7});
    o.ns = {6, 8};
  } else if (suite == "quot") {
    o.qs = prime_powers({3, 5});
    o.ns = {8};  // bound on nm
  } else {
    throw InvalidArgument("unknown verification suite '" + std::string(suite) + "'");
  }
  return o;
}

VerifyReport verify_suite(std::string_view suite, const VerifyOptions& options) {
  VerifyOptions o = default_verify_options(suite);
  if (!options.qs.empty()) o.qs = options.qs;
  if (!options.ns.empty()) o.ns = options.ns;
  o.random_trials = options.random_trials;
  o.seed = options.seed;

  VerifyReport report;
  report.suite = std::string(suite);
  Checker ck(report);
  try {
    for (const PrimePower& q : o.qs) {
      if (suite == "eps") {
        for (uint32_t n : o.ns) suite_eps(ck, q, n);
      } else if (suite == "counts") {
        for (uint32_t n : o.ns) suite_counts(ck, q, n);
      } else if (suite == "norm") {
        suite_norm(ck, q);
      } else if (suite == "orbit_lemma") {
        suite_orbit_lemma(ck, q);
      } else if (suite == "cocycle") {
        suite_cocycle(ck, q, o.ns, o);
      } else {
        suite_quot(ck, q, *std::max_element(o.ns.begin(), o.ns.end()));
      }
    }
  } catch (const Counterexample& c) {
    report.passed = false;
    report.counterexample = c.what;
  }
  return report;
}

std::string to_json(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["passed"] = r.passed;
  j["assertions"] = r.assertions;
  j["notes"] = r.notes;
  j["counterexample"] = r.counterexample ? nlohmann::ordered_json(*r.counterexample) : nullptr;
  return j.dump();
}

}  // namespace hypcount
