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

#include "hypcount/multiplier.hpp"

#include "hypcount/error.hpp"
#include "hypcount/polynomial.hpp"

namespace hypcount {
namespace {

// Tries every point of `ext` in index order; returns J at the first
// admissible one (and at the second one too when asked).
struct Sweep {
  std::optional<FieldElem> first;
  std::optional<FieldElem> second;
};

Sweep sweep(const FieldExtension& ext, const GlMatrix& base_m, const RationalNSet& s,
            const RationalNSet& image, bool want_two) {
  const FieldCtx& k = ext.field;
  const GlMatrix m = embed(ext.embed, base_m);
  const uint32_t n = static_cast<uint32_t>(s.size());
  Sweep out;
  for (uint32_t i = 0; i < k.q(); ++i) {
    const FieldElem x0{i};
    const FieldElem fs = poly_eval(ext, s.f, x0);
    if (fs.index == 0) continue;
    const FieldElem den = k.add(k.mul(m.c, x0), m.d);
    if (den.index == 0) continue;
    const FieldElem y = k.div(k.add(k.mul(m.a, x0), m.b), den);
    const FieldElem value = k.div(k.mul(k.pow(den, n), poly_eval(ext, image.f, y)), fs);
    if (!out.first) {
      out.first = value;
      if (!want_two) break;
    } else {
      out.second = value;
      break;
    }
  }
  return out;
}

}  // namespace

FieldElem local_multiplier(const FieldCtx& ctx, const GlMatrix& m, ProjPoint t) {
  const FieldElem dt = det(ctx, m);
  if (t.infinite) {
    if (m.c.index == 0) return m.d;
    return ctx.neg(ctx.div(dt, m.c));
  }
  const FieldElem den = ctx.add(ctx.mul(m.c, t.x), m.d);
  if (den.index == 0) return m.c;  // t = -d/c, so c != 0
  return ctx.div(dt, den);
}

FieldElem global_multiplier(const FieldTower& tower, const GlMatrix& m, const RationalNSet& s,
                            bool cross_check) {
  return global_multiplier(tower, m, s, apply_moebius(tower.base(), m, s), cross_check);
}

FieldElem global_multiplier(const FieldTower& tower, const GlMatrix& m, const RationalNSet& s,
                            const RationalNSet& image, bool cross_check) {
  if (det(tower.base(), m).index == 0) throw InvalidArgument("singular matrix");
  const FieldCtx& k = tower.base();
  const uint32_t n = static_cast<uint32_t>(s.size());

  // Base field first, without going through an embedding.
  std::optional<FieldElem> first, second;
  for (uint32_t i = 0; i < k.q() && !(first && (second || !cross_check)); ++i) {
    const FieldElem x0{i};
    const FieldElem fs = poly_eval(k, s.f, x0);
    if (fs.index == 0) continue;
    const FieldElem den = k.add(k.mul(m.c, x0), m.d);
    if (den.index == 0) continue;
    const FieldElem y = k.div(k.add(k.mul(m.a, x0), m.b), den);
    const FieldElem value = k.div(k.mul(k.pow(den, n), poly_eval(k, image.f, y)), fs);
    (first ? second : first) = value;
  }
  if (first && (second || !cross_check)) {
    if (second && *second != *first)
      throw InternalError("global multiplier depends on the evaluation point");
    return *first;
  }

  // Fall back to the extensions; values there must land back in F_q.
  for (int level = 0; level < 2; ++level) {
    const FieldExtension& ext = level == 0 ? tower.quadratic() : tower.quartic();
    const Sweep sw = sweep(ext, m, s, image, true);
    std::optional<FieldElem> a = sw.first, b = sw.second;
    if (!a) continue;
    const auto base_value = ext.embed.preimage(*a);
    HYPCOUNT_CHECK(base_value.has_value(), "global multiplier is not in F_q");
    if (cross_check) {
      const FieldElem other = first ? ext.embed(*first) : (b ? *b : *a);
      if (other != *a) throw InternalError("global multiplier depends on the evaluation point");
    }
    return *base_value;
  }
  throw InternalError("no admissible evaluation point for the global multiplier");
}

Sign epsilon(const FieldTower& tower, const GlMatrix& m, const RationalNSet& s) {
  return epsilon(tower, m, s, apply_moebius(tower.base(), m, s));
}

Sign epsilon(const FieldTower& tower, const GlMatrix& m, const RationalNSet& s,
             const RationalNSet& image) {
  if (s.size() % 2) throw InvalidArgument("epsilon needs an even-sized set");
  const FieldElem j = global_multiplier(tower, m, s, image);
  return is_square(tower.base(), j) ? Sign::Plus : Sign::Minus;
}

Sign epsilon_closed_form(const FieldTower& tower, const MoebiusElem& g, const RationalNSet& s) {
  const FieldCtx& k = tower.base();
  const uint64_t n = s.size();
  if (n % 2) throw InvalidArgument("epsilon needs an even-sized set");
  if (g.kind == MoebiusKind::D) throw InvalidArgument("closed form excludes the identity");
  if (!(apply_moebius(k, g.rep, s) == s)) throw InvalidArgument("set is not stable");
  const uint64_t q = k.q();
  const uint64_t m = g.order;

  if (g.kind == MoebiusKind::B) return Sign::Plus;

  uint32_t inside = 0;
  for (const ProjPoint& t : fixed_points(tower.quadratic(), g))
    if (contains_point(tower.quadratic(), s, t)) ++inside;

  if (g.kind == MoebiusKind::C) return inside ? sign_of_parity((q - 1) / m) : Sign::Plus;

  HYPCOUNT_CHECK(inside != 1, "rational set contains half of a conjugate pair");
  if (inside == 2) {
    HYPCOUNT_CHECK((n - 2) % m == 0, "stable set minus fixed points is not a union of orbits");
    return sign_of_parity((q + 1) / m + (n - 2) / m);
  }
  HYPCOUNT_CHECK(n % m == 0, "stable set is not a union of orbits");
  return sign_of_parity(n / m);
}

OrbitMultiplier orbit_multiplier_check(const FieldTower& tower, const SubtypeRep& rep,
                                       ProjPoint t) {
  if (rep.elem.kind != MoebiusKind::A || !rep.alpha)
    throw InvalidArgument("orbit multiplier check needs a kind-A representative");
  const FieldExtension& quad = tower.quadratic();
  const FieldCtx& k2 = quad.field;
  const GlMatrix m = embed(quad.embed, rep.elem.rep);
  if (act(k2, m, t) == t) throw InvalidArgument("point is fixed");

  OrbitMultiplier out;
  out.product = k2.one();
  ProjPoint s = t;
  do {
    out.product = k2.mul(out.product, local_multiplier(k2, m, s));
    s = act(k2, m, s);
    ++out.orbit_size;
    HYPCOUNT_CHECK(out.orbit_size <= rep.elem.order, "orbit longer than the element order");
  } while (!(s == t));
  out.alpha_power = k2.pow(*rep.alpha, rep.elem.order);
  return out;
}

NormLemmaReport norm_lemma_check(const FieldTower& tower, FieldElem alpha) {
  const FieldExtension& quad = tower.quadratic();
  const FieldCtx& k2 = quad.field;
  const FieldCtx& k = tower.base();
  if (alpha.index == 0 || quad.embed.in_base(alpha))
    throw InvalidArgument("alpha must lie outside F_q");
  const uint64_t q = k.q();

  NormLemmaReport r;
  FieldElem power = alpha;
  r.m = 1;
  while (!quad.embed.in_base(power)) {
    power = k2.mul(power, alpha);
    ++r.m;
  }
  const auto norm = quad.embed.preimage(k2.pow(alpha, q + 1));
  HYPCOUNT_CHECK(norm.has_value(), "norm left the base field");
  r.norm_is_square = is_square(k, *norm);
  r.norm_claim_holds = r.norm_is_square == (((q + 1) / r.m) % 2 == 0);
  if (r.m % 2 == 0) {
    r.power_is_square = is_square(k, *quad.embed.preimage(power));
    r.power_claim_holds = !*r.power_is_square;
  }
  return r;
}

}  // namespace hypcount
