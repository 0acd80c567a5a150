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

#include "hypcount/moebius.hpp"

#include <algorithm>
#include <string>

#include "hypcount/error.hpp"
#include "hypcount/numtheory.hpp"

namespace hypcount {

GlMatrix identity_matrix(const FieldCtx& ctx) {
  return {ctx.one(), ctx.zero(), ctx.zero(), ctx.one()};
}

FieldElem det(const FieldCtx& ctx, const GlMatrix& m) {
  return ctx.sub(ctx.mul(m.a, m.d), ctx.mul(m.b, m.c));
}

GlMatrix multiply(const FieldCtx& ctx, const GlMatrix& m, const GlMatrix& n) {
  return {ctx.add(ctx.mul(m.a, n.a), ctx.mul(m.b, n.c)),
          ctx.add(ctx.mul(m.a, n.b), ctx.mul(m.b, n.d)),
          ctx.add(ctx.mul(m.c, n.a), ctx.mul(m.d, n.c)),
          ctx.add(ctx.mul(m.c, n.b), ctx.mul(m.d, n.d))};
}

GlMatrix scale(const FieldCtx& ctx, const GlMatrix& m, FieldElem s) {
  return {ctx.mul(m.a, s), ctx.mul(m.b, s), ctx.mul(m.c, s), ctx.mul(m.d, s)};
}

GlMatrix adjugate(const FieldCtx& ctx, const GlMatrix& m) {
  return {m.d, ctx.neg(m.b), ctx.neg(m.c), m.a};
}

bool is_scalar(const GlMatrix& m) {
  return m.b.index == 0 && m.c.index == 0 && m.a == m.d;
}

GlMatrix canonical(const FieldCtx& ctx, const GlMatrix& m) {
  for (FieldElem lead : {m.a, m.b, m.c, m.d})
    if (lead.index != 0) return scale(ctx, m, ctx.inv(lead));
  throw InvalidArgument("zero matrix has no canonical form");
}

GlMatrix embed(const Embedding& emb, const GlMatrix& m) {
  return {emb(m.a), emb(m.b), emb(m.c), emb(m.d)};
}

char kind_letter(MoebiusKind kind) {
  switch (kind) {
    case MoebiusKind::A: return 'A';
    case MoebiusKind::B: return 'B';
    case MoebiusKind::C: return 'C';
    case MoebiusKind::D: return 'D';
  }
  return '?';
}

ProjPoint act(const FieldCtx& ctx, const GlMatrix& m, ProjPoint t) {
  if (t.infinite) {
    if (m.c.index == 0) return ProjPoint::infinity();
    return ProjPoint::finite(ctx.div(m.a, m.c));
  }
  const FieldElem den = ctx.add(ctx.mul(m.c, t.x), m.d);
  if (den.index == 0) return ProjPoint::infinity();
  return ProjPoint::finite(ctx.div(ctx.add(ctx.mul(m.a, t.x), m.b), den));
}

ProjPoint act(const FieldExtension& ext, const MoebiusElem& g, ProjPoint t) {
  return act(ext.field, embed(ext.embed, g.rep), t);
}

MoebiusElem classify(const FieldCtx& ctx, const GlMatrix& m) {
  if (det(ctx, m).index == 0) throw InvalidArgument("singular matrix");
  MoebiusElem out;
  out.rep = canonical(ctx, m);
  if (is_scalar(out.rep)) return out;

  GlMatrix power = out.rep;
  uint32_t order = 1;
  while (!is_scalar(power)) {
    power = multiply(ctx, power, out.rep);
    ++order;
    HYPCOUNT_CHECK(order <= ctx.q() + 1, "element order exceeds q + 1");
  }
  out.order = order;

  const FieldElem tr = ctx.add(out.rep.a, out.rep.d);
  const FieldElem disc =
      ctx.sub(ctx.mul(tr, tr), ctx.mul(ctx.from_int(4), det(ctx, out.rep)));
  if (disc.index == 0) {
    out.kind = MoebiusKind::B;
    HYPCOUNT_CHECK(order == ctx.p(), "parabolic element of order != p");
  } else if (is_square(ctx, disc)) {
    out.kind = MoebiusKind::C;
    HYPCOUNT_CHECK((ctx.q() - 1) % order == 0, "homothetic order does not divide q - 1");
  } else {
    out.kind = MoebiusKind::A;
    HYPCOUNT_CHECK((ctx.q() + 1) % order == 0, "elliptic order does not divide q + 1");
  }
  return out;
}

GlMatrix compose(const FieldCtx& ctx, const GlMatrix& g, const GlMatrix& h) {
  return canonical(ctx, multiply(ctx, g, h));
}

GlMatrix inverse(const FieldCtx& ctx, const GlMatrix& g) {
  return canonical(ctx, adjugate(ctx, g));
}

std::vector<ProjPoint> fixed_points(const FieldExtension& quad, const MoebiusElem& g) {
  if (g.kind == MoebiusKind::D) throw InvalidArgument("the identity fixes every point");
  const FieldCtx& k2 = quad.field;
  const GlMatrix m = embed(quad.embed, g.rep);
  std::vector<ProjPoint> pts;
  const FieldElem dma = k2.sub(m.d, m.a);
  if (m.c.index == 0) {
    pts.push_back(ProjPoint::infinity());
    if (dma.index != 0) pts.push_back(ProjPoint::finite(k2.div(m.b, dma)));
  } else {
    // c t^2 + (d - a) t - b = 0
    const FieldElem disc =
        k2.add(k2.mul(dma, dma), k2.mul(k2.from_int(4), k2.mul(m.b, m.c)));
    const auto s = k2.sqrt(disc);
    HYPCOUNT_CHECK(s.has_value(), "discriminant is not a square in F_{q^2}");
    const FieldElem two_c = k2.mul(k2.from_int(2), m.c);
    const FieldElem minus_dma = k2.neg(dma);
    pts.push_back(ProjPoint::finite(k2.div(k2.add(minus_dma, *s), two_c)));
    if (s->index != 0) pts.push_back(ProjPoint::finite(k2.div(k2.sub(minus_dma, *s), two_c)));
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::vector<MoebiusElem> enumerate_pgl(const FieldCtx& ctx) {
  const uint32_t q = ctx.q();
  std::vector<MoebiusElem> out;
  out.reserve(static_cast<size_t>(q) * q * q - q);
  for (uint32_t a = 0; a < 2; ++a) {
    for (uint32_t b = 0; b < q; ++b) {
      if (a == 0 && b > 1) break;
      for (uint32_t c = 0; c < q; ++c) {
        if (a == 0 && b == 0 && c != 1) continue;
        for (uint32_t d = 0; d < q; ++d) {
          GlMatrix m{{a}, {b}, {c}, {d}};
          if (det(ctx, m).index == 0) continue;
          out.push_back(classify(ctx, m));
        }
      }
    }
  }
  HYPCOUNT_CHECK(out.size() == static_cast<size_t>(q) * q * q - q, "PGL_2 size mismatch");
  return out;
}

std::vector<Subtype> subtypes(const FieldCtx& ctx) {
  std::vector<Subtype> out;
  for (uint64_t m : divisors(ctx.q() + 1))
    if (m > 1) out.push_back({MoebiusKind::A, static_cast<uint32_t>(m)});
  out.push_back({MoebiusKind::B, ctx.p()});
  for (uint64_t m : divisors(ctx.q() - 1))
    if (m > 1) out.push_back({MoebiusKind::C, static_cast<uint32_t>(m)});
  return out;
}

SubtypeRep subtype_representative(const FieldTower& tower, MoebiusKind kind, uint32_t m) {
  const FieldCtx& k = tower.base();
  const uint32_t q = k.q();
  SubtypeRep out;
  switch (kind) {
    case MoebiusKind::D:
      throw InvalidArgument("the identity has no subtype representative");
    case MoebiusKind::B:
      out.elem = classify(k, {k.one(), k.one(), k.zero(), k.one()});
      return out;
    case MoebiusKind::C: {
      if (m <= 1 || (q - 1) % m != 0)
        throw InvalidArgument("kind C needs 1 < m | q - 1, got m = " + std::to_string(m));
      const FieldElem lambda = k.pow(mult_generator(k), (q - 1) / m);
      out.elem = classify(k, {lambda, k.zero(), k.zero(), k.one()});
      break;
    }
    case MoebiusKind::A: {
      if (m <= 1 || (q + 1) % m != 0)
        throw InvalidArgument("kind A needs 1 < m | q + 1, got m = " + std::to_string(m));
      const FieldExtension& quad = tower.quadratic();
      const FieldCtx& k2 = quad.field;
      const FieldElem alpha = k2.pow(mult_generator(k2), (q + 1) / m);
      const FieldElem conj = frobenius(k2, alpha, q);
      const auto trace = quad.embed.preimage(k2.add(alpha, conj));
      const auto norm = quad.embed.preimage(k2.mul(alpha, conj));
      HYPCOUNT_CHECK(trace && norm, "trace or norm left the base field");
      out.elem = classify(k, {k.zero(), k.one(), k.neg(*norm), *trace});
      out.alpha = alpha;
      break;
    }
  }
  HYPCOUNT_CHECK(out.elem.kind == kind && out.elem.order == m,
                 "subtype representative classifies inconsistently");
  return out;
}

}  // namespace hypcount
