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

#pragma once

// PGL_2(F_q): canonical representatives, the action on P^1, orders and the
// A/B/C/D type classification of non-trivial elements.
//
//   A  potentially homothetic: fixed points are a Frobenius-conjugate pair
//      in P^1(F_{q^2}); order m divides q + 1.
//   B  conjugate to t -> t + 1: one rational fixed point; order p.
//   C  homothetic, conjugate to t -> lambda t: two rational fixed points;
//      order m divides q - 1.
//   D  the identity.

#include <cstdint>
#include <optional>
#include <vector>

#include "hypcount/field.hpp"

namespace hypcount {

struct ProjPoint {
  bool infinite = false;
  FieldElem x{};  // zero when infinite

  static ProjPoint infinity() { return {true, {}}; }
  static ProjPoint finite(FieldElem v) { return {false, v}; }

  friend constexpr auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

// [[a, b], [c, d]] acting by t -> (a t + b) / (c t + d).
struct GlMatrix {
  FieldElem a, b, c, d;

  friend constexpr bool operator==(const GlMatrix&, const GlMatrix&) = default;
};

GlMatrix identity_matrix(const FieldCtx& ctx);
FieldElem det(const FieldCtx& ctx, const GlMatrix& m);
GlMatrix multiply(const FieldCtx& ctx, const GlMatrix& m, const GlMatrix& n);
GlMatrix scale(const FieldCtx& ctx, const GlMatrix& m, FieldElem s);
// det(m) * m^{-1}.
GlMatrix adjugate(const FieldCtx& ctx, const GlMatrix& m);
bool is_scalar(const GlMatrix& m);
// Scales so the first nonzero entry in the order a, b, c, d is 1.
GlMatrix canonical(const FieldCtx& ctx, const GlMatrix& m);
GlMatrix embed(const Embedding& emb, const GlMatrix& m);

enum class MoebiusKind : uint8_t { A, B, C, D };

char kind_letter(MoebiusKind kind);

struct MoebiusElem {
  GlMatrix rep;  // canonical
  uint32_t order = 1;
  MoebiusKind kind = MoebiusKind::D;
};

// Entries of m and the point t live in the same field.
ProjPoint act(const FieldCtx& ctx, const GlMatrix& m, ProjPoint t);
// t is a point over ext.field; the base-field representative is embedded.
ProjPoint act(const FieldExtension& ext, const MoebiusElem& g, ProjPoint t);

// Throws InvalidArgument for singular matrices.
MoebiusElem classify(const FieldCtx& ctx, const GlMatrix& m);

// Canonical representative of g * h and of g^{-1}.
GlMatrix compose(const FieldCtx& ctx, const GlMatrix& g, const GlMatrix& h);
GlMatrix inverse(const FieldCtx& ctx, const GlMatrix& g);

// Fixed points in P^1(F_{q^2}), sorted; `quad` must be the quadratic
// extension of the field the representative lives in. Rejects the identity.
std::vector<ProjPoint> fixed_points(const FieldExtension& quad, const MoebiusElem& g);

// All q^3 - q elements, ordered by the indices of (a, b, c, d).
std::vector<MoebiusElem> enumerate_pgl(const FieldCtx& ctx);

struct Subtype {
  MoebiusKind kind;
  uint32_t m;

  friend constexpr bool operator==(const Subtype&, const Subtype&) = default;
};

// Every non-identity subtype: A for 1 < m | q+1, B, C for 1 < m | q-1.
std::vector<Subtype> subtypes(const FieldCtx& ctx);

struct SubtypeRep {
  MoebiusElem elem;
  // Eigenvalue alpha in F_{q^2} (tower's quadratic field), kind A only.
  std::optional<FieldElem> alpha;
};

// Kind C: diag(g^{(q-1)/m}, 1); kind B: [[1, 1], [0, 1]]; kind A:
// [[0, 1], [-N(alpha), Tr(alpha)]] with alpha = zeta^{(q+1)/m} for the
// generator zeta of F_{q^2}^*. Rejects inconsistent (kind, m) and kind D.
SubtypeRep subtype_representative(const FieldTower& tower, MoebiusKind kind, uint32_t m);

}  // namespace hypcount
