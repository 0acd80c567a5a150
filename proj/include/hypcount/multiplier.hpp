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

// Local and global multipliers of a GL_2 representative on P^1 and on
// rational n-sets, the square-class sign epsilon, and its closed form.
//
// For m = [[a, b], [c, d]] and a point t,
//   j(m, t) = det / (c t + d)   t != inf, t != -d/c
//           = c                 t = -d/c, c != 0
//           = d                 t = inf,  c == 0
//           = -det / c          t = inf,  c != 0
// and J(m, S) = prod_{t in S} j(m, t) lies in F_q^*. J is evaluated
// without root finding through the identity
//   (c x + d)^n f_{m(S)}((a x + b) / (c x + d)) = J(m, S) f_S(x)
// at the first admissible point x0 of F_q, then F_{q^2}, then F_{q^4}.

#include <cstdint>
#include <optional>

#include "hypcount/field.hpp"
#include "hypcount/moebius.hpp"
#include "hypcount/nset.hpp"

namespace hypcount {

enum class Sign : int8_t { Minus = -1, Plus = 1 };

constexpr Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::Plus : Sign::Minus;
}
constexpr int to_int(Sign s) { return static_cast<int>(s); }
constexpr Sign sign_of_parity(uint64_t exponent) {
  return exponent % 2 ? Sign::Minus : Sign::Plus;
}

#ifdef NDEBUG
inline constexpr bool kCrossCheckMultipliers = false;
#else
inline constexpr bool kCrossCheckMultipliers = true;
#endif

// m and t live in the same field.
FieldElem local_multiplier(const FieldCtx& ctx, const GlMatrix& m, ProjPoint t);

// J(m, S) in F_q^*. With cross_check the value is recomputed at a second
// admissible point and compared (InternalError on disagreement).
FieldElem global_multiplier(const FieldTower& tower, const GlMatrix& m, const RationalNSet& s,
                            bool cross_check = kCrossCheckMultipliers);
// Same, with m(S) already known.
FieldElem global_multiplier(const FieldTower& tower, const GlMatrix& m, const RationalNSet& s,
                            const RationalNSet& image, bool cross_check = kCrossCheckMultipliers);

// +1 iff J(rep, S) is a square. Requires |S| even.
Sign epsilon(const FieldTower& tower, const GlMatrix& m, const RationalNSet& s);
Sign epsilon(const FieldTower& tower, const GlMatrix& m, const RationalNSet& s,
             const RationalNSet& image);
inline Sign epsilon(const FieldTower& tower, const MoebiusElem& g, const RationalNSet& s) {
  return epsilon(tower, g.rep, s);
}

// epsilon read off from (kind, order, fixed points in S). Requires
// g(S) = S, |S| even and g != 1.
//   C: (-1)^{(q-1)/m} if S meets Fix(g), else 1
//   B: 1
//   A: (-1)^{(q+1)/m + (n-2)/m} if Fix(g) is in S, else (-1)^{n/m}
Sign epsilon_closed_form(const FieldTower& tower, const MoebiusElem& g, const RationalNSet& s);

struct OrbitMultiplier {
  FieldElem product;      // prod of j(rep, s) over the orbit, in F_{q^2}
  FieldElem alpha_power;  // alpha^m, in F_{q^2}
  uint32_t orbit_size = 0;
};

// For a kind-A subtype representative [[0, 1], [c, d]] and a non-fixed
// point t of P^1(F_{q^2}).
OrbitMultiplier orbit_multiplier_check(const FieldTower& tower, const SubtypeRep& rep,
                                       ProjPoint t);

struct NormLemmaReport {
  uint32_t m = 0;  // order of alpha in F_{q^2}^* / F_q^*
  bool norm_is_square = false;
  bool norm_claim_holds = false;       // square iff (q + 1) / m even
  std::optional<bool> power_is_square;  // alpha^m, only for even m
  bool power_claim_holds = true;       // alpha^m non-square when m even

  bool holds() const { return norm_claim_holds && power_claim_holds; }
};

// alpha is an element of the tower's quadratic field outside F_q.
NormLemmaReport norm_lemma_check(const FieldTower& tower, FieldElem alpha);

}  // namespace hypcount
