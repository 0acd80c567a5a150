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

// Rational n-sets of P^1 over F_q.
//
// A Galois-stable set S of n points of P^1 is stored as the monic
// squarefree polynomial f_S = prod_{t in S, t != inf} (x - t) over F_q plus
// a flag for inf in S. Equivalently S is the zero set of the binary form
// H_S(X, Z) = Z^n f(X / Z) of degree n, whose
// coefficient vector (X^0 first, length n + 1) is what the action code
// works on: the coefficient of X^n is 1 when inf is not in S and 0 when it
// is.
//
// Enumeration order: all monic squarefree f of degree n (inf not in S),
// then all of degree n - 1 (inf in S); inside a block, ascending by the
// base-q integer whose i-th digit is the index of the coefficient of x^i.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypcount/error.hpp"
#include "hypcount/field.hpp"
#include "hypcount/moebius.hpp"
#include "hypcount/polynomial.hpp"

namespace hypcount {

struct RationalNSet {
  FieldPoly f;  // monic, squarefree
  bool has_inf = false;

  size_t size() const { return f.size() - 1 + (has_inf ? 1 : 0); }

  friend bool operator==(const RationalNSet&, const RationalNSet&) = default;
};

// Validates monic, squarefree and n >= 1.
RationalNSet make_nset(const FieldCtx& ctx, FieldPoly f, bool has_inf);

// "f=<c0>,<c1>,...;inf=<0|1>" with FieldCtx::to_string coefficients.
std::string to_string(const FieldCtx& ctx, const RationalNSet& s);
RationalNSet parse_nset(const FieldCtx& ctx, std::string_view text);

// Coefficients of H_S, X^0 first, length n + 1.
FieldPoly binary_form(const RationalNSet& s);
// Inverse of binary_form up to a nonzero scalar. Throws InvalidArgument
// if h does not describe n distinct points.
RationalNSet from_binary_form(const FieldCtx& ctx, std::span<const FieldElem> h);

// Calls fn(std::span<const FieldElem> h) for the binary form of every
// rational n-set, in enumeration order.
template <class Fn>
void for_each_form(const FieldCtx& ctx, uint32_t n, Fn&& fn);

std::vector<RationalNSet> enumerate_nsets(const FieldCtx& ctx, uint32_t n);

// Columns of the linear map H -> H o adj(m) on binary forms of degree n:
// entry [k][i] is the X^k coefficient of (dX - bZ)^i (-cX + aZ)^{n-i}.
std::vector<FieldPoly> substitution_matrix(const FieldCtx& ctx, const GlMatrix& m, uint32_t n);

// gamma(S), computed by substituting the adjugate representative into H_S.
RationalNSet apply_moebius(const FieldCtx& ctx, const GlMatrix& m, const RationalNSet& s);
inline RationalNSet apply_moebius(const FieldCtx& ctx, const MoebiusElem& g,
                                  const RationalNSet& s) {
  return apply_moebius(ctx, g.rep, s);
}

std::vector<MoebiusElem> stabilizer(const FieldCtx& ctx, std::span<const MoebiusElem> group,
                                    const RationalNSet& s);
std::vector<MoebiusElem> stabilizer(const FieldCtx& ctx, const RationalNSet& s);

// t is a point of P^1 over ext.field.
bool contains_point(const FieldExtension& ext, const RationalNSet& s, ProjPoint t);
// t is a point of P^1(F_q).
bool contains_point(const FieldCtx& ctx, const RationalNSet& s, ProjPoint t);

// Every gamma-stable rational n-set, found as the normalized eigenvectors
// of the substitution matrix (ascending enumeration order). Independent of
// the exhaustive stability scan.
std::vector<RationalNSet> fixed_nsets(const FieldCtx& ctx, const GlMatrix& m, uint32_t n);

// Position of a binary form in the dense code space of size
// q^n + q^{n-1}: sum h_i q^i (i < n) when h_n = 1, and
// q^n + sum h_i q^i (i < n - 1) when h_n = 0, h_{n-1} = 1.
uint64_t form_code(uint32_t q, std::span<const uint8_t> h);

// Table-driven action on byte-encoded binary forms (q <= 256).
class FormAction {
 public:
  FormAction(const FieldCtx& ctx, const ByteField& bf, const GlMatrix& m, uint32_t n);

  // out <- scalar multiple of the image form, normalized.
  void apply(std::span<const uint8_t> h, std::span<uint8_t> out) const;
  // True iff the image of h is proportional to h (h normalized).
  bool fixes(std::span<const uint8_t> h) const;

 private:
  const ByteField* bf_;
  uint32_t n_;
  std::vector<uint8_t> rows_;  // (n+1) x (n+1), row k = coefficient of X^k
};

// Every rational n-set as a normalized byte form, in enumeration order,
// with a dense code -> position lookup.
class NSetCatalog {
 public:
  NSetCatalog(const FieldCtx& ctx, uint32_t n);

  uint32_t n() const { return n_; }
  size_t size() const { return count_; }
  std::span<const uint8_t> form(size_t i) const {
    return {forms_.data() + i * (n_ + 1), n_ + 1};
  }
  // -1 when the form is not a valid n-set.
  int64_t position(std::span<const uint8_t> h) const;
  RationalNSet nset(const FieldCtx& ctx, size_t i) const;

 private:
  uint32_t q_;
  uint32_t n_;
  size_t count_ = 0;
  std::vector<uint8_t> forms_;
  std::vector<int32_t> slot_;
};

// ---------------------------------------------------------------------------

template <class Fn>
void for_each_form(const FieldCtx& ctx, uint32_t n, Fn&& fn) {
  if (n < 1) throw InvalidArgument("n-sets need n >= 1");
  if (n > kMaxPolyDegree) throw InvalidArgument("n exceeds supported maximum");
  const uint32_t q = ctx.q();
  FieldPoly h(n + 1, ctx.zero());
  for (int block = 0; block < 2; ++block) {
    const uint32_t deg = block == 0 ? n : n - 1;
    std::fill(h.begin(), h.end(), ctx.zero());
    h[deg] = ctx.one();
    const std::span<const FieldElem> f(h.data(), deg + 1);
    while (true) {
      if (is_squarefree(ctx, f)) fn(std::span<const FieldElem>(h));
      uint32_t i = 0;
      while (i < deg && h[i].index + 1 == q) h[i++] = ctx.zero();
      if (i == deg) break;
      h[i].index += 1;
    }
  }
}

}  // namespace hypcount
