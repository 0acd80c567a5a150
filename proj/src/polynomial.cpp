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

#include "hypcount/polynomial.hpp"

#include <array>

#include "hypcount/error.hpp"

namespace hypcount {
namespace {

// Fixed-capacity scratch polynomial for the hot squarefree test.
struct Scratch {
  std::array<FieldElem, kMaxPolyDegree + 2> c{};
  int deg = -1;

  void trim() {
    while (deg >= 0 && c[deg].index == 0) --deg;
  }
};

// a <- a mod b, b nonzero.
void rem_in_place(const FieldCtx& ctx, Scratch& a, const Scratch& b) {
  const FieldElem lead_inv = ctx.inv(b.c[b.deg]);
  while (a.deg >= b.deg) {
    const FieldElem factor = ctx.mul(a.c[a.deg], lead_inv);
    const int shift = a.deg - b.deg;
    for (int i = 0; i <= b.deg; ++i)
      a.c[shift + i] = ctx.sub(a.c[shift + i], ctx.mul(factor, b.c[i]));
    a.trim();
  }
}

}  // namespace

int poly_degree(std::span<const FieldElem> f) {
  int d = static_cast<int>(f.size()) - 1;
  while (d >= 0 && f[d].index == 0) --d;
  return d;
}

FieldElem poly_eval(const FieldCtx& ctx, std::span<const FieldElem> f, FieldElem x) {
  FieldElem acc = ctx.zero();
  for (size_t i = f.size(); i-- > 0;) acc = ctx.add(ctx.mul(acc, x), f[i]);
  return acc;
}

FieldElem poly_eval(const FieldExtension& ext, std::span<const FieldElem> f, FieldElem x) {
  const FieldCtx& big = ext.field;
  FieldElem acc = big.zero();
  for (size_t i = f.size(); i-- > 0;) acc = big.add(big.mul(acc, x), ext.embed(f[i]));
  return acc;
}

bool is_squarefree(const FieldCtx& ctx, std::span<const FieldElem> f) {
  const int deg = poly_degree(f);
  if (deg < 0) return false;
  if (deg <= 1) return true;
  if (deg > static_cast<int>(kMaxPolyDegree))
    throw InvalidArgument("polynomial degree exceeds supported maximum");
  Scratch a, b;
  a.deg = deg;
  for (int i = 0; i <= deg; ++i) a.c[i] = f[i];
  b.deg = deg - 1;
  for (int i = 1; i <= deg; ++i) b.c[i - 1] = ctx.mul(ctx.from_int(i), f[i]);
  b.trim();
  if (b.deg < 0) return false;  // f is a p-th power
  while (b.deg >= 0) {
    rem_in_place(ctx, a, b);
    std::swap(a, b);
  }
  return a.deg == 0;
}

FieldPoly poly_mul(const FieldCtx& ctx, std::span<const FieldElem> a,
                   std::span<const FieldElem> b) {
  if (a.empty() || b.empty()) return {};
  FieldPoly r(a.size() + b.size() - 1, ctx.zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].index == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = ctx.add(r[i + j], ctx.mul(a[i], b[j]));
  }
  return r;
}

FieldPoly poly_rem(const FieldCtx& ctx, std::span<const FieldElem> a,
                   std::span<const FieldElem> b) {
  const int db = poly_degree(b);
  if (db < 0) throw InvalidArgument("polynomial division by zero");
  FieldPoly r(a.begin(), a.end());
  int dr = poly_degree(r);
  const FieldElem lead_inv = ctx.inv(b[db]);
  while (dr >= db) {
    const FieldElem factor = ctx.mul(r[dr], lead_inv);
    for (int i = 0; i <= db; ++i)
      r[dr - db + i] = ctx.sub(r[dr - db + i], ctx.mul(factor, b[i]));
    dr = poly_degree(r);
  }
  r.resize(static_cast<size_t>(dr + 1));
  return r;
}

FieldPoly poly_gcd(const FieldCtx& ctx, std::span<const FieldElem> a,
                   std::span<const FieldElem> b) {
  FieldPoly x(a.begin(), a.end()), y(b.begin(), b.end());
  x.resize(static_cast<size_t>(poly_degree(x) + 1));
  y.resize(static_cast<size_t>(poly_degree(y) + 1));
  while (!y.empty()) {
    FieldPoly r = poly_rem(ctx, x, y);
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.empty()) {
    const FieldElem li = ctx.inv(x.back());
    for (auto& c : x) c = ctx.mul(c, li);
  }
  return x;
}

}  // namespace hypcount
