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

#include "hypcount/nset.hpp"

#include <algorithm>

#include "hypcount/error.hpp"

namespace hypcount {
namespace {

uint64_t code_of(uint32_t q, std::span<const FieldElem> h) {
  const size_t n = h.size() - 1;
  const bool inf = h[n].index == 0;
  const size_t deg = inf ? n - 1 : n;
  uint64_t code = 0;
  for (size_t i = deg; i-- > 0;) code = code * q + h[i].index;
  if (inf) {
    uint64_t qn = 1;
    for (size_t i = 0; i < n; ++i) qn *= q;
    code += qn;
  }
  return code;
}

// Basis of the right kernel of a square matrix.
std::vector<FieldPoly> kernel(const FieldCtx& ctx, std::vector<FieldPoly> a) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  std::vector<int> pivot_of_col(cols, -1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a[piv][c].index == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const FieldElem li = ctx.inv(a[r][c]);
    for (auto& v : a[r]) v = ctx.mul(v, li);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].index == 0) continue;
      const FieldElem factor = a[i][c];
      for (size_t j = 0; j < cols; ++j) a[i][j] = ctx.sub(a[i][j], ctx.mul(factor, a[r][j]));
    }
    pivot_of_col[c] = static_cast<int>(r);
    ++r;
  }
  std::vector<FieldPoly> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    FieldPoly v(cols, ctx.zero());
    v[free] = ctx.one();
    for (size_t c = 0; c < cols; ++c)
      if (pivot_of_col[c] >= 0) v[c] = ctx.neg(a[pivot_of_col[c]][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

RationalNSet make_nset(const FieldCtx& ctx, FieldPoly f, bool has_inf) {
  const int deg = poly_degree(f);
  if (deg < 0) throw InvalidArgument("n-set polynomial is zero");
  f.resize(static_cast<size_t>(deg + 1));
  if (f.back() != ctx.one()) throw InvalidArgument("n-set polynomial must be monic");
  if (!is_squarefree(ctx, f)) throw InvalidArgument("n-set polynomial must be squarefree");
  RationalNSet s{std::move(f), has_inf};
  if (s.size() < 1) throw InvalidArgument("n-sets need n >= 1");
  return s;
}

std::string to_string(const FieldCtx& ctx, const RationalNSet& s) {
  std::string out = "f=";
  for (size_t i = 0; i < s.f.size(); ++i) {
    if (i) out += ',';
    out += ctx.to_string(s.f[i]);
  }
  out += s.has_inf ? ";inf=1" : ";inf=0";
  return out;
}

RationalNSet parse_nset(const FieldCtx& ctx, std::string_view text) {
  const auto semi = text.find(';');
  if (text.substr(0, 2) != "f=" || semi == std::string_view::npos)
    throw InvalidArgument("bad n-set text");
  const auto tail = text.substr(semi + 1);
  if (tail != "inf=0" && tail != "inf=1") throw InvalidArgument("bad n-set text");
  FieldPoly f;
  auto body = text.substr(2, semi - 2);
  size_t start = 0;
  while (start <= body.size()) {
    size_t comma = body.find(',', start);
    if (comma == std::string_view::npos) comma = body.size();
    f.push_back(ctx.parse(body.substr(start, comma - start)));
    start = comma + 1;
  }
  return make_nset(ctx, std::move(f), tail == "inf=1");
}

FieldPoly binary_form(const RationalNSet& s) {
  FieldPoly h = s.f;
  if (s.has_inf) h.push_back(FieldElem{0});
  return h;
}

RationalNSet from_binary_form(const FieldCtx& ctx, std::span<const FieldElem> h) {
  if (h.size() < 2) throw InvalidArgument("binary form of degree < 1");
  const size_t n = h.size() - 1;
  const bool inf = h[n].index == 0;
  const size_t deg = inf ? n - 1 : n;
  if (h[deg].index == 0) throw InvalidArgument("binary form has a repeated root at infinity");
  const FieldElem li = ctx.inv(h[deg]);
  FieldPoly f(deg + 1);
  for (size_t i = 0; i <= deg; ++i) f[i] = ctx.mul(h[i], li);
  if (!is_squarefree(ctx, f)) throw InvalidArgument("binary form has a repeated root");
  return RationalNSet{std::move(f), inf};
}

std::vector<RationalNSet> enumerate_nsets(const FieldCtx& ctx, uint32_t n) {
  std::vector<RationalNSet> out;
  for_each_form(ctx, n, [&](std::span<const FieldElem> h) {
    const bool inf = h[n].index == 0;
    out.push_back({FieldPoly(h.begin(), h.begin() + (inf ? n : n + 1)), inf});
  });
  return out;
}

std::vector<FieldPoly> substitution_matrix(const FieldCtx& ctx, const GlMatrix& m, uint32_t n) {
  // (dX - b) and (-cX + a), then their powers
  const FieldPoly u{ctx.neg(m.b), m.d};
  const FieldPoly v{m.a, ctx.neg(m.c)};
  std::vector<FieldPoly> upow{FieldPoly{ctx.one()}}, vpow{FieldPoly{ctx.one()}};
  for (uint32_t i = 1; i <= n; ++i) {
    upow.push_back(poly_mul(ctx, upow.back(), u));
    vpow.push_back(poly_mul(ctx, vpow.back(), v));
  }
  std::vector<FieldPoly> rows(n + 1, FieldPoly(n + 1, ctx.zero()));
  for (uint32_t i = 0; i <= n; ++i) {
    const FieldPoly col = poly_mul(ctx, upow[i], vpow[n - i]);
    for (size_t k = 0; k < col.size() && k <= n; ++k) rows[k][i] = col[k];
  }
  return rows;
}

RationalNSet apply_moebius(const FieldCtx& ctx, const GlMatrix& m, const RationalNSet& s) {
  const FieldPoly h = binary_form(s);
  const uint32_t n = static_cast<uint32_t>(h.size() - 1);
  const auto rows = substitution_matrix(ctx, m, n);
  FieldPoly image(n + 1, ctx.zero());
  for (uint32_t k = 0; k <= n; ++k)
    for (uint32_t i = 0; i <= n; ++i) image[k] = ctx.add(image[k], ctx.mul(rows[k][i], h[i]));
  return from_binary_form(ctx, image);
}

std::vector<MoebiusElem> stabilizer(const FieldCtx& ctx, std::span<const MoebiusElem> group,
                                    const RationalNSet& s) {
  std::vector<MoebiusElem> out;
  for (const auto& g : group)
    if (apply_moebius(ctx, g.rep, s) == s) out.push_back(g);
  return out;
}

std::vector<MoebiusElem> stabilizer(const FieldCtx& ctx, const RationalNSet& s) {
  const auto group = enumerate_pgl(ctx);
  return stabilizer(ctx, group, s);
}

bool contains_point(const FieldExtension& ext, const RationalNSet& s, ProjPoint t) {
  if (t.infinite) return s.has_inf;
  return poly_eval(ext, s.f, t.x).index == 0;
}

bool contains_point(const FieldCtx& ctx, const RationalNSet& s, ProjPoint t) {
  if (t.infinite) return s.has_inf;
  return poly_eval(ctx, s.f, t.x).index == 0;
}

std::vector<RationalNSet> fixed_nsets(const FieldCtx& ctx, const GlMatrix& m, uint32_t n) {
  if (n < 1) throw InvalidArgument("n-sets need n >= 1");
  const auto rows = substitution_matrix(ctx, m, n);
  std::vector<std::pair<uint64_t, RationalNSet>> found;
  for (uint32_t si = 1; si < ctx.q(); ++si) {
    auto shifted = rows;
    for (uint32_t k = 0; k <= n; ++k) shifted[k][k] = ctx.sub(shifted[k][k], FieldElem{si});
    const auto basis = kernel(ctx, std::move(shifted));
    if (basis.empty()) continue;
    std::vector<uint32_t> coef(basis.size(), 0);
    while (true) {
      FieldPoly v(n + 1, ctx.zero());
      for (size_t b = 0; b < basis.size(); ++b) {
        if (coef[b] == 0) continue;
        for (uint32_t k = 0; k <= n; ++k)
          v[k] = ctx.add(v[k], ctx.mul(FieldElem{coef[b]}, basis[b][k]));
      }
      const bool normalized = v[n] == ctx.one() || (v[n].index == 0 && v[n - 1] == ctx.one());
      if (normalized) {
        const size_t deg = v[n].index == 0 ? n - 1 : n;
        if (is_squarefree(ctx, std::span<const FieldElem>(v.data(), deg + 1)))
          found.emplace_back(code_of(ctx.q(), v), from_binary_form(ctx, v));
      }
      size_t i = 0;
      while (i < coef.size() && coef[i] + 1 == ctx.q()) coef[i++] = 0;
      if (i == coef.size()) break;
      ++coef[i];
    }
  }
  std::sort(found.begin(), found.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<RationalNSet> out;
  out.reserve(found.size());
  for (auto& [code, s] : found) out.push_back(std::move(s));
  return out;
}

uint64_t form_code(uint32_t q, std::span<const uint8_t> h) {
  const size_t n = h.size() - 1;
  const bool inf = h[n] == 0;
  const size_t deg = inf ? n - 1 : n;
  uint64_t code = 0;
  for (size_t i = deg; i-- > 0;) code = code * q + h[i];
  if (inf) {
    uint64_t qn = 1;
    for (size_t i = 0; i < n; ++i) qn *= q;
    code += qn;
  }
  return code;
}

FormAction::FormAction(const FieldCtx& ctx, const ByteField& bf, const GlMatrix& m, uint32_t n)
    : bf_(&bf), n_(n), rows_((n + 1) * (n + 1)) {
  const auto rows = substitution_matrix(ctx, m, n);
  for (uint32_t k = 0; k <= n; ++k)
    for (uint32_t i = 0; i <= n; ++i)
      rows_[k * (n + 1) + i] = static_cast<uint8_t>(rows[k][i].index);
}

void FormAction::apply(std::span<const uint8_t> h, std::span<uint8_t> out) const {
  const uint32_t w = n_ + 1;
  const uint8_t* add = bf_->add_table();
  const uint8_t* mul = bf_->mul_table();
  const uint32_t q = bf_->q();
  for (uint32_t k = 0; k < w; ++k) {
    const uint8_t* row = rows_.data() + k * w;
    uint8_t acc = 0;
    for (uint32_t i = 0; i < w; ++i) acc = add[acc * q + mul[row[i] * q + h[i]]];
    out[k] = acc;
  }
  const uint8_t lead = out[n_] != 0 ? out[n_] : out[n_ - 1];
  HYPCOUNT_CHECK(lead != 0, "image form has a repeated root at infinity");
  const uint8_t li = bf_->inv(lead);
  for (uint32_t k = 0; k < w; ++k) out[k] = mul[out[k] * q + li];
}

bool FormAction::fixes(std::span<const uint8_t> h) const {
  const uint32_t w = n_ + 1;
  const uint8_t* add = bf_->add_table();
  const uint8_t* mul = bf_->mul_table();
  const uint32_t q = bf_->q();
  auto row_value = [&](uint32_t k) {
    const uint8_t* row = rows_.data() + k * w;
    uint8_t acc = 0;
    for (uint32_t i = 0; i < w; ++i) acc = add[acc * q + mul[row[i] * q + h[i]]];
    return acc;
  };
  const uint32_t top = h[n_] != 0 ? n_ : n_ - 1;
  const uint8_t s = row_value(top);
  if (s == 0) return false;
  for (uint32_t k = w; k-- > 0;) {
    if (k == top) continue;
    if (row_value(k) != mul[s * q + h[k]]) return false;
  }
  return true;
}

NSetCatalog::NSetCatalog(const FieldCtx& ctx, uint32_t n) : q_(ctx.q()), n_(n) {
  if (q_ > 256) throw InvalidArgument("n-set catalogs need q <= 256");
  uint64_t slots = 1;
  for (uint32_t i = 0; i < n; ++i) {
    slots *= q_;
    if (slots > (1ull << 30)) throw InvalidArgument("n-set catalog too large");
  }
  slots += slots / q_;
  slot_.assign(slots, -1);
  for_each_form(ctx, n, [&](std::span<const FieldElem> h) {
    for (const auto& c : h) forms_.push_back(static_cast<uint8_t>(c.index));
    slot_[code_of(q_, h)] = static_cast<int32_t>(count_++);
  });
}

int64_t NSetCatalog::position(std::span<const uint8_t> h) const {
  return slot_[form_code(q_, h)];
}

RationalNSet NSetCatalog::nset(const FieldCtx& ctx, size_t i) const {
  const auto h = form(i);
  FieldPoly poly(h.size());
  for (size_t k = 0; k < h.size(); ++k) poly[k] = FieldElem{h[k]};
  return from_binary_form(ctx, poly);
}

}  // namespace hypcount
