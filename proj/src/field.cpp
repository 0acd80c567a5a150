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

#include "hypcount/field.hpp"

#include <algorithm>

#include "hypcount/error.hpp"
#include "hypcount/numtheory.hpp"

namespace hypcount {
namespace {

// Dense polynomials over F_p used only while constructing a context.
using RawPoly = std::vector<uint64_t>;

void trim(RawPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

RawPoly raw_mod(RawPoly a, const RawPoly& f, uint64_t p) {
  // f monic
  trim(a);
  const size_t df = f.size() - 1;
  while (a.size() > df) {
    const uint64_t lead = a.back();
    const size_t shift = a.size() - 1 - df;
    for (size_t i = 0; i <= df; ++i)
      a[shift + i] = (a[shift + i] + (p - lead) * f[i]) % p;
    trim(a);
  }
  return a;
}

RawPoly raw_mulmod(const RawPoly& a, const RawPoly& b, const RawPoly& f, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  RawPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return raw_mod(std::move(r), f, p);
}

uint64_t inv_mod(uint64_t a, uint64_t p) {
  uint64_t r = 1, b = a % p, k = p - 2;
  while (k) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
    k >>= 1;
  }
  return r;
}

RawPoly raw_gcd(RawPoly a, RawPoly b, uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // make b monic, then a mod b
    const uint64_t li = inv_mod(b.back(), p);
    for (auto& c : b) c = c * li % p;
    RawPoly r = raw_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool raw_irreducible(const RawPoly& f, uint64_t p) {
  const size_t deg = f.size() - 1;
  RawPoly x{0, 1};
  RawPoly h = raw_mod(x, f, p);
  for (size_t i = 1; i <= deg / 2; ++i) {
    // h <- h^p mod f
    RawPoly acc{1};
    RawPoly base = h;
    for (uint64_t k = p; k; k >>= 1) {
      if (k & 1) acc = raw_mulmod(acc, base, f, p);
      base = raw_mulmod(base, base, f, p);
    }
    h = acc;
    RawPoly diff = h;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (raw_gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

RawPoly digits_of(uint64_t index, uint64_t p, size_t len) {
  RawPoly d(len, 0);
  for (size_t i = 0; i < len; ++i) {
    d[i] = index % p;
    index /= p;
  }
  return d;
}

uint64_t index_of(const RawPoly& d, uint64_t p) {
  uint64_t r = 0;
  for (size_t i = d.size(); i-- > 0;) r = r * p + d[i];
  return r;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d <= n / d; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FieldCtx make_field(uint32_t p, uint32_t e) {
  if (p == 2) throw InvalidArgument("characteristic 2 is not supported");
  if (!is_prime(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
  if (e < 1) throw InvalidArgument("extension degree must be at least 1");
  uint64_t q64 = 1;
  for (uint32_t i = 0; i < e; ++i) {
    q64 *= p;
    if (q64 > kMaxFieldSize)
      throw InvalidArgument("field of size " + std::to_string(p) + "^" + std::to_string(e) +
                            " exceeds the table-backed limit");
  }
  const uint32_t q = static_cast<uint32_t>(q64);

  RawPoly modulus;
  for (uint64_t code = 0; code < q; ++code) {
    RawPoly f = digits_of(code, p, e);
    f.push_back(1);
    if (raw_irreducible(f, p)) {
      modulus = std::move(f);
      break;
    }
  }
  HYPCOUNT_CHECK(!modulus.empty(), "no irreducible polynomial found");

  auto raw_mul = [&](uint64_t a, uint64_t b) {
    RawPoly r = raw_mulmod(digits_of(a, p, e), digits_of(b, p, e), modulus, p);
    r.resize(e, 0);
    return index_of(r, p);
  };
  auto raw_pow = [&](uint64_t a, uint64_t k) {
    uint64_t r = 1;
    while (k) {
      if (k & 1) r = raw_mul(r, a);
      a = raw_mul(a, a);
      k >>= 1;
    }
    return r;
  };

  const auto factors = prime_factors(q - 1);
  uint64_t gen = 0;
  for (uint64_t cand = 1; cand < q; ++cand) {
    bool primitive = true;
    for (uint64_t r : factors) {
      if (raw_pow(cand, (q - 1) / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = cand;
      break;
    }
  }
  HYPCOUNT_CHECK(gen != 0, "no multiplicative generator found");

  auto tables = std::make_shared<FieldCtx::Tables>();
  tables->exp.resize(q - 1);
  tables->log.assign(q, 0);
  uint64_t cur = 1;
  for (uint32_t k = 0; k + 1 < q; ++k) {
    tables->exp[k] = static_cast<uint32_t>(cur);
    tables->log[cur] = k;
    cur = raw_mul(cur, gen);
  }
  HYPCOUNT_CHECK(cur == 1, "generator order mismatch");

  FieldCtx ctx;
  ctx.p_ = p;
  ctx.e_ = e;
  ctx.q_ = q;
  ctx.modulus_.assign(modulus.begin(), modulus.end());
  ctx.tables_ = std::move(tables);
  return ctx;
}

FieldElem FieldCtx::from_int(int64_t v) const {
  int64_t r = v % static_cast<int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<uint32_t>(r)};
}

FieldElem FieldCtx::from_coeffs(std::span<const uint32_t> coeffs) const {
  if (coeffs.size() > e_) throw InvalidArgument("too many coefficients for field element");
  uint32_t r = 0;
  for (size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw InvalidArgument("coefficient out of range");
    r = r * p_ + coeffs[i];
  }
  return {r};
}

std::vector<uint32_t> FieldCtx::coeffs(FieldElem x) const {
  std::vector<uint32_t> d(e_, 0);
  uint32_t v = x.index;
  for (uint32_t i = 0; i < e_; ++i) {
    d[i] = v % p_;
    v /= p_;
  }
  return d;
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const {
  if (e_ == 1) {
    uint32_t s = a.index + b.index;
    return {s >= p_ ? s - p_ : s};
  }
  uint32_t r = 0, place = 1, x = a.index, y = b.index;
  while (x | y) {
    uint32_t d = x % p_ + y % p_;
    if (d >= p_) d -= p_;
    r += d * place;
    place *= p_;
    x /= p_;
    y /= p_;
  }
  return {r};
}

FieldElem FieldCtx::neg(FieldElem a) const {
  if (e_ == 1) return {a.index == 0 ? 0 : p_ - a.index};
  uint32_t r = 0, place = 1, x = a.index;
  while (x) {
    uint32_t d = x % p_;
    r += (d == 0 ? 0 : p_ - d) * place;
    place *= p_;
    x /= p_;
  }
  return {r};
}

FieldElem FieldCtx::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
  if (a.index == 0 || b.index == 0) return {0};
  if (e_ == 1) return {static_cast<uint32_t>(uint64_t{a.index} * b.index % p_)};
  uint32_t k = tables_->log[a.index] + tables_->log[b.index];
  if (k >= q_ - 1) k -= q_ - 1;
  return {tables_->exp[k]};
}

FieldElem FieldCtx::inv(FieldElem a) const {
  if (a.index == 0) throw InvalidArgument("inverse of zero");
  uint32_t k = tables_->log[a.index];
  return {tables_->exp[k == 0 ? 0 : q_ - 1 - k]};
}

FieldElem FieldCtx::div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

FieldElem FieldCtx::pow(FieldElem a, uint64_t k) const {
  if (k == 0) return one();
  if (a.index == 0) return zero();
  const uint64_t l = tables_->log[a.index];
  return {tables_->exp[(l * (k % (q_ - 1))) % (q_ - 1)]};
}

FieldElem FieldCtx::generator() const { return {tables_->exp[q_ > 2 ? 1 : 0]}; }

uint32_t FieldCtx::log(FieldElem a) const {
  if (a.index == 0) throw InvalidArgument("log of zero");
  return tables_->log[a.index];
}

FieldElem FieldCtx::exp(uint64_t k) const { return {tables_->exp[k % (q_ - 1)]}; }

std::optional<FieldElem> FieldCtx::sqrt(FieldElem a) const {
  if (a.index == 0) return zero();
  const uint32_t l = tables_->log[a.index];
  if (l % 2) return std::nullopt;
  FieldElem r{tables_->exp[l / 2]};
  FieldElem s = neg(r);
  return std::min(r, s);
}

std::string FieldCtx::to_string(FieldElem a) const {
  std::string out;
  auto d = coeffs(a);
  for (size_t i = 0; i < d.size(); ++i) {
    if (p_ >= 10 && i > 0) out += '.';
    out += std::to_string(d[i]);
  }
  return out;
}

FieldElem FieldCtx::parse(std::string_view text) const {
  std::vector<uint32_t> d;
  if (p_ < 10) {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw InvalidArgument("bad field element text");
      d.push_back(static_cast<uint32_t>(ch - '0'));
    }
  } else {
    size_t start = 0;
    while (start <= text.size()) {
      size_t dot = text.find('.', start);
      if (dot == std::string_view::npos) dot = text.size();
      auto part = text.substr(start, dot - start);
      if (part.empty()) throw InvalidArgument("bad field element text");
      uint32_t v = 0;
      for (char ch : part) {
        if (ch < '0' || ch > '9') throw InvalidArgument("bad field element text");
        v = v * 10 + static_cast<uint32_t>(ch - '0');
      }
      d.push_back(v);
      start = dot + 1;
    }
  }
  if (d.size() != e_) throw InvalidArgument("field element text has wrong length");
  return from_coeffs(d);
}

Embedding::Embedding(std::vector<FieldElem> image, uint32_t ext_size, uint32_t degree)
    : image_(std::move(image)), preimage_(ext_size, -1), degree_(degree) {
  for (size_t i = 0; i < image_.size(); ++i)
    preimage_[image_[i].index] = static_cast<int32_t>(i);
}

std::optional<FieldElem> Embedding::preimage(FieldElem y) const {
  if (y.index >= preimage_.size() || preimage_[y.index] < 0) return std::nullopt;
  return FieldElem{static_cast<uint32_t>(preimage_[y.index])};
}

FieldExtension extend(const FieldCtx& base, uint32_t d) {
  if (d < 2) throw InvalidArgument("extension degree must be at least 2");
  FieldCtx big = make_field(base.p(), base.e() * d);
  const auto mod = base.modulus();

  auto eval_modulus = [&](FieldElem t) {
    FieldElem acc = big.zero();
    for (size_t i = mod.size(); i-- > 0;) acc = big.add(big.mul(acc, t), big.from_int(mod[i]));
    return acc;
  };
  std::optional<FieldElem> root;
  for (uint32_t i = 0; i < big.q(); ++i) {
    if (eval_modulus({i}).index == 0) {
      root = FieldElem{i};
      break;
    }
  }
  HYPCOUNT_CHECK(root.has_value(), "base modulus has no root in the extension");

  std::vector<FieldElem> image(base.q());
  for (uint32_t i = 0; i < base.q(); ++i) {
    auto c = base.coeffs({i});
    FieldElem acc = big.zero();
    for (size_t j = c.size(); j-- > 0;) acc = big.add(big.mul(acc, *root), big.from_int(c[j]));
    image[i] = acc;
  }
  Embedding emb(std::move(image), big.q(), d);
  return FieldExtension{std::move(big), std::move(emb)};
}

bool is_square(const FieldCtx& ctx, FieldElem x) {
  if (x.index == 0) throw InvalidArgument("squareness of zero is undefined here");
  return ctx.pow(x, (ctx.q() - 1) / 2) == ctx.one();
}

FieldElem mult_generator(const FieldCtx& ctx) { return ctx.generator(); }

FieldElem frobenius(const FieldCtx& ctx, FieldElem x, uint64_t base_q) {
  return ctx.pow(x, base_q);
}

FieldTower::FieldTower(FieldCtx base)
    : base_(std::move(base)),
      quadratic_(extend(base_, 2)),
      quartic_(std::make_shared<Lazy>()) {}

const FieldExtension& FieldTower::quartic() const {
  std::call_once(quartic_->once, [this] { quartic_->ext = extend(base_, 4); });
  return *quartic_->ext;
}

FieldTower make_tower(uint32_t p, uint32_t e) { return FieldTower(make_field(p, e)); }

ByteField::ByteField(const FieldCtx& ctx) : q_(ctx.q()) {
  if (q_ > 256) throw InvalidArgument("byte tables need q <= 256");
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.resize(q_);
  for (uint32_t a = 0; a < q_; ++a) {
    neg_[a] = static_cast<uint8_t>(ctx.neg({a}).index);
    inv_[a] = a == 0 ? 0 : static_cast<uint8_t>(ctx.inv({a}).index);
    for (uint32_t b = 0; b < q_; ++b) {
      add_[a * q_ + b] = static_cast<uint8_t>(ctx.add({a}, {b}).index);
      mul_[a * q_ + b] = static_cast<uint8_t>(ctx.mul({a}, {b}).index);
    }
  }
}

}  // namespace hypcount
