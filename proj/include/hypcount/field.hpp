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

// Exact arithmetic in F_{p^e}, p odd.
//
// An element is stored as its canonical index: the base-p integer whose
// i-th digit is the coefficient of x^i in the power basis of the context's
// modulus. Index order is the "canonical coefficient ordering" used by
// every deterministic scan in the library (generators, roots, enumeration
// of evaluation points). Elements carry no reference to their field; every
// operation takes the context explicitly.
//
// Multiplication goes through discrete log / antilog tables built at
// construction, so contexts are limited to kMaxFieldSize elements. They
// are immutable and cheap to copy (tables are shared).

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hypcount {

struct FieldElem {
  uint32_t index = 0;

  friend constexpr auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

inline constexpr uint32_t kMaxFieldSize = 1u << 20;

class FieldCtx {
 public:
  uint32_t p() const { return p_; }
  uint32_t e() const { return e_; }
  uint32_t q() const { return q_; }

  // Monic irreducible modulus, coefficients low to high (length e + 1).
  std::span<const uint32_t> modulus() const { return modulus_; }

  FieldElem zero() const { return {0}; }
  FieldElem one() const { return {1}; }
  FieldElem from_int(int64_t v) const;
  FieldElem from_coeffs(std::span<const uint32_t> coeffs) const;
  std::vector<uint32_t> coeffs(FieldElem x) const;

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem inv(FieldElem a) const;  // throws InvalidArgument on 0
  FieldElem div(FieldElem a, FieldElem b) const;
  FieldElem pow(FieldElem a, uint64_t k) const;

  // Least element of multiplicative order q - 1.
  FieldElem generator() const;
  // Discrete log to base generator(); a must be nonzero.
  uint32_t log(FieldElem a) const;
  FieldElem exp(uint64_t k) const;
  // Least square root when a is a square (0 maps to 0).
  std::optional<FieldElem> sqrt(FieldElem a) const;

  // Digits of coeffs, x^0 first. Digits are concatenated when p < 10 and
  // separated by '.' otherwise.
  std::string to_string(FieldElem a) const;
  FieldElem parse(std::string_view text) const;

  bool contains(FieldElem a) const { return a.index < q_; }

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
    return a.p_ == b.p_ && a.e_ == b.e_;
  }

 private:
  friend FieldCtx make_field(uint32_t p, uint32_t e);

  struct Tables {
    std::vector<uint32_t> exp;  // size q - 1
    std::vector<uint32_t> log;  // size q, log[0] unused
  };

  uint32_t p_ = 0;
  uint32_t e_ = 0;
  uint32_t q_ = 0;
  std::vector<uint32_t> modulus_;
  std::shared_ptr<const Tables> tables_;
};

// Builds F_{p^e} with the least monic irreducible modulus of degree e,
// where polynomials are compared by their coefficient lists read from
// x^{e-1} down to x^0 (equivalently, by the index of the lower
// coefficients). Rejects even or composite p, e < 1 and fields larger
// than kMaxFieldSize.
FieldCtx make_field(uint32_t p, uint32_t e);

// Ring embedding of a base field into an extension.
class Embedding {
 public:
  Embedding() = default;
  Embedding(std::vector<FieldElem> image, uint32_t ext_size, uint32_t degree);

  FieldElem operator()(FieldElem x) const { return image_[x.index]; }
  std::optional<FieldElem> preimage(FieldElem y) const;
  bool in_base(FieldElem y) const { return preimage(y).has_value(); }
  uint32_t degree() const { return degree_; }
  uint32_t base_size() const { return static_cast<uint32_t>(image_.size()); }

 private:
  std::vector<FieldElem> image_;
  std::vector<int32_t> preimage_;
  uint32_t degree_ = 1;
};

struct FieldExtension {
  FieldCtx field;
  Embedding embed;
};

// F_{q^d} for the base field F_q, with the embedding sending the base
// power-basis generator to the least root of the base modulus.
FieldExtension extend(const FieldCtx& base, uint32_t d);

// Euler criterion; x must be nonzero.
bool is_square(const FieldCtx& ctx, FieldElem x);

FieldElem mult_generator(const FieldCtx& ctx);

// x^{base_q}.
FieldElem frobenius(const FieldCtx& ctx, FieldElem x, uint64_t base_q);

// The field F_q together with its quadratic extension and a lazily built
// quartic extension (only needed as a last resort when evaluating global
// multipliers over very small fields).
class FieldTower {
 public:
  explicit FieldTower(FieldCtx base);

  const FieldCtx& base() const { return base_; }
  const FieldExtension& quadratic() const { return quadratic_; }
  // Throws InvalidArgument when q^4 exceeds kMaxFieldSize.
  const FieldExtension& quartic() const;

 private:
  struct Lazy {
    std::once_flag once;
    std::optional<FieldExtension> ext;
  };
  FieldCtx base_;
  FieldExtension quadratic_;
  std::shared_ptr<Lazy> quartic_;
};

FieldTower make_tower(uint32_t p, uint32_t e);

// Dense add/mul tables over one-byte indices for fields with q <= 256,
// used by the exhaustive scans.
class ByteField {
 public:
  explicit ByteField(const FieldCtx& ctx);

  uint32_t q() const { return q_; }
  uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q_ + b]; }
  uint8_t neg(uint8_t a) const { return neg_[a]; }
  uint8_t inv(uint8_t a) const { return inv_[a]; }  // inv(0) == 0
  const uint8_t* add_table() const { return add_.data(); }
  const uint8_t* mul_table() const { return mul_.data(); }

 private:
  uint32_t q_ = 0;
  std::vector<uint8_t> add_, mul_, neg_, inv_;
};

}  // namespace hypcount
