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

// Dense univariate polynomials over a FieldCtx, coefficients low to high.

#include <span>
#include <vector>

#include "hypcount/field.hpp"

namespace hypcount {

using FieldPoly = std::vector<FieldElem>;

// Largest degree accepted by the allocation-free routines below.
inline constexpr size_t kMaxPolyDegree = 62;

FieldElem poly_eval(const FieldCtx& ctx, std::span<const FieldElem> f, FieldElem x);

// Evaluates a polynomial with base-field coefficients at a point of an
// extension.
FieldElem poly_eval(const FieldExtension& ext, std::span<const FieldElem> f, FieldElem x);

// Degree of the trimmed polynomial, -1 for zero.
int poly_degree(std::span<const FieldElem> f);

// gcd(f, f') == 1. Constants are squarefree; the zero polynomial is not.
bool is_squarefree(const FieldCtx& ctx, std::span<const FieldElem> f);

FieldPoly poly_mul(const FieldCtx& ctx, std::span<const FieldElem> a,
                   std::span<const FieldElem> b);

// Monic gcd.
FieldPoly poly_gcd(const FieldCtx& ctx, std::span<const FieldElem> a,
                   std::span<const FieldElem> b);

// Remainder of a modulo nonzero b.
FieldPoly poly_rem(const FieldCtx& ctx, std::span<const FieldElem> a,
                   std::span<const FieldElem> b);

}  // namespace hypcount
