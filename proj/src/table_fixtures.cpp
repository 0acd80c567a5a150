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

// Closed forms of hyp(g) and sd(g) for 2 <= g <= 10 as published, in the
// bracket notation of parse_conditional. Rows are copied term for term,
// including suspect tokens, so comparisons can surface them.

#include <array>

#include "hypcount/symbolic.hpp"

namespace hypcount {
namespace {

constexpr std::array<std::string_view, 9> kHypRows = {
    "2q^3+q^2+2q-2+[2]_{3|q-1}+[8]_{5|q-1}+[2]_{p=5}+[2]_{q=1,3 mod 8}",

    "2q^5+2q^3-2-2[q^2-q]_{4|q+1}+2[q-1]_{p>3}+[4]_{8|q-1}+[12]_{7|q-1}+[2]_{p=7}"
    "+[2]_{q=1,5 mod 12}",

    "2q^7+q^4+4[q^2-q+1]_{3|q-1}+2[q^2-q]_{p=3}-2[q-1]_{4|q+1}+4[q-1]_{q=+-1 mod 5}"
    "+2[q-1]_{p=5}+2[q-1]_{q=+-1 mod 8}+[4]_{5|q-1}+[12]_{9|q-1}+[4]_{q=1,7 mod 16}",

    "2q^9+2q^5+2-2[q^4-q^3+q^2-q+2]_{4|q+1}+4[q-1]_{3|q-1}+4[q-1]_{q=+-1 mod 5}"
    "+[4]_{12|q-1}+[20]_{11|q-1}+[2]_{p=11}+[4]_{q=1,9 mod 20}",

    "2q^11+q^6-2[q^3-q^2]_{4|q+1}+2[q^3-q^2+q-1]_{3|q-1}+2[q^3-q^2-q+1]_{3|q+1}"
    "+2[q^2-q+1]_{8|q-1}+2[q^2-q-1]_{8|q-3}+2[q-1]_{q=+-1 mod 12}+2[q-1]_{p=7}"
    "+6[q-1]_{q=+-1 mod 7}+[6]_{7|q-1}+[2]_{p=13}+[24]_{13|q-1}+[4]_{q=1,11 mod 24}",

    "2q^13+2q^7-2q^5+4q^3-2q^2-2-2[q^6-q^5+q^2+q-2]_{4|q+1}+2[q^4-q^3]_{p=3}"
    "+4[q^4-q^3+q^2-q+1]_{3|q-1}+2[q^2-q]_{p=5}+8[q^2-q+1]_{5|q-1}+[8]_{16|q-1}"
    "+4[q-1]_{q=+-1 mod 8}+6[q-1]_{q=+-1 mod 7}+[16]_{15|q-1}+[6]_{q=1,13 mod 28}",

    "2q^15+q^8+2[q^5-q^4]_{4|q-1}-2[q-1]_{4|q+1}+2[q^3]_{3|q-1}-2[q^3-q^2-q+1]_{3|q+1}"
    "+2[q^3-q^2+q-1]_{8|q-1}+2[q^3-q^2-q+1]_{8|q+1}+6[q-1]_{q=+-1 mod 9}"
    "+4[q-1]_{q=+-1 mod 16}+[6]_{9|q-1}+[32]_{17|q-1}+[2]_{p=17}+[8]_{q=1,15 mod 32}",

    "2q^17+2q^9-2q^8+2q^5-2q^4+2q-2+2[q^5-q^4+q-1]_{p>3}2"
    "+[q^8-q^7+2q^4-2q^3+q^2-q+2]_{4|q-1}+2[q^3-q^2]_{3|q-1}-2[q^3-q^2]_{3|q+1}"
    "+2[q^3-q^2]_{p=5}+4[q^3-q^2]_{q=+-1 mod 5}+2[q^2-q]_{q=1,5 mod 12}"
    "+8[q-1]_{5|q-1}+6[q-1]_{q=+-1 mod 9}+[8]_{20|q-1}+[36]_{19|q-1}+[2]_{p=19}"
    "+[2]_{12|q-1}-[2]_{12|q-5}+[6]_{q=1,17 mod 36}",

    "2q^19+q^10-2[q^7-q^6+q^3-q^2]_{4|q+1}+4[q^6-q^5+q^4-q^3+q^2-q+1]_{3|q-1}"
    "+2[q^6-q^5]_{p=3}+2[q^4-q^3+q^2-q+1]_{8|q-1}+2[q^4-q^3-q^2+q+1]_{8|q-3}"
    "+4[q^3-q^2+q-1]_{5|q-1}+4[q^3-q^2-q+1]_{5|q+1}+12[q^2-q+1]_{7|q-1}"
    "+2[q^2-q]_{p=7}+10[q-1]_{11|q+1}+[10q]_{11|q-1}+2[q-1]_{p=11}"
    "+4[q-1]_{q=+-1 mod 20}+[24]_{21|q-1}+[8]_{q=1,19 mod 40}",
};

constexpr std::array<std::string_view, 9> kSdRows = {
    "q^2-2+[2]_{3|q+1}+[2]_{q=5,7 mod 8}",

    "2q^2-2q+[2]_{p>3}+[4]_{8|q+1}",

    "q^4-2q^2+2+2[q-1]_{4|q+1}+2[q-1]_{q=3,5 mod 8}+[4]_{5|q+1}+[4]_{q=9,15 mod 16}",

    "2q^4-2q^3+2q^2-2q+[4]_{3|q+1}+[4]_{q=+-1 mod 5}",

    "q^6-2q^4+2q^2-2+2[q^3-q^2]_{4|q+1}+2[q^2-q+1]_{8|q-5}+2[q^2-q-1]_{8|q+1}"
    "+2[q-1]_{q=5,7 mod 12}+[6]_{7|q+1}+[4]_{q=13,23 mod 24}",

    "2q^6-2q^5+2q^2-2q+[8]_{16|q+1}+[6]_{q=+-1 mod 7}",

    "q^8-2q^6+2q^4-2q^2+2+2[q^5-q^4+q-1]_{4|q+1}+2[q^3-q^2+q-1]_{8|q-5}"
    "+2[q^3-q^2-q+1]_{8|q-3}+2[q^2-q-1]_{3|q+1}+4[q-1]_{q=7,9 mod 16}+[6]_{9|q+1}"
    "+[8]_{q=17,31 mod 32}",

    "2q^8-2q^7+4q^4-4q^3+2-2[q^2-q-1]_{p=3}+[4]_{3|q-1}+[8]_{5|q+1}+[6]_{q=+-1 mod 9}",

    "q^10-2q^8+2q^6-2q^4+2q^2-2+2[q^7-q^6+q^3-q^2]_{4|q+1}"
    "+2[q^4-q^3+q^2-q+1]_{8|q-5}+2[q^4-q^3-q^2+q+1]_{8|q+1}+4[q-1]_{q=9,11 mod 20}"
    "+[10]_{11|q+1}+[8]_{q=21,39 mod 40}",
};

}  // namespace

std::optional<std::string_view> table_row(uint32_t g, Which which) {
  if (g < 2 || g > 10) return std::nullopt;
  return which == Which::Hyp ? kHypRows[g - 2] : kSdRows[g - 2];
}

}  // namespace hypcount
