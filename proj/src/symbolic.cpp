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

#include "hypcount/symbolic.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "hypcount/error.hpp"

namespace hypcount {
namespace {

void trim(IntPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int sign(uint64_t exponent) { return exponent % 2 ? -1 : 1; }

// Residue r' mod 2m with q = r' iff m | q + 1 and (q + 1) / m has parity `parity`.
uint64_t plus_one_class(uint64_t m, uint64_t parity) { return parity ? m - 1 : 2 * m - 1; }
// Same for m | q - 1 and (q - 1) / m.
uint64_t minus_one_class(uint64_t m, uint64_t parity) { return parity ? m + 1 : 1; }

struct Builder {
  ConditionalPolynomial cp;
  void add(Guard g, IntPoly f) { cp.terms.push_back({std::move(g), std::move(f)}); }
};

bool contains(const std::vector<uint64_t>& sorted, uint64_t r) {
  return std::binary_search(sorted.begin(), sorted.end(), r);
}

bool sort_key_less(const GuardedTerm& a, const GuardedTerm& b) {
  const bool ca = a.guard.char_eq || a.guard.char_gt;
  const bool cb = b.guard.char_eq || b.guard.char_gt;
  if (ca != cb) return cb;
  return a.guard < b.guard;
}

}  // namespace

int poly_degree(const IntPoly& f) {
  for (size_t i = f.size(); i-- > 0;)
    if (f[i] != 0) return static_cast<int>(i);
  return -1;
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) { return poly_add(a, poly_scale(b, -1)); }

IntPoly poly_scale(const IntPoly& a, int64_t c) {
  IntPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  trim(r);
  return r;
}

IntPoly monomial(int64_t c, uint32_t k) {
  if (c == 0) return {};
  IntPoly r(k + 1, 0);
  r[k] = c;
  return r;
}

IntPoly poly_exact_div(const IntPoly& a, const IntPoly& b) {
  const int db = poly_degree(b);
  if (db < 0) throw InvalidArgument("division by the zero polynomial");
  IntPoly rem = a;
  trim(rem);
  const int da = poly_degree(rem);
  if (da < db) {
    HYPCOUNT_CHECK(da < 0, "inexact polynomial division");
    return {};
  }
  IntPoly quot(da - db + 1, 0);
  const int64_t lead = b[db];
  for (int i = da; i >= db; --i) {
    if (rem[i] == 0) continue;
    HYPCOUNT_CHECK(rem[i] % lead == 0, "inexact polynomial division");
    const int64_t c = rem[i] / lead;
    quot[i - db] = c;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * b[j];
  }
  HYPCOUNT_CHECK(poly_degree(rem) < 0, "inexact polynomial division");
  trim(quot);
  return quot;
}

BigInt poly_eval(const IntPoly& f, uint64_t q) {
  BigInt acc = 0;
  for (size_t i = f.size(); i-- > 0;) acc = acc * q + f[i];
  return acc;
}

IntPoly a0_poly(uint64_t n) {
  if (n == 0) throw InvalidArgument("A0 needs a positive argument");
  const uint32_t k = static_cast<uint32_t>(n);
  IntPoly num = poly_add(monomial(1, k + 1), monomial(-1, k));
  num = poly_add(num, monomial(-sign((n + 1) / 2), 1));
  num = poly_add(num, monomial(sign(n / 2), 0));
  return poly_exact_div(num, {1, 0, 1});
}

IntPoly a1_poly(uint64_t n) {
  if (n == 0) throw InvalidArgument("A1 needs a positive argument");
  if (n == 1) return {1};
  const uint32_t k = static_cast<uint32_t>(n);
  return poly_add(monomial(1, k - 1), monomial(-1, k - 2));
}

IntPoly a2_poly(uint64_t n) {
  if (n == 0) throw InvalidArgument("A2 needs a positive argument");
  const IntPoly num = poly_add(monomial(1, static_cast<uint32_t>(n)), monomial(-sign(n), 0));
  return poly_exact_div(num, {1, 1});
}

bool Guard::holds(const PrimePower& q) const {
  if (char_eq && q.p != *char_eq) return false;
  if (char_gt && q.p <= *char_gt) return false;
  return contains(residues, q.q % modulus);
}

bool Guard::trivial() const {
  if (char_eq || char_gt) return false;
  for (uint64_t r = 0; r < modulus; ++r) {
    if (modulus % 2 == 0 && r % 2 == 0) continue;
    if (!contains(residues, r)) return false;
  }
  return true;
}

Guard congruence_guard(uint64_t modulus, std::vector<uint64_t> residues) {
  if (modulus == 0) throw InvalidArgument("guard modulus must be positive");
  for (uint64_t& r : residues) r %= modulus;
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
  Guard g;
  g.modulus = modulus;
  g.residues = std::move(residues);
  return g;
}

Guard char_eq_guard(uint64_t prime) {
  Guard g;
  g.char_eq = prime;
  return g;
}

Guard char_gt_guard(uint64_t bound) {
  Guard g;
  g.char_gt = bound;
  return g;
}

ConditionalPolynomial simplify(ConditionalPolynomial cp) {
  trim(cp.generic);
  std::map<Guard, IntPoly> by_guard;
  for (auto& t : cp.terms) {
    if (t.guard.char_eq && *t.guard.char_eq % 2 == 0) continue;  // never holds for odd q
    if (t.guard.trivial()) {
      cp.generic = poly_add(cp.generic, t.poly);
    } else {
      by_guard[t.guard] = poly_add(by_guard[t.guard], t.poly);
    }
  }
  std::vector<GuardedTerm> terms;
  for (auto& [g, f] : by_guard)
    if (poly_degree(f) >= 0) terms.push_back({g, f});

  // Union residue classes of pure congruence terms that share a polynomial.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < terms.size() && !changed; ++i) {
      for (size_t j = i + 1; j < terms.size() && !changed; ++j) {
        Guard& a = terms[i].guard;
        const Guard& b = terms[j].guard;
        if (a.char_eq || a.char_gt || b.char_eq || b.char_gt) continue;
        if (a.modulus != b.modulus || terms[i].poly != terms[j].poly) continue;
        if (std::any_of(b.residues.begin(), b.residues.end(),
                        [&](uint64_t r) { return contains(a.residues, r); }))
          continue;
        std::vector<uint64_t> merged = a.residues;
        merged.insert(merged.end(), b.residues.begin(), b.residues.end());
        a = congruence_guard(a.modulus, std::move(merged));
        terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
      }
    }
  }
  cp.terms.clear();
  for (auto& t : terms) {
    if (t.guard.trivial()) {
      cp.generic = poly_add(cp.generic, t.poly);
    } else {
      cp.terms.push_back(std::move(t));
    }
  }
  std::sort(cp.terms.begin(), cp.terms.end(), sort_key_less);
  return cp;
}

ConditionalPolynomial symbolic_hyp(uint32_t g) {
  if (g < 2) throw InvalidArgument("genus must be at least 2");
  Builder b;
  b.cp.generic = monomial(2, 2 * g - 1);
  for (uint64_t m : divisors(2 * g + 2)) {
    if (m == 1) continue;
    const uint64_t n = (2 * g + 2) / m;
    const int64_t phi = static_cast<int64_t>(euler_phi(m));
    if (n % 2 == 0) b.add(congruence_guard(m, {m - 1}), poly_scale(a0_poly(n), phi));
    b.add(congruence_guard(m, {1}), poly_scale(a2_poly(n), phi));
    if (is_prime(m)) b.add(char_eq_guard(m), poly_scale(a1_poly(n), 2));
  }
  for (uint64_t m : divisors(2 * g + 1)) {
    if (m == 1) continue;
    const uint64_t n = (2 * g + 1) / m;
    const int64_t phi = static_cast<int64_t>(euler_phi(m));
    b.add(congruence_guard(m, {1}), poly_scale(a2_poly(n), 2 * phi));
    if (is_prime(m)) b.add(char_eq_guard(m), poly_scale(a1_poly(n), 2));
  }
  for (uint64_t m : divisors(2 * g)) {
    if (m == 1) continue;
    const uint64_t n = 2 * g / m;
    const int64_t phi = static_cast<int64_t>(euler_phi(m));
    b.add(congruence_guard(2 * m, {plus_one_class(m, n % 2)}), poly_scale(a0_poly(n), phi));
    b.add(congruence_guard(2 * m, {minus_one_class(m, 0)}), poly_scale(a2_poly(n), phi));
  }
  return simplify(std::move(b.cp));
}

ConditionalPolynomial symbolic_sd(uint32_t g) {
  if (g < 2) throw InvalidArgument("genus must be at least 2");
  Builder b;
  for (uint64_t m : divisors(2 * g + 2)) {
    const uint64_t n = (2 * g + 2) / m;
    if (m == 1 || n % 2 == 0) continue;
    b.add(congruence_guard(m, {m - 1}),
          poly_scale(a0_poly(n), static_cast<int64_t>(euler_phi(m))));
  }
  for (uint64_t m : divisors(2 * g)) {
    if (m == 1) continue;
    const uint64_t n = 2 * g / m;
    const int64_t phi = static_cast<int64_t>(euler_phi(m));
    b.add(congruence_guard(2 * m, {plus_one_class(m, 1 - n % 2)}), poly_scale(a0_poly(n), phi));
    b.add(congruence_guard(2 * m, {minus_one_class(m, 1)}), poly_scale(a2_poly(n), phi));
  }
  return simplify(std::move(b.cp));
}

BigInt evaluate(const ConditionalPolynomial& cp, const PrimePower& q) {
  BigInt total = poly_eval(cp.generic, q.q);
  for (const auto& t : cp.terms)
    if (t.guard.holds(q)) total += poly_eval(t.poly, q.q);
  return total;
}

IntPoly restrict_to_class(const ConditionalPolynomial& cp, uint64_t r, uint64_t M,
                          bool assume_large_char) {
  if (M == 0) throw InvalidArgument("modulus must be positive");
  IntPoly out = cp.generic;
  for (const auto& t : cp.terms) {
    if (M % t.guard.modulus)
      throw InvalidArgument("class modulus " + std::to_string(M) + " is not a multiple of " +
                            std::to_string(t.guard.modulus));
    if ((t.guard.char_eq || t.guard.char_gt) && !assume_large_char)
      throw InvalidArgument("characteristic guards need assume_large_char");
    if (t.guard.char_eq) continue;
    if (contains(t.guard.residues, r % t.guard.modulus)) out = poly_add(out, t.poly);
  }
  return out;
}

uint64_t guard_modulus_lcm(const ConditionalPolynomial& cp) {
  uint64_t l = 1;
  for (const auto& t : cp.terms) l = lcm_u64(l, t.guard.modulus);
  return l;
}

std::string to_string(const IntPoly& f) {
  if (poly_degree(f) < 0) return "0";
  std::string out;
  for (size_t i = f.size(); i-- > 0;) {
    const int64_t c = f[i];
    if (c == 0) continue;
    const uint64_t mag = c < 0 ? static_cast<uint64_t>(-c) : static_cast<uint64_t>(c);
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (mag != 1 || i == 0) out += std::to_string(mag);
    if (i >= 1) out += 'q';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

std::string to_string(const Guard& g) {
  std::vector<std::string> parts;
  if (g.modulus > 1 || g.residues != std::vector<uint64_t>{0}) {
    const uint64_t M = g.modulus;
    const auto& R = g.residues;
    if (R.size() == 1) {
      if (R[0] == 1) {
        parts.push_back(std::to_string(M) + "|q-1");
      } else if (R[0] + 1 == M) {
        parts.push_back(std::to_string(M) + "|q+1");
      } else {
        parts.push_back(std::to_string(M) + "|q-" + std::to_string(R[0]));
      }
    } else if (R.size() == 2 && R[0] + R[1] == M) {
      parts.push_back("q≡±" + std::to_string(R[0]) + " mod " + std::to_string(M));
    } else {
      std::string s = "q≡";
      for (size_t i = 0; i < R.size(); ++i) s += (i ? "," : "") + std::to_string(R[i]);
      parts.push_back(s + " mod " + std::to_string(M));
    }
  }
  if (g.char_eq) parts.push_back("p=" + std::to_string(*g.char_eq));
  if (g.char_gt) parts.push_back("p>" + std::to_string(*g.char_gt));
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) out += (i ? ";" : "") + parts[i];
  return out;
}

namespace {

std::string render_text(const ConditionalPolynomial& cp) {
  std::string out = to_string(cp.generic);
  for (const auto& t : cp.terms) out += " + [" + to_string(t.poly) + "]_{" + to_string(t.guard) + "}";
  return out;
}

nlohmann::ordered_json to_json_value(const ConditionalPolynomial& cp) {
  nlohmann::ordered_json j;
  j["generic"] = cp.generic;
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& t : cp.terms) {
    nlohmann::ordered_json term;
    term["mod"] = t.guard.modulus;
    term["residues"] = t.guard.residues;
    term["char_eq"] = t.guard.char_eq ? nlohmann::ordered_json(*t.guard.char_eq) : nullptr;
    term["char_gt"] = t.guard.char_gt ? nlohmann::ordered_json(*t.guard.char_gt) : nullptr;
    term["poly"] = t.poly;
    j["terms"].push_back(term);
  }
  return j;
}

std::string escape_markdown(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string quote_csv(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render(const ConditionalPolynomial& cp, RenderFormat format) {
  switch (format) {
    case RenderFormat::Text:
      return render_text(cp);
    case RenderFormat::Json:
      return to_json_value(cp).dump();
    case RenderFormat::Markdown:
      return escape_markdown(render_text(cp));
    case RenderFormat::Csv:
      return quote_csv(render_text(cp));
  }
  throw InvalidArgument("unknown render format");
}

ConditionalPolynomial from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
  try {
    ConditionalPolynomial cp;
    cp.generic = j.at("generic").get<IntPoly>();
    trim(cp.generic);
    for (const auto& t : j.at("terms")) {
      Guard g = congruence_guard(t.at("mod").get<uint64_t>(),
                                 t.at("residues").get<std::vector<uint64_t>>());
      if (!t.at("char_eq").is_null()) g.char_eq = t.at("char_eq").get<uint64_t>();
      if (!t.at("char_gt").is_null()) g.char_gt = t.at("char_gt").get<uint64_t>();
      IntPoly f = t.at("poly").get<IntPoly>();
      trim(f);
      cp.terms.push_back({std::move(g), std::move(f)});
    }
    return cp;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("bad conditional polynomial: ") + e.what());
  }
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view raw) {
    for (size_t i = 0; i < raw.size(); ++i) {
      if (raw.substr(i, 3) == "≡") {
        s_ += '=';
        i += 2;
      } else if (raw.substr(i, 2) == "±") {
        s_ += "+-";
        i += 1;
      } else if (!std::isspace(static_cast<unsigned char>(raw[i]))) {
        s_ += raw[i];
      }
    }
  }

  ConditionalPolynomial parse() {
    ConditionalPolynomial cp;
    if (s_.empty()) fail("empty expression");
    while (pos_ < s_.size()) {
      const int64_t sgn = read_sign();
      const auto coef = read_uint();
      if (peek() == '[') {
        ++pos_;
        const IntPoly inner = parse_poly(']');
        expect(']');
        expect('_');
        expect('{');
        const size_t close = s_.find('}', pos_);
        if (close == std::string::npos) fail("unterminated guard");
        Guard g = parse_guard(s_.substr(pos_, close - pos_));
        pos_ = close + 1;
        const auto factor = read_uint();
        const int64_t c = sgn * static_cast<int64_t>(coef.value_or(1) * factor.value_or(1));
        cp.terms.push_back({std::move(g), poly_scale(inner, c)});
      } else {
        cp.generic = poly_add(cp.generic, read_monomial(sgn, coef));
      }
    }
    return cp;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("cannot parse '" + s_ + "' at " + std::to_string(pos_) + ": " + what);
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int64_t read_sign() {
    if (peek() == '+') {
      ++pos_;
      return 1;
    }
    if (peek() == '-') {
      ++pos_;
      return -1;
    }
    return 1;
  }
  std::optional<uint64_t> read_uint() {
    const size_t start = pos_;
    uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (s_[pos_++] - '0');
    if (pos_ == start) return std::nullopt;
    return v;
  }
  IntPoly read_monomial(int64_t sgn, std::optional<uint64_t> coef) {
    uint32_t k = 0;
    if (peek() == 'q') {
      ++pos_;
      k = 1;
      if (peek() == '^') {
        ++pos_;
        const bool braced = peek() == '{';
        if (braced) ++pos_;
        const auto e = read_uint();
        if (!e) fail("missing exponent");
        if (braced) expect('}');
        k = static_cast<uint32_t>(*e);
      }
    } else if (!coef) {
      fail("expected a term");
    }
    return monomial(sgn * static_cast<int64_t>(coef.value_or(1)), k);
  }
  IntPoly parse_poly(char stop) {
    IntPoly f;
    while (pos_ < s_.size() && peek() != stop) {
      const int64_t sgn = read_sign();
      const auto coef = read_uint();
      f = poly_add(f, read_monomial(sgn, coef));
    }
    return f;
  }

  Guard parse_guard(const std::string& text) const {
    Guard out;
    size_t start = 0;
    while (start <= text.size()) {
      const size_t end = std::min(text.find(';', start), text.size());
      const std::string part = text.substr(start, end - start);
      start = end + 1;
      if (part.empty()) fail("empty guard");
      if (part.rfind("p=", 0) == 0) {
        out.char_eq = to_uint(part.substr(2));
      } else if (part.rfind("p>", 0) == 0) {
        out.char_gt = to_uint(part.substr(2));
      } else if (const size_t bar = part.find('|'); bar != std::string::npos) {
        const uint64_t M = to_uint(part.substr(0, bar));
        const std::string rest = part.substr(bar + 1);
        if (rest.size() < 3 || rest[0] != 'q' || (rest[1] != '-' && rest[1] != '+'))
          fail("bad divisibility guard '" + part + "'");
        const uint64_t a = to_uint(rest.substr(2)) % M;
        const Guard g = congruence_guard(M, {rest[1] == '-' ? a : (M - a) % M});
        out.modulus = g.modulus;
        out.residues = g.residues;
      } else if (part.rfind("q=", 0) == 0) {
        const size_t mod = part.find("mod");
        if (mod == std::string::npos) fail("missing modulus in '" + part + "'");
        const uint64_t M = to_uint(part.substr(mod + 3));
        std::vector<uint64_t> residues;
        std::stringstream list(part.substr(2, mod - 2));
        std::string item;
        while (std::getline(list, item, ',')) {
          if (item.rfind("+-", 0) == 0) {
            const uint64_t r = to_uint(item.substr(2)) % M;
            residues.push_back(r);
            residues.push_back((M - r) % M);
          } else {
            residues.push_back(to_uint(item));
          }
        }
        const Guard g = congruence_guard(M, std::move(residues));
        out.modulus = g.modulus;
        out.residues = g.residues;
      } else {
        fail("unknown guard '" + part + "'");
      }
      if (end == text.size()) break;
    }
    return out;
  }

  uint64_t to_uint(const std::string& t) const {
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      fail("expected a number, got '" + t + "'");
    return std::stoull(t);
  }

  std::string s_;
  size_t pos_ = 0;
};

}  // namespace

ConditionalPolynomial parse_conditional(std::string_view text) { return Parser(text).parse(); }

std::string_view which_name(Which which) { return which == Which::Hyp ? "hyp" : "sd"; }

BigInt evaluate_table_row(uint32_t g, Which which, const PrimePower& q) {
  const auto row = table_row(g, which);
  if (!row) throw InvalidArgument("no transcribed row for g = " + std::to_string(g));
  if (which == Which::Sd && g % 2 == 1 && q.q % 4 == 1) return 0;
  return evaluate(parse_conditional(*row), q);
}

TableComparison compare_with_table(uint32_t g, Which which, uint64_t q_bound) {
  const auto row = table_row(g, which);
  if (!row) throw InvalidArgument("no transcribed row for g = " + std::to_string(g));
  TableComparison out;
  out.g = g;
  out.which = which;
  out.row = std::string(*row);
  if (which == Which::Hyp && g == 9) {
    out.known_issue = "the p>3 bracket is followed by a stray factor 2, read here as a multiplier";
    std::string alt = out.row;
    const std::string_view token = "_{p>3}2+[";
    if (const size_t at = alt.find(token); at != std::string::npos)
      alt.replace(at, token.size(), "_{p>3}+2[");
    out.alternative_row = alt;
  }
  if (which == Which::Hyp && g == 10)
    out.known_issue = "the term [10q]_{11|q-1} breaks the (q-1) pattern of its neighbours";
  const bool zero_class = which == Which::Sd && g % 2 == 1;
  const ConditionalPolynomial table = parse_conditional(*row);
  const ConditionalPolynomial formula = which == Which::Hyp ? symbolic_hyp(g) : symbolic_sd(g);
  std::optional<ConditionalPolynomial> alternative;
  if (out.alternative_row) alternative = parse_conditional(*out.alternative_row);
  for (const PrimePower& q : odd_prime_powers_up_to(q_bound)) {
    const bool zero = zero_class && q.q % 4 == 1;
    BigInt tv = zero ? BigInt(0) : evaluate(table, q);
    BigInt fv = evaluate(formula, q);
    ++out.points_checked;
    if (alternative && (zero ? BigInt(0) : evaluate(*alternative, q)) != fv)
      ++out.alternative_mismatches;
    if (tv != fv) out.mismatches.push_back({q, std::move(tv), std::move(fv)});
  }
  return out;
}

std::string render_table(uint32_t g_lo, uint32_t g_hi, Which which, RenderFormat format) {
  if (g_lo < 2 || g_hi < g_lo) throw InvalidArgument("genus range must satisfy 2 <= lo <= hi");
  const auto build = [&](uint32_t g) { return which == Which::Hyp ? symbolic_hyp(g) : symbolic_sd(g); };
  const std::string name(which_name(which));
  std::string out;
  switch (format) {
    case RenderFormat::Text:
      for (uint32_t g = g_lo; g <= g_hi; ++g)
        out += name + "(" + std::to_string(g) + ") = " + render(build(g), RenderFormat::Text) + "\n";
      return out;
    case RenderFormat::Markdown:
      out = "| g | " + name + "(g) |\n|---|---|\n";
      for (uint32_t g = g_lo; g <= g_hi; ++g)
        out += "| " + std::to_string(g) + " | " + render(build(g), RenderFormat::Markdown) + " |\n";
      return out;
    case RenderFormat::Csv:
      out = "g,which,form\n";
      for (uint32_t g = g_lo; g <= g_hi; ++g)
        out += std::to_string(g) + "," + name + "," + render(build(g), RenderFormat::Csv) + "\n";
      return out;
    case RenderFormat::Json: {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (uint32_t g = g_lo; g <= g_hi; ++g)
        rows.push_back({{"g", g}, {"which", name}, {"form", to_json_value(build(g))}});
      return rows.dump() + "\n";
    }
  }
  throw InvalidArgument("unknown render format");
}

}  // namespace hypcount
