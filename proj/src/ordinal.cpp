/*
 * Copyright 2026 The lexigraph authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "lexigraph/ordinal.hpp"

#include <charconv>
#include <stdexcept>

namespace lexigraph {

namespace {

std::shared_ptr<const std::vector<Ordinal::Term>> wrap(std::vector<Ordinal::Term> terms) {
  if (terms.empty()) return nullptr;
  return std::make_shared<const std::vector<Ordinal::Term>>(std::move(terms));
}

}  // namespace

Ordinal::Term::Term(Ordinal exponent, uint64_t coefficient)
    : exponent_(std::make_shared<const Ordinal>(std::move(exponent))), coefficient_(coefficient) {}

bool Ordinal::Term::operator==(const Term& rhs) const {
  return coefficient_ == rhs.coefficient_ &&
         (exponent_ == rhs.exponent_ || *exponent_ == *rhs.exponent_);
}

const std::vector<Ordinal::Term>& Ordinal::terms() const {
  static const std::vector<Term> empty;
  return terms_ ? *terms_ : empty;
}

Ordinal::Ordinal(uint64_t n) {
  if (n > 0) terms_ = wrap({Term{Ordinal{}, n}});
}

Ordinal Ordinal::omega() { return omega_power(Ordinal{1}, 1); }

Ordinal Ordinal::omega_power(const Ordinal& exponent, uint64_t coefficient) {
  if (coefficient == 0) throw std::invalid_argument("ordinal coefficient must be >= 1");
  Ordinal result;
  result.terms_ = wrap({Term{exponent, coefficient}});
  return result;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient() == 0)
      throw std::invalid_argument("ordinal coefficient must be >= 1");
    if (i > 0 && terms[i - 1].exponent() <= terms[i].exponent())
      throw std::invalid_argument("ordinal exponents must strictly decrease");
  }
  Ordinal result;
  result.terms_ = wrap(std::move(terms));
  return result;
}

bool Ordinal::is_finite() const {
  const auto& t = terms();
  return t.empty() || (t.size() == 1 && t[0].exponent().is_zero());
}

uint64_t Ordinal::as_natural() const {
  if (!is_finite()) throw std::domain_error("ordinal is infinite: " + str());
  return terms().empty() ? 0 : terms()[0].coefficient();
}

uint64_t Ordinal::natural_tail() const {
  const auto& t = terms();
  if (t.empty() || !t.back().exponent().is_zero()) return 0;
  return t.back().coefficient();
}

Ordinal::Parity Ordinal::parity() const {
  return natural_tail() % 2 == 0 ? Parity::Even : Parity::Odd;
}

Ordinal::Kind Ordinal::classify() const {
  const auto& t = terms();
  if (t.empty()) return Kind::Zero;
  return t.back().exponent().is_zero() ? Kind::Successor : Kind::Limit;
}

Ordinal Ordinal::operator+(const Ordinal& rhs) const {
  if (rhs.is_zero()) return *this;
  const auto& left = terms();
  const auto& right = rhs.terms();
  const Ordinal& lead = right.front().exponent();
  std::vector<Term> out;
  for (const Term& t : left) {
    auto cmp = t.exponent() <=> lead;
    if (cmp == std::strong_ordering::greater) {
      out.push_back(t);
    } else if (cmp == std::strong_ordering::equal) {
      out.push_back(Term{t.exponent(), t.coefficient() + right.front().coefficient()});
      out.insert(out.end(), right.begin() + 1, right.end());
      return from_terms(std::move(out));
    } else {
      break;  // absorbed
    }
  }
  out.insert(out.end(), right.begin(), right.end());
  return from_terms(std::move(out));
}

std::strong_ordering Ordinal::operator<=>(const Ordinal& rhs) const {
  if (terms_ == rhs.terms_) return std::strong_ordering::equal;
  const auto& a = terms();
  const auto& b = rhs.terms();
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    auto ce = a[i].exponent() <=> b[i].exponent();
    if (ce != std::strong_ordering::equal) return ce;
    auto cc = a[i].coefficient() <=> b[i].coefficient();
    if (cc != std::strong_ordering::equal) return cc;
  }
  return a.size() <=> b.size();
}

namespace {

uint64_t parse_natural(std::string_view text, size_t& pos) {
  uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
  if (ec != std::errc{} || ptr == text.data() + pos)
    throw std::invalid_argument("expected a natural number in ordinal: " + std::string(text));
  pos = static_cast<size_t>(ptr - text.data());
  return value;
}

// Parses one term: `n`, `w`, `w*c`, `w^E`, or `w^E*c`. `E` itself is an
// ordinal expression; it is bracketed as `(...)` when it has several terms.
Ordinal::Term parse_term(std::string_view text, size_t& pos) {
  if (pos >= text.size())
    throw std::invalid_argument("empty ordinal term in: " + std::string(text));
  if (text[pos] != 'w') {
    uint64_t n = parse_natural(text, pos);
    if (n == 0) throw std::invalid_argument("0 is not a valid ordinal term");
    return {Ordinal{}, n};
  }
  ++pos;
  Ordinal exponent{1};
  if (pos < text.size() && text[pos] == '^') {
    ++pos;
    if (pos < text.size() && text[pos] == '(') {
      size_t depth = 1, end = pos + 1;
      while (end < text.size() && depth > 0) {
        if (text[end] == '(') ++depth;
        if (text[end] == ')') --depth;
        ++end;
      }
      if (depth != 0)
        throw std::invalid_argument("unbalanced parens in ordinal: " + std::string(text));
      exponent = Ordinal::parse(text.substr(pos + 1, end - pos - 2));
      pos = end;
    } else {
      size_t sub = pos;
      Ordinal::Term t = parse_term(text, sub);
      exponent = Ordinal::from_terms({t});
      pos = sub;
    }
  }
  uint64_t coefficient = 1;
  if (pos < text.size() && text[pos] == '*') {
    ++pos;
    coefficient = parse_natural(text, pos);
  }
  return {exponent, coefficient};
}

}  // namespace

Ordinal Ordinal::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty ordinal");
  if (text == "0") return Ordinal{};
  std::vector<Term> terms;
  size_t pos = 0;
  while (true) {
    Term t = parse_term(text, pos);
    if (t.exponent().is_zero() && pos < text.size())
      throw std::invalid_argument("natural part must be the last ordinal term: " +
                                  std::string(text));
    terms.push_back(std::move(t));
    if (pos == text.size()) break;
    if (text[pos] != '+')
      throw std::invalid_argument("unexpected character in ordinal: " + std::string(text));
    ++pos;
  }
  return from_terms(std::move(terms));  // rejects non-decreasing exponents
}

std::string Ordinal::str() const {
  const auto& ts = terms();
  if (ts.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < ts.size(); ++i) {
    if (i > 0) out += '+';
    const Term& t = ts[i];
    if (t.exponent().is_zero()) {
      out += std::to_string(t.coefficient());
      continue;
    }
    out += 'w';
    if (t.exponent() != Ordinal{1}) {
      std::string e = t.exponent().str();
      out += '^';
      if (t.exponent().terms().size() > 1 ||
          (!t.exponent().is_finite() && t.exponent().terms()[0].coefficient() > 1)) {
        out += '(' + e + ')';
      } else {
        out += e;
      }
    }
    if (t.coefficient() > 1) out += '*' + std::to_string(t.coefficient());
  }
  return out;
}

}  // namespace lexigraph
