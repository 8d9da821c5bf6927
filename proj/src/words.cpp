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

#include "lexigraph/words.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lexigraph {

Colour Colour::parse(std::string_view text) {
  size_t colon = text.rfind(':');
  if (colon == std::string_view::npos) return Colour{Ordinal::parse(text), 0};
  Colour c;
  c.index = Ordinal::parse(text.substr(0, colon));
  c.symbol = std::stoull(std::string(text.substr(colon + 1)));
  return c;
}

std::string Colour::str() const {
  if (symbol == 0) return index.str();
  return index.str() + ':' + std::to_string(symbol);
}

void ColourFamily::add_class(const Ordinal& index, std::set<uint64_t> symbols) {
  if (symbols.empty()) throw std::invalid_argument("colour class must be nonempty");
  auto [it, inserted] = classes_.emplace(index, std::move(symbols));
  if (!inserted) throw std::invalid_argument("duplicate colour class at index " + index.str());
}

void ColourFamily::add_singleton(const Ordinal& index) { add_class(index, {0}); }

bool ColourFamily::has_class(const Ordinal& index) const { return classes_.contains(index); }

bool ColourFamily::contains(const Colour& c) const {
  auto it = classes_.find(c.index);
  return it != classes_.end() && it->second.contains(c.symbol);
}

std::vector<Colour> ColourFamily::all_colours() const {
  std::vector<Colour> out;
  for (const auto& [index, symbols] : classes_)
    for (uint64_t s : symbols) out.push_back(Colour{index, s});
  return out;
}

size_t ColourFamily::colour_count() const {
  size_t n = 0;
  for (const auto& [index, symbols] : classes_) n += symbols.size();
  return n;
}

ColourFamily ColourFamily::merged(const ColourFamily& a, const ColourFamily& b) {
  ColourFamily out = a;
  for (const auto& [index, symbols] : b.classes_) {
    auto it = out.classes_.find(index);
    if (it == out.classes_.end()) {
      out.classes_.emplace(index, symbols);
    } else if (it->second != symbols) {
      throw std::invalid_argument("conflicting colour classes at index " + index.str());
    }
  }
  return out;
}

bool ColourFamily::index_disjoint(const ColourFamily& other) const {
  for (const auto& [index, symbols] : classes_)
    if (other.classes_.contains(index)) return false;
  return true;
}

ColourFamily ColourFamily::parse(std::string_view text) {
  ColourFamily out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view item =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (item.empty()) throw std::invalid_argument("empty colour class spec");
    size_t colon = item.rfind(':');
    if (colon == std::string_view::npos) {
      out.add_singleton(Ordinal::parse(item));
    } else {
      uint64_t m = std::stoull(std::string(item.substr(colon + 1)));
      std::set<uint64_t> symbols;
      for (uint64_t s = 0; s < m; ++s) symbols.insert(s);
      out.add_class(Ordinal::parse(item.substr(0, colon)), std::move(symbols));
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string ColourFamily::str() const {
  std::string out;
  for (const auto& [index, symbols] : classes_) {
    if (!out.empty()) out += ',';
    out += index.str();
    bool contiguous = *symbols.begin() == 0 && *symbols.rbegin() == symbols.size() - 1;
    if (symbols.size() != 1 || !contiguous) out += ':' + std::to_string(symbols.size());
  }
  return out;
}

namespace {

// Shortest period of the cycle (failure-function based would also do; the
// cycles here are tiny).
FiniteWord primitive_period(const FiniteWord& v) {
  for (size_t p = 1; p <= v.size(); ++p) {
    if (v.size() % p != 0) continue;
    bool ok = true;
    for (size_t i = p; i < v.size() && ok; ++i) ok = v[i] == v[i - p];
    if (ok) return FiniteWord(v.begin(), v.begin() + static_cast<long>(p));
  }
  return v;
}

}  // namespace

LassoWord::LassoWord(FiniteWord spoke, FiniteWord cycle)
    : spoke_(std::move(spoke)), cycle_(std::move(cycle)) {
  if (cycle_.empty()) throw std::invalid_argument("lasso cycle must be nonempty");
  cycle_ = primitive_period(cycle_);
  // Maximal spoke absorption: u.a (b1..bk)^w = u (a b1..b(k-1))^w when bk = a.
  while (!spoke_.empty() && spoke_.back() == cycle_.back()) {
    spoke_.pop_back();
    std::rotate(cycle_.rbegin(), cycle_.rbegin() + 1, cycle_.rend());
  }
}

const Colour& LassoWord::letter(size_t n) const {
  if (n < spoke_.size()) return spoke_[n];
  return cycle_[(n - spoke_.size()) % cycle_.size()];
}

FiniteWord LassoWord::unroll(size_t n) const {
  FiniteWord out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) out.push_back(letter(i));
  return out;
}

LassoWord LassoWord::parse(std::string_view text) {
  size_t bar = text.find('|');
  if (bar == std::string_view::npos)
    throw std::invalid_argument("lasso must contain `|`: " + std::string(text));
  auto parse_word = [](std::string_view part) {
    FiniteWord out;
    std::istringstream in{std::string(part)};
    std::string token;
    while (in >> token) out.push_back(Colour::parse(token));
    return out;
  };
  return LassoWord(parse_word(text.substr(0, bar)), parse_word(text.substr(bar + 1)));
}

std::string LassoWord::str() const {
  std::string out;
  for (const Colour& c : spoke_) out += c.str() + ' ';
  out += '|';
  for (const Colour& c : cycle_) out += ' ' + c.str();
  return out;
}

bool matches(IndexPredicate pred, const Ordinal& index, const Ordinal& pivot) {
  switch (pred) {
    case IndexPredicate::Eq: return index == pivot;
    case IndexPredicate::Lt: return index < pivot;
    case IndexPredicate::Le: return index <= pivot;
    case IndexPredicate::Gt: return index > pivot;
    case IndexPredicate::Ge: return index >= pivot;
  }
  throw std::logic_error("bad predicate");
}

std::variant<LassoWord, FiniteWord> project(const LassoWord& w, IndexPredicate pred,
                                            const Ordinal& pivot) {
  FiniteWord spoke, cycle;
  for (const Colour& c : w.spoke())
    if (matches(pred, c.index, pivot)) spoke.push_back(c);
  for (const Colour& c : w.cycle())
    if (matches(pred, c.index, pivot)) cycle.push_back(c);
  if (cycle.empty()) return spoke;
  return LassoWord(std::move(spoke), std::move(cycle));
}

Ordinal limsup_index(const LassoWord& w) {
  Ordinal best = w.cycle().front().index;
  for (const Colour& c : w.cycle())
    if (c.index > best) best = c.index;
  return best;
}

Ordinal mininf_index(const LassoWord& w) {
  Ordinal best = w.cycle().front().index;
  for (const Colour& c : w.cycle())
    if (c.index < best) best = c.index;
  return best;
}

Ordinal support_index(const LassoWord& w) { return mininf_index(w); }

}  // namespace lexigraph
