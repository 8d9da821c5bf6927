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

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lexigraph/ordinal.hpp"

namespace lexigraph {

/// A colour: a symbol local to the colour class at an ordinal index.
struct Colour {
  Ordinal index;
  uint64_t symbol = 0;

  auto operator<=>(const Colour&) const = default;

  /// `λ` (symbol 0) or `λ:k`, with λ in ordinal syntax.
  static Colour parse(std::string_view text);
  std::string str() const;
};

/// Finite association from ordinal indices to finite nonempty symbol sets.
/// Classes are disjoint by construction: a colour carries its index.
class ColourFamily {
 public:
  ColourFamily() = default;

  void add_class(const Ordinal& index, std::set<uint64_t> symbols);
  /// Singleton class {0} at the given index.
  void add_singleton(const Ordinal& index);

  bool has_class(const Ordinal& index) const;
  bool contains(const Colour& c) const;
  const std::map<Ordinal, std::set<uint64_t>>& classes() const { return classes_; }
  std::vector<Colour> all_colours() const;
  size_t colour_count() const;

  /// Union of two families; overlapping indices must agree exactly.
  static ColourFamily merged(const ColourFamily& a, const ColourFamily& b);
  bool index_disjoint(const ColourFamily& other) const;

  /// Comma-separated classes `λ` (singleton) or `λ:m` (symbols 0..m-1),
  /// e.g. `0,1,2` or `0:2,w`.
  static ColourFamily parse(std::string_view text);
  std::string str() const;

  bool operator==(const ColourFamily&) const = default;

 private:
  std::map<Ordinal, std::set<uint64_t>> classes_;
};

using FiniteWord = std::vector<Colour>;

/// Ultimately periodic word u . v^omega, normalized so that the spoke is
/// shortest and the cycle is a primitive period; equality is structural.
class LassoWord {
 public:
  LassoWord(FiniteWord spoke, FiniteWord cycle);

  const FiniteWord& spoke() const { return spoke_; }
  const FiniteWord& cycle() const { return cycle_; }
  /// n-th letter of u . v^omega.
  const Colour& letter(size_t n) const;
  /// First n letters.
  FiniteWord unroll(size_t n) const;

  bool operator==(const LassoWord&) const = default;
  auto operator<=>(const LassoWord&) const = default;

  /// Text syntax: `u | v` with space-separated colours, e.g. `2 2 | 0 1`.
  static LassoWord parse(std::string_view text);
  std::string str() const;

 private:
  FiniteWord spoke_, cycle_;
};

enum class IndexPredicate { Eq, Lt, Le, Gt, Ge };

bool matches(IndexPredicate pred, const Ordinal& index, const Ordinal& pivot);

/// Subword of the colours whose index satisfies the predicate: a lasso when
/// the cycle contains a match, otherwise the finite word of spoke matches.
std::variant<LassoWord, FiniteWord> project(const LassoWord& w, IndexPredicate pred,
                                            const Ordinal& pivot);

/// Maximum index occurring in the cycle (the limsup of ind(w) on lassos).
Ordinal limsup_index(const LassoWord& w);
/// Minimum index occurring in the cycle.
Ordinal mininf_index(const LassoWord& w);
/// The unique λ at which w is λ-supported; on lassos this is the cycle minimum.
Ordinal support_index(const LassoWord& w);

}  // namespace lexigraph
