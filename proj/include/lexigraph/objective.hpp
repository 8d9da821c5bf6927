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

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "lexigraph/ordinal.hpp"
#include "lexigraph/words.hpp"

namespace lexigraph {

/// Objective expression: trivially winning / trivially losing / coBuchi atoms
/// combined by max- and min-lexicographic products, plus named families.
///
/// DSL syntax: `TW@λ`, `TL@λ`, `coBuchi@λ`, `maxlex{λ0:E0, λ1:E1, ...}`,
/// `minlex{...}`, `Parity(d)`, `MaxParity(α)`, `MinParity(α)`, `omegaBuchi(α)`.
class Objective {
 public:
  enum class Kind { TW, TL, CoBuchi, MaxLex, MinLex, ParityD, MaxParity, MinParity, OmegaBuchi };

  static Objective tw(const Ordinal& index);
  static Objective tl(const Ordinal& index);
  /// coBuchi atom over the 2-symbol class {1, 2} at the given index.
  static Objective cobuchi(const Ordinal& index);
  static Objective maxlex(std::map<Ordinal, Objective> children);
  static Objective minlex(std::map<Ordinal, Objective> children);
  static Objective parity_d(uint64_t d);  // requires d even
  static Objective max_parity(const Ordinal& alpha);
  static Objective min_parity(const Ordinal& alpha);
  static Objective omega_buchi(const Ordinal& alpha);

  Kind kind() const { return kind_; }
  bool is_atom() const { return kind_ == Kind::TW || kind_ == Kind::TL || kind_ == Kind::CoBuchi; }
  bool is_named() const;
  const Ordinal& index() const;                         // atoms
  const Ordinal& alpha() const;                         // named (ParityD: d as ordinal)
  const std::map<Ordinal, Objective>& children() const; // products

  /// Structural expansion of named variants into atom products; requires a
  /// finite α (resp. d).
  Objective expand() const;

  /// Colour family of the objective (finite α only for named variants).
  ColourFamily colours() const;

  static Objective parse(std::string_view text);
  std::string str() const;

  bool operator==(const Objective& rhs) const;

 private:
  Objective() = default;

  Kind kind_ = Kind::TW;
  Ordinal param_;  // atom index, or α / d for named variants
  std::shared_ptr<const std::map<Ordinal, Objective>> children_;
};

struct MembershipVerdict {
  bool accepted = false;
  Ordinal witness_index;  // limsup for max-lex, support for min-lex
};

/// Lasso membership. All colours of w must belong to the objective's family.
MembershipVerdict member(const Objective& objective, const LassoWord& w);

}  // namespace lexigraph
