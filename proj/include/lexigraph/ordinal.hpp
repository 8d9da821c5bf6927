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
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace lexigraph {

/// An ordinal below epsilon_0 in Cantor normal form: a strictly
/// exponent-decreasing sum of terms w^e * c with c >= 1. The empty sum is 0.
/// Values are immutable and canonical, so equality is structural.
class Ordinal {
 public:
  class Term {
   public:
    Term(Ordinal exponent, uint64_t coefficient);

    const Ordinal& exponent() const { return *exponent_; }
    uint64_t coefficient() const { return coefficient_; }

    bool operator==(const Term& rhs) const;

   private:
    // Indirection breaks the Ordinal/Term recursion; Ordinals are immutable,
    // so sharing on copy is safe.
    std::shared_ptr<const Ordinal> exponent_;
    uint64_t coefficient_;
  };

  enum class Parity { Even, Odd };
  enum class Kind { Zero, Successor, Limit };

  Ordinal() = default;
  Ordinal(uint64_t n);  // NOLINT: implicit by design, naturals embed

  static Ordinal omega();
  /// Builds w^exponent * coefficient (coefficient >= 1).
  static Ordinal omega_power(const Ordinal& exponent, uint64_t coefficient = 1);
  /// Validates strict exponent decrease and positive coefficients.
  static Ordinal from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const;
  bool is_zero() const { return !terms_ || terms_->empty(); }
  bool is_finite() const;
  /// Value as a natural number; throws std::domain_error if infinite.
  uint64_t as_natural() const;
  /// The trailing natural part n of a = a' + n with a' zero or limit.
  uint64_t natural_tail() const;

  Parity parity() const;
  Kind classify() const;

  /// CNF ordinal sum. Left terms below the right leading exponent are absorbed.
  Ordinal operator+(const Ordinal& rhs) const;

  std::strong_ordering operator<=>(const Ordinal& rhs) const;
  bool operator==(const Ordinal& rhs) const {
    return terms_ == rhs.terms_ || terms() == rhs.terms();
  }

  /// Text syntax: `n`, `w`, and `w^E*c` terms joined by `+` in strictly
  /// decreasing exponent order, e.g. `w^2*3+w+4`. Rejects non-canonical input.
  static Ordinal parse(std::string_view text);
  std::string str() const;

 private:
  // Copies share the term vector, so passing ordinals around is free.
  std::shared_ptr<const std::vector<Term>> terms_;  // null means zero
};

}  // namespace lexigraph
