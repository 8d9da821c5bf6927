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
#include <string>
#include <string_view>
#include <vector>

#include "lexigraph/words.hpp"

namespace lexigraph {

/// Deterministic finite-state prefix function: reading a finite colour word
/// lands in a state whose output is the function value. Outputs are {1, 2}
/// for the coBuchi semantics, or priorities for chain reductions.
class PrefixFunction {
 public:
  PrefixFunction(ColourFamily family) : family_(std::move(family)) {}

  uint32_t add_state(std::string name, uint64_t out);
  void set_init(uint32_t state) { init_ = state; }
  void set_step(uint32_t state, const Colour& c, uint32_t next);

  size_t state_count() const { return names_.size(); }
  const std::string& name(uint32_t s) const { return names_[s]; }
  uint32_t state(const std::string& name) const;  // throws if unknown
  uint32_t init() const { return init_; }
  uint64_t out(uint32_t s) const { return out_[s]; }
  uint32_t step(uint32_t s, const Colour& c) const;  // throws on unknown letter
  const ColourFamily& family() const { return family_; }

  /// Throws unless every (state, colour) transition over the family is set.
  void require_total() const;

  /// Constant function over the family, one state.
  static PrefixFunction constant(const ColourFamily& family, uint64_t out);

  /// Text format, one item per line: `colours <spec>`, `state <id> out=<n>`,
  /// `init <id>`, `trans <src> <colour> <dst>`.
  static PrefixFunction parse(std::string_view text);
  std::string str() const;

 private:
  ColourFamily family_;
  std::vector<std::string> names_;
  std::map<std::string, uint32_t> index_;
  std::vector<uint64_t> out_;
  uint32_t init_ = 0;
  std::map<std::pair<uint32_t, Colour>, uint32_t> step_;
};

/// Value after reading the whole word.
uint64_t eval_prefix(const PrefixFunction& f, const FiniteWord& x);

/// The output sequence out(init), out(after 1 letter), ... as a lasso; output
/// value v becomes the colour with index v.
LassoWord lasso_image(const PrefixFunction& f, const LassoWord& w);

/// True iff the output is 2 only finitely often, i.e. the image cycle has
/// no index-2 colour.
bool cobuchi_sem(const PrefixFunction& f, const LassoWord& w);

/// Pointwise maximum: accepts iff both components do.
PrefixFunction op_max(const PrefixFunction& f, const PrefixFunction& g);

/// Union operator: product machine plus one bit tracking whether the latest
/// "2 event" came from f (at a strict prefix) or from g (at a non-strict
/// prefix); accepts iff either component does, and stays pointwise below f.
PrefixFunction op_union(const PrefixFunction& f, const PrefixFunction& g);

/// f <= g iff g(x) = 1 implies f(x) = 1 for every word x (decided on the
/// reachable product states).
bool pointwise_leq(const PrefixFunction& f, const PrefixFunction& g);

/// max(union(g_small, f_next), g_big); requires g_big <= g_small.
PrefixFunction successor_step(const PrefixFunction& g_small, const PrefixFunction& g_big,
                              const PrefixFunction& f_next);

/// For a pointwise-decreasing chain f_0 >= ... >= f_{k-1}, emits after each
/// prefix the least index with value 1, or k when all are 2. The image's
/// limsup locates the word in the difference hierarchy over the chain.
PrefixFunction chain_reduction(const std::vector<PrefixFunction>& chain);

/// Letterwise index doubling (indices must be finite).
LassoWord double_map(const LassoWord& w);

/// Replaces the letter at word position i, when its index equals alpha, by
/// index gammas[i]; alpha may only occur in the spoke.
LassoWord limit_collapse(const LassoWord& w, const Ordinal& alpha,
                         const std::vector<Ordinal>& gammas);

}  // namespace lexigraph
