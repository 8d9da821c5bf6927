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
#include <optional>
#include <vector>

#include "lexigraph/budget.hpp"
#include "lexigraph/graph.hpp"
#include "lexigraph/objective.hpp"

namespace lexigraph {

/// Flat view of a max-/min-lexicographic product of TW/TL atoms; throws for
/// other shapes (coBuchi atoms, nested products).
struct AtomProduct {
  bool max = true;                // max- vs min-lexicographic
  std::map<Ordinal, bool> is_tl;  // child key -> atom is TL
};

AtomProduct atom_product(const Objective& w);

struct SatisfactionReport {
  bool satisfied = true;
  std::optional<LassoWord> witness;       // a violating lasso (empty spoke)
  std::vector<uint32_t> witness_cycle;    // vertex cycle realizing the witness
};

/// Exact satisfaction for max-/min-lexicographic products of TW/TL atoms
/// (named objectives are expanded first). A graph violates a max product iff
/// some edge whose index carries a TL atom lies on a cycle using only edges
/// of index <= that edge's; dually (>=) for min products.
SatisfactionReport satisfies_exact(const ColouredGraph& g, const Objective& w);

/// Sound violation search over cycles of length <= bound; complete for atom
/// products when bound >= |V(g)|.
SatisfactionReport satisfies_bounded(const ColouredGraph& g, const Objective& w, size_t bound,
                                     size_t walk_budget = kDefaultEnumBudget);

/// Labelled-graph enumeration over n vertices: one graph per subset of the
/// n * n * |colours| possible edges, indexed by bitmask.
uint64_t enumeration_count(const ColourFamily& colours, size_t n);
ColouredGraph graph_from_mask(const ColourFamily& colours, size_t n, uint64_t mask);

struct UniversalityReport {
  enum class Reason { NoMorphism, NoVertexCone };
  struct Failure {
    ColouredGraph graph;
    Reason reason;
  };
  uint64_t checked_count = 0;
  std::vector<Failure> failures;
  bool pass() const { return failures.empty(); }
};

/// For every graph of size <= n over `colours` that satisfies `w`, require a
/// morphism into `u`. `bound` switches satisfaction to the bounded check.
UniversalityReport check_universality(const OrderedGraph& u, const Objective& w,
                                      const ColourFamily& colours, size_t n,
                                      std::optional<size_t> bound = std::nullopt,
                                      size_t enum_budget = kDefaultEnumBudget);

/// Weaker premise: some vertex's reachable cone must map into `u`.
UniversalityReport check_almost_universality(const OrderedGraph& u, const Objective& w,
                                             const ColourFamily& colours, size_t n,
                                             std::optional<size_t> bound = std::nullopt,
                                             size_t enum_budget = kDefaultEnumBudget);

}  // namespace lexigraph
