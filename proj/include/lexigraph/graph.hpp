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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexigraph/ordinal.hpp"
#include "lexigraph/words.hpp"

namespace lexigraph {

/// Edge-coloured directed graph over an ambient colour family. Vertices are
/// named; edges are kept sorted and deduplicated.
class ColouredGraph {
 public:
  struct Edge {
    uint32_t src;
    Colour colour;
    uint32_t dst;

    auto operator<=>(const Edge&) const = default;
  };

  ColouredGraph() = default;
  explicit ColouredGraph(ColourFamily family) : family_(std::move(family)) {}

  uint32_t add_vertex(std::string name);
  void add_edge(uint32_t src, const Colour& colour, uint32_t dst);
  void add_edge(const std::string& src, const Colour& colour, const std::string& dst);

  size_t vertex_count() const { return names_.size(); }
  const std::string& name(uint32_t v) const { return names_[v]; }
  std::optional<uint32_t> find_vertex(const std::string& name) const;
  uint32_t vertex(const std::string& name) const;  // throws if unknown

  const std::vector<Edge>& edges() const {
    ensure_sorted();
    return edges_;
  }
  bool has_edge(uint32_t src, const Colour& colour, uint32_t dst) const;
  /// Out-edges of a vertex (contiguous slice of edges()).
  std::pair<const Edge*, const Edge*> out_edges(uint32_t src) const;

  const ColourFamily& family() const { return family_; }
  void set_family(ColourFamily family) { family_ = std::move(family); }

  bool operator==(const ColouredGraph& rhs) const;

 private:
  void ensure_sorted() const;

  std::vector<std::string> names_;
  std::map<std::string, uint32_t> index_;
  // Kept sorted and unique lazily: bulk construction appends, queries sort.
  mutable std::vector<Edge> edges_;
  mutable bool sorted_ = true;
  ColourFamily family_;
};

/// Ordered graph: a coloured graph with a decidable relation on vertices,
/// stored extensionally (geq matrix) and optionally derived from per-vertex
/// lexicographic keys.
class OrderedGraph {
 public:
  OrderedGraph() = default;
  /// Discrete order (equality only).
  explicit OrderedGraph(ColouredGraph graph);
  /// Extensional order; pairs are (a, b) with a >= b. Reflexivity is added.
  OrderedGraph(ColouredGraph graph, std::vector<std::pair<uint32_t, uint32_t>> geq_pairs);
  /// Order by lexicographic comparison of per-vertex keys (equal arity).
  OrderedGraph(ColouredGraph graph, std::vector<std::vector<Ordinal>> keys);

  const ColouredGraph& graph() const { return graph_; }
  ColouredGraph& graph() { return graph_; }
  size_t vertex_count() const { return graph_.vertex_count(); }

  bool geq(uint32_t a, uint32_t b) const { return geq_[a * vertex_count() + b]; }
  bool strictly_above(uint32_t a, uint32_t b) const { return geq(a, b) && !geq(b, a); }

  const std::vector<std::vector<Ordinal>>& keys() const { return keys_; }

 private:
  ColouredGraph graph_;
  std::vector<bool> geq_;
  std::vector<std::vector<Ordinal>> keys_;  // empty when extensional
};

struct Morphism {
  std::vector<uint32_t> map;  // source vertex id -> target vertex id
};

struct MonotoneViolation {
  enum class Side { Left, Right };
  Side side;
  uint32_t u, v, vprime, uprime;
  Colour colour;
};

struct MonotoneReport {
  bool ok = true;
  std::vector<MonotoneViolation> violations;  // capped
};

struct PartialOrderReport {
  bool reflexive = false;
  bool antisymmetric = false;
  bool transitive = false;
  bool total = false;
  bool is_partial_order() const { return reflexive && antisymmetric && transitive; }
  size_t max_antichain = 0;  // meaningful only for valid partial orders
};

/// Disjoint union with all-colour edges from each later part to every earlier
/// part; later parts sit strictly above earlier ones.
OrderedGraph directed_sum(const std::vector<OrderedGraph>& parts);
/// Directed sum of k identical copies.
OrderedGraph tensor(const OrderedGraph& g, uint64_t k);
/// Lexicographic product with the second factor dominant; factors must have
/// index-disjoint colour families. `provenance`, when non-null, receives the
/// (g0 vertex, g1 vertex) pair behind each product vertex.
OrderedGraph lex_product(const OrderedGraph& g0, const OrderedGraph& g1,
                         std::vector<std::pair<uint32_t, uint32_t>>* provenance = nullptr);
/// Induced subgraph on vertices reachable from v (any colours; v included).
ColouredGraph reachable_restrict(const ColouredGraph& g, uint32_t v);

MonotoneReport check_monotone(const OrderedGraph& g, size_t max_violations = 8);
PartialOrderReport check_partial_order(const OrderedGraph& g);

/// Bitset-based checks for large graphs; no violation details.
bool check_monotone_fast(const OrderedGraph& g);
bool is_total_order_fast(const OrderedGraph& g);

/// Every G-edge must map to an H-edge of the same colour; returns the first
/// violated edge if any. Errors when a G-colour is absent from H's family.
std::optional<ColouredGraph::Edge> morphism_check(const ColouredGraph& g, const ColouredGraph& h,
                                                  const Morphism& phi);

/// Reusable morphism search into a fixed target. When the target is totally
/// ordered, antisymmetric and monotone, computes the pointwise-least morphism
/// by lifting; otherwise falls back to backtracking with forward checking.
class MorphismSearcher {
 public:
  explicit MorphismSearcher(const OrderedGraph& target);

  std::optional<Morphism> search(const ColouredGraph& g) const;
  bool fast_path() const { return fast_path_; }

 private:
  std::optional<Morphism> search_lifting(const ColouredGraph& g) const;
  std::optional<Morphism> search_backtracking(const ColouredGraph& g) const;

  const OrderedGraph& target_;
  bool fast_path_;
  std::vector<uint32_t> by_rank_;  // rank -> vertex, ascending (fast path)
  std::vector<uint32_t> rank_of_;  // vertex -> rank
};

std::optional<Morphism> morphism_search(const ColouredGraph& g, const OrderedGraph& h);

/// Single vertex with a loop per colour of the family.
OrderedGraph loop_graph(const ColourFamily& family);
/// Vertices 0..k-1 naturally ordered, with an edge i -c-> j per colour
/// whenever i > j.
OrderedGraph chain_graph(const ColourFamily& family, uint64_t k);

/// Text format, one item per line: `colours <spec>` (optional header),
/// `vertex <id> [key=<k1,k2,...>]`, `edge <src> <colour> <dst>`,
/// `order <id> >= <id>`.
OrderedGraph parse_graph(std::string_view text);
std::string format_graph(const OrderedGraph& g);

}  // namespace lexigraph
