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
#include <vector>

#include "lexigraph/budget.hpp"
#include "lexigraph/graph.hpp"
#include "lexigraph/objective.hpp"

namespace lexigraph {

/// Two-player game arena. Edges either carry a colour or are neutral
/// (nullopt); a play whose colour projection is finite is won by Eve.
/// Every vertex must have an outgoing edge.
class Game {
 public:
  enum class Owner { Eve, Adam };

  struct Edge {
    uint32_t src;
    std::optional<Colour> colour;  // nullopt: neutral
    uint32_t dst;
  };

  uint32_t add_vertex(std::string name, Owner owner);
  void add_edge(uint32_t src, std::optional<Colour> colour, uint32_t dst);

  size_t vertex_count() const { return names_.size(); }
  const std::string& name(uint32_t v) const { return names_[v]; }
  uint32_t vertex(const std::string& name) const;  // throws if unknown
  Owner owner(uint32_t v) const { return owners_[v]; }
  const std::vector<Edge>& edges() const { return edges_; }  // insertion order

  const ColourFamily& family() const { return family_; }
  void set_family(ColourFamily family) { family_ = std::move(family); }

  /// Throws if some vertex has no outgoing edge.
  void require_sinkless() const;

  /// Graph format plus `owner <id> eve|adam` lines; colour token `eps` marks
  /// a neutral edge. Vertices default to Eve when no owner line appears.
  static Game parse(std::string_view text);
  std::string str() const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, uint32_t> index_;
  std::vector<Owner> owners_;
  std::vector<Edge> edges_;
  ColourFamily family_;
};

struct Strategy {
  /// Eve vertex -> chosen edge id (index into Game::edges()).
  std::map<uint32_t, size_t> choice;
};

struct SolveResult {
  std::vector<bool> winning;
  Strategy strategy;
  /// Per vertex: rank into the universal graph's total order, or top_rank.
  std::vector<uint32_t> rho;
  uint32_t top_rank = 0;
};

/// Progress-measure lifting into `u`, which must be totally ordered,
/// antisymmetric and monotone and contain every game colour. An edge is
/// supported at value x iff x is the artificial top, or the edge is neutral
/// and x >= rho(dst), or x -c-> rho(dst) is a u-edge. Eve vertices need one
/// supported outgoing edge, Adam vertices all; the least consistent
/// assignment is reached by FIFO lifting and its non-top region is winning.
/// `validate` re-checks the order and monotonicity of u; callers solving many
/// games against one pre-checked u may turn it off.
SolveResult solve(const Game& game, const OrderedGraph& u, bool validate = true);

/// Ground truth by enumerating Eve's positional strategies: a vertex wins iff
/// some strategy leaves no reachable violating cycle (neutral-only cycles are
/// winning). The objective must be an atom product.
std::vector<bool> oracle_solve(const Game& game, const Objective& w,
                               size_t budget = kDefaultOracleBudget);

/// True iff every play from v that follows the strategy is winning.
bool verify_strategy(const Game& game, const Objective& w, const Strategy& sigma, uint32_t v);

}  // namespace lexigraph
