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
#include <vector>

#include "lexigraph/budget.hpp"
#include "lexigraph/graph.hpp"
#include "lexigraph/objective.hpp"

namespace lexigraph {

/// Adds a fresh vertex `T` strictly above every original vertex, with an
/// outgoing edge to each of them for every colour of the family, no incoming
/// edges and no self-loop. `T` gets the last vertex id.
OrderedGraph add_top(const OrderedGraph& g);

/// Universal graph for limsup-parity over priorities 0..alpha-1. Vertices are
/// counter vectors with one coordinate per even position <= alpha, each below
/// kappa; higher positions are more significant in the (total) order.
struct SignatureGraph {
  OrderedGraph graph;
  std::vector<uint64_t> positions;           // even positions <= alpha, ascending
  std::vector<std::vector<uint64_t>> coords; // per vertex, aligned with positions
};

SignatureGraph signature_graph(uint64_t alpha, uint64_t kappa,
                               size_t vertex_budget = kDefaultVertexBudget);

/// Universal graph for support-parity style (min-lexicographic) products.
/// A vertex pairs a non-increasing rank function f : {0..alpha} -> [0, beta)
/// with f(alpha) = 0 and one state per level inside the top-augmented base,
/// under the constraint that a non-top state at level l forces f(l) > f(l+1).
/// Lower levels are more significant in the order.
struct PowerVertex {
  std::vector<uint64_t> f;  // size alpha+1, trailing entry 0
  std::vector<uint32_t> s;  // size alpha; ids into the top-augmented bases
};

struct PowerGraph {
  OrderedGraph graph;
  uint64_t beta = 0;
  std::vector<Ordinal> indices;      // class index per level, strictly increasing
  std::vector<OrderedGraph> tops;    // top-augmented bases, top id = last
  std::vector<PowerVertex> vertices; // aligned with graph vertex ids
};

/// Each base must be a monotone, antisymmetric ordered graph whose colour
/// family is a single class; bases are taken in strictly increasing index
/// order.
PowerGraph power_graph(const std::vector<OrderedGraph>& bases, uint64_t beta,
                       size_t vertex_budget = kDefaultVertexBudget);

/// Stacks k order-ascending copies; turns an almost-universal graph into a
/// universal one for k large enough.
OrderedGraph lemma21_wrap(const OrderedGraph& u, uint64_t k);

/// Embedding of the lexicographic product of a low-index and a high-index
/// power graph into the power graph over all indices with the summed bound:
/// low ranks are shifted by the high bound, states are kept. Returns the
/// product (high subordinate, low dominant) together with the morphism into
/// `full`; the morphism passes morphism_check by construction (asserted).
std::pair<OrderedGraph, Morphism> lemma47_embed(const PowerGraph& low, const PowerGraph& high,
                                                const PowerGraph& full);

/// Given per-part morphisms into power graphs over the same bases, builds the
/// morphism from the directed sum into the power graph with the summed bound
/// by shifting part mu's ranks by the total bound of earlier parts.
std::pair<OrderedGraph, Morphism> lemma49_sum_morphism(
    const std::vector<OrderedGraph>& parts, const std::vector<Morphism>& phis,
    const std::vector<PowerGraph>& targets, const PowerGraph& total);

/// Heuristic universal graph for solving a game with n vertices: kappa and
/// the rank bound are both n+1, the construction follows the objective's
/// family (signature graph, loop/chain product, or power graph), and the
/// result is wrapped into kappa stacked copies.
OrderedGraph auto_universal(const Objective& w, size_t n,
                            size_t vertex_budget = kDefaultVertexBudget);

}  // namespace lexigraph
