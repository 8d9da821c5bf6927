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

#include "lexigraph/verify.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace lexigraph {

AtomProduct atom_product(const Objective& w) {
  Objective obj = w.is_named() ? w.expand() : w;
  AtomProduct out;
  if (obj.is_atom()) {
    if (obj.kind() == Objective::Kind::CoBuchi)
      throw std::invalid_argument("exact satisfaction needs TW/TL atoms; use the bounded check");
    out.is_tl.emplace(obj.index(), obj.kind() == Objective::Kind::TL);
    return out;
  }
  if (obj.kind() != Objective::Kind::MaxLex && obj.kind() != Objective::Kind::MinLex)
    throw std::invalid_argument("exact satisfaction needs an atom product; use the bounded check");
  out.max = obj.kind() == Objective::Kind::MaxLex;
  for (const auto& [key, child] : obj.children()) {
    if (!child.is_atom() || child.kind() == Objective::Kind::CoBuchi)
      throw std::invalid_argument("exact satisfaction needs TW/TL atoms; use the bounded check");
    out.is_tl.emplace(key, child.kind() == Objective::Kind::TL);
  }
  return out;
}

SatisfactionReport satisfies_exact(const ColouredGraph& g, const Objective& w) {
  AtomProduct product = atom_product(w);
  ColourFamily family = (w.is_named() ? w.expand() : w).colours();
  for (const auto& e : g.edges())
    if (!family.contains(e.colour))
      throw std::invalid_argument("edge colour " + e.colour.str() + " outside objective family");

  for (const auto& critical : g.edges()) {
    auto it = product.is_tl.find(critical.colour.index);
    if (it == product.is_tl.end() || !it->second) continue;
    const Ordinal& pivot = critical.colour.index;
    auto allowed = [&](const ColouredGraph::Edge& e) {
      return product.max ? e.colour.index <= pivot : e.colour.index >= pivot;
    };
    // On a cycle within the restriction iff dst reaches src there.
    std::vector<int64_t> parent(g.vertex_count(), -1);
    std::deque<uint32_t> todo{critical.dst};
    std::vector<bool> seen(g.vertex_count(), false);
    seen[critical.dst] = true;
    std::optional<uint32_t> found;
    if (critical.dst == critical.src) found = critical.dst;
    while (!todo.empty() && !found) {
      uint32_t v = todo.front();
      todo.pop_front();
      auto [lo, hi] = g.out_edges(v);
      for (const auto* e = lo; e != hi; ++e) {
        if (!allowed(*e) || seen[e->dst]) continue;
        seen[e->dst] = true;
        parent[e->dst] = static_cast<int64_t>(e - g.edges().data());
        if (e->dst == critical.src) {
          found = e->dst;
          break;
        }
        todo.push_back(e->dst);
      }
    }
    if (!found) continue;
    // Path critical.dst -> ... -> critical.src (empty for a self-loop).
    std::vector<const ColouredGraph::Edge*> path;
    for (uint32_t v = critical.src; v != critical.dst;) {
      const auto& e = g.edges()[static_cast<size_t>(parent[v])];
      path.push_back(&e);
      v = e.src;
    }
    std::reverse(path.begin(), path.end());
    SatisfactionReport report;
    report.satisfied = false;
    FiniteWord cycle{critical.colour};
    report.witness_cycle.push_back(critical.src);
    for (const auto* e : path) {
      report.witness_cycle.push_back(e->src);
      cycle.push_back(e->colour);
    }
    report.witness = LassoWord({}, std::move(cycle));
    return report;
  }
  return {};
}

SatisfactionReport satisfies_bounded(const ColouredGraph& g, const Objective& w, size_t bound,
                                     size_t walk_budget) {
  ColourFamily family = (w.is_named() ? w.expand() : w).colours();
  for (const auto& e : g.edges())
    if (!family.contains(e.colour))
      throw std::invalid_argument("edge colour " + e.colour.str() + " outside objective family");

  size_t walks = 0;
  SatisfactionReport report;
  std::vector<const ColouredGraph::Edge*> stack;
  std::function<bool(uint32_t, uint32_t)> walk = [&](uint32_t start, uint32_t at) {
    if (!stack.empty() && at == start) {
      if (++walks > walk_budget) throw BudgetExceeded("bounded satisfaction walk budget exceeded");
      FiniteWord cycle;
      std::vector<uint32_t> vertices;
      for (const auto* e : stack) {
        cycle.push_back(e->colour);
        vertices.push_back(e->src);
      }
      LassoWord lasso({}, std::move(cycle));
      if (!member(w, lasso).accepted) {
        report.satisfied = false;
        report.witness = std::move(lasso);
        report.witness_cycle = std::move(vertices);
        return true;
      }
    }
    if (stack.size() == bound) return false;
    auto [lo, hi] = g.out_edges(at);
    for (const auto* e = lo; e != hi; ++e) {
      stack.push_back(e);
      bool done = walk(start, e->dst);
      stack.pop_back();
      if (done) return true;
    }
    return false;
  };
  for (uint32_t v = 0; v < g.vertex_count() && report.satisfied; ++v) walk(v, v);
  return report;
}

uint64_t enumeration_count(const ColourFamily& colours, size_t n) {
  size_t slots = n * n * colours.colour_count();
  if (slots >= 63) throw BudgetExceeded("edge-subset enumeration too large");
  return uint64_t{1} << slots;
}

ColouredGraph graph_from_mask(const ColourFamily& colours, size_t n, uint64_t mask) {
  ColouredGraph g(colours);
  for (size_t v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v));
  std::vector<Colour> all = colours.all_colours();
  size_t bit = 0;
  for (uint32_t src = 0; src < n; ++src)
    for (uint32_t dst = 0; dst < n; ++dst)
      for (const Colour& c : all) {
        if (mask & (uint64_t{1} << bit)) g.add_edge(src, c, dst);
        ++bit;
      }
  return g;
}

namespace {

UniversalityReport sweep(const OrderedGraph& u, const Objective& w, const ColourFamily& colours,
                         size_t n, std::optional<size_t> bound, size_t enum_budget, bool almost) {
  uint64_t total = 0;
  for (size_t size = 1; size <= n; ++size) total += enumeration_count(colours, size);
  if (total > enum_budget) throw BudgetExceeded("universality enumeration budget exceeded");

  MorphismSearcher searcher(u);
  UniversalityReport report;
  for (size_t size = 1; size <= n; ++size) {
    uint64_t count = enumeration_count(colours, size);
    for (uint64_t mask = 0; mask < count; ++mask) {
      ColouredGraph g = graph_from_mask(colours, size, mask);
      bool satisfied = bound ? satisfies_bounded(g, w, *bound).satisfied
                             : satisfies_exact(g, w).satisfied;
      if (!satisfied) continue;
      ++report.checked_count;
      if (!almost) {
        if (!searcher.search(g))
          report.failures.push_back({g, UniversalityReport::Reason::NoMorphism});
        continue;
      }
      bool any = false;
      for (uint32_t v = 0; v < g.vertex_count() && !any; ++v)
        any = searcher.search(reachable_restrict(g, v)).has_value();
      if (!any) report.failures.push_back({g, UniversalityReport::Reason::NoVertexCone});
    }
  }
  return report;
}

}  // namespace

UniversalityReport check_universality(const OrderedGraph& u, const Objective& w,
                                      const ColourFamily& colours, size_t n,
                                      std::optional<size_t> bound, size_t enum_budget) {
  return sweep(u, w, colours, n, bound, enum_budget, false);
}

UniversalityReport check_almost_universality(const OrderedGraph& u, const Objective& w,
                                             const ColourFamily& colours, size_t n,
                                             std::optional<size_t> bound, size_t enum_budget) {
  return sweep(u, w, colours, n, bound, enum_budget, true);
}

}  // namespace lexigraph
