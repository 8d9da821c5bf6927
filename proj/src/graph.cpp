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

#include "lexigraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace lexigraph {

uint32_t ColouredGraph::add_vertex(std::string name) {
  auto it = index_.find(name);
  if (it != index_.end()) return it->second;
  uint32_t id = static_cast<uint32_t>(names_.size());
  index_.emplace(name, id);
  names_.push_back(std::move(name));
  return id;
}

void ColouredGraph::add_edge(uint32_t src, const Colour& colour, uint32_t dst) {
  if (src >= names_.size() || dst >= names_.size())
    throw std::invalid_argument("edge endpoint is not a vertex");
  Edge e{src, colour, dst};
  if (sorted_ && !edges_.empty() && !(edges_.back() < e)) sorted_ = false;
  edges_.push_back(std::move(e));
}

void ColouredGraph::ensure_sorted() const {
  if (sorted_) return;
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  sorted_ = true;
}

bool ColouredGraph::operator==(const ColouredGraph& rhs) const {
  ensure_sorted();
  rhs.ensure_sorted();
  return names_ == rhs.names_ && edges_ == rhs.edges_ && family_ == rhs.family_;
}

void ColouredGraph::add_edge(const std::string& src, const Colour& colour, const std::string& dst) {
  add_edge(vertex(src), colour, vertex(dst));
}

std::optional<uint32_t> ColouredGraph::find_vertex(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

uint32_t ColouredGraph::vertex(const std::string& name) const {
  auto v = find_vertex(name);
  if (!v) throw std::invalid_argument("unknown vertex: " + name);
  return *v;
}

bool ColouredGraph::has_edge(uint32_t src, const Colour& colour, uint32_t dst) const {
  ensure_sorted();
  return std::binary_search(edges_.begin(), edges_.end(), Edge{src, colour, dst});
}

std::pair<const ColouredGraph::Edge*, const ColouredGraph::Edge*> ColouredGraph::out_edges(
    uint32_t src) const {
  ensure_sorted();
  auto lo = std::lower_bound(edges_.begin(), edges_.end(), src,
                             [](const Edge& e, uint32_t s) { return e.src < s; });
  auto hi = std::upper_bound(edges_.begin(), edges_.end(), src,
                             [](uint32_t s, const Edge& e) { return s < e.src; });
  return {edges_.data() + (lo - edges_.begin()), edges_.data() + (hi - edges_.begin())};
}

OrderedGraph::OrderedGraph(ColouredGraph graph) : graph_(std::move(graph)) {
  size_t n = graph_.vertex_count();
  geq_.assign(n * n, false);
  for (size_t i = 0; i < n; ++i) geq_[i * n + i] = true;
}

OrderedGraph::OrderedGraph(ColouredGraph graph,
                           std::vector<std::pair<uint32_t, uint32_t>> geq_pairs)
    : graph_(std::move(graph)) {
  size_t n = graph_.vertex_count();
  geq_.assign(n * n, false);
  for (size_t i = 0; i < n; ++i) geq_[i * n + i] = true;
  for (auto [a, b] : geq_pairs) {
    if (a >= n || b >= n) throw std::invalid_argument("order pair mentions unknown vertex");
    geq_[a * n + b] = true;
  }
}

OrderedGraph::OrderedGraph(ColouredGraph graph, std::vector<std::vector<Ordinal>> keys)
    : graph_(std::move(graph)), keys_(std::move(keys)) {
  size_t n = graph_.vertex_count();
  if (keys_.size() != n) throw std::invalid_argument("one key per vertex required");
  for (const auto& k : keys_)
    if (k.size() != keys_.front().size())
      throw std::invalid_argument("order keys must have equal arity");
  geq_.assign(n * n, false);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) geq_[a * n + b] = keys_[a] >= keys_[b];
}

OrderedGraph directed_sum(const std::vector<OrderedGraph>& parts) {
  if (parts.empty()) throw std::invalid_argument("directed sum of zero parts");
  ColourFamily family;
  for (const auto& p : parts) family = ColourFamily::merged(family, p.graph().family());
  std::vector<Colour> all = family.all_colours();

  ColouredGraph graph(family);
  std::vector<uint32_t> offsets;
  for (size_t mu = 0; mu < parts.size(); ++mu) {
    offsets.push_back(static_cast<uint32_t>(graph.vertex_count()));
    const ColouredGraph& part = parts[mu].graph();
    for (uint32_t v = 0; v < part.vertex_count(); ++v)
      graph.add_vertex(std::to_string(mu) + ':' + part.name(v));
  }
  for (size_t mu = 0; mu < parts.size(); ++mu) {
    const ColouredGraph& part = parts[mu].graph();
    for (const auto& e : part.edges())
      graph.add_edge(offsets[mu] + e.src, e.colour, offsets[mu] + e.dst);
    // All-colour edges down to every earlier part.
    for (size_t nu = 0; nu < mu; ++nu) {
      const ColouredGraph& lower = parts[nu].graph();
      for (uint32_t v = 0; v < part.vertex_count(); ++v)
        for (const Colour& c : all)
          for (uint32_t w = 0; w < lower.vertex_count(); ++w)
            graph.add_edge(offsets[mu] + v, c, offsets[nu] + w);
    }
  }

  std::vector<std::pair<uint32_t, uint32_t>> geq;
  for (size_t mu = 0; mu < parts.size(); ++mu) {
    for (uint32_t a = 0; a < parts[mu].vertex_count(); ++a) {
      for (uint32_t b = 0; b < parts[mu].vertex_count(); ++b)
        if (parts[mu].geq(a, b)) geq.emplace_back(offsets[mu] + a, offsets[mu] + b);
      for (size_t nu = 0; nu < mu; ++nu)
        for (uint32_t b = 0; b < parts[nu].vertex_count(); ++b)
          geq.emplace_back(offsets[mu] + a, offsets[nu] + b);
    }
  }
  return OrderedGraph(std::move(graph), std::move(geq));
}

OrderedGraph tensor(const OrderedGraph& g, uint64_t k) {
  if (k < 1) throw std::invalid_argument("tensor requires k >= 1");
  return directed_sum(std::vector<OrderedGraph>(k, g));
}

OrderedGraph lex_product(const OrderedGraph& g0, const OrderedGraph& g1,
                         std::vector<std::pair<uint32_t, uint32_t>>* provenance) {
  if (!g0.graph().family().index_disjoint(g1.graph().family()))
    throw std::invalid_argument("lexicographic product requires index-disjoint colour families");
  ColourFamily family = ColourFamily::merged(g0.graph().family(), g1.graph().family());
  size_t n0 = g0.vertex_count(), n1 = g1.vertex_count();

  ColouredGraph graph(family);
  if (provenance) provenance->clear();
  for (uint32_t v0 = 0; v0 < n0; ++v0)
    for (uint32_t v1 = 0; v1 < n1; ++v1) {
      graph.add_vertex('(' + g0.graph().name(v0) + ';' + g1.graph().name(v1) + ')');
      if (provenance) provenance->emplace_back(v0, v1);
    }
  auto id = [n1](uint32_t v0, uint32_t v1) { return static_cast<uint32_t>(v0 * n1 + v1); };

  // C1-edges follow the dominant coordinate; the subordinate coordinate is
  // unconstrained on both sides (required for monotonicity of the product).
  for (const auto& e : g1.graph().edges())
    for (uint32_t v0 = 0; v0 < n0; ++v0)
      for (uint32_t w0 = 0; w0 < n0; ++w0)
        graph.add_edge(id(v0, e.src), e.colour, id(w0, e.dst));
  // C0-edges: dominant coordinate strictly decreases (first arbitrary), or
  // dominant equal and the first takes a G0-edge.
  std::vector<Colour> colours0 = g0.graph().family().all_colours();
  for (uint32_t v1 = 0; v1 < n1; ++v1)
    for (uint32_t w1 = 0; w1 < n1; ++w1) {
      if (g1.strictly_above(v1, w1)) {
        for (const Colour& c : colours0)
          for (uint32_t v0 = 0; v0 < n0; ++v0)
            for (uint32_t w0 = 0; w0 < n0; ++w0) graph.add_edge(id(v0, v1), c, id(w0, w1));
      } else if (v1 == w1) {
        for (const auto& e : g0.graph().edges())
          graph.add_edge(id(e.src, v1), e.colour, id(e.dst, v1));
      }
    }

  std::vector<std::pair<uint32_t, uint32_t>> geq;
  for (uint32_t v0 = 0; v0 < n0; ++v0)
    for (uint32_t v1 = 0; v1 < n1; ++v1)
      for (uint32_t w0 = 0; w0 < n0; ++w0)
        for (uint32_t w1 = 0; w1 < n1; ++w1)
          if (g1.strictly_above(v1, w1) || (v1 == w1 && g0.geq(v0, w0)))
            geq.emplace_back(id(v0, v1), id(w0, w1));
  return OrderedGraph(std::move(graph), std::move(geq));
}

ColouredGraph reachable_restrict(const ColouredGraph& g, uint32_t v) {
  if (v >= g.vertex_count()) throw std::invalid_argument("unknown vertex in reachable_restrict");
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<uint32_t> todo{v};
  seen[v] = true;
  while (!todo.empty()) {
    uint32_t u = todo.front();
    todo.pop_front();
    auto [lo, hi] = g.out_edges(u);
    for (const auto* e = lo; e != hi; ++e)
      if (!seen[e->dst]) {
        seen[e->dst] = true;
        todo.push_back(e->dst);
      }
  }
  ColouredGraph out(g.family());
  std::vector<uint32_t> remap(g.vertex_count(), UINT32_MAX);
  for (uint32_t u = 0; u < g.vertex_count(); ++u)
    if (seen[u]) remap[u] = out.add_vertex(g.name(u));
  for (const auto& e : g.edges())
    if (seen[e.src] && seen[e.dst]) out.add_edge(remap[e.src], e.colour, remap[e.dst]);
  return out;
}

MonotoneReport check_monotone(const OrderedGraph& g, size_t max_violations) {
  MonotoneReport report;
  size_t n = g.vertex_count();
  for (const auto& e : g.graph().edges()) {
    for (uint32_t u = 0; u < n; ++u) {
      if (!g.geq(u, e.src)) continue;
      for (uint32_t uprime = 0; uprime < n; ++uprime) {
        if (!g.geq(e.dst, uprime)) continue;
        if (g.graph().has_edge(u, e.colour, uprime)) continue;
        report.ok = false;
        if (report.violations.size() < max_violations) {
          auto side = u != e.src ? MonotoneViolation::Side::Left : MonotoneViolation::Side::Right;
          report.violations.push_back({side, u, e.src, e.dst, uprime, e.colour});
        }
      }
    }
  }
  return report;
}

namespace {

using Bits = std::vector<uint64_t>;

bool subset(const Bits& a, const Bits& b) {  // a subset of b
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

void bits_or(Bits& a, const Bits& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] |= b[i];
}

}  // namespace

bool check_monotone_fast(const OrderedGraph& g) {
  size_t n = g.vertex_count();
  size_t words = (n + 63) / 64;
  std::vector<Bits> down(n, Bits(words, 0));
  for (uint32_t v = 0; v < n; ++v)
    for (uint32_t u = 0; u < n; ++u)
      if (g.geq(v, u)) down[v][u / 64] |= uint64_t{1} << (u % 64);

  std::map<Colour, std::vector<std::pair<uint32_t, uint32_t>>> by_colour;
  for (const auto& e : g.graph().edges()) by_colour[e.colour].emplace_back(e.src, e.dst);

  for (const auto& [colour, pairs] : by_colour) {
    std::vector<Bits> out(n, Bits(words, 0));
    std::vector<Bits> lowered(n, Bits(words, 0));  // targets closed downward
    for (auto [src, dst] : pairs) {
      out[src][dst / 64] |= uint64_t{1} << (dst % 64);
      bits_or(lowered[src], down[dst]);
    }
    for (uint32_t u = 0; u < n; ++u) {
      Bits need(words, 0);
      for (uint32_t v = 0; v < n; ++v)
        if (g.geq(u, v)) bits_or(need, lowered[v]);
      if (!subset(need, out[u])) return false;
    }
  }
  return true;
}

bool is_total_order_fast(const OrderedGraph& g) {
  size_t n = g.vertex_count();
  size_t words = (n + 63) / 64;
  std::vector<Bits> row(n, Bits(words, 0));
  for (uint32_t a = 0; a < n; ++a) {
    if (!g.geq(a, a)) return false;
    for (uint32_t b = 0; b < n; ++b) {
      if (a != b && g.geq(a, b) == g.geq(b, a)) return false;  // total and antisymmetric
      if (g.geq(a, b)) row[a][b / 64] |= uint64_t{1} << (b % 64);
    }
  }
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b)
      if (a != b && g.geq(a, b) && !subset(row[b], row[a])) return false;
  return true;
}

namespace {

// Maximum antichain of a finite poset by Dilworth: minimum chain cover equals
// n minus a maximum matching of the strict-order bipartite graph.
size_t max_antichain_size(const OrderedGraph& g) {
  size_t n = g.vertex_count();
  std::vector<int> match_right(n, -1);
  std::vector<bool> used;
  std::function<bool(uint32_t)> augment = [&](uint32_t a) {
    for (uint32_t b = 0; b < n; ++b) {
      if (a == b || !g.strictly_above(a, b) || used[b]) continue;
      used[b] = true;
      if (match_right[b] < 0 || augment(static_cast<uint32_t>(match_right[b]))) {
        match_right[b] = static_cast<int>(a);
        return true;
      }
    }
    return false;
  };
  size_t matching = 0;
  for (uint32_t a = 0; a < n; ++a) {
    used.assign(n, false);
    if (augment(a)) ++matching;
  }
  return n - matching;
}

}  // namespace

PartialOrderReport check_partial_order(const OrderedGraph& g) {
  PartialOrderReport report;
  size_t n = g.vertex_count();
  report.reflexive = true;
  report.antisymmetric = true;
  report.transitive = true;
  report.total = true;
  for (uint32_t a = 0; a < n; ++a) {
    if (!g.geq(a, a)) report.reflexive = false;
    for (uint32_t b = 0; b < n; ++b) {
      if (a != b && g.geq(a, b) && g.geq(b, a)) report.antisymmetric = false;
      if (a != b && !g.geq(a, b) && !g.geq(b, a)) report.total = false;
      if (!g.geq(a, b)) continue;
      for (uint32_t c = 0; c < n; ++c)
        if (g.geq(b, c) && !g.geq(a, c)) report.transitive = false;
    }
  }
  if (report.is_partial_order()) report.max_antichain = max_antichain_size(g);
  return report;
}

std::optional<ColouredGraph::Edge> morphism_check(const ColouredGraph& g, const ColouredGraph& h,
                                                  const Morphism& phi) {
  if (phi.map.size() != g.vertex_count())
    throw std::invalid_argument("morphism must be total on source vertices");
  for (const auto& e : g.edges()) {
    if (!h.family().contains(e.colour))
      throw std::invalid_argument("colour " + e.colour.str() + " absent from target family");
    if (!h.has_edge(phi.map[e.src], e.colour, phi.map[e.dst])) return e;
  }
  return std::nullopt;
}

MorphismSearcher::MorphismSearcher(const OrderedGraph& target) : target_(target) {
  auto order = check_partial_order(target);
  fast_path_ = order.total && order.antisymmetric && check_monotone(target, 1).ok;
  if (fast_path_) {
    size_t n = target.vertex_count();
    by_rank_.resize(n);
    for (uint32_t v = 0; v < n; ++v) by_rank_[v] = v;
    std::sort(by_rank_.begin(), by_rank_.end(),
              [&](uint32_t a, uint32_t b) { return target.strictly_above(b, a); });
    rank_of_.resize(n);
    for (uint32_t r = 0; r < n; ++r) rank_of_[by_rank_[r]] = r;
  }
}

std::optional<Morphism> MorphismSearcher::search(const ColouredGraph& g) const {
  for (const auto& e : g.edges())
    if (!target_.graph().family().contains(e.colour)) return std::nullopt;
  if (g.vertex_count() == 0) return Morphism{};
  return fast_path_ ? search_lifting(g) : search_backtracking(g);
}

std::optional<Morphism> MorphismSearcher::search_lifting(const ColouredGraph& g) const {
  size_t n = g.vertex_count(), m = target_.vertex_count();
  if (m == 0) return std::nullopt;
  std::vector<std::vector<uint32_t>> preds(n);
  for (const auto& e : g.edges()) preds[e.dst].push_back(e.src);

  std::vector<uint32_t> rank(n, 0);
  std::deque<uint32_t> queue;
  std::vector<bool> queued(n, true);
  for (uint32_t v = 0; v < n; ++v) queue.push_back(v);

  auto feasible = [&](uint32_t v, uint32_t r) {
    auto [lo, hi] = g.out_edges(v);
    for (const auto* e = lo; e != hi; ++e)
      if (!target_.graph().has_edge(by_rank_[r], e->colour, by_rank_[rank[e->dst]])) return false;
    return true;
  };

  while (!queue.empty()) {
    uint32_t v = queue.front();
    queue.pop_front();
    queued[v] = false;
    uint32_t r = rank[v];
    // Feasible ranks are upward closed by left-monotonicity; scan for the least.
    while (r < m && !feasible(v, r)) ++r;
    if (r == m) return std::nullopt;
    if (r != rank[v]) {
      rank[v] = r;
      for (uint32_t p : preds[v])
        if (!queued[p]) {
          queued[p] = true;
          queue.push_back(p);
        }
    }
  }
  Morphism phi;
  phi.map.resize(n);
  for (uint32_t v = 0; v < n; ++v) phi.map[v] = by_rank_[rank[v]];
  return phi;
}

std::optional<Morphism> MorphismSearcher::search_backtracking(const ColouredGraph& g) const {
  size_t n = g.vertex_count(), m = target_.vertex_count();
  if (m == 0) return std::nullopt;
  // Candidate targets ascending by how much of the target sits below them,
  // so the first morphism found is small.
  std::vector<uint32_t> candidates(m);
  std::vector<size_t> below(m, 0);
  for (uint32_t a = 0; a < m; ++a) {
    candidates[a] = a;
    for (uint32_t b = 0; b < m; ++b)
      if (target_.strictly_above(a, b)) ++below[a];
  }
  std::sort(candidates.begin(), candidates.end(), [&](uint32_t a, uint32_t b) {
    return below[a] != below[b] ? below[a] < below[b] : a < b;
  });

  std::vector<uint32_t> assign(n, UINT32_MAX);
  std::function<bool(uint32_t)> go = [&](uint32_t v) {
    if (v == n) return true;
    for (uint32_t cand : candidates) {
      bool ok = true;
      auto [lo, hi] = g.out_edges(v);
      for (const auto* e = lo; e != hi && ok; ++e) {
        uint32_t img = e->dst == v ? cand : assign[e->dst];
        if (img != UINT32_MAX && !target_.graph().has_edge(cand, e->colour, img)) ok = false;
      }
      for (const auto& e : g.edges()) {
        if (!ok) break;
        if (e.dst == v && e.src != v && assign[e.src] != UINT32_MAX &&
            !target_.graph().has_edge(assign[e.src], e.colour, cand))
          ok = false;
      }
      if (!ok) continue;
      assign[v] = cand;
      if (go(v + 1)) return true;
      assign[v] = UINT32_MAX;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return Morphism{std::move(assign)};
}

std::optional<Morphism> morphism_search(const ColouredGraph& g, const OrderedGraph& h) {
  return MorphismSearcher(h).search(g);
}

OrderedGraph loop_graph(const ColourFamily& family) {
  ColouredGraph graph(family);
  uint32_t v = graph.add_vertex("v");
  for (const Colour& c : family.all_colours()) graph.add_edge(v, c, v);
  return OrderedGraph(std::move(graph), std::vector<std::vector<Ordinal>>{{Ordinal{0}}});
}

OrderedGraph chain_graph(const ColourFamily& family, uint64_t k) {
  if (k < 1) throw std::invalid_argument("chain requires k >= 1");
  ColouredGraph graph(family);
  std::vector<std::vector<Ordinal>> keys;
  for (uint64_t i = 0; i < k; ++i) {
    graph.add_vertex(std::to_string(i));
    keys.push_back({Ordinal{i}});
  }
  for (uint64_t i = 0; i < k; ++i)
    for (uint64_t j = 0; j < i; ++j)
      for (const Colour& c : family.all_colours())
        graph.add_edge(static_cast<uint32_t>(i), c, static_cast<uint32_t>(j));
  return OrderedGraph(std::move(graph), std::move(keys));
}

OrderedGraph parse_graph(std::string_view text) {
  ColouredGraph graph;
  std::optional<ColourFamily> family;
  std::vector<std::vector<Ordinal>> keys;
  bool any_key = false;
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  std::vector<std::pair<std::string, std::string>> orders;

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head[0] == '#') continue;
    if (head == "colours") {
      std::string spec;
      ls >> spec;
      family = ColourFamily::parse(spec);
    } else if (head == "vertex") {
      std::string name, extra;
      ls >> name;
      if (name.empty()) throw std::invalid_argument("vertex line without id");
      graph.add_vertex(name);
      keys.emplace_back();
      if (ls >> extra) {
        if (extra.rfind("key=", 0) != 0)
          throw std::invalid_argument("bad vertex attribute: " + extra);
        any_key = true;
        std::string list = extra.substr(4);
        size_t pos = 0;
        while (pos <= list.size()) {
          size_t comma = list.find(',', pos);
          keys.back().push_back(Ordinal::parse(
              list.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
          if (comma == std::string::npos) break;
          pos = comma + 1;
        }
      }
    } else if (head == "edge") {
      std::string src, colour, dst;
      if (!(ls >> src >> colour >> dst)) throw std::invalid_argument("bad edge line: " + line);
      edges.emplace_back(src, colour, dst);
    } else if (head == "order") {
      std::string a, rel, b;
      if (!(ls >> a >> rel >> b) || rel != ">=")
        throw std::invalid_argument("bad order line: " + line);
      orders.emplace_back(a, b);
    } else {
      throw std::invalid_argument("unknown graph line: " + line);
    }
  }

  ColourFamily inferred;
  for (const auto& [src, colour, dst] : edges) {
    Colour c = Colour::parse(colour);
    if (!family && !inferred.contains(c)) {
      if (inferred.has_class(c.index)) {
        auto classes = inferred.classes();
        classes.at(c.index).insert(c.symbol);
        ColourFamily rebuilt;
        for (auto& [idx, syms] : classes) rebuilt.add_class(idx, syms);
        inferred = rebuilt;
      } else {
        inferred.add_class(c.index, {c.symbol});
      }
    }
  }
  graph.set_family(family ? *family : inferred);
  for (const auto& [src, colour, dst] : edges) graph.add_edge(src, Colour::parse(colour), dst);

  if (any_key) {
    if (!orders.empty())
      throw std::invalid_argument("graph mixes key-based and extensional order");
    return OrderedGraph(std::move(graph), std::move(keys));
  }
  std::vector<std::pair<uint32_t, uint32_t>> geq;
  for (const auto& [a, b] : orders) geq.emplace_back(graph.vertex(a), graph.vertex(b));
  return OrderedGraph(std::move(graph), std::move(geq));
}

std::string format_graph(const OrderedGraph& g) {
  std::string out;
  const ColouredGraph& graph = g.graph();
  if (!graph.family().classes().empty()) out += "colours " + graph.family().str() + '\n';
  bool keyed = !g.keys().empty();
  for (uint32_t v = 0; v < graph.vertex_count(); ++v) {
    out += "vertex " + graph.name(v);
    if (keyed) {
      out += " key=";
      const auto& key = g.keys()[v];
      for (size_t i = 0; i < key.size(); ++i) {
        if (i > 0) out += ',';
        out += key[i].str();
      }
    }
    out += '\n';
  }
  for (const auto& e : graph.edges())
    out += "edge " + graph.name(e.src) + ' ' + e.colour.str() + ' ' + graph.name(e.dst) + '\n';
  if (!keyed) {
    for (uint32_t a = 0; a < graph.vertex_count(); ++a)
      for (uint32_t b = 0; b < graph.vertex_count(); ++b)
        if (a != b && g.geq(a, b))
          out += "order " + graph.name(a) + " >= " + graph.name(b) + '\n';
  }
  return out;
}

}  // namespace lexigraph
