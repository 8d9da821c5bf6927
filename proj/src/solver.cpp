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

#include "lexigraph/solver.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "lexigraph/verify.hpp"

namespace lexigraph {

uint32_t Game::add_vertex(std::string name, Owner owner) {
  auto it = index_.find(name);
  if (it != index_.end()) throw std::invalid_argument("duplicate game vertex: " + name);
  uint32_t id = static_cast<uint32_t>(names_.size());
  index_.emplace(name, id);
  names_.push_back(std::move(name));
  owners_.push_back(owner);
  return id;
}

void Game::add_edge(uint32_t src, std::optional<Colour> colour, uint32_t dst) {
  if (src >= names_.size() || dst >= names_.size())
    throw std::invalid_argument("game edge endpoint is not a vertex");
  edges_.push_back(Edge{src, std::move(colour), dst});
}

uint32_t Game::vertex(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::invalid_argument("unknown game vertex: " + name);
  return it->second;
}

void Game::require_sinkless() const {
  std::vector<bool> has_out(names_.size(), false);
  for (const auto& e : edges_) has_out[e.src] = true;
  for (uint32_t v = 0; v < names_.size(); ++v)
    if (!has_out[v]) throw std::invalid_argument("game vertex without outgoing edge: " + names_[v]);
}

Game Game::parse(std::string_view text) {
  Game game;
  std::optional<ColourFamily> family;
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  std::map<std::string, Owner> owners;
  std::vector<std::string> order;

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
      std::string name;
      if (!(ls >> name)) throw std::invalid_argument("vertex line without id");
      order.push_back(name);
    } else if (head == "owner") {
      std::string name, who;
      if (!(ls >> name >> who) || (who != "eve" && who != "adam"))
        throw std::invalid_argument("bad owner line: " + line);
      owners[name] = who == "eve" ? Owner::Eve : Owner::Adam;
    } else if (head == "edge") {
      std::string src, colour, dst;
      if (!(ls >> src >> colour >> dst)) throw std::invalid_argument("bad edge line: " + line);
      edges.emplace_back(src, colour, dst);
    } else {
      throw std::invalid_argument("unknown game line: " + line);
    }
  }

  for (const auto& name : order) {
    auto it = owners.find(name);
    game.add_vertex(name, it == owners.end() ? Owner::Eve : it->second);
  }
  ColourFamily inferred;
  for (const auto& [src, colour, dst] : edges) {
    if (colour == "eps") continue;
    Colour c = Colour::parse(colour);
    if (family) {
      if (!family->contains(c))
        throw std::invalid_argument("edge colour outside declared family: " + colour);
    } else if (!inferred.contains(c)) {
      auto classes = inferred.classes();
      classes[c.index].insert(c.symbol);
      ColourFamily rebuilt;
      for (auto& [idx, syms] : classes) rebuilt.add_class(idx, syms);
      inferred = rebuilt;
    }
  }
  game.family_ = family ? *family : inferred;
  for (const auto& [src, colour, dst] : edges)
    game.add_edge(game.vertex(src),
                  colour == "eps" ? std::nullopt : std::optional<Colour>(Colour::parse(colour)),
                  game.vertex(dst));
  return game;
}

std::string Game::str() const {
  std::string out;
  if (!family_.classes().empty()) out += "colours " + family_.str() + '\n';
  for (uint32_t v = 0; v < names_.size(); ++v) out += "vertex " + names_[v] + '\n';
  for (uint32_t v = 0; v < names_.size(); ++v)
    out += "owner " + names_[v] + (owners_[v] == Owner::Eve ? " eve\n" : " adam\n");
  for (const auto& e : edges_)
    out += "edge " + names_[e.src] + ' ' + (e.colour ? e.colour->str() : "eps") + ' ' +
           names_[e.dst] + '\n';
  return out;
}

SolveResult solve(const Game& game, const OrderedGraph& u, bool validate) {
  game.require_sinkless();
  if (validate && (!is_total_order_fast(u) || !check_monotone_fast(u)))
    throw std::invalid_argument("solver needs a total, antisymmetric, monotone universal graph");
  for (const auto& e : game.edges())
    if (e.colour && !u.graph().family().contains(*e.colour))
      throw std::invalid_argument("game colour " + e.colour->str() +
                                  " missing from the universal graph");

  size_t n = game.vertex_count();
  uint32_t m = static_cast<uint32_t>(u.vertex_count());  // artificial top rank
  std::vector<uint32_t> by_rank(m);
  for (uint32_t v = 0; v < m; ++v) by_rank[v] = v;
  std::sort(by_rank.begin(), by_rank.end(),
            [&](uint32_t a, uint32_t b) { return u.strictly_above(b, a); });

  std::vector<std::vector<size_t>> out(n);
  std::vector<std::vector<uint32_t>> preds(n);
  for (size_t i = 0; i < game.edges().size(); ++i) {
    const auto& e = game.edges()[i];
    out[e.src].push_back(i);
    preds[e.dst].push_back(e.src);
  }

  std::vector<uint32_t> rho(n, 0);
  auto supported = [&](const Game::Edge& e, uint32_t x) {
    if (x == m) return true;
    if (!e.colour) return x >= rho[e.dst];
    if (rho[e.dst] == m) return false;
    return u.graph().has_edge(by_rank[x], *e.colour, by_rank[rho[e.dst]]);
  };
  auto consistent = [&](uint32_t v, uint32_t x) {
    bool eve = game.owner(v) == Game::Owner::Eve;
    for (size_t i : out[v]) {
      bool s = supported(game.edges()[i], x);
      if (eve && s) return true;
      if (!eve && !s) return false;
    }
    return !eve;
  };

  std::deque<uint32_t> queue;
  std::vector<bool> queued(n, true);
  for (uint32_t v = 0; v < n; ++v) queue.push_back(v);
  while (!queue.empty()) {
    uint32_t v = queue.front();
    queue.pop_front();
    queued[v] = false;
    uint32_t x = rho[v];
    while (x <= m && !consistent(v, x)) ++x;  // support is upward closed
    if (x == rho[v]) continue;
    rho[v] = x;
    for (uint32_t p : preds[v])
      if (!queued[p]) {
        queued[p] = true;
        queue.push_back(p);
      }
  }

  SolveResult result;
  result.rho = rho;
  result.top_rank = m;
  result.winning.resize(n);
  for (uint32_t v = 0; v < n; ++v) result.winning[v] = rho[v] != m;
  for (uint32_t v = 0; v < n; ++v) {
    if (game.owner(v) != Game::Owner::Eve) continue;
    size_t best = out[v].front();
    if (result.winning[v]) {
      bool have = false;
      for (size_t i : out[v]) {
        if (!supported(game.edges()[i], rho[v])) continue;
        if (!have || rho[game.edges()[i].dst] < rho[game.edges()[best].dst]) best = i;
        have = true;
      }
    }
    result.strategy.choice[v] = best;
  }
  return result;
}

namespace {

// Vertices from which some violating cycle is reachable in the restricted
// edge set. A cycle violates iff it carries a TL-indexed edge at pivot l and
// otherwise only edges of index <= l (max) / >= l (min) or neutral edges.
std::vector<bool> losing_region(const Game& game, const std::vector<bool>& active,
                                const AtomProduct& product) {
  size_t n = game.vertex_count();
  const auto& edges = game.edges();
  std::vector<bool> critical_src(n, false);
  for (size_t ci = 0; ci < edges.size(); ++ci) {
    if (!active[ci] || !edges[ci].colour) continue;
    auto it = product.is_tl.find(edges[ci].colour->index);
    if (it == product.is_tl.end() || !it->second) continue;
    const Ordinal& pivot = edges[ci].colour->index;
    // Reachability dst -> src within the index restriction.
    std::vector<bool> seen(n, false);
    std::deque<uint32_t> todo{edges[ci].dst};
    seen[edges[ci].dst] = true;
    while (!todo.empty()) {
      uint32_t v = todo.front();
      todo.pop_front();
      for (size_t i = 0; i < edges.size(); ++i) {
        if (!active[i] || edges[i].src != v || seen[edges[i].dst]) continue;
        if (edges[i].colour) {
          bool ok = product.max ? edges[i].colour->index <= pivot
                                : edges[i].colour->index >= pivot;
          if (!ok) continue;
        }
        seen[edges[i].dst] = true;
        todo.push_back(edges[i].dst);
      }
    }
    if (seen[edges[ci].src]) critical_src[edges[ci].src] = true;
  }
  // Backward closure: anything reaching a critical source loses.
  std::vector<bool> losing = critical_src;
  std::deque<uint32_t> todo;
  for (uint32_t v = 0; v < n; ++v)
    if (losing[v]) todo.push_back(v);
  while (!todo.empty()) {
    uint32_t v = todo.front();
    todo.pop_front();
    for (size_t i = 0; i < edges.size(); ++i)
      if (active[i] && edges[i].dst == v && !losing[edges[i].src]) {
        losing[edges[i].src] = true;
        todo.push_back(edges[i].src);
      }
  }
  return losing;
}

void validate_game_colours(const Game& game, const Objective& w) {
  ColourFamily family = (w.is_named() ? w.expand() : w).colours();
  for (const auto& e : game.edges())
    if (e.colour && !family.contains(*e.colour))
      throw std::invalid_argument("game colour " + e.colour->str() +
                                  " outside the objective family");
}

}  // namespace

std::vector<bool> oracle_solve(const Game& game, const Objective& w, size_t budget) {
  game.require_sinkless();
  validate_game_colours(game, w);
  AtomProduct product = atom_product(w);
  size_t n = game.vertex_count();
  const auto& edges = game.edges();

  std::vector<uint32_t> eve_vertices;
  std::vector<std::vector<size_t>> eve_out;
  size_t strategies = 1;
  for (uint32_t v = 0; v < n; ++v) {
    if (game.owner(v) != Game::Owner::Eve) continue;
    eve_vertices.push_back(v);
    std::vector<size_t> out;
    for (size_t i = 0; i < edges.size(); ++i)
      if (edges[i].src == v) out.push_back(i);
    if (strategies > budget / std::max<size_t>(out.size(), 1))
      throw BudgetExceeded("oracle strategy budget exceeded");
    strategies *= out.size();
    eve_out.push_back(std::move(out));
  }

  std::vector<bool> winning(n, false);
  std::vector<size_t> pick(eve_vertices.size(), 0);
  for (size_t s = 0; s < strategies; ++s) {
    size_t rest = s;
    std::vector<bool> active(edges.size(), true);
    for (size_t k = 0; k < eve_vertices.size(); ++k) {
      size_t c = rest % eve_out[k].size();
      rest /= eve_out[k].size();
      for (size_t i : eve_out[k]) active[i] = i == eve_out[k][c];
    }
    std::vector<bool> losing = losing_region(game, active, product);
    for (uint32_t v = 0; v < n; ++v)
      if (!losing[v]) winning[v] = true;
  }
  return winning;
}

bool verify_strategy(const Game& game, const Objective& w, const Strategy& sigma, uint32_t v) {
  game.require_sinkless();
  validate_game_colours(game, w);
  AtomProduct product = atom_product(w);
  const auto& edges = game.edges();
  std::vector<bool> active(edges.size(), true);
  for (uint32_t u = 0; u < game.vertex_count(); ++u) {
    if (game.owner(u) != Game::Owner::Eve) continue;
    auto it = sigma.choice.find(u);
    if (it == sigma.choice.end() || it->second >= edges.size() || edges[it->second].src != u)
      throw std::invalid_argument("strategy is not total on Eve vertices");
    for (size_t i = 0; i < edges.size(); ++i)
      if (edges[i].src == u) active[i] = i == it->second;
  }
  return !losing_region(game, active, product)[v];
}

}  // namespace lexigraph
