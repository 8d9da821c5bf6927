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

#include "lexigraph/universal.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace lexigraph {

OrderedGraph add_top(const OrderedGraph& g) {
  size_t n = g.vertex_count();
  ColouredGraph graph(g.graph().family());
  for (uint32_t v = 0; v < n; ++v) graph.add_vertex(g.graph().name(v));
  uint32_t top = graph.add_vertex("T");
  for (const auto& e : g.graph().edges()) graph.add_edge(e.src, e.colour, e.dst);
  for (const Colour& c : g.graph().family().all_colours())
    for (uint32_t v = 0; v < n; ++v) graph.add_edge(top, c, v);
  std::vector<std::pair<uint32_t, uint32_t>> geq;
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b)
      if (g.geq(a, b)) geq.emplace_back(a, b);
  for (uint32_t b = 0; b < n; ++b) geq.emplace_back(top, b);
  return OrderedGraph(std::move(graph), std::move(geq));
}

namespace {

// Lexicographic comparison of coordinate suffixes, most significant (highest
// position) first; `from` is the least position included.
std::strong_ordering suffix_cmp(const std::vector<uint64_t>& positions,
                                const std::vector<uint64_t>& a, const std::vector<uint64_t>& b,
                                uint64_t from) {
  for (size_t i = positions.size(); i-- > 0;) {
    if (positions[i] < from) break;
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

bool suffix_nonzero(const std::vector<uint64_t>& positions, const std::vector<uint64_t>& a,
                    uint64_t from) {
  for (size_t i = 0; i < positions.size(); ++i)
    if (positions[i] >= from && a[i] != 0) return true;
  return false;
}

}  // namespace

SignatureGraph signature_graph(uint64_t alpha, uint64_t kappa, size_t vertex_budget) {
  if (kappa < 1) throw std::invalid_argument("signature graph requires kappa >= 1");
  SignatureGraph out;
  // With no colours there is nothing to count; the graph is a single vertex.
  if (alpha > 0)
    for (uint64_t p = 0; p <= alpha; p += 2) out.positions.push_back(p);

  size_t count = 1;
  for (size_t i = 0; i < out.positions.size(); ++i) {
    if (count > vertex_budget / kappa)
      throw BudgetExceeded("signature graph exceeds the vertex budget");
    count *= kappa;
  }

  ColourFamily family;
  for (uint64_t l = 0; l < alpha; ++l) family.add_singleton(Ordinal{l});
  ColouredGraph graph(family);
  std::vector<std::vector<Ordinal>> keys;

  std::vector<uint64_t> coords(out.positions.size(), 0);
  for (size_t id = 0; id < count; ++id) {
    std::string name;
    for (size_t i = 0; i < coords.size(); ++i) {
      if (i > 0) name += '.';
      name += std::to_string(coords[i]);
    }
    if (name.empty()) name = "0";
    graph.add_vertex(name);
    out.coords.push_back(coords);
    // Higher positions are more significant: key reads coordinates downward.
    std::vector<Ordinal> key;
    for (size_t i = coords.size(); i-- > 0;) key.emplace_back(coords[i]);
    keys.push_back(std::move(key));
    for (size_t i = 0; i < coords.size(); ++i) {
      if (++coords[i] < kappa) break;
      coords[i] = 0;
    }
  }

  for (uint32_t v = 0; v < count; ++v)
    for (uint32_t w = 0; w < count; ++w)
      for (uint64_t l = 0; l < alpha; ++l) {
        bool edge;
        if (l % 2 == 0) {
          edge = suffix_cmp(out.positions, out.coords[v], out.coords[w], l) ==
                 std::strong_ordering::greater;
        } else {
          edge = suffix_nonzero(out.positions, out.coords[v], l + 1) &&
                 suffix_cmp(out.positions, out.coords[v], out.coords[w], l + 1) !=
                     std::strong_ordering::less;
        }
        if (edge) graph.add_edge(v, Colour{Ordinal{l}, 0}, w);
      }

  out.graph = OrderedGraph(std::move(graph), std::move(keys));
  return out;
}

namespace {

std::string power_name(const std::vector<uint64_t>& f, const std::vector<std::string>& snames) {
  std::string name = "f";
  for (size_t i = 0; i + 1 < f.size(); ++i) {
    if (i > 0) name += '.';
    name += std::to_string(f[i]);
  }
  name += '_';
  for (size_t i = 0; i < snames.size(); ++i) {
    if (i > 0) name += '.';
    name += snames[i];
  }
  return name;
}

// Lexicographic comparison on the interleaving f(0), S(0), f(1), S(1), ...
// up to but excluding f(limit); components at unequal S are compared by the
// top-augmented base order (incomparable bases give incomparable vertices).
enum class ExtCmp { Less, Equal, Greater, Incomparable };

ExtCmp ext_cmp(const PowerGraph& pg, const PowerVertex& a, const PowerVertex& b, size_t limit) {
  for (size_t l = 0; l <= limit; ++l) {
    if (a.f[l] != b.f[l]) return a.f[l] > b.f[l] ? ExtCmp::Greater : ExtCmp::Less;
    if (l == limit) break;
    if (a.s[l] != b.s[l]) {
      bool ge = pg.tops[l].geq(a.s[l], b.s[l]);
      bool le = pg.tops[l].geq(b.s[l], a.s[l]);
      if (ge) return ExtCmp::Greater;
      if (le) return ExtCmp::Less;
      return ExtCmp::Incomparable;
    }
  }
  return ExtCmp::Equal;
}

}  // namespace

PowerGraph power_graph(const std::vector<OrderedGraph>& bases, uint64_t beta,
                       size_t vertex_budget) {
  if (beta < 1) throw std::invalid_argument("power graph requires beta >= 1");
  if (bases.empty()) throw std::invalid_argument("power graph requires at least one base");
  PowerGraph out;
  out.beta = beta;
  ColourFamily family;
  for (const auto& base : bases) {
    const auto& classes = base.graph().family().classes();
    if (classes.size() != 1)
      throw std::invalid_argument("each power-graph base must carry a single colour class");
    const Ordinal& index = classes.begin()->first;
    if (!out.indices.empty() && out.indices.back() >= index)
      throw std::invalid_argument("power-graph bases must have strictly increasing indices");
    auto order = check_partial_order(base);
    if (!order.is_partial_order() || !check_monotone(base, 1).ok)
      throw std::invalid_argument("power-graph bases must be monotone partial orders");
    out.indices.push_back(index);
    family = ColourFamily::merged(family, base.graph().family());
    out.tops.push_back(add_top(base));
  }
  size_t alpha = bases.size();

  ColouredGraph graph(family);
  std::vector<uint64_t> f(alpha + 1, 0);
  std::vector<uint32_t> s(alpha, 0);
  std::function<void(size_t)> enumerate_s = [&](size_t l) {
    if (l == alpha) {
      if (out.vertices.size() >= vertex_budget)
        throw BudgetExceeded("power graph exceeds the vertex budget");
      std::vector<std::string> snames;
      for (size_t i = 0; i < alpha; ++i) snames.push_back(out.tops[i].graph().name(s[i]));
      graph.add_vertex(power_name(f, snames));
      out.vertices.push_back(PowerVertex{f, s});
      return;
    }
    uint32_t top = static_cast<uint32_t>(out.tops[l].vertex_count() - 1);
    for (uint32_t v = 0; v < out.tops[l].vertex_count(); ++v) {
      if (v != top && f[l] <= f[l + 1]) continue;  // condition: non-top forces a rank drop
      s[l] = v;
      enumerate_s(l + 1);
    }
  };
  std::function<void(size_t)> enumerate_f = [&](size_t l) {
    if (l == alpha) {
      enumerate_s(0);
      return;
    }
    uint64_t bound = l == 0 ? beta : f[l - 1] + 1;
    for (uint64_t v = 0; v < bound; ++v) {
      f[l] = v;
      enumerate_f(l + 1);
    }
  };
  enumerate_f(0);

  size_t n = out.vertices.size();
  for (uint32_t v = 0; v < n; ++v)
    for (uint32_t w = 0; w < n; ++w)
      for (size_t l = 0; l < alpha; ++l) {
        ExtCmp cmp = ext_cmp(out, out.vertices[v], out.vertices[w], l);
        for (uint64_t c : family.classes().at(out.indices[l])) {
          Colour colour{out.indices[l], c};
          bool edge = cmp == ExtCmp::Greater ||
                      (cmp == ExtCmp::Equal &&
                       out.tops[l].graph().has_edge(out.vertices[v].s[l], colour,
                                                    out.vertices[w].s[l]));
          if (edge) graph.add_edge(v, colour, w);
        }
      }

  std::vector<std::pair<uint32_t, uint32_t>> geq;
  for (uint32_t v = 0; v < n; ++v)
    for (uint32_t w = 0; w < n; ++w) {
      ExtCmp cmp = ext_cmp(out, out.vertices[v], out.vertices[w], alpha);
      if (cmp == ExtCmp::Greater || cmp == ExtCmp::Equal) geq.emplace_back(v, w);
    }
  out.graph = OrderedGraph(std::move(graph), std::move(geq));
  return out;
}

OrderedGraph lemma21_wrap(const OrderedGraph& u, uint64_t k) { return tensor(u, k); }

std::pair<OrderedGraph, Morphism> lemma47_embed(const PowerGraph& low, const PowerGraph& high,
                                                const PowerGraph& full) {
  if (low.indices.empty() || high.indices.empty() || low.indices.back() >= high.indices.front())
    throw std::invalid_argument("power-graph split must separate low and high indices");
  std::vector<Ordinal> joined = low.indices;
  joined.insert(joined.end(), high.indices.begin(), high.indices.end());
  if (joined != full.indices || full.beta != low.beta + high.beta)
    throw std::invalid_argument("full power graph does not match the split");

  std::vector<std::pair<uint32_t, uint32_t>> prov;
  OrderedGraph product = lex_product(high.graph, low.graph, &prov);

  size_t nl = low.indices.size(), nh = high.indices.size();
  Morphism phi;
  for (auto [vh, vl] : prov) {
    const PowerVertex& pl = low.vertices[vl];
    const PowerVertex& ph = high.vertices[vh];
    std::vector<uint64_t> g;
    for (size_t i = 0; i < nl; ++i) g.push_back(pl.f[i] + high.beta);
    for (size_t i = 0; i <= nh; ++i) g.push_back(ph.f[i]);
    std::vector<std::string> snames;
    for (size_t i = 0; i < nl; ++i) snames.push_back(low.tops[i].graph().name(pl.s[i]));
    for (size_t i = 0; i < nh; ++i) snames.push_back(high.tops[i].graph().name(ph.s[i]));
    phi.map.push_back(full.graph.graph().vertex(power_name(g, snames)));
  }
  return {std::move(product), std::move(phi)};
}

std::pair<OrderedGraph, Morphism> lemma49_sum_morphism(
    const std::vector<OrderedGraph>& parts, const std::vector<Morphism>& phis,
    const std::vector<PowerGraph>& targets, const PowerGraph& total) {
  if (parts.size() != phis.size() || parts.size() != targets.size() || parts.empty())
    throw std::invalid_argument("one morphism and one target per part required");
  uint64_t offset_sum = 0;
  for (const auto& t : targets) {
    if (t.indices != total.indices)
      throw std::invalid_argument("all parts must target power graphs over the same bases");
    offset_sum += t.beta;
  }
  if (offset_sum != total.beta)
    throw std::invalid_argument("total power graph bound must be the sum of part bounds");
  for (size_t mu = 0; mu < parts.size(); ++mu)
    if (morphism_check(parts[mu].graph(), targets[mu].graph.graph(), phis[mu]))
      throw std::invalid_argument("part morphism " + std::to_string(mu) + " is invalid");

  OrderedGraph sum = directed_sum(parts);
  size_t alpha = total.indices.size();
  Morphism phi;
  uint64_t offset = 0;
  for (size_t mu = 0; mu < parts.size(); ++mu) {
    for (uint32_t v = 0; v < parts[mu].vertex_count(); ++v) {
      const PowerVertex& pv = targets[mu].vertices[phis[mu].map[v]];
      std::vector<uint64_t> g;
      for (size_t i = 0; i < alpha; ++i) g.push_back(pv.f[i] + offset);
      g.push_back(0);
      std::vector<std::string> snames;
      for (size_t i = 0; i < alpha; ++i)
        snames.push_back(targets[mu].tops[i].graph().name(pv.s[i]));
      phi.map.push_back(total.graph.graph().vertex(power_name(g, snames)));
    }
    offset += targets[mu].beta;
  }
  return {std::move(sum), std::move(phi)};
}

OrderedGraph auto_universal(const Objective& w, size_t n, size_t vertex_budget) {
  uint64_t kappa = n + 1;
  auto family_at = [](uint64_t l) {
    ColourFamily f;
    f.add_singleton(Ordinal{l});
    return f;
  };
  switch (w.kind()) {
    case Objective::Kind::MaxParity: {
      uint64_t alpha = w.alpha().as_natural();
      return lemma21_wrap(signature_graph(alpha, kappa, vertex_budget).graph, kappa);
    }
    case Objective::Kind::ParityD: {
      uint64_t d = w.alpha().as_natural();
      OrderedGraph u = loop_graph(family_at(0));
      for (uint64_t l = 1; l <= d; ++l) {
        OrderedGraph part =
            l % 2 == 0 ? loop_graph(family_at(l)) : chain_graph(family_at(l), kappa);
        u = lex_product(u, part);
        if (u.vertex_count() > vertex_budget)
          throw BudgetExceeded("parity product exceeds the vertex budget");
      }
      return lemma21_wrap(u, kappa);
    }
    case Objective::Kind::MinParity:
    case Objective::Kind::OmegaBuchi: {
      uint64_t alpha = w.alpha().as_natural();
      bool omega = w.kind() == Objective::Kind::OmegaBuchi;
      std::vector<OrderedGraph> bases;
      for (uint64_t l = 0; l < alpha; ++l)
        bases.push_back(omega || l % 2 == 0 ? loop_graph(family_at(l))
                                            : chain_graph(family_at(l), kappa));
      // Ranks must strictly descend across every level holding a non-top
      // state, so a vertex carrying self-loops on all levels needs ranks
      // down from alpha; small games would otherwise get too few ranks.
      uint64_t beta = std::max<uint64_t>(kappa, alpha + 1);
      return lemma21_wrap(power_graph(bases, beta, vertex_budget).graph, kappa);
    }
    default:
      throw std::invalid_argument("no automatic universal graph for this objective shape");
  }
}

}  // namespace lexigraph
