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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "lexigraph/reductions.hpp"
#include "lexigraph/solver.hpp"
#include "lexigraph/universal.hpp"
#include "lexigraph/verify.hpp"

namespace py = pybind11;
using namespace lexigraph;

namespace {

Objective parse_objective(const std::string& text) { return Objective::parse(text); }

py::dict membership(const std::string& objective, const std::string& lasso) {
  MembershipVerdict v = member(parse_objective(objective), LassoWord::parse(lasso));
  py::dict out;
  out["accepted"] = v.accepted;
  out["witness_index"] = v.witness_index.str();
  return out;
}

py::dict satisfies(const std::string& graph, const std::string& objective,
                   std::optional<size_t> bound) {
  OrderedGraph g = parse_graph(graph);
  Objective w = parse_objective(objective);
  SatisfactionReport r = bound ? satisfies_bounded(g.graph(), w, *bound)
                               : satisfies_exact(g.graph(), w);
  py::dict out;
  out["satisfied"] = r.satisfied;
  if (r.witness) out["witness"] = r.witness->str();
  return out;
}

py::dict universality(const std::string& graph, const std::string& objective,
                      const std::string& colours, size_t size, bool almost,
                      std::optional<size_t> bound) {
  OrderedGraph u = parse_graph(graph);
  Objective w = parse_objective(objective);
  ColourFamily family = ColourFamily::parse(colours);
  UniversalityReport r = almost ? check_almost_universality(u, w, family, size, bound)
                                : check_universality(u, w, family, size, bound);
  py::dict out;
  out["pass"] = r.pass();
  out["checked"] = r.checked_count;
  py::list failures;
  for (const auto& f : r.failures)
    failures.append(format_graph(OrderedGraph(f.graph)));
  out["failures"] = failures;
  return out;
}

py::dict solve_game(const std::string& game_text, const std::string& objective,
                    std::optional<std::string> universal) {
  Game game = Game::parse(game_text);
  Objective w = parse_objective(objective);
  OrderedGraph u =
      universal ? parse_graph(*universal) : auto_universal(w, game.vertex_count());
  SolveResult r = solve(game, u);
  py::dict out;
  py::list winning;
  for (uint32_t v = 0; v < game.vertex_count(); ++v)
    if (r.winning[v]) winning.append(game.name(v));
  out["winning"] = winning;
  py::dict strategy;
  for (const auto& [v, edge] : r.strategy.choice) strategy[py::str(game.name(v))] = edge;
  out["strategy"] = strategy;
  return out;
}

std::vector<std::string> oracle_winning(const std::string& game_text,
                                        const std::string& objective) {
  Game game = Game::parse(game_text);
  std::vector<bool> winning = oracle_solve(game, parse_objective(objective));
  std::vector<std::string> names;
  for (uint32_t v = 0; v < game.vertex_count(); ++v)
    if (winning[v]) names.push_back(game.name(v));
  return names;
}

}  // namespace

PYBIND11_MODULE(_lexigraph, m) {
  m.doc() = "Lexicographic products of positional objectives: graphs, games, reductions";

  py::class_<Ordinal>(m, "Ordinal")
      .def(py::init([](const std::string& text) { return Ordinal::parse(text); }))
      .def_static("omega", &Ordinal::omega)
      .def("__str__", &Ordinal::str)
      .def("__repr__", [](const Ordinal& o) { return "Ordinal('" + o.str() + "')"; })
      .def("__add__", [](const Ordinal& a, const Ordinal& b) { return a + b; })
      .def("__eq__", [](const Ordinal& a, const Ordinal& b) { return a == b; })
      .def("__lt__", [](const Ordinal& a, const Ordinal& b) { return a < b; })
      .def("__le__", [](const Ordinal& a, const Ordinal& b) { return a <= b; })
      .def("is_even", [](const Ordinal& o) { return o.parity() == Ordinal::Parity::Even; });

  py::class_<LassoWord>(m, "LassoWord")
      .def(py::init([](const std::string& text) { return LassoWord::parse(text); }))
      .def("__str__", &LassoWord::str)
      .def("__eq__", [](const LassoWord& a, const LassoWord& b) { return a == b; })
      .def("limsup_index", [](const LassoWord& w) { return limsup_index(w); })
      .def("support_index", [](const LassoWord& w) { return support_index(w); });

  m.def("member", &membership, py::arg("objective"), py::arg("lasso"),
        "Decide lasso membership; returns accepted flag and witness index.");
  m.def("expand", [](const std::string& objective) { return parse_objective(objective).expand().str(); },
        py::arg("objective"), "Expand a named objective into its product form.");
  m.def("satisfies", &satisfies, py::arg("graph"), py::arg("objective"),
        py::arg("bound") = std::nullopt, "Check a graph against an objective.");
  m.def("check_universality", &universality, py::arg("graph"), py::arg("objective"),
        py::arg("colours"), py::arg("size"), py::arg("almost") = false,
        py::arg("bound") = std::nullopt, "Sweep all candidate graphs up to the given size.");

  m.def("loop_graph", [](const std::string& colours) {
    return format_graph(loop_graph(ColourFamily::parse(colours)));
  });
  m.def("chain_graph", [](const std::string& colours, uint64_t k) {
    return format_graph(chain_graph(ColourFamily::parse(colours), k));
  });
  m.def("lex_product", [](const std::string& g0, const std::string& g1) {
    return format_graph(lex_product(parse_graph(g0), parse_graph(g1)));
  });
  m.def("directed_sum", [](const std::vector<std::string>& parts) {
    std::vector<OrderedGraph> graphs;
    for (const auto& p : parts) graphs.push_back(parse_graph(p));
    return format_graph(directed_sum(graphs));
  });
  m.def("signature_graph", [](uint64_t alpha, uint64_t kappa) {
    return format_graph(signature_graph(alpha, kappa).graph);
  }, py::arg("alpha"), py::arg("kappa"));
  m.def("power_graph", [](const std::vector<std::string>& bases, uint64_t beta) {
    std::vector<OrderedGraph> parsed;
    for (const auto& b : bases) parsed.push_back(parse_graph(b));
    return format_graph(power_graph(parsed, beta).graph);
  }, py::arg("bases"), py::arg("beta"));
  m.def("wrap", [](const std::string& graph, uint64_t k) {
    return format_graph(lemma21_wrap(parse_graph(graph), k));
  }, py::arg("graph"), py::arg("k"));
  m.def("auto_universal", [](const std::string& objective, size_t n) {
    return format_graph(auto_universal(parse_objective(objective), n));
  }, py::arg("objective"), py::arg("n"));
  m.def("morphism_exists", [](const std::string& g, const std::string& h) {
    return morphism_search(parse_graph(g).graph(), parse_graph(h)).has_value();
  }, py::arg("g"), py::arg("h"));

  m.def("solve", &solve_game, py::arg("game"), py::arg("objective"),
        py::arg("universal") = std::nullopt,
        "Solve a game; the universal graph defaults to the auto construction.");
  m.def("oracle_solve", &oracle_winning, py::arg("game"), py::arg("objective"));

  m.def("reduce_max", [](const std::string& f, const std::string& g) {
    return op_max(PrefixFunction::parse(f), PrefixFunction::parse(g)).str();
  });
  m.def("reduce_union", [](const std::string& f, const std::string& g) {
    return op_union(PrefixFunction::parse(f), PrefixFunction::parse(g)).str();
  });
  m.def("chain_reduction", [](const std::vector<std::string>& chain) {
    std::vector<PrefixFunction> machines;
    for (const auto& c : chain) machines.push_back(PrefixFunction::parse(c));
    return lexigraph::chain_reduction(machines).str();
  });
  m.def("cobuchi_sem", [](const std::string& machine, const std::string& lasso) {
    return cobuchi_sem(PrefixFunction::parse(machine), LassoWord::parse(lasso));
  });
  m.def("double_map", [](const std::string& lasso) {
    return double_map(LassoWord::parse(lasso)).str();
  });
  m.def("limit_collapse", [](const std::string& lasso, const std::string& alpha,
                             const std::vector<std::string>& gammas) {
    std::vector<Ordinal> parsed;
    for (const auto& g : gammas) parsed.push_back(Ordinal::parse(g));
    return limit_collapse(LassoWord::parse(lasso), Ordinal::parse(alpha), parsed).str();
  });
}
