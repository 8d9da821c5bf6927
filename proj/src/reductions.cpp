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

#include "lexigraph/reductions.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

namespace lexigraph {

uint32_t PrefixFunction::add_state(std::string name, uint64_t out) {
  auto it = index_.find(name);
  if (it != index_.end()) throw std::invalid_argument("duplicate state: " + name);
  uint32_t id = static_cast<uint32_t>(names_.size());
  index_.emplace(name, id);
  names_.push_back(std::move(name));
  out_.push_back(out);
  return id;
}

void PrefixFunction::set_step(uint32_t state, const Colour& c, uint32_t next) {
  if (state >= names_.size() || next >= names_.size())
    throw std::invalid_argument("transition endpoint is not a state");
  if (!family_.contains(c))
    throw std::invalid_argument("transition letter outside family: " + c.str());
  step_[{state, c}] = next;
}

uint32_t PrefixFunction::state(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::invalid_argument("unknown state: " + name);
  return it->second;
}

uint32_t PrefixFunction::step(uint32_t s, const Colour& c) const {
  auto it = step_.find({s, c});
  if (it == step_.end())
    throw std::invalid_argument("no transition from " + names_[s] + " on " + c.str());
  return it->second;
}

void PrefixFunction::require_total() const {
  if (names_.empty()) throw std::invalid_argument("machine has no states");
  for (uint32_t s = 0; s < names_.size(); ++s)
    for (const Colour& c : family_.all_colours())
      if (!step_.contains({s, c}))
        throw std::invalid_argument("missing transition from " + names_[s] + " on " + c.str());
}

PrefixFunction PrefixFunction::constant(const ColourFamily& family, uint64_t out) {
  PrefixFunction f(family);
  uint32_t s = f.add_state("q", out);
  for (const Colour& c : family.all_colours()) f.set_step(s, c, s);
  return f;
}

PrefixFunction PrefixFunction::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  ColourFamily family;
  std::vector<std::pair<std::string, uint64_t>> states;
  std::vector<std::tuple<std::string, std::string, std::string>> trans;
  std::string init;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head[0] == '#') continue;
    if (head == "colours") {
      std::string spec;
      ls >> spec;
      family = ColourFamily::parse(spec);
    } else if (head == "state") {
      std::string name, attr;
      if (!(ls >> name >> attr) || attr.rfind("out=", 0) != 0)
        throw std::invalid_argument("bad state line: " + line);
      states.emplace_back(name, std::stoull(attr.substr(4)));
    } else if (head == "init") {
      if (!(ls >> init)) throw std::invalid_argument("bad init line: " + line);
    } else if (head == "trans") {
      std::string src, colour, dst;
      if (!(ls >> src >> colour >> dst)) throw std::invalid_argument("bad trans line: " + line);
      trans.emplace_back(src, colour, dst);
    } else {
      throw std::invalid_argument("unknown machine line: " + line);
    }
  }
  PrefixFunction f(family);
  for (auto& [name, out] : states) f.add_state(name, out);
  if (!init.empty()) f.set_init(f.state(init));
  for (auto& [src, colour, dst] : trans)
    f.set_step(f.state(src), Colour::parse(colour), f.state(dst));
  f.require_total();
  return f;
}

std::string PrefixFunction::str() const {
  std::string out = "colours " + family_.str() + '\n';
  for (uint32_t s = 0; s < names_.size(); ++s)
    out += "state " + names_[s] + " out=" + std::to_string(out_[s]) + '\n';
  out += "init " + names_[init_] + '\n';
  for (const auto& [key, next] : step_)
    out += "trans " + names_[key.first] + ' ' + key.second.str() + ' ' + names_[next] + '\n';
  return out;
}

uint64_t eval_prefix(const PrefixFunction& f, const FiniteWord& x) {
  uint32_t s = f.init();
  for (const Colour& c : x) s = f.step(s, c);
  return f.out(s);
}

LassoWord lasso_image(const PrefixFunction& f, const LassoWord& w) {
  std::vector<uint64_t> outputs;
  uint32_t s = f.init();
  outputs.push_back(f.out(s));
  for (const Colour& c : w.spoke()) {
    s = f.step(s, c);
    outputs.push_back(f.out(s));
  }
  // From here position n = |spoke| + t; track (state, t mod |cycle|).
  std::map<std::pair<uint32_t, size_t>, size_t> seen;
  size_t t = 0;
  size_t first = 0, period_end = 0;
  while (true) {
    size_t pos = t % w.cycle().size();
    auto [it, inserted] = seen.emplace(std::make_pair(s, pos), w.spoke().size() + t);
    if (!inserted) {
      first = it->second;
      period_end = w.spoke().size() + t;
      break;
    }
    s = f.step(s, w.cycle()[pos]);
    outputs.push_back(f.out(s));
    ++t;
  }
  auto colour = [](uint64_t v) { return Colour{Ordinal{v}, 0}; };
  FiniteWord spoke, cycle;
  for (size_t i = 0; i < first; ++i) spoke.push_back(colour(outputs[i]));
  for (size_t i = first; i < period_end; ++i) cycle.push_back(colour(outputs[i]));
  return LassoWord(std::move(spoke), std::move(cycle));
}

bool cobuchi_sem(const PrefixFunction& f, const LassoWord& w) {
  LassoWord image = lasso_image(f, w);
  for (const Colour& c : image.cycle())
    if (c.index == Ordinal{2}) return false;
  return true;
}

namespace {

void check_same_family(const PrefixFunction& f, const PrefixFunction& g) {
  if (!(f.family() == g.family()))
    throw std::invalid_argument("machines must share one input family");
}

}  // namespace

PrefixFunction op_max(const PrefixFunction& f, const PrefixFunction& g) {
  check_same_family(f, g);
  PrefixFunction h(f.family());
  std::map<std::pair<uint32_t, uint32_t>, uint32_t> ids;
  std::deque<std::pair<uint32_t, uint32_t>> todo;
  auto intern = [&](uint32_t a, uint32_t b) {
    auto [it, inserted] = ids.emplace(std::make_pair(a, b), 0);
    if (inserted) {
      it->second = h.add_state('(' + f.name(a) + ';' + g.name(b) + ')',
                               std::max(f.out(a), g.out(b)));
      todo.emplace_back(a, b);
    }
    return it->second;
  };
  h.set_init(intern(f.init(), g.init()));
  while (!todo.empty()) {
    auto [a, b] = todo.front();
    todo.pop_front();
    uint32_t src = ids.at({a, b});
    for (const Colour& c : f.family().all_colours())
      h.set_step(src, c, intern(f.step(a, c), g.step(b, c)));
  }
  return h;
}

PrefixFunction op_union(const PrefixFunction& f, const PrefixFunction& g) {
  check_same_family(f, g);
  PrefixFunction h(f.family());
  struct Key {
    uint32_t a, b;
    bool leq;  // latest 2-event came from f, i.e. the union may still emit 1
    auto operator<=>(const Key&) const = default;
  };
  std::map<Key, uint32_t> ids;
  std::deque<Key> todo;
  auto intern = [&](Key k) {
    auto [it, inserted] = ids.emplace(k, 0);
    if (inserted) {
      uint64_t out = f.out(k.a) == 1 ? 1 : (k.leq ? 1 : 2);
      it->second = h.add_state('(' + f.name(k.a) + ';' + g.name(k.b) + (k.leq ? ";+" : ";-") + ')',
                               out);
      todo.push_back(k);
    }
    return it->second;
  };
  h.set_init(intern({f.init(), g.init(), g.out(g.init()) != 2}));
  while (!todo.empty()) {
    Key k = todo.front();
    todo.pop_front();
    uint32_t src = ids.at(k);
    for (const Colour& c : f.family().all_colours()) {
      // Event order per letter: f's 2 at the strict prefix, then the step,
      // then g's 2 at the extended prefix.
      uint32_t a2 = f.step(k.a, c), b2 = g.step(k.b, c);
      bool leq = g.out(b2) == 2 ? false : (f.out(k.a) == 2 ? true : k.leq);
      h.set_step(src, c, intern({a2, b2, leq}));
    }
  }
  return h;
}

bool pointwise_leq(const PrefixFunction& f, const PrefixFunction& g) {
  check_same_family(f, g);
  std::set<std::pair<uint32_t, uint32_t>> seen{{f.init(), g.init()}};
  std::deque<std::pair<uint32_t, uint32_t>> todo{{f.init(), g.init()}};
  while (!todo.empty()) {
    auto [a, b] = todo.front();
    todo.pop_front();
    if (g.out(b) == 1 && f.out(a) == 2) return false;
    for (const Colour& c : f.family().all_colours()) {
      auto next = std::make_pair(f.step(a, c), g.step(b, c));
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return true;
}

PrefixFunction successor_step(const PrefixFunction& g_small, const PrefixFunction& g_big,
                              const PrefixFunction& f_next) {
  if (!pointwise_leq(g_big, g_small))
    throw std::invalid_argument("successor step requires g_big <= g_small");
  return op_max(op_union(g_small, f_next), g_big);
}

PrefixFunction chain_reduction(const std::vector<PrefixFunction>& chain) {
  if (chain.empty()) throw std::invalid_argument("chain reduction needs at least one machine");
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    if (!pointwise_leq(chain[i + 1], chain[i]))
      throw std::invalid_argument("chain is not pointwise decreasing at position " +
                                  std::to_string(i));
  const ColourFamily& family = chain.front().family();
  for (const auto& f : chain) check_same_family(chain.front(), f);

  PrefixFunction h(family);
  std::map<std::vector<uint32_t>, uint32_t> ids;
  std::deque<std::vector<uint32_t>> todo;
  auto intern = [&](const std::vector<uint32_t>& tuple) {
    auto [it, inserted] = ids.emplace(tuple, 0);
    if (inserted) {
      uint64_t out = chain.size();
      std::string name = "(";
      for (size_t i = 0; i < tuple.size(); ++i) {
        if (i > 0) name += ';';
        name += chain[i].name(tuple[i]);
        if (chain[i].out(tuple[i]) == 1 && out == chain.size()) out = i;
      }
      name += ')';
      it->second = h.add_state(std::move(name), out);
      todo.push_back(tuple);
    }
    return it->second;
  };
  std::vector<uint32_t> init;
  for (const auto& f : chain) init.push_back(f.init());
  h.set_init(intern(init));
  while (!todo.empty()) {
    std::vector<uint32_t> tuple = todo.front();
    todo.pop_front();
    uint32_t src = ids.at(tuple);
    for (const Colour& c : family.all_colours()) {
      std::vector<uint32_t> next;
      for (size_t i = 0; i < tuple.size(); ++i) next.push_back(chain[i].step(tuple[i], c));
      h.set_step(src, c, intern(next));
    }
  }
  return h;
}

LassoWord double_map(const LassoWord& w) {
  auto map_word = [](const FiniteWord& word) {
    FiniteWord out;
    for (const Colour& c : word) out.push_back(Colour{Ordinal{c.index.as_natural() * 2}, c.symbol});
    return out;
  };
  return LassoWord(map_word(w.spoke()), map_word(w.cycle()));
}

LassoWord limit_collapse(const LassoWord& w, const Ordinal& alpha,
                         const std::vector<Ordinal>& gammas) {
  for (size_t i = 0; i + 1 < gammas.size(); ++i)
    if (gammas[i] >= gammas[i + 1])
      throw std::invalid_argument("replacement sequence must be strictly increasing");
  for (const Ordinal& g : gammas)
    if (g >= alpha) throw std::invalid_argument("replacement indices must lie below the collapsed index");
  for (const Colour& c : w.cycle())
    if (c.index == alpha)
      throw std::invalid_argument(
          "the collapsed index occurs in the cycle; the image would not be ultimately periodic");
  FiniteWord spoke;
  for (size_t i = 0; i < w.spoke().size(); ++i) {
    Colour c = w.spoke()[i];
    if (c.index == alpha) {
      if (i >= gammas.size())
        throw std::invalid_argument("replacement sequence too short for position " +
                                    std::to_string(i));
      c.index = gammas[i];
    }
    spoke.push_back(c);
  }
  return LassoWord(std::move(spoke), w.cycle());
}

}  // namespace lexigraph
