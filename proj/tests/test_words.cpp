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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lexigraph/words.hpp"

using namespace lexigraph;

namespace {

Colour col(uint64_t index, uint64_t symbol = 0) { return {Ordinal(index), symbol}; }

LassoWord lasso(std::vector<uint64_t> spoke, std::vector<uint64_t> cycle) {
  FiniteWord u, v;
  for (uint64_t i : spoke) u.push_back(col(i));
  for (uint64_t i : cycle) v.push_back(col(i));
  return LassoWord(std::move(u), std::move(v));
}

LassoWord random_lasso(std::mt19937_64& rng, uint64_t max_index, size_t max_spoke,
                       size_t max_cycle) {
  std::uniform_int_distribution<uint64_t> idx(0, max_index);
  std::uniform_int_distribution<size_t> spoke_len(0, max_spoke), cycle_len(1, max_cycle);
  FiniteWord u, v;
  for (size_t i = spoke_len(rng); i > 0; --i) u.push_back(col(idx(rng)));
  for (size_t i = cycle_len(rng); i > 0; --i) v.push_back(col(idx(rng)));
  return LassoWord(std::move(u), std::move(v));
}

}  // namespace

TEST_CASE("colour text") {
  CHECK(Colour::parse("2").index == Ordinal(2));
  CHECK(Colour::parse("2:1") == col(2, 1));
  CHECK(Colour::parse("w+1").index == Ordinal::omega() + 1);
  CHECK(col(2, 1).str() == "2:1");
  CHECK(col(3).str() == "3");
}

TEST_CASE("colour family") {
  ColourFamily f = ColourFamily::parse("0:2,1,w");
  CHECK(f.has_class(0));
  CHECK(f.contains(col(0, 1)));
  CHECK_FALSE(f.contains(col(0, 2)));
  CHECK(f.contains({Ordinal::omega(), 0}));
  CHECK(f.colour_count() == 4);
  CHECK(ColourFamily::parse(f.str()) == f);
}

TEST_CASE("lasso normalization") {
  // Primitive period.
  CHECK(lasso({}, {0, 1, 0, 1}) == lasso({}, {0, 1}));
  // Spoke absorption into the cycle.
  CHECK(lasso({1}, {1}) == lasso({}, {1}));
  // Rotation plus absorption denote the same word.
  CHECK(lasso({2}, {0, 1}) == lasso({2, 0}, {1, 0}));
  CHECK(lasso({}, {0, 1}) != lasso({}, {1, 0}));
}

TEST_CASE("lasso text") {
  LassoWord w = LassoWord::parse("2 2 | 0 1");
  CHECK(w.spoke().size() == 2);
  CHECK(w.cycle() == FiniteWord{col(0), col(1)});
  CHECK(LassoWord::parse(w.str()) == w);
  CHECK(LassoWord::parse("| 1").spoke().empty());
  CHECK_THROWS_AS(LassoWord::parse("1 |"), std::invalid_argument);
}

TEST_CASE("letters and unrolling") {
  LassoWord w = lasso({2}, {0, 1});
  CHECK(w.letter(0) == col(2));
  CHECK(w.letter(1) == col(0));
  CHECK(w.letter(4) == col(1));
  FiniteWord first = w.unroll(5);
  for (size_t i = 0; i < first.size(); ++i) CHECK(first[i] == w.letter(i));
}

TEST_CASE("projection") {
  auto as_lasso = [](const std::variant<LassoWord, FiniteWord>& r) {
    return std::get<LassoWord>(r);
  };
  CHECK(as_lasso(project(lasso({}, {0, 1}), IndexPredicate::Eq, 1)) == lasso({}, {1}));
  auto finite = project(lasso({2}, {0}), IndexPredicate::Eq, 2);
  CHECK(std::get<FiniteWord>(finite) == FiniteWord{col(2)});
  CHECK(as_lasso(project(lasso({}, {0, 1, 1}), IndexPredicate::Ge, 1)) == lasso({}, {1, 1}));
  CHECK(as_lasso(project(lasso({0, 3}, {1, 2}), IndexPredicate::Gt, 1)) == lasso({3}, {2}));
}

TEST_CASE("index combinators") {
  CHECK(limsup_index(lasso({}, {1, 2})) == Ordinal(2));
  CHECK(limsup_index(lasso({5}, {0})) == Ordinal(0));
  CHECK(limsup_index(LassoWord({}, {{Ordinal::omega(), 0}, col(3)})) == Ordinal::omega());
  CHECK(mininf_index(lasso({}, {1, 2})) == Ordinal(1));
  CHECK(mininf_index(lasso({0}, {7})) == Ordinal(7));
  CHECK(support_index(lasso({}, {2, 4})) == Ordinal(2));
  CHECK(support_index(lasso({1, 1, 1}, {2})) == Ordinal(2));
}

TEST_CASE("randomized invariants") {
  std::mt19937_64 rng(0);
  for (int round = 0; round < 500; ++round) {
    LassoWord w = random_lasso(rng, 3, 3, 4);

    CHECK(support_index(w) == mininf_index(w));
    CHECK(limsup_index(w) >= mininf_index(w));

    // Cycle rotation and doubling change nothing.
    FiniteWord rotated(w.cycle().begin() + 1, w.cycle().end());
    rotated.push_back(w.cycle().front());
    LassoWord wr(w.spoke(), rotated);
    CHECK(limsup_index(wr) == limsup_index(w));
    CHECK(mininf_index(wr) == mininf_index(w));
    FiniteWord doubled = w.cycle();
    doubled.insert(doubled.end(), w.cycle().begin(), w.cycle().end());
    LassoWord wd(w.spoke(), doubled);
    CHECK(wd == w);

    // Projection at the bottom is the identity.
    CHECK(std::get<LassoWord>(project(w, IndexPredicate::Ge, 0)) == w);

    // Projection agrees with literal unrolling on a long prefix.
    Ordinal pivot = limsup_index(w);
    auto projected = project(w, IndexPredicate::Eq, pivot);
    FiniteWord expect;
    for (const Colour& c : w.unroll(3 * (w.spoke().size() + w.cycle().size())))
      if (c.index == pivot) expect.push_back(c);
    FiniteWord got = std::get<LassoWord>(projected).unroll(expect.size());
    CHECK(got == expect);
  }
}
