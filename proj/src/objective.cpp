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

#include "lexigraph/objective.hpp"

#include <stdexcept>

namespace lexigraph {

namespace {

Objective make_named_parity(Objective::Kind kind, const Ordinal& alpha);

}  // namespace

Objective Objective::tw(const Ordinal& index) {
  Objective o;
  o.kind_ = Kind::TW;
  o.param_ = index;
  return o;
}

Objective Objective::tl(const Ordinal& index) {
  Objective o;
  o.kind_ = Kind::TL;
  o.param_ = index;
  return o;
}

Objective Objective::cobuchi(const Ordinal& index) {
  Objective o;
  o.kind_ = Kind::CoBuchi;
  o.param_ = index;
  return o;
}

namespace {

void check_product_children(const std::map<Ordinal, Objective>& children) {
  // Each child's colour indices must start at the child's key and stay below
  // the next key, so that projection by index picks a unique child.
  for (auto it = children.begin(); it != children.end(); ++it) {
    ColourFamily f = it->second.colours();
    if (f.classes().empty()) throw std::invalid_argument("product child has no colours");
    if (f.classes().begin()->first < it->first)
      throw std::invalid_argument("product child colours start below its index " + it->first.str());
    auto next = std::next(it);
    if (next != children.end() && f.classes().rbegin()->first >= next->first)
      throw std::invalid_argument("product child colours overlap the next index " +
                                  next->first.str());
  }
}

}  // namespace

Objective Objective::maxlex(std::map<Ordinal, Objective> children) {
  check_product_children(children);
  Objective o;
  o.kind_ = Kind::MaxLex;
  o.children_ = std::make_shared<const std::map<Ordinal, Objective>>(std::move(children));
  return o;
}

Objective Objective::minlex(std::map<Ordinal, Objective> children) {
  check_product_children(children);
  Objective o;
  o.kind_ = Kind::MinLex;
  o.children_ = std::make_shared<const std::map<Ordinal, Objective>>(std::move(children));
  return o;
}

Objective Objective::parity_d(uint64_t d) {
  if (d % 2 != 0) throw std::invalid_argument("Parity(d) requires d even");
  Objective o;
  o.kind_ = Kind::ParityD;
  o.param_ = Ordinal{d};
  return o;
}

Objective Objective::max_parity(const Ordinal& alpha) {
  Objective o;
  o.kind_ = Kind::MaxParity;
  o.param_ = alpha;
  return o;
}

Objective Objective::min_parity(const Ordinal& alpha) {
  Objective o;
  o.kind_ = Kind::MinParity;
  o.param_ = alpha;
  return o;
}

Objective Objective::omega_buchi(const Ordinal& alpha) {
  Objective o;
  o.kind_ = Kind::OmegaBuchi;
  o.param_ = alpha;
  return o;
}

bool Objective::is_named() const {
  return kind_ == Kind::ParityD || kind_ == Kind::MaxParity || kind_ == Kind::MinParity ||
         kind_ == Kind::OmegaBuchi;
}

const Ordinal& Objective::index() const {
  if (!is_atom()) throw std::logic_error("index() on a non-atom objective");
  return param_;
}

const Ordinal& Objective::alpha() const {
  if (!is_named()) throw std::logic_error("alpha() on a non-named objective");
  return param_;
}

const std::map<Ordinal, Objective>& Objective::children() const {
  if (!children_) throw std::logic_error("children() on a non-product objective");
  return *children_;
}

Objective Objective::expand() const {
  switch (kind_) {
    case Kind::ParityD: {
      uint64_t d = param_.as_natural();
      std::map<Ordinal, Objective> children;
      for (uint64_t i = 0; i <= d; ++i)
        children.emplace(Ordinal{i}, i % 2 == 0 ? tw(Ordinal{i}) : tl(Ordinal{i}));
      return maxlex(std::move(children));
    }
    case Kind::MaxParity: {
      uint64_t n = param_.as_natural();
      std::map<Ordinal, Objective> children;
      for (uint64_t i = 0; i < n; ++i)
        children.emplace(Ordinal{i}, i % 2 == 0 ? tl(Ordinal{i}) : tw(Ordinal{i}));
      return maxlex(std::move(children));
    }
    case Kind::MinParity: {
      uint64_t n = param_.as_natural();
      std::map<Ordinal, Objective> children;
      for (uint64_t i = 0; i < n; ++i)
        children.emplace(Ordinal{i}, i % 2 == 0 ? tw(Ordinal{i}) : tl(Ordinal{i}));
      return minlex(std::move(children));
    }
    case Kind::OmegaBuchi: {
      uint64_t n = param_.as_natural();
      std::map<Ordinal, Objective> children;
      for (uint64_t i = 0; i < n; ++i) children.emplace(Ordinal{i}, tw(Ordinal{i}));
      return minlex(std::move(children));
    }
    default:
      return *this;
  }
}

ColourFamily Objective::colours() const {
  ColourFamily out;
  switch (kind_) {
    case Kind::TW:
    case Kind::TL:
      out.add_singleton(param_);
      return out;
    case Kind::CoBuchi:
      out.add_class(param_, {1, 2});
      return out;
    case Kind::MaxLex:
    case Kind::MinLex: {
      for (const auto& [key, child] : *children_) out = ColourFamily::merged(out, child.colours());
      return out;
    }
    case Kind::ParityD: {
      uint64_t d = param_.as_natural();
      for (uint64_t i = 0; i <= d; ++i) out.add_singleton(Ordinal{i});
      return out;
    }
    case Kind::MaxParity:
    case Kind::MinParity:
    case Kind::OmegaBuchi: {
      uint64_t n = param_.as_natural();
      for (uint64_t i = 0; i < n; ++i) out.add_singleton(Ordinal{i});
      return out;
    }
  }
  throw std::logic_error("bad objective kind");
}

bool Objective::operator==(const Objective& rhs) const {
  if (kind_ != rhs.kind_ || param_ != rhs.param_) return false;
  if (!children_ != !rhs.children_) return false;
  return !children_ || *children_ == *rhs.children_;
}

namespace {

void validate_letter(const Objective& objective, const Colour& c) {
  bool ok = false;
  switch (objective.kind()) {
    case Objective::Kind::ParityD:
      ok = c.symbol == 0 && c.index.is_finite() && c.index <= objective.alpha();
      break;
    case Objective::Kind::MaxParity:
    case Objective::Kind::MinParity:
    case Objective::Kind::OmegaBuchi:
      ok = c.symbol == 0 && c.index < objective.alpha();
      break;
    default:
      ok = objective.colours().contains(c);
      break;
  }
  if (!ok)
    throw std::invalid_argument("colour " + c.str() + " outside the objective's colour family");
}

// Projection of a lasso to the colours of a sub-objective's family. Returns
// the projected lasso; the caller guarantees the cycle has a match.
LassoWord project_to_family(const LassoWord& w, const ColourFamily& family) {
  FiniteWord spoke, cycle;
  for (const Colour& c : w.spoke())
    if (family.has_class(c.index)) spoke.push_back(c);
  for (const Colour& c : w.cycle())
    if (family.has_class(c.index)) cycle.push_back(c);
  return LassoWord(std::move(spoke), std::move(cycle));
}

}  // namespace

MembershipVerdict member(const Objective& objective, const LassoWord& w) {
  switch (objective.kind()) {
    case Objective::Kind::TW:
    case Objective::Kind::TL:
    case Objective::Kind::CoBuchi: {
      for (const Colour& c : w.spoke()) validate_letter(objective, c);
      for (const Colour& c : w.cycle()) validate_letter(objective, c);
      bool accepted = true;
      if (objective.kind() == Objective::Kind::TL) accepted = false;
      if (objective.kind() == Objective::Kind::CoBuchi) {
        for (const Colour& c : w.cycle())
          if (c.symbol == 2) accepted = false;
      }
      return {accepted, limsup_index(w)};
    }
    case Objective::Kind::MaxLex:
    case Objective::Kind::MinLex: {
      bool is_max = objective.kind() == Objective::Kind::MaxLex;
      ColourFamily family = objective.colours();
      for (const Colour& c : w.spoke())
        if (!family.contains(c))
          throw std::invalid_argument("colour " + c.str() +
                                      " outside the objective's colour family");
      for (const Colour& c : w.cycle())
        if (!family.contains(c))
          throw std::invalid_argument("colour " + c.str() +
                                      " outside the objective's colour family");
      Ordinal pivot = is_max ? limsup_index(w) : support_index(w);
      // Locate the child owning the pivot index: the one with the greatest
      // key <= pivot whose colour family contains it.
      const auto& children = objective.children();
      auto it = children.upper_bound(pivot);
      if (it == children.begin())
        throw std::invalid_argument("colour index " + pivot.str() +
                                    " outside the objective's colour family");
      --it;
      ColourFamily child_colours = it->second.colours();
      if (!child_colours.has_class(pivot))
        throw std::invalid_argument("colour index " + pivot.str() +
                                    " outside the objective's colour family");
      MembershipVerdict sub = member(it->second, project_to_family(w, child_colours));
      return {sub.accepted, pivot};
    }
    case Objective::Kind::ParityD: {
      for (const Colour& c : w.spoke()) validate_letter(objective, c);
      for (const Colour& c : w.cycle()) validate_letter(objective, c);
      Ordinal top = limsup_index(w);
      return {top.parity() == Ordinal::Parity::Even, top};
    }
    case Objective::Kind::MaxParity: {
      for (const Colour& c : w.spoke()) validate_letter(objective, c);
      for (const Colour& c : w.cycle()) validate_letter(objective, c);
      Ordinal top = limsup_index(w);
      return {top.parity() == Ordinal::Parity::Odd, top};
    }
    case Objective::Kind::MinParity: {
      for (const Colour& c : w.spoke()) validate_letter(objective, c);
      for (const Colour& c : w.cycle()) validate_letter(objective, c);
      Ordinal bottom = support_index(w);
      return {bottom.parity() == Ordinal::Parity::Even, bottom};
    }
    case Objective::Kind::OmegaBuchi: {
      for (const Colour& c : w.spoke()) validate_letter(objective, c);
      for (const Colour& c : w.cycle()) validate_letter(objective, c);
      // Some colour repeats in every lasso cycle.
      return {true, support_index(w)};
    }
  }
  throw std::logic_error("bad objective kind");
}

namespace {

void skip_ws(std::string_view text, size_t& pos) {
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
}

bool consume(std::string_view text, size_t& pos, std::string_view token) {
  if (text.substr(pos, token.size()) != token) return false;
  pos += token.size();
  return true;
}

// Ordinal token: letters `w^*+()0-9` up to a delimiter.
Ordinal parse_ordinal_token(std::string_view text, size_t& pos) {
  size_t start = pos;
  while (pos < text.size() && std::string_view("w^*+()0123456789").find(text[pos]) !=
                                  std::string_view::npos)
    ++pos;
  return Ordinal::parse(text.substr(start, pos - start));
}

Objective parse_expr(std::string_view text, size_t& pos);

std::map<Ordinal, Objective> parse_family(std::string_view text, size_t& pos) {
  std::map<Ordinal, Objective> children;
  if (!consume(text, pos, "{")) throw std::invalid_argument("expected `{` in objective");
  while (true) {
    skip_ws(text, pos);
    Ordinal key = parse_ordinal_token(text, pos);
    skip_ws(text, pos);
    if (!consume(text, pos, ":")) throw std::invalid_argument("expected `:` in objective family");
    skip_ws(text, pos);
    Objective child = parse_expr(text, pos);
    if (!children.emplace(key, std::move(child)).second)
      throw std::invalid_argument("duplicate index in objective family: " + key.str());
    skip_ws(text, pos);
    if (consume(text, pos, ",")) continue;
    if (consume(text, pos, "}")) break;
    throw std::invalid_argument("expected `,` or `}` in objective family");
  }
  return children;
}

Ordinal parse_paren_ordinal(std::string_view text, size_t& pos) {
  if (!consume(text, pos, "(")) throw std::invalid_argument("expected `(` in objective");
  skip_ws(text, pos);
  // Grab everything up to the matching `)`; ordinal syntax may itself
  // contain parens (bracketed exponents).
  size_t depth = 1, end = pos;
  while (end < text.size() && depth > 0) {
    if (text[end] == '(') ++depth;
    if (text[end] == ')') --depth;
    ++end;
  }
  if (depth != 0) throw std::invalid_argument("unbalanced parens in objective");
  size_t stop = end - 1;
  while (stop > pos && (text[stop - 1] == ' ' || text[stop - 1] == '\t')) --stop;
  Ordinal value = Ordinal::parse(text.substr(pos, stop - pos));
  pos = end;
  return value;
}

Objective parse_expr(std::string_view text, size_t& pos) {
  skip_ws(text, pos);
  if (consume(text, pos, "TW@")) return Objective::tw(parse_ordinal_token(text, pos));
  if (consume(text, pos, "TL@")) return Objective::tl(parse_ordinal_token(text, pos));
  if (consume(text, pos, "coBuchi@")) return Objective::cobuchi(parse_ordinal_token(text, pos));
  if (consume(text, pos, "maxlex")) return Objective::maxlex(parse_family(text, pos));
  if (consume(text, pos, "minlex")) return Objective::minlex(parse_family(text, pos));
  if (consume(text, pos, "Parity"))
    return Objective::parity_d(parse_paren_ordinal(text, pos).as_natural());
  if (consume(text, pos, "MaxParity")) return Objective::max_parity(parse_paren_ordinal(text, pos));
  if (consume(text, pos, "MinParity")) return Objective::min_parity(parse_paren_ordinal(text, pos));
  if (consume(text, pos, "omegaBuchi"))
    return Objective::omega_buchi(parse_paren_ordinal(text, pos));
  throw std::invalid_argument("cannot parse objective: " + std::string(text.substr(pos)));
}

}  // namespace

Objective Objective::parse(std::string_view text) {
  size_t pos = 0;
  Objective result = parse_expr(text, pos);
  skip_ws(text, pos);
  if (pos != text.size())
    throw std::invalid_argument("trailing characters in objective: " + std::string(text.substr(pos)));
  return result;
}

std::string Objective::str() const {
  switch (kind_) {
    case Kind::TW: return "TW@" + param_.str();
    case Kind::TL: return "TL@" + param_.str();
    case Kind::CoBuchi: return "coBuchi@" + param_.str();
    case Kind::MaxLex:
    case Kind::MinLex: {
      std::string out = kind_ == Kind::MaxLex ? "maxlex{" : "minlex{";
      bool first = true;
      for (const auto& [key, child] : *children_) {
        if (!first) out += ',';
        first = false;
        out += key.str() + ':' + child.str();
      }
      return out + '}';
    }
    case Kind::ParityD: return "Parity(" + param_.str() + ')';
    case Kind::MaxParity: return "MaxParity(" + param_.str() + ')';
    case Kind::MinParity: return "MinParity(" + param_.str() + ')';
    case Kind::OmegaBuchi: return "omegaBuchi(" + param_.str() + ')';
  }
  throw std::logic_error("bad objective kind");
}

}  // namespace lexigraph
