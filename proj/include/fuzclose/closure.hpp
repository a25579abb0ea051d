// Copyright 2026 The fuzclose authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Closure maps on a fuzzy powerset and everything built from them: the three
// defining axioms, continuity of point maps between closure spaces, the
// lattice of all closure maps on a fixed space (with the identity and the
// all-to-top operator as its bounds), initial structures along a map or a
// family of maps, and the idempotence/additivity predicates.
//
// A map on a small powerset is tabulated at construction; larger spaces keep
// the defining rule.  Checks enumerate the powerset and throw CapExceeded
// when it is larger than the supplied cap, unless a sampling budget is given.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fuzclose/error.hpp"
#include "fuzclose/fuzzy.hpp"
#include "fuzclose/lattice.hpp"
#include "fuzclose/report.hpp"

namespace fuzclose {

inline constexpr std::size_t kDefaultPowersetCap = 4096;

struct SampleBudget {
  int count = 256;
  unsigned seed = 1;
};

class ClosureMap {
 public:
  using Rule = std::function<FuzzySet(const FuzzySet&)>;

  // The identity operator: the least closure map on the space.
  static ClosureMap identity(Space space) {
    ClosureMap c;
    c.space_ = std::move(space);
    c.name_ = "identity";
    c.rule_ = [](const FuzzySet& u) { return u; };
    return c;
  }

  // Sends bottom to bottom and everything else to the constant-top set: the
  // greatest closure map on the space.
  static ClosureMap trivial(Space space) {
    ClosureMap c;
    c.space_ = space;
    c.name_ = "trivial";
    Space s = std::move(space);
    c.rule_ = [s](const FuzzySet& u) {
      FuzzySet bot = FuzzySet::bottom(s.carrier, s.basis);
      if (u == bot) return bot;
      return FuzzySet::top(s.carrier, s.basis);
    };
    return c;
  }

  // table[code(u)] = code(c(u)) over the full powerset enumeration.
  static ClosureMap from_table(Space space, std::string name,
                               std::vector<std::uint64_t> table) {
    PowersetDomain dom(space);
    if (dom.saturated())
      throw Error(ErrorCode::CapExceeded,
                  "table operator on " + space.describe() + " is not representable");
    if (table.size() != dom.size())
      throw Error(ErrorCode::SpaceMismatch,
                  "operator '" + name + "' table does not cover the powerset of " +
                      space.describe());
    for (std::uint64_t v : table)
      if (v >= dom.size())
        throw Error(ErrorCode::ForeignElement,
                    "operator '" + name + "' table points outside the powerset");
    ClosureMap c;
    c.space_ = std::move(space);
    c.name_ = std::move(name);
    c.table_ = std::move(table);
    return c;
  }

  // Wraps a rule; tabulates it when the powerset is within tab_cap.
  static ClosureMap from_rule(Space space, std::string name, Rule rule,
                              std::size_t tab_cap = kDefaultPowersetCap) {
    PowersetDomain dom(space);
    if (!dom.saturated() && dom.size() <= tab_cap) {
      std::vector<std::uint64_t> table(dom.size());
      for (std::uint64_t code = 0; code < dom.size(); ++code)
        table[code] = dom.encode(rule(dom.decode(code)));
      return from_table(std::move(space), std::move(name), std::move(table));
    }
    ClosureMap c;
    c.space_ = std::move(space);
    c.name_ = std::move(name);
    c.rule_ = std::move(rule);
    return c;
  }

  const Space& space() const { return space_; }
  const std::string& name() const { return name_; }
  bool tabulated() const { return !table_.empty(); }

  FuzzySet apply(const FuzzySet& u) const {
    if (!(u.space() == space_))
      throw Error(ErrorCode::SpaceMismatch,
                  "operator '" + name_ + "' on " + space_.describe() +
                      " applied to a set over " + u.space().describe());
    if (tabulated()) {
      PowersetDomain dom(space_);
      return dom.decode(table_[dom.encode(u)]);
    }
    FuzzySet v = rule_(u);
    if (!(v.space() == space_))
      throw Error(ErrorCode::SpaceMismatch,
                  "rule of operator '" + name_ + "' left its space");
    return v;
  }

  ClosureMap renamed(std::string name) const {
    ClosureMap c = *this;
    c.name_ = std::move(name);
    return c;
  }

 private:
  ClosureMap() = default;

  Space space_;
  std::string name_;
  std::vector<std::uint64_t> table_;
  Rule rule_;
};

inline ClosureMap discrete_operator(Space space) { return ClosureMap::identity(std::move(space)); }
inline ClosureMap trivial_operator(Space space) { return ClosureMap::trivial(std::move(space)); }

namespace detail {

// Upper covers in a lattice: cover_lists(l)[a] holds every b with a < b and
// nothing strictly between.
inline std::vector<std::vector<ElemId>> cover_lists(const FiniteLattice& lat) {
  const int n = lat.size();
  std::vector<std::vector<ElemId>> covers(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !lat.leq(a, b)) continue;
      bool direct = true;
      for (int c = 0; c < n; ++c)
        if (c != a && c != b && lat.leq(a, c) && lat.leq(c, b)) {
          direct = false;
          break;
        }
      if (direct) covers[static_cast<std::size_t>(a)].push_back(b);
    }
  return covers;
}

inline FuzzySet random_fuzzy_set(const Space& space, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, space.basis->size() - 1);
  std::vector<ElemId> values(static_cast<std::size_t>(space.carrier->size()));
  for (auto& v : values) v = pick(rng);
  return FuzzySet(space.carrier, space.basis, values);
}

}  // namespace detail

// The three closure-map axioms:
//   extension      u <= c(u)
//   monotone       u <= v implies c(u) <= c(v)
//   bottom-fixed   c(bottom) = bottom
// Exhaustive when the powerset fits in `cap`; with a sampling budget, a
// deterministic random sample is used instead; otherwise CapExceeded.
// Monotonicity is checked across single-point cover steps, which generate
// the pointwise order.
inline Report check_closure_axioms(const ClosureMap& c,
                                   std::size_t cap = kDefaultPowersetCap,
                                   std::optional<SampleBudget> budget = std::nullopt) {
  Report report;
  const Space& space = c.space();
  PowersetDomain dom(space);
  FuzzySet bot = FuzzySet::bottom(space.carrier, space.basis);

  FuzzySet cbot = c.apply(bot);
  if (cbot == bot) {
    report.add_pass("bottom-fixed");
  } else {
    Witness w;
    w.bind("operator", c.name()).bind("image-of-bottom", cbot.to_literal());
    report.add_fail("bottom-fixed", w);
  }

  bool ok_ext = true, ok_mono = true;
  Witness w_ext, w_mono;
  auto covers = detail::cover_lists(*space.basis);

  auto check_one = [&](const FuzzySet& u) {
    FuzzySet cu = c.apply(u);
    if (ok_ext && !u.leq(cu)) {
      ok_ext = false;
      w_ext.bind("operator", c.name()).bind("u", u.to_literal())
          .bind("c-of-u", cu.to_literal());
    }
    if (ok_mono) {
      for (int x = 0; x < space.carrier->size() && ok_mono; ++x)
        for (ElemId up : covers[static_cast<std::size_t>(u.at(x))]) {
          FuzzySet v = u.with_value(x, up);
          FuzzySet cv = c.apply(v);
          if (!cu.leq(cv)) {
            ok_mono = false;
            w_mono.bind("operator", c.name()).bind("u", u.to_literal())
                .bind("v", v.to_literal()).bind("c-of-u", cu.to_literal())
                .bind("c-of-v", cv.to_literal());
            break;
          }
        }
    }
  };

  if (!dom.saturated() && dom.size() <= cap) {
    for (std::uint64_t code = 0; code < dom.size() && (ok_ext || ok_mono); ++code)
      check_one(dom.decode(code));
  } else if (budget) {
    std::mt19937 rng(budget->seed);
    for (int i = 0; i < budget->count && (ok_ext || ok_mono); ++i)
      check_one(detail::random_fuzzy_set(space, rng));
  } else {
    throw Error(ErrorCode::CapExceeded,
                "powerset of " + space.describe() +
                    " exceeds the enumeration cap and no sampling budget was given");
  }

  ok_ext ? report.add_pass("extension") : report.add_fail("extension", w_ext);
  ok_mono ? report.add_pass("monotone") : report.add_fail("monotone", w_mono);
  return report;
}

// c(u) = d(u) over the whole powerset.
inline bool same_behavior(const ClosureMap& c, const ClosureMap& d,
                          std::size_t cap = kDefaultPowersetCap) {
  if (!(c.space() == d.space()))
    throw Error(ErrorCode::SpaceMismatch,
                "operators on " + c.space().describe() + " and " + d.space().describe() +
                    " cannot be compared");
  PowersetDomain dom(c.space());
  if (dom.saturated() || dom.size() > cap)
    throw Error(ErrorCode::CapExceeded,
                "behavior comparison on " + c.space().describe() + " exceeds the cap");
  for (std::uint64_t code = 0; code < dom.size(); ++code) {
    FuzzySet u = dom.decode(code);
    if (!(c.apply(u) == d.apply(u))) return false;
  }
  return true;
}

// c(u) <= d(u) for every u.
inline bool pointwise_leq(const ClosureMap& c, const ClosureMap& d,
                          std::size_t cap = kDefaultPowersetCap) {
  if (!(c.space() == d.space()))
    throw Error(ErrorCode::SpaceMismatch,
                "operators on " + c.space().describe() + " and " + d.space().describe() +
                    " cannot be compared");
  PowersetDomain dom(c.space());
  if (dom.saturated() || dom.size() > cap)
    throw Error(ErrorCode::CapExceeded,
                "pointwise comparison on " + c.space().describe() + " exceeds the cap");
  for (std::uint64_t code = 0; code < dom.size(); ++code) {
    FuzzySet u = dom.decode(code);
    if (!c.apply(u).leq(d.apply(u))) return false;
  }
  return true;
}

// Pointwise join of a family of operators on one space; the empty family
// gives the identity.  The overload without a space rejects empty input.
inline ClosureMap join_maps(Space space, std::vector<ClosureMap> maps,
                            std::size_t tab_cap = kDefaultPowersetCap) {
  std::string name = "join(";
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (!(maps[i].space() == space))
      throw Error(ErrorCode::SpaceMismatch,
                  "operator '" + maps[i].name() + "' lives on " +
                      maps[i].space().describe() + ", not " + space.describe());
    if (i) name += ",";
    name += maps[i].name();
  }
  name += ")";
  if (maps.empty()) return discrete_operator(std::move(space));
  auto rule = [maps](const FuzzySet& u) {
    FuzzySet acc = maps.front().apply(u);
    for (std::size_t i = 1; i < maps.size(); ++i) acc = acc.join(maps[i].apply(u));
    return acc;
  };
  return ClosureMap::from_rule(std::move(space), std::move(name), std::move(rule), tab_cap);
}

inline ClosureMap join_maps(std::vector<ClosureMap> maps,
                            std::size_t tab_cap = kDefaultPowersetCap) {
  if (maps.empty())
    throw Error(ErrorCode::EmptySource,
                "join of an empty operator family needs an explicit space");
  Space space = maps.front().space();
  return join_maps(std::move(space), std::move(maps), tab_cap);
}

// Pointwise meet; the empty family gives the all-to-top operator.
inline ClosureMap meet_maps(Space space, std::vector<ClosureMap> maps,
                            std::size_t tab_cap = kDefaultPowersetCap) {
  std::string name = "meet(";
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (!(maps[i].space() == space))
      throw Error(ErrorCode::SpaceMismatch,
                  "operator '" + maps[i].name() + "' lives on " +
                      maps[i].space().describe() + ", not " + space.describe());
    if (i) name += ",";
    name += maps[i].name();
  }
  name += ")";
  if (maps.empty()) return trivial_operator(std::move(space));
  auto rule = [maps](const FuzzySet& u) {
    FuzzySet acc = maps.front().apply(u);
    for (std::size_t i = 1; i < maps.size(); ++i) acc = acc.meet(maps[i].apply(u));
    return acc;
  };
  return ClosureMap::from_rule(std::move(space), std::move(name), std::move(rule), tab_cap);
}

inline ClosureMap meet_maps(std::vector<ClosureMap> maps,
                            std::size_t tab_cap = kDefaultPowersetCap) {
  if (maps.empty())
    throw Error(ErrorCode::EmptySource,
                "meet of an empty operator family needs an explicit space");
  Space space = maps.front().space();
  return meet_maps(std::move(space), std::move(maps), tab_cap);
}

// Every closure map lies between the identity and the all-to-top operator.
inline Report check_operator_bounds(const ClosureMap& c,
                                    std::size_t cap = kDefaultPowersetCap) {
  Report report;
  ClosureMap lo = discrete_operator(c.space());
  ClosureMap hi = trivial_operator(c.space());
  if (pointwise_leq(lo, c, cap) && pointwise_leq(c, hi, cap)) {
    report.add_pass("between-identity-and-trivial");
  } else {
    Witness w;
    w.bind("operator", c.name());
    report.add_fail("between-identity-and-trivial", w, true);
  }
  return report;
}

// Continuity of f : (X, c_x) -> (Y, c_y), stated two equivalent ways:
//   image form      forward(c_x(u)) <= c_y(forward(u))  for all u over X
//   preimage form   c_x(backward(v)) <= backward(c_y(v)) for all v over Y
// Both are checked and their verdicts must agree; disagreement is a finding.
inline Report check_c_continuity(const SetFunction& f, const ClosureMap& cx,
                                 const ClosureMap& cy,
                                 std::size_t cap = kDefaultPowersetCap) {
  if (!(*cx.space().carrier == *f.domain()))
    throw Error(ErrorCode::CarrierMismatch,
                "operator '" + cx.name() + "' does not live on the domain of '" +
                    f.name() + "'");
  if (!(*cy.space().carrier == *f.codomain()))
    throw Error(ErrorCode::CarrierMismatch,
                "operator '" + cy.name() + "' does not live on the codomain of '" +
                    f.name() + "'");
  if (!(*cx.space().basis == *cy.space().basis))
    throw Error(ErrorCode::SpaceMismatch,
                "operators '" + cx.name() + "' and '" + cy.name() +
                    "' take values in different lattices");

  Report report;
  PowersetDomain dom(cx.space());
  PowersetDomain cod(cy.space());
  if (dom.saturated() || cod.saturated() || dom.size() > cap || cod.size() > cap)
    throw Error(ErrorCode::CapExceeded,
                "continuity check along '" + f.name() + "' exceeds the enumeration cap");

  bool ok_image = true;
  Witness w_image;
  for (std::uint64_t code = 0; code < dom.size(); ++code) {
    FuzzySet u = dom.decode(code);
    FuzzySet lhs = fuzzy_forward(f, cx.apply(u));
    FuzzySet rhs = cy.apply(fuzzy_forward(f, u));
    if (!lhs.leq(rhs)) {
      ok_image = false;
      w_image.bind("fn", f.name()).bind("u", u.to_literal())
          .bind("lhs", lhs.to_literal()).bind("rhs", rhs.to_literal());
      break;
    }
  }

  bool ok_preimage = true;
  Witness w_preimage;
  for (std::uint64_t code = 0; code < cod.size(); ++code) {
    FuzzySet v = cod.decode(code);
    FuzzySet lhs = cx.apply(fuzzy_backward(f, v));
    FuzzySet rhs = fuzzy_backward(f, cy.apply(v));
    if (!lhs.leq(rhs)) {
      ok_preimage = false;
      w_preimage.bind("fn", f.name()).bind("v", v.to_literal())
          .bind("lhs", lhs.to_literal()).bind("rhs", rhs.to_literal());
      break;
    }
  }

  ok_image ? report.add_pass("image-criterion")
           : report.add_fail("image-criterion", w_image);
  ok_preimage ? report.add_pass("preimage-criterion")
              : report.add_fail("preimage-criterion", w_preimage);
  if (ok_image == ok_preimage) {
    report.add_pass("criteria-agree");
  } else {
    Witness w;
    w.bind("fn", f.name())
        .bind("image-criterion", ok_image ? "true" : "false")
        .bind("preimage-criterion", ok_preimage ? "true" : "false");
    report.add_fail("criteria-agree", w, true);
  }
  return report;
}

inline bool is_continuous(const SetFunction& f, const ClosureMap& cx,
                          const ClosureMap& cy,
                          std::size_t cap = kDefaultPowersetCap) {
  Report r = check_c_continuity(f, cx, cy, cap);
  const LawResult* law = r.find("image-criterion");
  return law && law->ok;
}

// Composition of continuous maps is continuous.  Both factors must already
// be continuous (PreconditionFailed otherwise); a failure of the composite
// is a finding.
inline Report check_continuity_composition(const SetFunction& f, const SetFunction& g,
                                           const ClosureMap& cx, const ClosureMap& cy,
                                           const ClosureMap& cz,
                                           std::size_t cap = kDefaultPowersetCap) {
  if (!is_continuous(f, cx, cy, cap))
    throw Error(ErrorCode::PreconditionFailed,
                "'" + f.name() + "' is not continuous; composition check needs both factors continuous");
  if (!is_continuous(g, cy, cz, cap))
    throw Error(ErrorCode::PreconditionFailed,
                "'" + g.name() + "' is not continuous; composition check needs both factors continuous");
  SetFunction gf = compose(g, f);
  Report inner = check_c_continuity(gf, cx, cz, cap);
  Report report;
  const LawResult* law = inner.find("image-criterion");
  if (law && law->ok) {
    report.add_pass("composite-continuous");
  } else {
    Witness w = law && law->witness ? *law->witness : Witness{};
    report.add_fail("composite-continuous", w, true);
  }
  return report;
}

// Initial operator along f into (Y, c_y): u |-> backward(c_y(forward(u))).
inline ClosureMap initial_closure(const SetFunction& f, const ClosureMap& cy,
                                  std::size_t tab_cap = kDefaultPowersetCap) {
  if (!(*cy.space().carrier == *f.codomain()))
    throw Error(ErrorCode::CarrierMismatch,
                "operator '" + cy.name() + "' does not live on the codomain of '" +
                    f.name() + "'");
  Space space{f.domain(), cy.space().basis};
  SetFunction fn = f;
  ClosureMap target = cy;
  auto rule = [fn, target](const FuzzySet& u) {
    return fuzzy_backward(fn, target.apply(fuzzy_forward(fn, u)));
  };
  return ClosureMap::from_rule(std::move(space),
                               "initial(" + f.name() + "," + cy.name() + ")",
                               std::move(rule), tab_cap);
}

// Factorization property of the initial operator: for any g : Z -> X,
// g is continuous into the initial space iff f . g is continuous into
// (Y, c_y).  A violated biconditional is a finding.
inline Report check_initial_factorization(const SetFunction& f, const ClosureMap& cy,
                                          const SetFunction& g, const ClosureMap& cz,
                                          std::size_t cap = kDefaultPowersetCap) {
  if (!(*g.codomain() == *f.domain()))
    throw Error(ErrorCode::CompositionMismatch,
                "factorization check needs the codomain of '" + g.name() +
                    "' to be the domain of '" + f.name() + "'");
  ClosureMap cx = initial_closure(f, cy, cap);
  bool through = is_continuous(g, cz, cx, cap);
  bool composite = is_continuous(compose(f, g), cz, cy, cap);
  Report report;
  if (through == composite) {
    report.add_pass("factorization-biconditional");
  } else {
    Witness w;
    w.bind("fn", f.name()).bind("probe", g.name())
        .bind("through-initial", through ? "true" : "false")
        .bind("composite", composite ? "true" : "false");
    report.add_fail("factorization-biconditional", w, true);
  }
  return report;
}

struct InitialLift {
  ClosureMap map;
  bool empty_source = false;
};

// Initial operator for a family of legs f_i : X -> Y_i with operators c_i:
// the pointwise join of the per-leg initial operators.  An empty family
// yields the identity operator, flagged via empty_source.
inline InitialLift initial_lift(Space space,
                                const std::vector<std::pair<SetFunction, ClosureMap>>& legs,
                                std::size_t tab_cap = kDefaultPowersetCap) {
  if (legs.empty()) return InitialLift{discrete_operator(std::move(space)), true};
  std::vector<ClosureMap> parts;
  parts.reserve(legs.size());
  for (const auto& [fn, cy] : legs) {
    if (!(*fn.domain() == *space.carrier))
      throw Error(ErrorCode::CarrierMismatch,
                  "leg '" + fn.name() + "' does not start at carrier '" +
                      space.carrier->name() + "'");
    if (!(*cy.space().basis == *space.basis))
      throw Error(ErrorCode::SpaceMismatch,
                  "leg operator '" + cy.name() + "' takes values in '" +
                      cy.space().basis->name() + "', not '" + space.basis->name() + "'");
    parts.push_back(initial_closure(fn, cy, tab_cap));
  }
  return InitialLift{join_maps(std::move(space), std::move(parts), tab_cap), false};
}

// Factorization across a family of legs.  When every composite f_j . g is
// continuous, g is continuous into the joined lift; that direction holds for
// any monotone legs and is a finding if violated.  The full biconditional
// would single the joined lift out as the initial structure of the source;
// it holds for singleton or pointwise-comparable families but can fail when
// the per-leg operators are incomparable (the join then exceeds the largest
// operator keeping every leg continuous), so it is reported without being a
// finding.
inline Report check_lift_factorization(
    const Space& space, const std::vector<std::pair<SetFunction, ClosureMap>>& legs,
    const SetFunction& g, const ClosureMap& cz,
    std::size_t cap = kDefaultPowersetCap) {
  if (!(*g.codomain() == *space.carrier))
    throw Error(ErrorCode::CompositionMismatch,
                "lift factorization needs the codomain of '" + g.name() +
                    "' to be the carrier '" + space.carrier->name() + "'");
  InitialLift lift = initial_lift(space, legs, cap);
  bool through = is_continuous(g, cz, lift.map, cap);
  bool composites = true;
  std::string broken_leg;
  for (const auto& [fn, cy] : legs)
    if (!is_continuous(compose(fn, g), cz, cy, cap)) {
      composites = false;
      broken_leg = fn.name();
      break;
    }
  Report report;
  if (composites && !through) {
    Witness w;
    w.bind("probe", g.name()).bind("legs", std::to_string(legs.size()));
    report.add_fail("composites-imply-through-lift", w, true);
  } else {
    report.add_pass("composites-imply-through-lift");
  }
  if (through == composites) {
    report.add_pass("lift-factorization-biconditional");
  } else {
    Witness w;
    w.bind("probe", g.name())
        .bind("through-lift", through ? "true" : "false")
        .bind("composites", composites ? "true" : "false");
    if (!broken_leg.empty()) w.bind("first-broken-leg", broken_leg);
    report.add_fail("lift-factorization-biconditional", w);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Property predicates.

enum class ClosureProperty { kIdempotent, kAdditive, kFullyAdditive };

inline const char* to_string(ClosureProperty p) {
  switch (p) {
    case ClosureProperty::kIdempotent: return "idempotent";
    case ClosureProperty::kAdditive: return "additive";
    case ClosureProperty::kFullyAdditive: return "fully-additive";
  }
  return "unknown";
}

// c(c(u)) = c(u) for all u; the witness is the first failure in canonical
// code order.
inline Report check_idempotent(const ClosureMap& c,
                               std::size_t cap = kDefaultPowersetCap) {
  PowersetDomain dom(c.space());
  if (dom.saturated() || dom.size() > cap)
    throw Error(ErrorCode::CapExceeded,
                "idempotence check on " + c.space().describe() + " exceeds the cap");
  Report report;
  bool ok = true;
  Witness w;
  for (std::uint64_t code = 0; code < dom.size(); ++code) {
    FuzzySet u = dom.decode(code);
    FuzzySet cu = c.apply(u);
    FuzzySet ccu = c.apply(cu);
    if (!(ccu == cu)) {
      ok = false;
      w.bind("operator", c.name()).bind("u", u.to_literal())
          .bind("c-of-u", cu.to_literal()).bind("c-of-c-of-u", ccu.to_literal());
      break;
    }
  }
  ok ? report.add_pass("idempotent") : report.add_fail("idempotent", w);
  return report;
}

// c(u \/ v) = c(u) \/ c(v) for all u, v.
inline Report check_additive(const ClosureMap& c,
                             std::size_t cap = kDefaultPowersetCap) {
  PowersetDomain dom(c.space());
  if (dom.saturated() || dom.size() > cap)
    throw Error(ErrorCode::CapExceeded,
                "additivity check on " + c.space().describe() + " exceeds the cap");
  Report report;
  bool ok = true;
  Witness w;
  std::vector<FuzzySet> images;
  images.reserve(dom.size());
  for (std::uint64_t code = 0; code < dom.size(); ++code)
    images.push_back(c.apply(dom.decode(code)));
  for (std::uint64_t i = 0; i < dom.size() && ok; ++i) {
    FuzzySet u = dom.decode(i);
    for (std::uint64_t j = i; j < dom.size(); ++j) {
      FuzzySet v = dom.decode(j);
      FuzzySet lhs = c.apply(u.join(v));
      FuzzySet rhs = images[i].join(images[j]);
      if (!(lhs == rhs)) {
        ok = false;
        w.bind("operator", c.name()).bind("u", u.to_literal()).bind("v", v.to_literal())
            .bind("c-of-join", lhs.to_literal()).bind("join-of-c", rhs.to_literal());
        break;
      }
    }
  }
  ok ? report.add_pass("additive") : report.add_fail("additive", w);
  return report;
}

// c(\/ family) = \/ c(family) for arbitrary families, the empty one
// included.  On a finite space every family reduces to a finite subset, so
// the law is equivalent to binary additivity plus c(bottom) = bottom; both
// are checked, and families are also enumerated outright when there are at
// most family_cap of them.
inline Report check_fully_additive(const ClosureMap& c,
                                   std::size_t cap = kDefaultPowersetCap,
                                   std::uint64_t family_cap = 4096) {
  Report report;
  PowersetDomain dom(c.space());
  if (dom.saturated() || dom.size() > cap)
    throw Error(ErrorCode::CapExceeded,
                "full additivity check on " + c.space().describe() + " exceeds the cap");

  FuzzySet bot = FuzzySet::bottom(c.space().carrier, c.space().basis);
  bool ok = c.apply(bot) == bot;
  Witness w;
  if (!ok) w.bind("operator", c.name()).bind("family", "{}").bind("c-of-join", c.apply(bot).to_literal());

  if (ok) {
    Report binary = check_additive(c, cap);
    if (!binary.ok()) {
      ok = false;
      if (binary.laws().front().witness) w = *binary.laws().front().witness;
    }
  }

  if (ok && dom.size() <= 63 && (std::uint64_t{1} << dom.size()) <= family_cap) {
    std::vector<FuzzySet> all;
    std::vector<FuzzySet> images;
    for (std::uint64_t code = 0; code < dom.size(); ++code) {
      all.push_back(dom.decode(code));
      images.push_back(c.apply(all.back()));
    }
    const std::uint64_t total = std::uint64_t{1} << dom.size();
    for (std::uint64_t mask = 0; mask < total && ok; ++mask) {
      FuzzySet join_u = bot;
      FuzzySet join_c = bot;
      for (std::uint64_t i = 0; i < dom.size(); ++i)
        if (mask >> i & 1) {
          join_u = join_u.join(all[i]);
          join_c = join_c.join(images[i]);
        }
      FuzzySet lhs = c.apply(join_u);
      if (!(lhs == join_c)) {
        ok = false;
        w.bind("operator", c.name()).bind("family-mask", std::to_string(mask))
            .bind("c-of-join", lhs.to_literal()).bind("join-of-c", join_c.to_literal());
      }
    }
  }

  ok ? report.add_pass("fully-additive") : report.add_fail("fully-additive", w);
  return report;
}

inline Report check_property(const ClosureMap& c, ClosureProperty p,
                             std::size_t cap = kDefaultPowersetCap) {
  switch (p) {
    case ClosureProperty::kIdempotent: return check_idempotent(c, cap);
    case ClosureProperty::kAdditive: return check_additive(c, cap);
    case ClosureProperty::kFullyAdditive: return check_fully_additive(c, cap);
  }
  throw Error(ErrorCode::PreconditionFailed, "unknown closure property");
}

inline bool has_property(const ClosureMap& c, ClosureProperty p,
                         std::size_t cap = kDefaultPowersetCap) {
  return check_property(c, p, cap).ok();
}

// If c_y has the property, the initial operator along any map keeps it.
// The target operator must actually have the property
// (PropertyPreconditionFailed otherwise); losing it is a finding.
inline Report check_initial_preserves_property(ClosureProperty p, const SetFunction& f,
                                               const ClosureMap& cy,
                                               std::size_t cap = kDefaultPowersetCap) {
  if (!has_property(cy, p, cap))
    throw Error(ErrorCode::PropertyPreconditionFailed,
                "operator '" + cy.name() + "' is not " + to_string(p));
  ClosureMap init = initial_closure(f, cy, cap);
  Report inner = check_property(init, p, cap);
  Report report;
  std::string law = std::string("initial-preserves-") + to_string(p);
  if (inner.ok()) {
    report.add_pass(law);
  } else {
    Witness w = inner.laws().front().witness ? *inner.laws().front().witness : Witness{};
    w.bind("fn", f.name()).bind("target-operator", cy.name());
    report.add_fail(law, w, true);
  }
  return report;
}

// u is closed when c fixes it; u is dense when c sends it to the top set.
inline bool is_c_closed(const ClosureMap& c, const FuzzySet& u) {
  return c.apply(u) == u;
}

inline bool is_c_dense(const ClosureMap& c, const FuzzySet& u) {
  return c.apply(u) == FuzzySet::top(c.space().carrier, c.space().basis);
}

// All fixed points of c, in canonical code order.
inline std::vector<FuzzySet> fixed_points(const ClosureMap& c,
                                          std::size_t cap = kDefaultPowersetCap) {
  PowersetDomain dom(c.space());
  if (dom.saturated() || dom.size() > cap)
    throw Error(ErrorCode::CapExceeded,
                "fixed-point scan on " + c.space().describe() + " exceeds the cap");
  std::vector<FuzzySet> out;
  for (std::uint64_t code = 0; code < dom.size(); ++code) {
    FuzzySet u = dom.decode(code);
    if (is_c_closed(c, u)) out.push_back(u);
  }
  return out;
}

// Every closure map on the space, by backtracking over the powerset codes in
// canonical order.  Code order extends the pointwise order, so monotonicity
// constraints only ever look backwards.  Throws CapExceeded when the
// powerset is larger than powerset_limit or more than max_maps operators
// exist.
inline std::vector<ClosureMap> enumerate_closure_maps(const Space& space,
                                                      std::uint64_t powerset_limit = 16,
                                                      std::uint64_t max_maps = 1u << 20) {
  PowersetDomain dom(space);
  if (dom.saturated() || dom.size() > powerset_limit)
    throw Error(ErrorCode::CapExceeded,
                "operator enumeration on " + space.describe() + " exceeds the cap");
  const std::uint64_t n = dom.size();
  std::vector<FuzzySet> sets;
  sets.reserve(n);
  for (std::uint64_t code = 0; code < n; ++code) sets.push_back(dom.decode(code));

  std::vector<std::vector<std::uint8_t>> le(n, std::vector<std::uint8_t>(n, 0));
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j)
      le[i][j] = sets[i].leq(sets[j]) ? 1 : 0;

  std::vector<ClosureMap> out;
  std::vector<std::uint64_t> assign(n, 0);
  std::size_t counter = 0;

  std::function<void(std::uint64_t)> recurse = [&](std::uint64_t k) {
    if (k == n) {
      out.push_back(ClosureMap::from_table(space, "enum#" + std::to_string(counter++),
                                           assign));
      if (out.size() > max_maps)
        throw Error(ErrorCode::CapExceeded,
                    "operator enumeration on " + space.describe() +
                        " produced more than " + std::to_string(max_maps) + " maps");
      return;
    }
    for (std::uint64_t m = 0; m < n; ++m) {
      if (!le[k][m]) continue;
      bool fits = true;
      for (std::uint64_t j = 0; j < k && fits; ++j)
        if (le[j][k] && !le[assign[j]][m]) fits = false;
      if (!fits) continue;
      assign[k] = m;
      recurse(k + 1);
    }
  };

  assign[0] = 0;  // bottom is code 0 and must stay fixed
  recurse(1);
  return out;
}

// Informational: where the initial operator sits among all closure maps on X
// that make f continuous.  The "least" and "greatest" laws are reported
// without being treated as findings; tiny spaces only.
inline Report report_initial_extremes(const SetFunction& f, const ClosureMap& cy,
                                      std::uint64_t powerset_limit = 16,
                                      std::size_t cap = kDefaultPowersetCap) {
  Space space{f.domain(), cy.space().basis};
  ClosureMap init = initial_closure(f, cy, cap);
  bool least = true, greatest = true;
  Witness w_least, w_greatest;
  for (const ClosureMap& d : enumerate_closure_maps(space, powerset_limit)) {
    if (!is_continuous(f, d, cy, cap)) continue;
    if (least && !pointwise_leq(init, d, cap)) {
      least = false;
      w_least.bind("fn", f.name()).bind("competitor", d.name());
    }
    if (greatest && !pointwise_leq(d, init, cap)) {
      greatest = false;
      w_greatest.bind("fn", f.name()).bind("competitor", d.name());
    }
    if (!least && !greatest) break;
  }
  Report report;
  least ? report.add_pass("pointwise-least-among-continuous")
        : report.add_fail("pointwise-least-among-continuous", w_least);
  greatest ? report.add_pass("pointwise-greatest-among-continuous")
           : report.add_fail("pointwise-greatest-among-continuous", w_greatest);
  return report;
}

}  // namespace fuzclose
