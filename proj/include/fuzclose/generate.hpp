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
// Seeded generators for operators, set functions, and basis maps.  Every
// generator is deterministic in the passed-in engine, so a fixed seed fixes
// the whole instance stream.  Each generator is correct by construction: the
// outputs satisfy the advertised laws without rejection sampling.

#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fuzclose/closure.hpp"
#include "fuzclose/comorphism.hpp"
#include "fuzclose/error.hpp"
#include "fuzclose/fuzzy.hpp"
#include "fuzclose/lattice.hpp"

namespace fuzclose {
namespace detail {

inline std::vector<std::vector<ElemId>> lower_cover_lists(const FiniteLattice& lat) {
  const int n = lat.size();
  std::vector<std::vector<ElemId>> covers(static_cast<std::size_t>(n));
  for (ElemId e = 0; e < n; ++e)
    for (ElemId d = 0; d < n; ++d) {
      if (d == e || !lat.leq(d, e)) continue;
      bool is_cover = true;
      for (ElemId between = 0; between < n && is_cover; ++between)
        if (between != d && between != e && lat.leq(d, between) && lat.leq(between, e))
          is_cover = false;
      if (is_cover) covers[static_cast<std::size_t>(e)].push_back(d);
    }
  return covers;
}

// Uniform draw from the pointwise up-set of lb.
inline FuzzySet random_above(const FuzzySet& lb, std::mt19937& rng) {
  const FiniteLattice& lat = *lb.basis();
  FuzzySet out = lb;
  for (int x = 0; x < lb.carrier()->size(); ++x) {
    std::vector<ElemId> options;
    for (ElemId e = 0; e < lat.size(); ++e)
      if (lat.leq(lb.at(x), e)) options.push_back(e);
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    out = out.with_value(x, options[pick(rng)]);
  }
  return out;
}

}  // namespace detail

// A map with all three axioms, drawn by walking the powerset in an order that
// extends the pointwise one: each image is a uniform draw from everything
// above the argument joined with the images of its lower covers, so extension
// and monotonicity hold by construction, and bottom is pinned to bottom.
inline ClosureMap random_closure_map(const Space& space, std::mt19937& rng,
                                     std::string name = "random",
                                     std::size_t cap = kDefaultPowersetCap) {
  PowersetDomain dom(space);
  if (dom.saturated() || dom.size() > cap)
    throw Error(ErrorCode::CapExceeded,
                "powerset of " + space.describe() + " exceeds the cap");
  auto lower = detail::lower_cover_lists(*space.basis);
  std::vector<std::uint64_t> table(dom.size());
  table[0] = 0;
  for (std::uint64_t code = 1; code < dom.size(); ++code) {
    FuzzySet u = dom.decode(code);
    FuzzySet lb = u;
    for (int x = 0; x < space.carrier->size(); ++x)
      for (ElemId down : lower[static_cast<std::size_t>(u.at(x))])
        lb = lb.join(dom.decode(table[dom.encode(u.with_value(x, down))]));
    table[code] = dom.encode(detail::random_above(lb, rng));
  }
  return ClosureMap::from_table(space, std::move(name), std::move(table));
}

// Meet-closes a random family (plus bottom and top), then maps u to the least
// family member above it.  Meet-closed families give idempotent operators on
// any basis.
inline ClosureMap random_idempotent_closure(const Space& space, std::mt19937& rng,
                                            int family_size = 3,
                                            std::string name = "random-idem",
                                            std::size_t cap = kDefaultPowersetCap) {
  auto family = std::make_shared<std::vector<FuzzySet>>();
  auto add = [&family](const FuzzySet& s) {
    if (std::find(family->begin(), family->end(), s) == family->end())
      family->push_back(s);
  };
  add(FuzzySet::bottom(space.carrier, space.basis));
  add(FuzzySet::top(space.carrier, space.basis));
  for (int i = 0; i < family_size; ++i)
    add(detail::random_fuzzy_set(space, rng));
  for (std::size_t i = 0; i < family->size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) add((*family)[i].meet((*family)[j]));
    if (family->size() > cap)
      throw Error(ErrorCode::CapExceeded, "meet-closed family exceeds the cap");
  }
  auto rule = [space, family](const FuzzySet& u) {
    FuzzySet acc = FuzzySet::top(space.carrier, space.basis);
    for (const FuzzySet& w : *family)
      if (u.leq(w)) acc = acc.meet(w);
    return acc;
  };
  return ClosureMap::from_rule(space, std::move(name), std::move(rule), cap);
}

// Join-irreducible elements: those with exactly one lower cover.
inline std::vector<ElemId> join_irreducibles(const FiniteLattice& lat) {
  auto lower = detail::lower_cover_lists(lat);
  std::vector<ElemId> out;
  for (ElemId e = 0; e < lat.size(); ++e)
    if (lower[static_cast<std::size_t>(e)].size() == 1) out.push_back(e);
  return out;
}

// True when every join-irreducible element below a binary join is below one
// of the operands; on finite lattices this is equivalent to distributivity.
inline bool has_prime_irreducibles(const FiniteLattice& lat) {
  for (ElemId e : join_irreducibles(lat))
    for (ElemId a = 0; a < lat.size(); ++a)
      for (ElemId b = 0; b < lat.size(); ++b)
        if (lat.leq(e, lat.join(a, b)) && !lat.leq(e, a) && !lat.leq(e, b))
          return false;
  return true;
}

// Assigns each (point, join-irreducible value) pair a random set above the
// corresponding singleton and sends u to the join of the sets its entries
// dominate.  Joins distribute over the irreducible decomposition exactly when
// the basis is distributive, so that is required; the result then preserves
// all joins, including the empty one.
inline ClosureMap random_fully_additive_closure(const Space& space, std::mt19937& rng,
                                                std::string name = "random-fa",
                                                std::size_t cap = kDefaultPowersetCap) {
  const FiniteLattice& lat = *space.basis;
  if (!has_prime_irreducibles(lat))
    throw Error(ErrorCode::PreconditionFailed,
                "fully-additive generation needs a distributive basis, and '" +
                    lat.name() + "' is not");
  std::vector<ElemId> irr = join_irreducibles(lat);
  auto atoms = std::make_shared<std::vector<FuzzySet>>();
  auto irr_index = std::make_shared<std::vector<int>>(static_cast<std::size_t>(lat.size()), -1);
  for (std::size_t i = 0; i < irr.size(); ++i)
    (*irr_index)[static_cast<std::size_t>(irr[i])] = static_cast<int>(i);
  for (int x = 0; x < space.carrier->size(); ++x)
    for (ElemId e : irr) {
      FuzzySet singleton =
          FuzzySet::bottom(space.carrier, space.basis).with_value(x, e);
      atoms->push_back(detail::random_fuzzy_set(space, rng).join(singleton));
    }
  const std::size_t per_point = irr.size();
  auto rule = [space, atoms, irr_index, irr, per_point](const FuzzySet& u) {
    FuzzySet acc = FuzzySet::bottom(space.carrier, space.basis);
    for (int x = 0; x < space.carrier->size(); ++x)
      for (ElemId e : irr)
        if (space.basis->leq(e, u.at(x)))
          acc = acc.join((*atoms)[static_cast<std::size_t>(x) * per_point +
                                  static_cast<std::size_t>(
                                      (*irr_index)[static_cast<std::size_t>(e)])]);
    return acc;
  };
  return ClosureMap::from_rule(space, std::move(name), std::move(rule), cap);
}

inline SetFunction random_set_function(std::string name, CarrierPtr domain,
                                       CarrierPtr codomain, std::mt19937& rng) {
  if (codomain->size() == 0 && domain->size() > 0)
    throw Error(ErrorCode::EmptySource,
                "no map from a nonempty carrier into an empty one");
  std::vector<int> map;
  map.reserve(static_cast<std::size_t>(domain->size()));
  if (domain->size() > 0) {
    std::uniform_int_distribution<int> pick(0, codomain->size() - 1);
    for (int x = 0; x < domain->size(); ++x) map.push_back(pick(rng));
  }
  return SetFunction(std::move(name), std::move(domain), std::move(codomain),
                     std::move(map));
}

// A backward basis map from a totally ordered source, built as a descending
// cover walk from top, with the source bottom pinned to the target bottom.
// Monotone maps from a chain turn minima into minima and maxima into maxima,
// so the result preserves binary meets as well as the full comorphism
// contract: arbitrary joins (bottom included) and top.
inline BasisComorphism random_meet_comorphism(std::string name, LatticePtr source,
                                              LatticePtr target, std::mt19937& rng) {
  for (ElemId a = 0; a < source->size(); ++a)
    for (ElemId b = 0; b < source->size(); ++b)
      if (!source->leq(a, b) && !source->leq(b, a))
        throw Error(ErrorCode::PreconditionFailed,
                    "meet-preserving generation needs a totally ordered source, and '" +
                        source->name() + "' is not");
  // Source elements in descending order.
  std::vector<ElemId> descending(static_cast<std::size_t>(source->size()));
  for (ElemId e = 0; e < source->size(); ++e)
    descending[static_cast<std::size_t>(e)] = e;
  std::sort(descending.begin(), descending.end(),
            [&](ElemId a, ElemId b) { return source->leq(b, a); });
  auto lower = detail::lower_cover_lists(*target);
  std::vector<ElemId> map(static_cast<std::size_t>(source->size()));
  ElemId current = target->top();
  std::uniform_int_distribution<int> coin(0, 1);
  for (ElemId e : descending) {
    if (e != source->top() && coin(rng) == 1) {
      const auto& downs = lower[static_cast<std::size_t>(current)];
      if (!downs.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, downs.size() - 1);
        current = downs[pick(rng)];
      }
    }
    map[static_cast<std::size_t>(e)] = current;
  }
  map[static_cast<std::size_t>(source->bottom())] = target->bottom();
  return BasisComorphism(std::move(name), std::move(source), std::move(target),
                         std::move(map));
}

}  // namespace fuzclose
