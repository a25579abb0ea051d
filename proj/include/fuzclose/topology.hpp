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
// Open-set families and the two bridges between them and closure operators,
// plus ready-made finite models: divisor lattices under gcd and discretized
// unit-interval chains under min, with the n-th-root operators on the latter.

#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "fuzclose/closure.hpp"
#include "fuzclose/error.hpp"
#include "fuzclose/fuzzy.hpp"
#include "fuzclose/lattice.hpp"
#include "fuzclose/tensor.hpp"

namespace fuzclose {

// A named family of fuzzy sets over one space.  The family is kept as given:
// no closure under joins or meets is implied or enforced here.  The tensor is
// optional; the operator constructions below require one of residuated kind.
struct LTopology {
  std::string name;
  CarrierPtr carrier;
  LatticePtr basis;
  TensorPtr tensor;  // may be null
  std::vector<FuzzySet> opens;

  Space space() const { return Space{carrier, basis}; }
};

namespace detail {

inline void require_residuated(const TensorPtr& tensor, const std::string& who) {
  if (!tensor)
    throw Error(ErrorCode::NotGLMonoid, who + " needs a tensor, none was given");
  if (tensor->classification() != TensorClass::kGlMonoid)
    throw Error(ErrorCode::NotGLMonoid,
                who + " needs a residuated tensor, but '" + tensor->name() +
                    "' classified as " + to_string(tensor->classification()));
}

// Pointwise residuum into bottom: the complement of v under the tensor.
inline FuzzySet residual_complement(const FuzzySet& v, const TensorStructure& t) {
  FuzzySet out = v;
  ElemId bot = v.basis()->bottom();
  for (int x = 0; x < v.carrier()->size(); ++x)
    out = out.with_value(x, t.residuum(v.at(x), bot));
  return out;
}

inline void sort_dedupe_by_code(std::vector<FuzzySet>& sets, const Space& space) {
  PowersetDomain dom(space);
  std::sort(sets.begin(), sets.end(),
            [&](const FuzzySet& a, const FuzzySet& b) {
              return dom.encode(a) < dom.encode(b);
            });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

}  // namespace detail

// Sends u to the meet of every residual complement of an open set that lies
// above u (top when none does).  The axioms are not guaranteed for an
// arbitrary family; run check_closure_axioms on the result to find out.
inline ClosureMap closure_from_topology(const LTopology& tau,
                                        std::size_t tab_cap = kDefaultPowersetCap) {
  detail::require_residuated(tau.tensor, "closure_from_topology on '" + tau.name + "'");
  Space space = tau.space();
  auto complements = std::make_shared<std::vector<FuzzySet>>();
  for (const FuzzySet& v : tau.opens) {
    if (!(Space{v.carrier(), v.basis()} == space))
      throw Error(ErrorCode::SpaceMismatch,
                  "open set of '" + tau.name + "' lives on a different space");
    FuzzySet w = detail::residual_complement(v, *tau.tensor);
    if (std::find(complements->begin(), complements->end(), w) == complements->end())
      complements->push_back(w);
  }
  auto rule = [space, complements](const FuzzySet& u) {
    FuzzySet acc = FuzzySet::top(space.carrier, space.basis);
    for (const FuzzySet& w : *complements)
      if (u.leq(w)) acc = acc.meet(w);
    return acc;
  };
  return ClosureMap::from_rule(space, "topology(" + tau.name + ")", std::move(rule),
                               tab_cap);
}

// Collects the residual complements of the operator's fixed points.  Needs to
// enumerate the whole powerset, hence the cap.
inline LTopology topology_from_closure(const ClosureMap& c, TensorPtr tensor,
                                       std::size_t cap = kDefaultPowersetCap) {
  detail::require_residuated(tensor, "topology_from_closure on '" + c.name() + "'");
  if (!(*tensor->base() == *c.space().basis))
    throw Error(ErrorCode::SpaceMismatch,
                "tensor '" + tensor->name() + "' is not over the basis of '" +
                    c.name() + "'");
  LTopology tau;
  tau.name = "from-" + c.name();
  tau.carrier = c.space().carrier;
  tau.basis = c.space().basis;
  tau.tensor = std::move(tensor);
  for (const FuzzySet& w : fixed_points(c, cap))
    tau.opens.push_back(detail::residual_complement(w, *tau.tensor));
  detail::sort_dedupe_by_code(tau.opens, c.space());
  return tau;
}

// --- divisor models ----------------------------------------------------------

inline std::vector<long> divisors_of(long n) {
  if (n < 1) throw Error(ErrorCode::InvalidN, "divisors need n >= 1");
  std::vector<long> out;
  for (long d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Divisors of n ordered by divisibility; meet is gcd and join is lcm.
inline FiniteLattice divisor_lattice(long n) {
  std::vector<long> divs = divisors_of(n);
  OrderSpec spec;
  spec.name = "div" + std::to_string(n);
  spec.kind = OrderKind::kFull;
  for (long d : divs) spec.labels.push_back(std::to_string(d));
  for (long a : divs)
    for (long b : divs)
      if (b % a == 0) spec.le_pairs.emplace_back(std::to_string(a), std::to_string(b));
  return FiniteLattice::build(spec);
}

// gcd as the tensor on the divisor lattice; classified on construction.
inline TensorStructure divisor_monoid(long n) {
  LatticePtr base = share(divisor_lattice(n));
  std::vector<long> divs = divisors_of(n);
  const int m = base->size();
  std::vector<ElemId> table(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      long g = std::gcd(divs[static_cast<std::size_t>(a)],
                        divs[static_cast<std::size_t>(b)]);
      table[static_cast<std::size_t>(a) * m + b] = base->require_label(std::to_string(g));
    }
  TensorStructure t("gcd" + std::to_string(n), std::move(base), std::move(table));
  t.classify();
  return t;
}

// --- discretized unit interval ------------------------------------------------

inline constexpr int kMaxChainResolution = 1024;

// The chain 0/m < 1/m < ... < m/m with min as the tensor.
struct DiscretizedChain {
  int resolution = 0;
  LatticePtr lattice;
  TensorPtr monoid;

  static DiscretizedChain make(int m) {
    if (m < 1 || m > kMaxChainResolution)
      throw Error(ErrorCode::InvalidN,
                  "chain resolution must be in [1, " +
                      std::to_string(kMaxChainResolution) + "], got " +
                      std::to_string(m));
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k)
      labels.push_back(std::to_string(k) + "/" + std::to_string(m));
    DiscretizedChain out;
    out.resolution = m;
    out.lattice = share(FiniteLattice::chain("chain" + std::to_string(m), labels));
    TensorStructure t =
        TensorStructure::meet_tensor(out.lattice, "min" + std::to_string(m));
    t.classify();
    out.monoid = share(std::move(t));
    return out;
  }

  // Element id of k/m; ids coincide with numerators by construction.
  ElemId at(int k) const {
    if (k < 0 || k > resolution)
      throw Error(ErrorCode::ForeignElement,
                  "no element " + std::to_string(k) + "/" + std::to_string(resolution));
    return k;
  }
};

namespace detail {

// Little-endian base-2^32 naturals, just enough for exact power comparisons.
using BigNat = std::vector<std::uint32_t>;

inline BigNat big_from(std::uint32_t v) { return v ? BigNat{v} : BigNat{}; }

inline void big_mul_small(BigNat& a, std::uint32_t s) {
  if (s == 0) {
    a.clear();
    return;
  }
  std::uint64_t carry = 0;
  for (std::uint32_t& limb : a) {
    std::uint64_t prod = static_cast<std::uint64_t>(limb) * s + carry;
    limb = static_cast<std::uint32_t>(prod);
    carry = prod >> 32;
  }
  while (carry) {
    a.push_back(static_cast<std::uint32_t>(carry));
    carry >>= 32;
  }
}

inline BigNat big_pow(std::uint32_t base, int exp) {
  BigNat out{1};
  for (int i = 0; i < exp; ++i) big_mul_small(out, base);
  return out;
}

// a >= b
inline bool big_geq(const BigNat& a, const BigNat& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i];
  return true;
}

inline CarrierPtr single_point_carrier() {
  return share(CarrierSet("pt", {"pt"}));
}

}  // namespace detail

inline constexpr int kMaxRootDegree = 512;

// The pointwise n-th root on a discretized chain, rounded up to the grid:
// k/m is sent to j/m for the least j with j^n >= k * m^(n-1).  The comparison
// is exact integer arithmetic, so grid points like 1/2 = root(1/4) land
// exactly.  A null carrier means a one-point carrier.
inline ClosureMap root_closure(const DiscretizedChain& chain, int n,
                               CarrierPtr carrier = nullptr,
                               std::size_t tab_cap = kDefaultPowersetCap) {
  if (n < 1 || n > kMaxRootDegree)
    throw Error(ErrorCode::InvalidN,
                "root degree must be in [1, " + std::to_string(kMaxRootDegree) +
                    "], got " + std::to_string(n));
  if (!carrier) carrier = detail::single_point_carrier();
  const int m = chain.resolution;
  const std::uint32_t um = static_cast<std::uint32_t>(m);
  detail::BigNat m_pow = detail::big_pow(um, n - 1);
  auto point_map = std::make_shared<std::vector<ElemId>>();
  point_map->reserve(static_cast<std::size_t>(m) + 1);
  int j = 0;
  for (int k = 0; k <= m; ++k) {
    detail::BigNat rhs = m_pow;
    detail::big_mul_small(rhs, static_cast<std::uint32_t>(k));
    // The least j grows with k, so resume from the previous one.
    while (!detail::big_geq(detail::big_pow(static_cast<std::uint32_t>(j), n), rhs))
      ++j;
    point_map->push_back(j);
  }
  Space space{std::move(carrier), chain.lattice};
  auto rule = [space, point_map](const FuzzySet& u) {
    FuzzySet out = u;
    for (int x = 0; x < space.carrier->size(); ++x)
      out = out.with_value(x, (*point_map)[static_cast<std::size_t>(u.at(x))]);
    return out;
  };
  return ClosureMap::from_rule(space, "root" + std::to_string(n), std::move(rule),
                               tab_cap);
}

// The pointwise limit of the n-th roots as n grows: bottom stays, everything
// else is sent to top.
inline ClosureMap root_closure_limit(const DiscretizedChain& chain,
                                     CarrierPtr carrier = nullptr,
                                     std::size_t tab_cap = kDefaultPowersetCap) {
  if (!carrier) carrier = detail::single_point_carrier();
  Space space{std::move(carrier), chain.lattice};
  auto rule = [space](const FuzzySet& u) {
    FuzzySet out = u;
    for (int x = 0; x < space.carrier->size(); ++x)
      out = out.with_value(x, u.at(x) == space.basis->bottom() ? space.basis->bottom()
                                                               : space.basis->top());
    return out;
  };
  return ClosureMap::from_rule(space, "root-limit", std::move(rule), tab_cap);
}

}  // namespace fuzclose
