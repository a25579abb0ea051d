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
// Finite complete lattices with explicit order, join and meet tables.
//
// A lattice is built from an order description (element labels plus either a
// cover relation or a full <= relation).  Construction validates everything a
// later check relies on: label uniqueness, poset axioms, existence of all
// binary joins and meets, and hence of bottom and top.  Elements are handled
// as dense integer ids into the label table; all tables are precomputed so
// queries are O(1) lookups.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzclose/error.hpp"
#include "fuzclose/report.hpp"

namespace fuzclose {

using ElemId = int;

enum class OrderKind { kCovers, kFull };

// Raw description of a finite order, as read from a file or built in code.
// With OrderKind::kCovers the pairs are covering (or any generating) pairs
// and the relation is closed reflexively and transitively; with kFull the
// pairs must already be the complete relation up to reflexivity.
struct OrderSpec {
  std::string name;
  std::vector<std::string> labels;
  OrderKind kind = OrderKind::kCovers;
  std::vector<std::pair<std::string, std::string>> le_pairs;  // (a, b) meaning a <= b
  std::optional<std::string> bottom_hint;
  std::optional<std::string> top_hint;
};

class FiniteLattice {
 public:
  // Validates the order description and tabulates joins and meets.
  // Throws Error with code:
  //   DuplicateLabel   - repeated element label
  //   ParseError       - relation or hint mentions an unknown label,
  //                      or a bound hint disagrees with the computed bound
  //   NotAPoset        - antisymmetry fails, or (kFull) transitivity fails
  //   NoJoin / NoMeet  - some pair lacks a least upper / greatest lower bound
  //   NoBoundedElement - empty element list
  static FiniteLattice build(const OrderSpec& spec) {
    const auto& labels = spec.labels;
    const int n = static_cast<int>(labels.size());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (labels[i] == labels[j])
          throw Error(ErrorCode::DuplicateLabel,
                      "lattice '" + spec.name + "' repeats label '" + labels[i] + "'");
    if (n == 0)
      throw Error(ErrorCode::NoBoundedElement,
                  "lattice '" + spec.name + "' has no elements");

    auto index_of = [&](const std::string& s) -> int {
      for (int i = 0; i < n; ++i)
        if (labels[i] == s) return i;
      throw Error(ErrorCode::ParseError,
                  "lattice '" + spec.name + "' order mentions unknown label '" + s + "'");
    };

    std::vector<std::uint8_t> le(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) le[static_cast<std::size_t>(i) * n + i] = 1;
    for (const auto& [a, b] : spec.le_pairs)
      le[static_cast<std::size_t>(index_of(a)) * n + index_of(b)] = 1;

    if (spec.kind == OrderKind::kCovers) {
      for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
          if (le[static_cast<std::size_t>(i) * n + k])
            for (int j = 0; j < n; ++j)
              if (le[static_cast<std::size_t>(k) * n + j])
                le[static_cast<std::size_t>(i) * n + j] = 1;
    }

    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (le[static_cast<std::size_t>(i) * n + j] &&
            le[static_cast<std::size_t>(j) * n + i])
          throw Error(ErrorCode::NotAPoset,
                      "lattice '" + spec.name + "' violates antisymmetry on '" +
                          labels[i] + "' and '" + labels[j] + "'");

    if (spec.kind == OrderKind::kFull) {
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
          if (le[static_cast<std::size_t>(i) * n + k])
            for (int j = 0; j < n; ++j)
              if (le[static_cast<std::size_t>(k) * n + j] &&
                  !le[static_cast<std::size_t>(i) * n + j])
                throw Error(ErrorCode::NotAPoset,
                            "lattice '" + spec.name + "' relation is not transitive at '" +
                                labels[i] + "' <= '" + labels[k] + "' <= '" + labels[j] + "'");
    }

    auto at = [&](int a, int b) -> bool {
      return le[static_cast<std::size_t>(a) * n + b] != 0;
    };

    std::vector<ElemId> join_tab(static_cast<std::size_t>(n) * n, -1);
    std::vector<ElemId> meet_tab(static_cast<std::size_t>(n) * n, -1);
    for (int a = 0; a < n; ++a) {
      for (int b = a; b < n; ++b) {
        ElemId least_ub = -1;
        for (int u = 0; u < n; ++u) {
          if (!at(a, u) || !at(b, u)) continue;
          bool below_all = true;
          for (int c = 0; c < n && below_all; ++c)
            if (at(a, c) && at(b, c) && !at(u, c)) below_all = false;
          if (below_all) {
            least_ub = u;
            break;
          }
        }
        if (least_ub < 0)
          throw Error(ErrorCode::NoJoin,
                      "lattice '" + spec.name + "' has no least upper bound for {" +
                          labels[a] + ", " + labels[b] + "}");
        join_tab[static_cast<std::size_t>(a) * n + b] = least_ub;
        join_tab[static_cast<std::size_t>(b) * n + a] = least_ub;

        ElemId greatest_lb = -1;
        for (int u = 0; u < n; ++u) {
          if (!at(u, a) || !at(u, b)) continue;
          bool above_all = true;
          for (int c = 0; c < n && above_all; ++c)
            if (at(c, a) && at(c, b) && !at(c, u)) above_all = false;
          if (above_all) {
            greatest_lb = u;
            break;
          }
        }
        if (greatest_lb < 0)
          throw Error(ErrorCode::NoMeet,
                      "lattice '" + spec.name + "' has no greatest lower bound for {" +
                          labels[a] + ", " + labels[b] + "}");
        meet_tab[static_cast<std::size_t>(a) * n + b] = greatest_lb;
        meet_tab[static_cast<std::size_t>(b) * n + a] = greatest_lb;
      }
    }

    ElemId bottom = 0;
    ElemId top = 0;
    for (int i = 1; i < n; ++i) {
      bottom = meet_tab[static_cast<std::size_t>(bottom) * n + i];
      top = join_tab[static_cast<std::size_t>(top) * n + i];
    }

    if (spec.bottom_hint) {
      int h = index_of(*spec.bottom_hint);
      if (h != bottom)
        throw Error(ErrorCode::ParseError,
                    "lattice '" + spec.name + "' declares bottom '" + *spec.bottom_hint +
                        "' but the computed bottom is '" + labels[bottom] + "'");
    }
    if (spec.top_hint) {
      int h = index_of(*spec.top_hint);
      if (h != top)
        throw Error(ErrorCode::ParseError,
                    "lattice '" + spec.name + "' declares top '" + *spec.top_hint +
                        "' but the computed top is '" + labels[top] + "'");
    }

    FiniteLattice lat;
    lat.name_ = spec.name;
    lat.labels_ = labels;
    lat.n_ = n;
    lat.le_ = std::move(le);
    lat.join_ = std::move(join_tab);
    lat.meet_ = std::move(meet_tab);
    lat.bottom_ = bottom;
    lat.top_ = top;
    return lat;
  }

  // Totally ordered lattice: labels listed from bottom to top.
  static FiniteLattice chain(const std::string& name,
                             const std::vector<std::string>& labels) {
    OrderSpec spec;
    spec.name = name;
    spec.labels = labels;
    spec.kind = OrderKind::kCovers;
    for (std::size_t i = 0; i + 1 < labels.size(); ++i)
      spec.le_pairs.emplace_back(labels[i], labels[i + 1]);
    return build(spec);
  }

  const std::string& name() const { return name_; }
  int size() const { return n_; }

  const std::string& label(ElemId e) const {
    require(e);
    return labels_[static_cast<std::size_t>(e)];
  }

  std::optional<ElemId> find(std::string_view label) const {
    for (int i = 0; i < n_; ++i)
      if (labels_[static_cast<std::size_t>(i)] == label) return i;
    return std::nullopt;
  }

  ElemId require_label(std::string_view label) const {
    if (auto e = find(label)) return *e;
    throw Error(ErrorCode::ForeignElement,
                "lattice '" + name_ + "' has no element '" + std::string(label) + "'");
  }

  void require(ElemId e) const {
    if (e < 0 || e >= n_)
      throw Error(ErrorCode::ForeignElement,
                  "element id " + std::to_string(e) + " is outside lattice '" + name_ + "'");
  }

  bool leq(ElemId a, ElemId b) const {
    require(a);
    require(b);
    return le_[static_cast<std::size_t>(a) * n_ + b] != 0;
  }

  ElemId join(ElemId a, ElemId b) const {
    require(a);
    require(b);
    return join_[static_cast<std::size_t>(a) * n_ + b];
  }

  ElemId meet(ElemId a, ElemId b) const {
    require(a);
    require(b);
    return meet_[static_cast<std::size_t>(a) * n_ + b];
  }

  // Join of an arbitrary finite family; empty family gives bottom.
  ElemId join_all(std::span<const ElemId> elems) const {
    ElemId acc = bottom_;
    for (ElemId e : elems) acc = join(acc, e);
    return acc;
  }

  // Meet of an arbitrary finite family; empty family gives top.
  ElemId meet_all(std::span<const ElemId> elems) const {
    ElemId acc = top_;
    for (ElemId e : elems) acc = meet(acc, e);
    return acc;
  }

  ElemId bottom() const { return bottom_; }
  ElemId top() const { return top_; }

  // Structural identity: same labels in the same order, same relation.
  bool operator==(const FiniteLattice& other) const {
    return labels_ == other.labels_ && le_ == other.le_;
  }
  bool operator!=(const FiniteLattice& other) const { return !(*this == other); }

 private:
  FiniteLattice() = default;

  std::string name_;
  std::vector<std::string> labels_;
  int n_ = 0;
  std::vector<std::uint8_t> le_;  // n*n, le_[a*n+b] <=> a <= b
  std::vector<ElemId> join_;      // n*n
  std::vector<ElemId> meet_;      // n*n
  ElemId bottom_ = 0;
  ElemId top_ = 0;
};

using LatticePtr = std::shared_ptr<const FiniteLattice>;

inline LatticePtr share(FiniteLattice lat) {
  return std::make_shared<const FiniteLattice>(std::move(lat));
}

// Re-derives the lattice laws from the tables, independently of how they were
// built: idempotence, commutativity, associativity, absorption, agreement of
// the order with join/meet, and the least-upper-bound / greatest-lower-bound
// universal properties.
inline Report check_lattice_laws(const FiniteLattice& lat) {
  Report report;
  const int n = lat.size();
  auto lab = [&](ElemId e) { return lat.label(e); };

  bool ok_idem = true, ok_comm = true, ok_absorb = true, ok_order = true;
  Witness w_idem, w_comm, w_absorb, w_order;
  for (int a = 0; a < n && (ok_idem || ok_comm || ok_absorb || ok_order); ++a) {
    if (ok_idem && (lat.join(a, a) != a || lat.meet(a, a) != a)) {
      ok_idem = false;
      w_idem.bind("a", lab(a));
    }
    for (int b = 0; b < n; ++b) {
      if (ok_comm && (lat.join(a, b) != lat.join(b, a) || lat.meet(a, b) != lat.meet(b, a))) {
        ok_comm = false;
        w_comm.bind("a", lab(a)).bind("b", lab(b));
      }
      if (ok_absorb && (lat.join(a, lat.meet(a, b)) != a || lat.meet(a, lat.join(a, b)) != a)) {
        ok_absorb = false;
        w_absorb.bind("a", lab(a)).bind("b", lab(b));
      }
      if (ok_order) {
        bool le = lat.leq(a, b);
        if ((lat.join(a, b) == b) != le || (lat.meet(a, b) == a) != le) {
          ok_order = false;
          w_order.bind("a", lab(a)).bind("b", lab(b));
        }
      }
    }
  }
  ok_idem ? report.add_pass("idempotent") : report.add_fail("idempotent", w_idem, true);
  ok_comm ? report.add_pass("commutative") : report.add_fail("commutative", w_comm, true);
  ok_absorb ? report.add_pass("absorption") : report.add_fail("absorption", w_absorb, true);
  ok_order ? report.add_pass("order-consistency") : report.add_fail("order-consistency", w_order, true);

  bool ok_assoc = true;
  Witness w_assoc;
  for (int a = 0; a < n && ok_assoc; ++a)
    for (int b = 0; b < n && ok_assoc; ++b)
      for (int c = 0; c < n; ++c) {
        if (lat.join(lat.join(a, b), c) != lat.join(a, lat.join(b, c)) ||
            lat.meet(lat.meet(a, b), c) != lat.meet(a, lat.meet(b, c))) {
          ok_assoc = false;
          w_assoc.bind("a", lab(a)).bind("b", lab(b)).bind("c", lab(c));
          break;
        }
      }
  ok_assoc ? report.add_pass("associative") : report.add_fail("associative", w_assoc, true);

  bool ok_bounds = true;
  Witness w_bounds;
  bool ok_univ = true;
  Witness w_univ;
  for (int a = 0; a < n; ++a) {
    if (!lat.leq(lat.bottom(), a) || !lat.leq(a, lat.top())) {
      if (ok_bounds) {
        ok_bounds = false;
        w_bounds.bind("a", lab(a));
      }
    }
    for (int b = 0; b < n && ok_univ; ++b) {
      ElemId j = lat.join(a, b);
      ElemId m = lat.meet(a, b);
      if (!lat.leq(a, j) || !lat.leq(b, j) || !lat.leq(m, a) || !lat.leq(m, b)) {
        ok_univ = false;
        w_univ.bind("a", lab(a)).bind("b", lab(b));
        break;
      }
      for (int c = 0; c < n; ++c) {
        if (lat.leq(a, c) && lat.leq(b, c) && !lat.leq(j, c)) {
          ok_univ = false;
          w_univ.bind("a", lab(a)).bind("b", lab(b)).bind("c", lab(c));
          break;
        }
        if (lat.leq(c, a) && lat.leq(c, b) && !lat.leq(c, m)) {
          ok_univ = false;
          w_univ.bind("a", lab(a)).bind("b", lab(b)).bind("c", lab(c));
          break;
        }
      }
    }
  }
  ok_bounds ? report.add_pass("bounded") : report.add_fail("bounded", w_bounds, true);
  ok_univ ? report.add_pass("universal-bounds") : report.add_fail("universal-bounds", w_univ, true);

  return report;
}

namespace detail {

// Visits subsets of {0..n-1}: all of them when n <= subset_cap, otherwise the
// empty set, all singletons and pairs, plus `samples` pseudo-random subsets.
template <typename Visit>
void for_each_subset(int n, std::size_t subset_cap, unsigned seed, int samples,
                     Visit&& visit) {
  std::vector<ElemId> subset;
  if (static_cast<std::size_t>(n) <= subset_cap) {
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      subset.clear();
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) subset.push_back(i);
      visit(subset);
    }
    return;
  }
  visit(subset);  // empty
  for (int i = 0; i < n; ++i) {
    subset = {i};
    visit(subset);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      subset = {i, j};
      visit(subset);
    }
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(0.5);
  for (int s = 0; s < samples; ++s) {
    subset.clear();
    for (int i = 0; i < n; ++i)
      if (coin(rng)) subset.push_back(i);
    visit(subset);
  }
}

inline std::string subset_to_string(const FiniteLattice& lat,
                                    const std::vector<ElemId>& subset) {
  std::string out = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) out += ",";
    out += lat.label(subset[i]);
  }
  out += "}";
  return out;
}

}  // namespace detail

// Checks the two complete distributive laws
//   a /\ \/S = \/ {a /\ s}     and     a \/ /\S = /\ {a \/ s}
// over every subset S when |L| <= subset_cap, and over a deterministic
// sampled family of subsets otherwise.  Neither law is required of the
// lattices this library handles; the result is informational.
inline Report check_frame_distributivity(const FiniteLattice& lat,
                                         std::size_t subset_cap = 16,
                                         unsigned seed = 1, int samples = 256) {
  Report report;
  const int n = lat.size();
  bool ok_mj = true, ok_jm = true;
  Witness w_mj, w_jm;

  detail::for_each_subset(n, subset_cap, seed, samples, [&](const std::vector<ElemId>& s) {
    if (!ok_mj && !ok_jm) return;
    ElemId join_s = lat.join_all(s);
    ElemId meet_s = lat.meet_all(s);
    for (int a = 0; a < n; ++a) {
      if (ok_mj) {
        ElemId lhs = lat.meet(a, join_s);
        ElemId rhs = lat.bottom();
        for (ElemId e : s) rhs = lat.join(rhs, lat.meet(a, e));
        if (lhs != rhs) {
          ok_mj = false;
          w_mj.bind("a", lat.label(a))
              .bind("subset", detail::subset_to_string(lat, s))
              .bind("lhs", lat.label(lhs))
              .bind("rhs", lat.label(rhs));
        }
      }
      if (ok_jm) {
        ElemId lhs = lat.join(a, meet_s);
        ElemId rhs = lat.top();
        for (ElemId e : s) rhs = lat.meet(rhs, lat.join(a, e));
        if (lhs != rhs) {
          ok_jm = false;
          w_jm.bind("a", lat.label(a))
              .bind("subset", detail::subset_to_string(lat, s))
              .bind("lhs", lat.label(lhs))
              .bind("rhs", lat.label(rhs));
        }
      }
    }
  });

  ok_mj ? report.add_pass("meet-over-join") : report.add_fail("meet-over-join", w_mj);
  ok_jm ? report.add_pass("join-over-meet") : report.add_fail("join-over-meet", w_jm);
  return report;
}

}  // namespace fuzclose
