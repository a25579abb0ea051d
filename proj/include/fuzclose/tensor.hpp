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
// A tensor structure is a finite lattice together with a binary operation on
// it.  The operation starts out unclassified ("raw"); classify() upgrades the
// tag to "cqm" (isotone with idempotent top) or "gl-monoid" (commutative
// integral divisible quasi-monoid with zero, distributing over joins) by
// actually running the corresponding law checks.  The residuum
//   res(a, b) = \/ { c : a (x) c <= b }
// is tabulated at construction; its adjunction property is a separate check
// since it only holds for suitably distributive operations.

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fuzclose/error.hpp"
#include "fuzclose/lattice.hpp"
#include "fuzclose/report.hpp"

namespace fuzclose {

enum class TensorClass { kRaw, kCqm, kGlMonoid };

inline const char* to_string(TensorClass c) {
  switch (c) {
    case TensorClass::kRaw: return "raw";
    case TensorClass::kCqm: return "cqm";
    case TensorClass::kGlMonoid: return "gl-monoid";
  }
  return "unknown";
}

class TensorStructure;
inline Report check_cqm(const TensorStructure& t);
inline Report check_gl_monoid(const TensorStructure& t, std::size_t subset_cap,
                              unsigned seed, int samples);

class TensorStructure {
 public:
  // `table` is row-major: table[a * n + b] = a (x) b.
  TensorStructure(std::string name, LatticePtr base, std::vector<ElemId> table)
      : name_(std::move(name)), base_(std::move(base)), table_(std::move(table)) {
    if (!base_) throw Error(ErrorCode::PreconditionFailed, "tensor has no base lattice");
    const int n = base_->size();
    if (table_.size() != static_cast<std::size_t>(n) * n)
      throw Error(ErrorCode::PreconditionFailed,
                  "tensor '" + name_ + "' table has wrong size");
    for (ElemId e : table_) base_->require(e);

    residuum_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        ElemId acc = base_->bottom();
        for (int lam = 0; lam < n; ++lam)
          if (base_->leq(table_[static_cast<std::size_t>(a) * n + lam], b))
            acc = base_->join(acc, lam);
        residuum_[static_cast<std::size_t>(a) * n + b] = acc;
      }
  }

  // The lattice meet taken as the tensor.
  static TensorStructure meet_tensor(LatticePtr base, std::string name = "meet") {
    const int n = base->size();
    std::vector<ElemId> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        table[static_cast<std::size_t>(a) * n + b] = base->meet(a, b);
    return TensorStructure(std::move(name), std::move(base), std::move(table));
  }

  const std::string& name() const { return name_; }
  const LatticePtr& base() const { return base_; }
  TensorClass classification() const { return class_; }

  ElemId tensor(ElemId a, ElemId b) const {
    base_->require(a);
    base_->require(b);
    return table_[static_cast<std::size_t>(a) * base_->size() + b];
  }

  ElemId residuum(ElemId a, ElemId b) const {
    base_->require(a);
    base_->require(b);
    return residuum_[static_cast<std::size_t>(a) * base_->size() + b];
  }

  // Runs the law checks and records the strongest class that passed.  Call
  // once while the structure is still privately owned; afterwards share it
  // as const.  Join-distributivity is checked over all subsets when the base
  // is small (<= subset_cap elements) and over a deterministic sample of
  // subsets otherwise.
  TensorStructure& classify(std::size_t subset_cap = 16, unsigned seed = 1,
                            int samples = 128) {
    class_ = TensorClass::kRaw;
    if (check_cqm(*this).ok()) {
      class_ = TensorClass::kCqm;
      if (check_gl_monoid(*this, subset_cap, seed, samples).ok())
        class_ = TensorClass::kGlMonoid;
    }
    return *this;
  }

 private:
  std::string name_;
  LatticePtr base_;
  std::vector<ElemId> table_;
  std::vector<ElemId> residuum_;
  TensorClass class_ = TensorClass::kRaw;
};

using TensorPtr = std::shared_ptr<const TensorStructure>;

inline TensorPtr share(TensorStructure t) {
  return std::make_shared<const TensorStructure>(std::move(t));
}

// Quasi-monoidal laws: the operation is isotone in each argument and top is
// idempotent.  Isotonicity in each argument separately is equivalent to
// joint isotonicity, so witnesses fix one side and vary the other.
inline Report check_cqm(const TensorStructure& t) {
  Report report;
  const FiniteLattice& lat = *t.base();
  const int n = lat.size();

  bool ok_iso = true;
  Witness w_iso;
  for (int a1 = 0; a1 < n && ok_iso; ++a1)
    for (int a2 = 0; a2 < n && ok_iso; ++a2) {
      if (!lat.leq(a1, a2)) continue;
      for (int b = 0; b < n; ++b) {
        if (!lat.leq(t.tensor(a1, b), t.tensor(a2, b))) {
          ok_iso = false;
          w_iso.bind("alpha1", lat.label(a1)).bind("alpha2", lat.label(a2))
               .bind("beta1", lat.label(b)).bind("beta2", lat.label(b));
          break;
        }
        if (!lat.leq(t.tensor(b, a1), t.tensor(b, a2))) {
          ok_iso = false;
          w_iso.bind("alpha1", lat.label(b)).bind("alpha2", lat.label(b))
               .bind("beta1", lat.label(a1)).bind("beta2", lat.label(a2));
          break;
        }
      }
    }
  ok_iso ? report.add_pass("isotone") : report.add_fail("isotone", w_iso);

  if (t.tensor(lat.top(), lat.top()) == lat.top()) {
    report.add_pass("top-idempotent");
  } else {
    Witness w;
    w.bind("top", lat.label(lat.top()))
        .bind("top-tensor-top", lat.label(t.tensor(lat.top(), lat.top())));
    report.add_fail("top-idempotent", w);
  }
  return report;
}

// Monoid-with-zero laws over a complete lattice: commutativity,
// associativity, top as unit, bottom as annihilator, distribution over
// arbitrary joins (subset-capped), and divisibility
// (a <= b implies a = b (x) c for some c).
inline Report check_gl_monoid(const TensorStructure& t, std::size_t subset_cap = 16,
                              unsigned seed = 1, int samples = 128) {
  Report report;
  const FiniteLattice& lat = *t.base();
  const int n = lat.size();
  auto lab = [&](ElemId e) { return lat.label(e); };

  bool ok_comm = true;
  Witness w_comm;
  for (int a = 0; a < n && ok_comm; ++a)
    for (int b = a + 1; b < n; ++b)
      if (t.tensor(a, b) != t.tensor(b, a)) {
        ok_comm = false;
        w_comm.bind("alpha", lab(a)).bind("beta", lab(b));
        break;
      }
  ok_comm ? report.add_pass("commutative") : report.add_fail("commutative", w_comm);

  bool ok_assoc = true;
  Witness w_assoc;
  for (int a = 0; a < n && ok_assoc; ++a)
    for (int b = 0; b < n && ok_assoc; ++b)
      for (int c = 0; c < n; ++c)
        if (t.tensor(t.tensor(a, b), c) != t.tensor(a, t.tensor(b, c))) {
          ok_assoc = false;
          w_assoc.bind("alpha", lab(a)).bind("beta", lab(b)).bind("gamma", lab(c));
          break;
        }
  ok_assoc ? report.add_pass("associative") : report.add_fail("associative", w_assoc);

  bool ok_unit = true;
  Witness w_unit;
  bool ok_zero = true;
  Witness w_zero;
  for (int a = 0; a < n; ++a) {
    if (ok_unit && t.tensor(a, lat.top()) != a) {
      ok_unit = false;
      w_unit.bind("alpha", lab(a)).bind("alpha-tensor-top", lab(t.tensor(a, lat.top())));
    }
    if (ok_zero && t.tensor(a, lat.bottom()) != lat.bottom()) {
      ok_zero = false;
      w_zero.bind("alpha", lab(a)).bind("alpha-tensor-bottom", lab(t.tensor(a, lat.bottom())));
    }
  }
  ok_unit ? report.add_pass("integral") : report.add_fail("integral", w_unit);
  ok_zero ? report.add_pass("zero-absorbing") : report.add_fail("zero-absorbing", w_zero);

  bool ok_dist = true;
  Witness w_dist;
  detail::for_each_subset(n, subset_cap, seed, samples, [&](const std::vector<ElemId>& s) {
    if (!ok_dist) return;
    ElemId join_s = lat.join_all(s);
    for (int a = 0; a < n; ++a) {
      ElemId lhs = t.tensor(a, join_s);
      ElemId rhs = lat.bottom();
      for (ElemId e : s) rhs = lat.join(rhs, t.tensor(a, e));
      if (lhs != rhs) {
        ok_dist = false;
        w_dist.bind("alpha", lab(a))
            .bind("subset", detail::subset_to_string(lat, s))
            .bind("lhs", lab(lhs))
            .bind("rhs", lab(rhs));
        return;
      }
    }
  });
  ok_dist ? report.add_pass("join-distributive") : report.add_fail("join-distributive", w_dist);

  bool ok_div = true;
  Witness w_div;
  for (int a = 0; a < n && ok_div; ++a)
    for (int b = 0; b < n; ++b) {
      if (!lat.leq(a, b)) continue;
      bool found = false;
      for (int c = 0; c < n && !found; ++c)
        if (t.tensor(b, c) == a) found = true;
      if (!found) {
        ok_div = false;
        w_div.bind("alpha", lab(a)).bind("beta", lab(b));
        break;
      }
    }
  ok_div ? report.add_pass("divisible") : report.add_fail("divisible", w_div);

  return report;
}

// The adjunction  a (x) b <= c  <=>  a <= res(b, c), checked over all
// triples.  Holds whenever the tensor distributes over arbitrary joins.
inline Report check_residuation_law(const TensorStructure& t) {
  Report report;
  const FiniteLattice& lat = *t.base();
  const int n = lat.size();
  bool ok = true;
  Witness w;
  for (int a = 0; a < n && ok; ++a)
    for (int b = 0; b < n && ok; ++b)
      for (int c = 0; c < n; ++c) {
        bool lhs = lat.leq(t.tensor(a, b), c);
        bool rhs = lat.leq(a, t.residuum(b, c));
        if (lhs != rhs) {
          ok = false;
          w.bind("alpha", lat.label(a)).bind("beta", lat.label(b)).bind("gamma", lat.label(c))
              .bind("tensor-le", lhs ? "true" : "false")
              .bind("residuum-le", rhs ? "true" : "false");
          break;
        }
      }
  ok ? report.add_pass("residuation-adjunction") : report.add_fail("residuation-adjunction", w);
  return report;
}

// For a <= b, a factor c with b (x) c = a.  When several factors exist the
// order-greatest is returned; if no single candidate dominates the rest, the
// lowest-indexed maximal candidate is chosen, which keeps the result
// deterministic.  Returns nullopt when no factor exists (divisibility fails).
inline std::optional<ElemId> divisibility_witness(const TensorStructure& t,
                                                  ElemId a, ElemId b) {
  const FiniteLattice& lat = *t.base();
  if (!lat.leq(a, b))
    throw Error(ErrorCode::PreconditionFailed,
                "divisibility witness requires " + lat.label(a) + " <= " + lat.label(b));
  std::vector<ElemId> candidates;
  for (int c = 0; c < lat.size(); ++c)
    if (t.tensor(b, c) == a) candidates.push_back(c);
  if (candidates.empty()) return std::nullopt;
  for (ElemId g : candidates) {
    bool dominates = true;
    for (ElemId c : candidates)
      if (!lat.leq(c, g)) {
        dominates = false;
        break;
      }
    if (dominates) return g;
  }
  for (ElemId c : candidates) {
    bool maximal = true;
    for (ElemId d : candidates)
      if (d != c && lat.leq(c, d)) {
        maximal = false;
        break;
      }
    if (maximal) return c;
  }
  return candidates.front();
}

}  // namespace fuzclose
