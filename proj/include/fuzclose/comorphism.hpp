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
// Comorphisms between basis lattices and the operators they induce on fuzzy
// powersets.  A comorphism from basis M to basis L is carried by a concrete
// map op: M -> L expected to preserve arbitrary joins and top (checked, not
// assumed).  Its residual  star(alpha) = /\ { beta in M : alpha <= op(beta) }
// maps L back to M.  One implication of the residual adjunction holds
// unconditionally; the converse requires op to preserve meets, so the
// equivalence is reported rather than asserted.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fuzclose/error.hpp"
#include "fuzclose/fuzzy.hpp"
#include "fuzclose/lattice.hpp"
#include "fuzclose/report.hpp"
#include "fuzclose/tensor.hpp"

namespace fuzclose {

class BasisComorphism {
 public:
  // map[beta] = op(beta), total over the source lattice M; values lie in the
  // target lattice L.
  BasisComorphism(std::string name, LatticePtr source, LatticePtr target,
                  std::vector<ElemId> map)
      : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)),
        map_(std::move(map)) {
    if (map_.size() != static_cast<std::size_t>(source_->size()))
      throw Error(ErrorCode::CarrierMismatch,
                  "comorphism '" + name_ + "' map does not cover lattice '" +
                      source_->name() + "'");
    for (ElemId v : map_) target_->require(v);
  }

  static BasisComorphism identity(LatticePtr lat) {
    std::vector<ElemId> map(static_cast<std::size_t>(lat->size()));
    for (int i = 0; i < lat->size(); ++i) map[static_cast<std::size_t>(i)] = i;
    return BasisComorphism("id_" + lat->name(), lat, lat, std::move(map));
  }

  const std::string& name() const { return name_; }
  const LatticePtr& source() const { return source_; }  // M
  const LatticePtr& target() const { return target_; }  // L

  ElemId apply(ElemId beta) const {
    source_->require(beta);
    return map_[static_cast<std::size_t>(beta)];
  }

 private:
  std::string name_;
  LatticePtr source_;
  LatticePtr target_;
  std::vector<ElemId> map_;
};

// outer after inner: inner: N -> M, outer: M -> L gives N -> L.
inline BasisComorphism compose(const BasisComorphism& outer,
                               const BasisComorphism& inner) {
  if (!(*inner.target() == *outer.source()))
    throw Error(ErrorCode::CompositionMismatch,
                "cannot compose comorphism '" + outer.name() + "' after '" +
                    inner.name() + "': lattices '" + inner.target()->name() +
                    "' and '" + outer.source()->name() + "' differ");
  std::vector<ElemId> map(static_cast<std::size_t>(inner.source()->size()));
  for (int b = 0; b < inner.source()->size(); ++b)
    map[static_cast<std::size_t>(b)] = outer.apply(inner.apply(b));
  return BasisComorphism(outer.name() + "." + inner.name(), inner.source(),
                         outer.target(), std::move(map));
}

// Structure preservation: arbitrary joins (subset-capped, sampled above the
// cap) and top.  When both bases carry tensors, tensor preservation is
// checked as well.
inline Report check_comorphism(const BasisComorphism& phi,
                               const TensorStructure* source_tensor = nullptr,
                               const TensorStructure* target_tensor = nullptr,
                               std::size_t subset_cap = 16, unsigned seed = 1,
                               int samples = 128) {
  Report report;
  const FiniteLattice& m = *phi.source();
  const FiniteLattice& l = *phi.target();

  if (phi.apply(m.top()) == l.top()) {
    report.add_pass("preserves-top");
  } else {
    Witness w;
    w.bind("top", m.label(m.top())).bind("image", l.label(phi.apply(m.top())));
    report.add_fail("preserves-top", w);
  }

  bool ok_joins = true;
  Witness w_joins;
  detail::for_each_subset(m.size(), subset_cap, seed, samples,
                          [&](const std::vector<ElemId>& s) {
    if (!ok_joins) return;
    ElemId lhs = phi.apply(m.join_all(s));
    ElemId rhs = l.bottom();
    for (ElemId e : s) rhs = l.join(rhs, phi.apply(e));
    if (lhs != rhs) {
      ok_joins = false;
      w_joins.bind("subset", detail::subset_to_string(m, s))
          .bind("lhs", l.label(lhs))
          .bind("rhs", l.label(rhs));
    }
  });
  ok_joins ? report.add_pass("preserves-joins")
           : report.add_fail("preserves-joins", w_joins);

  if (source_tensor && target_tensor) {
    bool ok_tensor = true;
    Witness w_tensor;
    for (int b1 = 0; b1 < m.size() && ok_tensor; ++b1)
      for (int b2 = 0; b2 < m.size(); ++b2) {
        ElemId lhs = phi.apply(source_tensor->tensor(b1, b2));
        ElemId rhs = target_tensor->tensor(phi.apply(b1), phi.apply(b2));
        if (lhs != rhs) {
          ok_tensor = false;
          w_tensor.bind("beta1", m.label(b1)).bind("beta2", m.label(b2))
              .bind("lhs", l.label(lhs)).bind("rhs", l.label(rhs));
          break;
        }
      }
    ok_tensor ? report.add_pass("preserves-tensor")
              : report.add_fail("preserves-tensor", w_tensor);
  }

  return report;
}

// True when op preserves binary meets and top (hence all meets, finitely).
inline bool preserves_meets(const BasisComorphism& phi) {
  const FiniteLattice& m = *phi.source();
  const FiniteLattice& l = *phi.target();
  if (phi.apply(m.top()) != l.top()) return false;
  for (int b1 = 0; b1 < m.size(); ++b1)
    for (int b2 = b1 + 1; b2 < m.size(); ++b2)
      if (phi.apply(m.meet(b1, b2)) != l.meet(phi.apply(b1), phi.apply(b2)))
        return false;
  return true;
}

// Residual of the comorphism: star(alpha) = /\ { beta : alpha <= op(beta) }.
inline ElemId star_phi(const BasisComorphism& phi, ElemId alpha) {
  const FiniteLattice& m = *phi.source();
  const FiniteLattice& l = *phi.target();
  l.require(alpha);
  ElemId acc = m.top();
  for (int beta = 0; beta < m.size(); ++beta)
    if (l.leq(alpha, phi.apply(beta))) acc = m.meet(acc, beta);
  return acc;
}

// Pointwise residual on fuzzy sets: L^X -> M^X.
inline FuzzySet star_phi_lift(const BasisComorphism& phi, const FuzzySet& a) {
  if (!(*a.basis() == *phi.target()))
    throw Error(ErrorCode::SpaceMismatch,
                "residual lift of '" + phi.name() + "' applied to a set valued in '" +
                    a.basis()->name() + "'");
  std::vector<ElemId> values(static_cast<std::size_t>(a.carrier_size()));
  for (int x = 0; x < a.carrier_size(); ++x)
    values[static_cast<std::size_t>(x)] = star_phi(phi, a.at(x));
  return FuzzySet(a.carrier(), phi.source(), std::move(values));
}

// Pointwise composition with op: M^X -> L^X.
inline FuzzySet comorphism_lift(const BasisComorphism& phi, const FuzzySet& b) {
  if (!(*b.basis() == *phi.source()))
    throw Error(ErrorCode::SpaceMismatch,
                "lift of '" + phi.name() + "' applied to a set valued in '" +
                    b.basis()->name() + "'");
  std::vector<ElemId> values(static_cast<std::size_t>(b.carrier_size()));
  for (int x = 0; x < b.carrier_size(); ++x)
    values[static_cast<std::size_t>(x)] = phi.apply(b.at(x));
  return FuzzySet(b.carrier(), phi.target(), std::move(values));
}

// Checks the residual adjunction element by element.  The laws
// "residual-implication" (alpha <= op(beta) implies star(alpha) <= beta) and
// "counit" (star(op(beta)) <= beta) hold for every monotone op and are
// flagged as findings if violated.  "residual-converse" and "unit" require
// op to preserve meets and may legitimately fail; they are reported only.
inline Report check_star_phi_adjunction(const BasisComorphism& phi) {
  Report report;
  const FiniteLattice& m = *phi.source();
  const FiniteLattice& l = *phi.target();

  bool ok_fwd = true, ok_conv = true, ok_unit = true, ok_counit = true;
  Witness w_fwd, w_conv, w_unit, w_counit;

  for (int alpha = 0; alpha < l.size(); ++alpha) {
    ElemId star = star_phi(phi, alpha);
    if (ok_unit && !l.leq(alpha, phi.apply(star))) {
      ok_unit = false;
      w_unit.bind("alpha", l.label(alpha)).bind("star", m.label(star))
          .bind("op-star", l.label(phi.apply(star)));
    }
    for (int beta = 0; beta < m.size(); ++beta) {
      bool le_op = l.leq(alpha, phi.apply(beta));
      bool star_le = m.leq(star, beta);
      if (ok_fwd && le_op && !star_le) {
        ok_fwd = false;
        w_fwd.bind("alpha", l.label(alpha)).bind("beta", m.label(beta));
      }
      if (ok_conv && star_le && !le_op) {
        ok_conv = false;
        w_conv.bind("alpha", l.label(alpha)).bind("beta", m.label(beta));
      }
    }
  }
  for (int beta = 0; beta < m.size() && ok_counit; ++beta) {
    ElemId round = star_phi(phi, phi.apply(beta));
    if (!m.leq(round, beta)) {
      ok_counit = false;
      w_counit.bind("beta", m.label(beta)).bind("round-trip", m.label(round));
    }
  }

  ok_fwd ? report.add_pass("residual-implication")
         : report.add_fail("residual-implication", w_fwd, true);
  ok_conv ? report.add_pass("residual-converse")
          : report.add_fail("residual-converse", w_conv);
  ok_unit ? report.add_pass("unit") : report.add_fail("unit", w_unit);
  ok_counit ? report.add_pass("counit") : report.add_fail("counit", w_counit, true);
  return report;
}

// Forward image across a ground map (f, phi): first the fuzzy image along f,
// then the pointwise residual into M.  This pointwise form agrees with the
// global definition /\ { b in M^Y : forward(a) <= op . b } because the
// constraint decomposes point by point; pair_forward_by_enumeration computes
// the global meet directly and serves as the oracle.
inline FuzzySet pair_forward(const SetFunction& f, const BasisComorphism& phi,
                             const FuzzySet& a) {
  if (!(*a.basis() == *phi.target()))
    throw Error(ErrorCode::SpaceMismatch,
                "pair forward with comorphism '" + phi.name() +
                    "' applied to a set valued in '" + a.basis()->name() + "'");
  return star_phi_lift(phi, fuzzy_forward(f, a));
}

// Backward image across (f, phi): op . b . f.
inline FuzzySet pair_backward(const SetFunction& f, const BasisComorphism& phi,
                              const FuzzySet& b) {
  if (!(*b.basis() == *phi.source()))
    throw Error(ErrorCode::SpaceMismatch,
                "pair backward with comorphism '" + phi.name() +
                    "' applied to a set valued in '" + b.basis()->name() + "'");
  return fuzzy_backward(f, comorphism_lift(phi, b));
}

// Oracle for pair_forward: enumerates M^Y and meets every b whose lift
// dominates the fuzzy image of a.  Throws CapExceeded if |M|^|Y| > cap.
inline FuzzySet pair_forward_by_enumeration(const SetFunction& f,
                                            const BasisComorphism& phi,
                                            const FuzzySet& a,
                                            std::size_t cap = 4096) {
  PowersetDomain cod(Space{f.codomain(), phi.source()});
  if (cod.saturated() || cod.size() > cap)
    throw Error(ErrorCode::CapExceeded,
                "pair forward enumeration along '" + f.name() + "' exceeds the cap");
  FuzzySet image = fuzzy_forward(f, a);
  FuzzySet acc = FuzzySet::top(f.codomain(), phi.source());
  for (std::uint64_t code = 0; code < cod.size(); ++code) {
    FuzzySet b = cod.decode(code);
    if (image.leq(comorphism_lift(phi, b))) acc = acc.meet(b);
  }
  return acc;
}

// Exhaustive check of  pair_forward(a) <= b  <=>  a <= pair_backward(b).
// The backward-to-forward implication holds for every monotone op and is a
// finding if violated; the full equivalence needs op to preserve meets and
// is reported only.
inline Report check_pair_adjunction(const SetFunction& f, const BasisComorphism& phi,
                                    std::size_t cap = 4096) {
  PowersetDomain dom(Space{f.domain(), phi.target()});
  PowersetDomain cod(Space{f.codomain(), phi.source()});
  if (dom.saturated() || cod.saturated() || dom.size() > cap || cod.size() > cap)
    throw Error(ErrorCode::CapExceeded,
                "pair adjunction check along '" + f.name() + "' exceeds the cap");
  Report report;
  bool ok_impl = true, ok_equiv = true;
  Witness w_impl, w_equiv;
  for (std::uint64_t i = 0; i < dom.size() && (ok_impl || ok_equiv); ++i) {
    FuzzySet a = dom.decode(i);
    FuzzySet fa = pair_forward(f, phi, a);
    for (std::uint64_t j = 0; j < cod.size(); ++j) {
      FuzzySet b = cod.decode(j);
      bool lhs = fa.leq(b);
      bool rhs = a.leq(pair_backward(f, phi, b));
      if (ok_impl && rhs && !lhs) {
        ok_impl = false;
        w_impl.bind("fn", f.name()).bind("comorph", phi.name())
            .bind("a", a.to_literal()).bind("b", b.to_literal());
      }
      if (ok_equiv && lhs != rhs) {
        ok_equiv = false;
        w_equiv.bind("fn", f.name()).bind("comorph", phi.name())
            .bind("a", a.to_literal()).bind("b", b.to_literal())
            .bind("forward-le", lhs ? "true" : "false")
            .bind("backward-le", rhs ? "true" : "false");
      }
      if (!ok_impl && !ok_equiv) break;
    }
  }
  ok_impl ? report.add_pass("pair-backward-implies-forward")
          : report.add_fail("pair-backward-implies-forward", w_impl, true);
  ok_equiv ? report.add_pass("pair-adjunction-equivalence")
           : report.add_fail("pair-adjunction-equivalence", w_equiv);
  return report;
}

}  // namespace fuzclose
