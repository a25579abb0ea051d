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
// Variable-basis closure spaces.  Objects pair a carrier with its own basis
// lattice; a morphism (f, op) pairs a point map f : X -> Y with a basis
// comorphism op : M -> L running opposite to f.  The induced powerset
// operators come from comorphism.hpp.  With the identity comorphism these
// constructions collapse to the fixed-basis ones.
//
// Several equivalences below (the two continuity criteria, the initial
// operator being a closure map, property preservation) are theorems only
// when op preserves meets; for a general join-preserving op they can fail,
// so the corresponding laws are findings exactly when preserves_meets(op)
// holds and are informational otherwise.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fuzclose/closure.hpp"
#include "fuzclose/comorphism.hpp"
#include "fuzclose/error.hpp"
#include "fuzclose/fuzzy.hpp"
#include "fuzclose/lattice.hpp"
#include "fuzclose/report.hpp"
#include "fuzclose/tensor.hpp"

namespace fuzclose {

// A carrier with its basis lattice and, optionally, a tensor on the basis.
struct GroundObject {
  CarrierPtr carrier;
  LatticePtr basis;
  TensorPtr tensor;  // may be null

  Space space() const { return Space{carrier, basis}; }
};

class GroundMorphism {
 public:
  // fn : X -> Y on points, op : M -> L on bases, where L is the basis of the
  // domain space and M the basis of the codomain space.
  GroundMorphism(SetFunction fn, BasisComorphism op)
      : fn_(std::move(fn)), op_(std::move(op)) {}

  static GroundMorphism identity(const Space& space) {
    return GroundMorphism(SetFunction::identity(space.carrier),
                          BasisComorphism::identity(space.basis));
  }

  // Embeds a fixed-basis map: the comorphism component is the identity.
  static GroundMorphism from_fixed(const SetFunction& fn, const LatticePtr& basis) {
    return GroundMorphism(fn, BasisComorphism::identity(basis));
  }

  const SetFunction& fn() const { return fn_; }
  const BasisComorphism& op() const { return op_; }

  Space domain_space() const { return Space{fn_.domain(), op_.target()}; }
  Space codomain_space() const { return Space{fn_.codomain(), op_.source()}; }

  std::string name() const { return "(" + fn_.name() + "," + op_.name() + ")"; }

 private:
  SetFunction fn_;
  BasisComorphism op_;
};

// second after first: point maps compose forwards, comorphisms backwards.
inline GroundMorphism compose(const GroundMorphism& second, const GroundMorphism& first) {
  return GroundMorphism(compose(second.fn(), first.fn()),
                        compose(first.op(), second.op()));
}

inline FuzzySet vb_forward(const GroundMorphism& m, const FuzzySet& a) {
  if (!(a.space() == m.domain_space()))
    throw Error(ErrorCode::SpaceMismatch,
                "forward image along " + m.name() + " of a set over " +
                    a.space().describe());
  return pair_forward(m.fn(), m.op(), a);
}

inline FuzzySet vb_backward(const GroundMorphism& m, const FuzzySet& b) {
  if (!(b.space() == m.codomain_space()))
    throw Error(ErrorCode::SpaceMismatch,
                "backward image along " + m.name() + " of a set over " +
                    b.space().describe());
  return pair_backward(m.fn(), m.op(), b);
}

// Continuity of (f, op) : (X, L, c_xl) -> (Y, M, c_ym), in image form
//   forward(c_xl(u)) <= c_ym(forward(u))
// and preimage form
//   c_xl(backward(v)) <= backward(c_ym(v)).
// The two verdicts must agree when op preserves meets.
inline Report check_vb_continuity(const GroundMorphism& m, const ClosureMap& cxl,
                                  const ClosureMap& cym,
                                  std::size_t cap = kDefaultPowersetCap) {
  if (!(cxl.space() == m.domain_space()))
    throw Error(ErrorCode::SpaceMismatch,
                "operator '" + cxl.name() + "' does not live on the domain space of " +
                    m.name());
  if (!(cym.space() == m.codomain_space()))
    throw Error(ErrorCode::SpaceMismatch,
                "operator '" + cym.name() + "' does not live on the codomain space of " +
                    m.name());

  PowersetDomain dom(cxl.space());
  PowersetDomain cod(cym.space());
  if (dom.saturated() || cod.saturated() || dom.size() > cap || cod.size() > cap)
    throw Error(ErrorCode::CapExceeded,
                "continuity check along " + m.name() + " exceeds the enumeration cap");

  Report report;
  bool ok_image = true;
  Witness w_image;
  for (std::uint64_t code = 0; code < dom.size(); ++code) {
    FuzzySet u = dom.decode(code);
    FuzzySet lhs = vb_forward(m, cxl.apply(u));
    FuzzySet rhs = cym.apply(vb_forward(m, u));
    if (!lhs.leq(rhs)) {
      ok_image = false;
      w_image.bind("morphism", m.name()).bind("u", u.to_literal())
          .bind("lhs", lhs.to_literal()).bind("rhs", rhs.to_literal());
      break;
    }
  }

  bool ok_preimage = true;
  Witness w_preimage;
  for (std::uint64_t code = 0; code < cod.size(); ++code) {
    FuzzySet v = cod.decode(code);
    FuzzySet lhs = cxl.apply(vb_backward(m, v));
    FuzzySet rhs = vb_backward(m, cym.apply(v));
    if (!lhs.leq(rhs)) {
      ok_preimage = false;
      w_preimage.bind("morphism", m.name()).bind("v", v.to_literal())
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
    w.bind("morphism", m.name())
        .bind("image-criterion", ok_image ? "true" : "false")
        .bind("preimage-criterion", ok_preimage ? "true" : "false");
    report.add_fail("criteria-agree", w, preserves_meets(m.op()));
  }
  return report;
}

inline bool is_vb_continuous(const GroundMorphism& m, const ClosureMap& cxl,
                             const ClosureMap& cym,
                             std::size_t cap = kDefaultPowersetCap) {
  Report r = check_vb_continuity(m, cxl, cym, cap);
  const LawResult* law = r.find("image-criterion");
  return law && law->ok;
}

// Composition of continuous morphisms is continuous.
inline Report check_vb_continuity_composition(const GroundMorphism& first,
                                              const GroundMorphism& second,
                                              const ClosureMap& cxl, const ClosureMap& cym,
                                              const ClosureMap& czn,
                                              std::size_t cap = kDefaultPowersetCap) {
  if (!is_vb_continuous(first, cxl, cym, cap))
    throw Error(ErrorCode::PreconditionFailed,
                first.name() + " is not continuous; composition check needs both factors continuous");
  if (!is_vb_continuous(second, cym, czn, cap))
    throw Error(ErrorCode::PreconditionFailed,
                second.name() + " is not continuous; composition check needs both factors continuous");
  GroundMorphism comp = compose(second, first);
  Report inner = check_vb_continuity(comp, cxl, czn, cap);
  Report report;
  const LawResult* law = inner.find("image-criterion");
  if (law && law->ok) {
    report.add_pass("composite-continuous");
  } else {
    Witness w = law && law->witness ? *law->witness : Witness{};
    bool finding = preserves_meets(first.op()) && preserves_meets(second.op());
    report.add_fail("composite-continuous", w, finding);
  }
  return report;
}

// Initial operator along (f, op) into (Y, M, c_ym):
//   u |-> backward(c_ym(forward(u))).
// This is a closure map whenever op preserves meets; run
// check_closure_axioms to confirm on a given instance.
inline ClosureMap initial_vb_closure(const GroundMorphism& m, const ClosureMap& cym,
                                     std::size_t tab_cap = kDefaultPowersetCap) {
  if (!(cym.space() == m.codomain_space()))
    throw Error(ErrorCode::SpaceMismatch,
                "operator '" + cym.name() + "' does not live on the codomain space of " +
                    m.name());
  GroundMorphism morph = m;
  ClosureMap target = cym;
  auto rule = [morph, target](const FuzzySet& u) {
    return vb_backward(morph, target.apply(vb_forward(morph, u)));
  };
  return ClosureMap::from_rule(m.domain_space(),
                               "initial(" + m.name() + "," + cym.name() + ")",
                               std::move(rule), tab_cap);
}

// Factorization through the initial operator: a probe n : (Z, N) -> (X, L)
// is continuous into the initial space iff the composite m . n is
// continuous into (Y, M, c_ym).
inline Report check_vb_initial_factorization(const GroundMorphism& m, const ClosureMap& cym,
                                             const GroundMorphism& probe,
                                             const ClosureMap& czn,
                                             std::size_t cap = kDefaultPowersetCap) {
  if (!(probe.codomain_space() == m.domain_space()))
    throw Error(ErrorCode::CompositionMismatch,
                "factorization check needs the probe to land in the domain space of " +
                    m.name());
  ClosureMap cxl = initial_vb_closure(m, cym, cap);
  bool through = is_vb_continuous(probe, czn, cxl, cap);
  bool composite = is_vb_continuous(compose(m, probe), czn, cym, cap);
  Report report;
  if (through == composite) {
    report.add_pass("factorization-biconditional");
  } else {
    Witness w;
    w.bind("morphism", m.name()).bind("probe", probe.name())
        .bind("through-initial", through ? "true" : "false")
        .bind("composite", composite ? "true" : "false");
    bool finding = preserves_meets(m.op()) && preserves_meets(probe.op());
    report.add_fail("factorization-biconditional", w, finding);
  }
  return report;
}

// Initial operator for a family of legs out of one space: the pointwise join
// of the per-leg initial operators.  Empty family: identity, flagged.
inline InitialLift initial_vb_lift(
    Space space, const std::vector<std::pair<GroundMorphism, ClosureMap>>& legs,
    std::size_t tab_cap = kDefaultPowersetCap) {
  if (legs.empty()) return InitialLift{discrete_operator(std::move(space)), true};
  std::vector<ClosureMap> parts;
  parts.reserve(legs.size());
  for (const auto& [m, cym] : legs) {
    if (!(m.domain_space() == space))
      throw Error(ErrorCode::SpaceMismatch,
                  "leg " + m.name() + " does not start at " + space.describe());
    parts.push_back(initial_vb_closure(m, cym, tab_cap));
  }
  return InitialLift{join_maps(std::move(space), std::move(parts), tab_cap), false};
}

// Preservation of a property by the variable-basis initial operator.  The
// target operator must have the property.  Failure is a finding only when
// op preserves meets (otherwise the initial operator need not even satisfy
// the closure axioms).
inline Report check_vb_initial_preserves_property(ClosureProperty p,
                                                  const GroundMorphism& m,
                                                  const ClosureMap& cym,
                                                  std::size_t cap = kDefaultPowersetCap) {
  if (!has_property(cym, p, cap))
    throw Error(ErrorCode::PropertyPreconditionFailed,
                "operator '" + cym.name() + "' is not " + to_string(p));
  ClosureMap init = initial_vb_closure(m, cym, cap);
  Report inner = check_property(init, p, cap);
  Report report;
  std::string law = std::string("initial-preserves-") + to_string(p);
  if (inner.ok()) {
    report.add_pass(law);
  } else {
    Witness w = inner.laws().front().witness ? *inner.laws().front().witness : Witness{};
    w.bind("morphism", m.name()).bind("target-operator", cym.name());
    report.add_fail(law, w, preserves_meets(m.op()));
  }
  return report;
}

// The forward image of every closed set is closed.
inline Report check_closed_morphism(const GroundMorphism& m, const ClosureMap& cxl,
                                    const ClosureMap& cym,
                                    std::size_t cap = kDefaultPowersetCap) {
  if (!(cxl.space() == m.domain_space()) || !(cym.space() == m.codomain_space()))
    throw Error(ErrorCode::SpaceMismatch,
                "operators do not match the spaces of " + m.name());
  PowersetDomain dom(cxl.space());
  if (dom.saturated() || dom.size() > cap)
    throw Error(ErrorCode::CapExceeded,
                "closed-morphism check along " + m.name() + " exceeds the cap");
  Report report;
  bool ok = true;
  Witness w;
  for (std::uint64_t code = 0; code < dom.size(); ++code) {
    FuzzySet u = dom.decode(code);
    if (!is_c_closed(cxl, u)) continue;
    FuzzySet image = vb_forward(m, u);
    if (!is_c_closed(cym, image)) {
      ok = false;
      w.bind("morphism", m.name()).bind("u", u.to_literal())
          .bind("image", image.to_literal())
          .bind("closure-of-image", cym.apply(image).to_literal());
      break;
    }
  }
  ok ? report.add_pass("closed-image") : report.add_fail("closed-image", w);
  return report;
}

// Backward images of closed sets along a continuous morphism are closed.
// Preconditions (PreconditionFailed): the preimage form of continuity holds
// and v is closed.  The conclusion is a theorem, so failure is a finding.
inline Report check_closed_preimage(const GroundMorphism& m, const ClosureMap& cxl,
                                    const ClosureMap& cym, const FuzzySet& v,
                                    std::size_t cap = kDefaultPowersetCap) {
  Report continuity = check_vb_continuity(m, cxl, cym, cap);
  const LawResult* pre = continuity.find("preimage-criterion");
  if (!pre || !pre->ok)
    throw Error(ErrorCode::PreconditionFailed,
                m.name() + " does not satisfy the preimage continuity criterion");
  if (!is_c_closed(cym, v))
    throw Error(ErrorCode::PreconditionFailed,
                "set " + v.to_literal() + " is not closed in the codomain space");
  FuzzySet back = vb_backward(m, v);
  Report report;
  if (is_c_closed(cxl, back)) {
    report.add_pass("closed-preimage");
  } else {
    Witness w;
    w.bind("morphism", m.name()).bind("v", v.to_literal())
        .bind("preimage", back.to_literal())
        .bind("closure-of-preimage", cxl.apply(back).to_literal());
    report.add_fail("closed-preimage", w, true);
  }
  return report;
}

// How a morphism is recognized as surjective-like for the dense-image law.
enum class EpiCriterion {
  kStrict,      // fn surjective and op injective
  kTopForward,  // forward image of the constant-top set is constant-top
};

inline bool satisfies_epi_criterion(const GroundMorphism& m, EpiCriterion epi) {
  switch (epi) {
    case EpiCriterion::kStrict: {
      if (!m.fn().is_surjective()) return false;
      const FiniteLattice& src = *m.op().source();
      for (int b1 = 0; b1 < src.size(); ++b1)
        for (int b2 = b1 + 1; b2 < src.size(); ++b2)
          if (m.op().apply(b1) == m.op().apply(b2)) return false;
      return true;
    }
    case EpiCriterion::kTopForward: {
      Space dom = m.domain_space();
      FuzzySet top = FuzzySet::top(dom.carrier, dom.basis);
      Space cod = m.codomain_space();
      return vb_forward(m, top) == FuzzySet::top(cod.carrier, cod.basis);
    }
  }
  return false;
}

// Forward images of dense sets along a continuous surjective-like morphism
// are dense.  Preconditions (PreconditionFailed): the image form of
// continuity, u dense, and the chosen epi criterion.  Failure is a finding.
inline Report check_dense_image(const GroundMorphism& m, const ClosureMap& cxl,
                                const ClosureMap& cym, const FuzzySet& u,
                                EpiCriterion epi = EpiCriterion::kStrict,
                                std::size_t cap = kDefaultPowersetCap) {
  Report continuity = check_vb_continuity(m, cxl, cym, cap);
  const LawResult* img = continuity.find("image-criterion");
  if (!img || !img->ok)
    throw Error(ErrorCode::PreconditionFailed,
                m.name() + " does not satisfy the image continuity criterion");
  if (!is_c_dense(cxl, u))
    throw Error(ErrorCode::PreconditionFailed,
                "set " + u.to_literal() + " is not dense in the domain space");
  if (!satisfies_epi_criterion(m, epi))
    throw Error(ErrorCode::PreconditionFailed,
                m.name() + " does not satisfy the configured epi criterion");
  FuzzySet image = vb_forward(m, u);
  Report report;
  if (is_c_dense(cym, image)) {
    report.add_pass("dense-image");
  } else {
    Witness w;
    w.bind("morphism", m.name()).bind("u", u.to_literal())
        .bind("image", image.to_literal())
        .bind("closure-of-image", cym.apply(image).to_literal());
    // The proof runs through forward(top) = top, so only then is a failure
    // a genuine contradiction.
    bool finding = satisfies_epi_criterion(m, EpiCriterion::kTopForward);
    report.add_fail("dense-image", w, finding);
  }
  return report;
}

}  // namespace fuzclose
