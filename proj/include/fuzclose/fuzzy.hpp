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
// Lattice-valued sets over finite carriers.  A FuzzySet assigns to every
// point of a carrier an element of a basis lattice; the pointwise order makes
// the collection of all such assignments a complete lattice, which
// PowersetDomain enumerates by mixed-radix codes.  Point maps between
// carriers induce forward/backward operators on both crisp subsets and
// fuzzy sets.

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzclose/error.hpp"
#include "fuzclose/lattice.hpp"
#include "fuzclose/report.hpp"

namespace fuzclose {

class CarrierSet {
 public:
  CarrierSet(std::string name, std::vector<std::string> points)
      : name_(std::move(name)), points_(std::move(points)) {
    for (std::size_t i = 0; i < points_.size(); ++i)
      for (std::size_t j = i + 1; j < points_.size(); ++j)
        if (points_[i] == points_[j])
          throw Error(ErrorCode::DuplicateLabel,
                      "carrier '" + name_ + "' repeats point '" + points_[i] + "'");
  }

  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(points_.size()); }

  const std::string& point(int i) const {
    require(i);
    return points_[static_cast<std::size_t>(i)];
  }

  void require(int i) const {
    if (i < 0 || i >= size())
      throw Error(ErrorCode::ForeignPoint,
                  "point id " + std::to_string(i) + " is outside carrier '" + name_ + "'");
  }

  std::optional<int> find(std::string_view point) const {
    for (int i = 0; i < size(); ++i)
      if (points_[static_cast<std::size_t>(i)] == point) return i;
    return std::nullopt;
  }

  int require_point_label(std::string_view point) const {
    if (auto p = find(point)) return *p;
    throw Error(ErrorCode::ForeignPoint,
                "carrier '" + name_ + "' has no point '" + std::string(point) + "'");
  }

  // Structural identity: the same point labels in the same order.
  bool operator==(const CarrierSet& other) const { return points_ == other.points_; }
  bool operator!=(const CarrierSet& other) const { return !(*this == other); }

 private:
  std::string name_;
  std::vector<std::string> points_;
};

using CarrierPtr = std::shared_ptr<const CarrierSet>;

inline CarrierPtr share(CarrierSet c) {
  return std::make_shared<const CarrierSet>(std::move(c));
}

// A carrier together with the basis lattice its fuzzy sets take values in.
struct Space {
  CarrierPtr carrier;
  LatticePtr basis;

  bool operator==(const Space& other) const {
    bool same_carrier = carrier == other.carrier || *carrier == *other.carrier;
    bool same_basis = basis == other.basis || *basis == *other.basis;
    return same_carrier && same_basis;
  }
  bool operator!=(const Space& other) const { return !(*this == other); }

  std::string describe() const {
    return "(" + carrier->name() + ", " + basis->name() + ")";
  }
};

class FuzzySet {
 public:
  FuzzySet(CarrierPtr carrier, LatticePtr basis, std::vector<ElemId> values)
      : carrier_(std::move(carrier)), basis_(std::move(basis)), values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(carrier_->size()))
      throw Error(ErrorCode::CarrierMismatch,
                  "value list does not cover carrier '" + carrier_->name() + "'");
    for (ElemId v : values_) basis_->require(v);
  }

  static FuzzySet constant(CarrierPtr carrier, LatticePtr basis, ElemId value) {
    std::vector<ElemId> values(static_cast<std::size_t>(carrier->size()), value);
    return FuzzySet(std::move(carrier), std::move(basis), std::move(values));
  }

  static FuzzySet bottom(CarrierPtr carrier, LatticePtr basis) {
    ElemId b = basis->bottom();
    return constant(std::move(carrier), std::move(basis), b);
  }

  static FuzzySet top(CarrierPtr carrier, LatticePtr basis) {
    ElemId t = basis->top();
    return constant(std::move(carrier), std::move(basis), t);
  }

  const CarrierPtr& carrier() const { return carrier_; }
  const LatticePtr& basis() const { return basis_; }
  Space space() const { return Space{carrier_, basis_}; }
  int carrier_size() const { return carrier_->size(); }

  ElemId at(int point) const {
    carrier_->require(point);
    return values_[static_cast<std::size_t>(point)];
  }

  FuzzySet with_value(int point, ElemId value) const {
    carrier_->require(point);
    basis_->require(value);
    std::vector<ElemId> values = values_;
    values[static_cast<std::size_t>(point)] = value;
    return FuzzySet(carrier_, basis_, std::move(values));
  }

  bool leq(const FuzzySet& other) const {
    check_same_space(other);
    for (int i = 0; i < carrier_size(); ++i)
      if (!basis_->leq(values_[static_cast<std::size_t>(i)],
                       other.values_[static_cast<std::size_t>(i)]))
        return false;
    return true;
  }

  FuzzySet join(const FuzzySet& other) const {
    check_same_space(other);
    std::vector<ElemId> values(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i)
      values[i] = basis_->join(values_[i], other.values_[i]);
    return FuzzySet(carrier_, basis_, std::move(values));
  }

  FuzzySet meet(const FuzzySet& other) const {
    check_same_space(other);
    std::vector<ElemId> values(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i)
      values[i] = basis_->meet(values_[i], other.values_[i]);
    return FuzzySet(carrier_, basis_, std::move(values));
  }

  bool operator==(const FuzzySet& other) const {
    return *carrier_ == *other.carrier_ && *basis_ == *other.basis_ &&
           values_ == other.values_;
  }
  bool operator!=(const FuzzySet& other) const { return !(*this == other); }

  // Canonical text form "[p1=e1,p2=e2,...]" with points in carrier order.
  std::string to_literal() const {
    std::string out = "[";
    for (int i = 0; i < carrier_size(); ++i) {
      if (i) out += ",";
      out += carrier_->point(i);
      out += "=";
      out += basis_->label(values_[static_cast<std::size_t>(i)]);
    }
    out += "]";
    return out;
  }

 private:
  void check_same_space(const FuzzySet& other) const {
    if (!(*carrier_ == *other.carrier_))
      throw Error(ErrorCode::CarrierMismatch,
                  "fuzzy sets over different carriers: '" + carrier_->name() + "' and '" +
                      other.carrier_->name() + "'");
    if (!(*basis_ == *other.basis_))
      throw Error(ErrorCode::SpaceMismatch,
                  "fuzzy sets valued in different lattices: '" + basis_->name() + "' and '" +
                      other.basis_->name() + "'");
  }

  CarrierPtr carrier_;
  LatticePtr basis_;
  std::vector<ElemId> values_;
};

// Enumerates the fuzzy powerset of a space by mixed-radix codes in base |L|,
// with the first carrier point as the most significant digit.  The code
// order is a linear extension of the pointwise order: if a <= b pointwise
// then encode(a) <= encode(b).
class PowersetDomain {
 public:
  explicit PowersetDomain(Space space) : space_(std::move(space)) {
    const std::uint64_t radix = static_cast<std::uint64_t>(space_.basis->size());
    size_ = 1;
    for (int i = 0; i < space_.carrier->size(); ++i) {
      if (size_ > std::numeric_limits<std::uint64_t>::max() / radix) {
        saturated_ = true;
        size_ = std::numeric_limits<std::uint64_t>::max();
        break;
      }
      size_ *= radix;
    }
  }

  const Space& space() const { return space_; }

  // |L|^|X|, saturating at the uint64 maximum.
  std::uint64_t size() const { return size_; }
  bool saturated() const { return saturated_; }

  FuzzySet decode(std::uint64_t code) const {
    require_exact();
    if (code >= size_)
      throw Error(ErrorCode::ForeignElement,
                  "code " + std::to_string(code) + " is outside the powerset of " +
                      space_.describe());
    const std::uint64_t radix = static_cast<std::uint64_t>(space_.basis->size());
    const int n = space_.carrier->size();
    std::vector<ElemId> values(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
      values[static_cast<std::size_t>(i)] = static_cast<ElemId>(code % radix);
      code /= radix;
    }
    return FuzzySet(space_.carrier, space_.basis, std::move(values));
  }

  std::uint64_t encode(const FuzzySet& a) const {
    require_exact();
    if (!(a.space() == space_))
      throw Error(ErrorCode::SpaceMismatch,
                  "fuzzy set over " + a.space().describe() + " encoded against " +
                      space_.describe());
    const std::uint64_t radix = static_cast<std::uint64_t>(space_.basis->size());
    std::uint64_t code = 0;
    for (int i = 0; i < space_.carrier->size(); ++i)
      code = code * radix + static_cast<std::uint64_t>(a.at(i));
    return code;
  }

 private:
  void require_exact() const {
    if (saturated_)
      throw Error(ErrorCode::CapExceeded,
                  "powerset of " + space_.describe() + " exceeds the representable range");
  }

  Space space_;
  std::uint64_t size_ = 1;
  bool saturated_ = false;
};

class SetFunction {
 public:
  SetFunction(std::string name, CarrierPtr domain, CarrierPtr codomain,
              std::vector<int> map)
      : name_(std::move(name)), domain_(std::move(domain)), codomain_(std::move(codomain)),
        map_(std::move(map)) {
    if (map_.size() != static_cast<std::size_t>(domain_->size()))
      throw Error(ErrorCode::CarrierMismatch,
                  "map of '" + name_ + "' does not cover carrier '" + domain_->name() + "'");
    for (int y : map_) codomain_->require(y);
  }

  static SetFunction identity(CarrierPtr carrier) {
    std::vector<int> map(static_cast<std::size_t>(carrier->size()));
    for (int i = 0; i < carrier->size(); ++i) map[static_cast<std::size_t>(i)] = i;
    return SetFunction("id_" + carrier->name(), carrier, carrier, std::move(map));
  }

  const std::string& name() const { return name_; }
  const CarrierPtr& domain() const { return domain_; }
  const CarrierPtr& codomain() const { return codomain_; }

  int apply(int x) const {
    domain_->require(x);
    return map_[static_cast<std::size_t>(x)];
  }

  bool is_surjective() const {
    std::vector<bool> hit(static_cast<std::size_t>(codomain_->size()), false);
    for (int y : map_) hit[static_cast<std::size_t>(y)] = true;
    for (bool b : hit)
      if (!b) return false;
    return true;
  }

  bool is_injective() const {
    for (std::size_t i = 0; i < map_.size(); ++i)
      for (std::size_t j = i + 1; j < map_.size(); ++j)
        if (map_[i] == map_[j]) return false;
    return true;
  }

 private:
  std::string name_;
  CarrierPtr domain_;
  CarrierPtr codomain_;
  std::vector<int> map_;
};

// g after f: domain of g must be the codomain of f.
inline SetFunction compose(const SetFunction& g, const SetFunction& f) {
  if (!(*f.codomain() == *g.domain()))
    throw Error(ErrorCode::CompositionMismatch,
                "cannot compose '" + g.name() + "' after '" + f.name() +
                    "': carriers '" + f.codomain()->name() + "' and '" +
                    g.domain()->name() + "' differ");
  std::vector<int> map(static_cast<std::size_t>(f.domain()->size()));
  for (int x = 0; x < f.domain()->size(); ++x)
    map[static_cast<std::size_t>(x)] = g.apply(f.apply(x));
  return SetFunction(g.name() + "." + f.name(), f.domain(), g.codomain(), std::move(map));
}

// Ordinary subset of a carrier, kept alongside its carrier for validation.
struct CrispSet {
  CarrierPtr carrier;
  std::vector<std::uint8_t> member;

  static CrispSet empty(CarrierPtr c) {
    std::vector<std::uint8_t> m(static_cast<std::size_t>(c->size()), 0);
    return CrispSet{std::move(c), std::move(m)};
  }

  bool contains(int p) const {
    carrier->require(p);
    return member[static_cast<std::size_t>(p)] != 0;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < carrier->size(); ++i) {
      if (!member[static_cast<std::size_t>(i)]) continue;
      if (!first) out += ",";
      out += carrier->point(i);
      first = false;
    }
    out += "}";
    return out;
  }
};

inline CrispSet crisp_image(const SetFunction& f, const CrispSet& a) {
  if (!(*a.carrier == *f.domain()))
    throw Error(ErrorCode::CarrierMismatch,
                "crisp image along '" + f.name() + "' of a subset of '" +
                    a.carrier->name() + "'");
  CrispSet out = CrispSet::empty(f.codomain());
  for (int x = 0; x < f.domain()->size(); ++x)
    if (a.member[static_cast<std::size_t>(x)])
      out.member[static_cast<std::size_t>(f.apply(x))] = 1;
  return out;
}

inline CrispSet crisp_preimage(const SetFunction& f, const CrispSet& b) {
  if (!(*b.carrier == *f.codomain()))
    throw Error(ErrorCode::CarrierMismatch,
                "crisp preimage along '" + f.name() + "' of a subset of '" +
                    b.carrier->name() + "'");
  CrispSet out = CrispSet::empty(f.domain());
  for (int x = 0; x < f.domain()->size(); ++x)
    if (b.member[static_cast<std::size_t>(f.apply(x))])
      out.member[static_cast<std::size_t>(x)] = 1;
  return out;
}

// Zadeh forward image: (forward a)(y) = \/ { a(x) : f(x) = y }.
inline FuzzySet fuzzy_forward(const SetFunction& f, const FuzzySet& a) {
  if (!(*a.carrier() == *f.domain()))
    throw Error(ErrorCode::CarrierMismatch,
                "fuzzy image along '" + f.name() + "' of a set over '" +
                    a.carrier()->name() + "'");
  const LatticePtr& basis = a.basis();
  std::vector<ElemId> values(static_cast<std::size_t>(f.codomain()->size()),
                             basis->bottom());
  for (int x = 0; x < f.domain()->size(); ++x) {
    int y = f.apply(x);
    values[static_cast<std::size_t>(y)] =
        basis->join(values[static_cast<std::size_t>(y)], a.at(x));
  }
  return FuzzySet(f.codomain(), basis, std::move(values));
}

// Backward image by composition: (backward b)(x) = b(f(x)).
inline FuzzySet fuzzy_backward(const SetFunction& f, const FuzzySet& b) {
  if (!(*b.carrier() == *f.codomain()))
    throw Error(ErrorCode::CarrierMismatch,
                "fuzzy preimage along '" + f.name() + "' of a set over '" +
                    b.carrier()->name() + "'");
  std::vector<ElemId> values(static_cast<std::size_t>(f.domain()->size()));
  for (int x = 0; x < f.domain()->size(); ++x)
    values[static_cast<std::size_t>(x)] = b.at(f.apply(x));
  return FuzzySet(f.domain(), b.basis(), std::move(values));
}

// Exhaustively verifies  forward(a) <= b  <=>  a <= backward(b)  over the two
// powersets.  Throws CapExceeded when either powerset is larger than `cap`.
inline Report check_fuzzy_adjunction(const SetFunction& f, const LatticePtr& basis,
                                     std::size_t cap = 4096) {
  PowersetDomain dom(Space{f.domain(), basis});
  PowersetDomain cod(Space{f.codomain(), basis});
  if (dom.saturated() || cod.saturated() || dom.size() > cap || cod.size() > cap)
    throw Error(ErrorCode::CapExceeded,
                "fuzzy adjunction check along '" + f.name() + "' exceeds the enumeration cap");
  Report report;
  bool ok = true;
  Witness w;
  for (std::uint64_t i = 0; i < dom.size() && ok; ++i) {
    FuzzySet a = dom.decode(i);
    FuzzySet fa = fuzzy_forward(f, a);
    for (std::uint64_t j = 0; j < cod.size(); ++j) {
      FuzzySet b = cod.decode(j);
      bool lhs = fa.leq(b);
      bool rhs = a.leq(fuzzy_backward(f, b));
      if (lhs != rhs) {
        ok = false;
        w.bind("fn", f.name()).bind("a", a.to_literal()).bind("b", b.to_literal())
            .bind("forward-le", lhs ? "true" : "false")
            .bind("backward-le", rhs ? "true" : "false");
        break;
      }
    }
  }
  ok ? report.add_pass("image-preimage-adjunction")
     : report.add_fail("image-preimage-adjunction", w, true);
  return report;
}

}  // namespace fuzclose
