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

#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "fuzclose/comorphism.hpp"
#include "fuzclose/topology.hpp"

namespace fuzclose {
namespace {

// Four-element lattice with two incomparable middle elements a, b.
LatticePtr diamond() {
  OrderSpec spec;
  spec.name = "diamond";
  spec.labels = {"o", "a", "b", "i"};
  spec.le_pairs = {{"o", "a"}, {"o", "b"}, {"a", "i"}, {"b", "i"}};
  return share(FiniteLattice::build(spec));
}

// Collapses the diamond onto a two-chain: bottom stays bottom, the rest
// lands on top.  Preserves joins and top but not the meet of a and b.
BasisComorphism collapse(const LatticePtr& dia, const LatticePtr& c2) {
  return BasisComorphism("collapse", dia, c2, {0, 1, 1, 1});
}

TEST(Comorphism, IdentityPreservesEverything) {
  LatticePtr div12 = share(divisor_lattice(12));
  BasisComorphism id = BasisComorphism::identity(div12);
  EXPECT_TRUE(check_comorphism(id).ok());
  EXPECT_TRUE(preserves_meets(id));
  for (int e = 0; e < div12->size(); ++e) EXPECT_EQ(star_phi(id, e), e);
  EXPECT_TRUE(check_star_phi_adjunction(id).ok());
}

TEST(Comorphism, TensorPreservationIsCheckedWhenTensorsArePresent) {
  LatticePtr c3 = share(FiniteLattice::chain("c3", {"0", "h", "1"}));
  TensorStructure min_t = TensorStructure::meet_tensor(c3, "min");
  TensorStructure luk("luk", c3, {0, 0, 0, 0, 0, 1, 0, 1, 2});
  BasisComorphism id = BasisComorphism::identity(c3);
  EXPECT_TRUE(check_comorphism(id, &min_t, &min_t).ok());
  Report cross = check_comorphism(id, &min_t, &luk);
  const LawResult* tensor_law = cross.find("preserves-tensor");
  ASSERT_NE(tensor_law, nullptr);
  EXPECT_FALSE(tensor_law->ok);
  EXPECT_TRUE(cross.find("preserves-joins")->ok);
  EXPECT_TRUE(cross.find("preserves-top")->ok);
}

TEST(Comorphism, CollapsingTheDiamondLosesMeetsButNotTheOneSidedLaws) {
  LatticePtr dia = diamond();
  LatticePtr c2 = share(FiniteLattice::chain("c2", {"0", "1"}));
  BasisComorphism op = collapse(dia, c2);
  EXPECT_TRUE(check_comorphism(op).ok());
  EXPECT_FALSE(preserves_meets(op));
  EXPECT_EQ(star_phi(op, 0), dia->bottom());
  // every non-bottom image dominates 1, and the meet of {a,b,i} is o.
  EXPECT_EQ(star_phi(op, 1), dia->bottom());
  Report adj = check_star_phi_adjunction(op);
  EXPECT_FALSE(adj.ok());
  EXPECT_FALSE(adj.has_finding());
  EXPECT_TRUE(adj.find("residual-implication")->ok);
  EXPECT_TRUE(adj.find("counit")->ok);
  EXPECT_FALSE(adj.find("unit")->ok);
  EXPECT_FALSE(adj.find("residual-converse")->ok);
}

TEST(Comorphism, CompositionChainsAndRejectsMismatch) {
  LatticePtr dia = diamond();
  LatticePtr c2 = share(FiniteLattice::chain("c2", {"0", "1"}));
  BasisComorphism op = collapse(dia, c2);
  BasisComorphism idd = BasisComorphism::identity(dia);
  BasisComorphism chained = compose(op, idd);
  for (int b = 0; b < dia->size(); ++b) EXPECT_EQ(chained.apply(b), op.apply(b));
  try {
    compose(idd, op);
    FAIL() << "expected a CompositionMismatch error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CompositionMismatch);
  }
}

TEST(PairImages, PointwiseForwardMatchesGlobalMeetOracle) {
  CarrierPtr x = share(CarrierSet("X", {"p", "q"}));
  CarrierPtr y = share(CarrierSet("Y", {"a", "b"}));
  LatticePtr dia = diamond();
  LatticePtr c2 = share(FiniteLattice::chain("c2", {"0", "1"}));
  BasisComorphism op = collapse(dia, c2);
  for (std::vector<int> table : {std::vector<int>{0, 0}, {0, 1}, {1, 1}}) {
    SetFunction f("f", x, y, table);
    PowersetDomain dom(Space{x, c2});
    for (std::uint64_t code = 0; code < dom.size(); ++code) {
      FuzzySet a = dom.decode(code);
      EXPECT_TRUE(pair_forward(f, op, a) == pair_forward_by_enumeration(f, op, a));
    }
  }
}

TEST(PairImages, IdentityComorphismReducesToPlainImages) {
  CarrierPtr x = share(CarrierSet("X", {"p", "q"}));
  CarrierPtr y = share(CarrierSet("Y", {"a", "b"}));
  LatticePtr c2 = share(FiniteLattice::chain("c2", {"0", "1"}));
  BasisComorphism idc = BasisComorphism::identity(c2);
  SetFunction f("f", x, y, {0, 1});
  PowersetDomain dom(Space{x, c2});
  for (std::uint64_t code = 0; code < dom.size(); ++code) {
    FuzzySet a = dom.decode(code);
    EXPECT_TRUE(pair_forward(f, idc, a) == fuzzy_forward(f, a));
  }
  PowersetDomain cod(Space{y, c2});
  for (std::uint64_t code = 0; code < cod.size(); ++code) {
    FuzzySet b = cod.decode(code);
    EXPECT_TRUE(pair_backward(f, idc, b) == fuzzy_backward(f, b));
  }
}

TEST(PairImages, AdjunctionEquivalenceNeedsMeetPreservation) {
  CarrierPtr z = share(CarrierSet("Z", {"z"}));
  LatticePtr dia = diamond();
  LatticePtr c2 = share(FiniteLattice::chain("c2", {"0", "1"}));
  SetFunction idf = SetFunction::identity(z);
  Report rep = check_pair_adjunction(idf, collapse(dia, c2));
  EXPECT_TRUE(rep.find("pair-backward-implies-forward")->ok);
  EXPECT_FALSE(rep.find("pair-adjunction-equivalence")->ok);
  EXPECT_FALSE(rep.has_finding());
  EXPECT_TRUE(check_pair_adjunction(idf, BasisComorphism::identity(c2)).ok());
}

TEST(PairImages, LiftsValidateTheValueLattice) {
  CarrierPtr z = share(CarrierSet("Z", {"z"}));
  LatticePtr dia = diamond();
  LatticePtr c2 = share(FiniteLattice::chain("c2", {"0", "1"}));
  BasisComorphism op = collapse(dia, c2);
  try {
    star_phi_lift(op, FuzzySet(z, dia, {0}));
    FAIL() << "expected a SpaceMismatch error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SpaceMismatch);
  }
  FuzzySet lifted = star_phi_lift(op, FuzzySet(z, c2, {1}));
  EXPECT_EQ(lifted.at(0), dia->bottom());
  FuzzySet dropped = comorphism_lift(op, FuzzySet(z, dia, {3}));
  EXPECT_EQ(dropped.at(0), 1);
}

}  // namespace
}  // namespace fuzclose
