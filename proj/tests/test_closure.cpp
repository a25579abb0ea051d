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

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "fuzclose/closure.hpp"
#include "fuzclose/topology.hpp"

namespace fuzclose {
namespace {

Space two_points_two_chain() {
  return Space{share(CarrierSet("X", {"p", "q"})),
               share(FiniteLattice::chain("c2", {"0", "1"}))};
}

Space singleton_div12() {
  return Space{share(CarrierSet("X", {"pt"})), share(divisor_lattice(12))};
}

// Idempotent and additive: fixes 1, 3, 4, 12 and rounds 2 up to 4, 6 to 12.
ClosureMap round_up_even(const Space& s) {
  return ClosureMap::from_table(s, "round-up-even", {0, 3, 2, 3, 5, 5});
}

// Additive but not idempotent: sends 2 to 6 and everything above to 12.
ClosureMap absorb_up(const Space& s) {
  return ClosureMap::from_table(s, "absorb-up", {0, 4, 5, 5, 5, 5});
}

TEST(ClosureAxioms, IdentityAndTrivialSatisfyAllThree) {
  for (const Space& s : {two_points_two_chain(), singleton_div12()}) {
    EXPECT_TRUE(check_closure_axioms(ClosureMap::identity(s)).ok());
    EXPECT_TRUE(check_closure_axioms(ClosureMap::trivial(s)).ok());
  }
}

TEST(ClosureAxioms, ViolationsAreReportedWithWitnesses) {
  Space s = two_points_two_chain();
  // Moves bottom to [p=0,q=1]: extension still holds, the other axioms fail.
  ClosureMap skew = ClosureMap::from_table(s, "skew", {1, 1, 2, 3});
  Report r = check_closure_axioms(skew);
  EXPECT_FALSE(r.find("bottom-fixed")->ok);
  EXPECT_TRUE(r.find("extension")->ok);
  const LawResult* mono = r.find("monotone");
  ASSERT_NE(mono, nullptr);
  ASSERT_FALSE(mono->ok);
  ASSERT_TRUE(mono->witness.has_value());
  EXPECT_EQ(mono->witness->bindings[1].second, "[p=0,q=0]");
  EXPECT_EQ(mono->witness->bindings[2].second, "[p=1,q=0]");
}

TEST(ClosureAxioms, TableValidationRejectsBadShapes) {
  Space s = two_points_two_chain();
  try {
    ClosureMap::from_table(s, "short", {0, 1});
    FAIL() << "expected a SpaceMismatch error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SpaceMismatch);
  }
  try {
    ClosureMap::from_table(s, "wild", {0, 1, 2, 9});
    FAIL() << "expected a ForeignElement error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ForeignElement);
  }
}

TEST(ClosureAxioms, SamplingBudgetCoversLargePowersets) {
  CarrierPtr big = share(CarrierSet("big", {"a", "b", "c", "d", "e", "f", "g", "h"}));
  Space s{big, share(divisor_lattice(12))};  // 6^8 codes, far beyond the cap
  ClosureMap id = ClosureMap::identity(s);
  EXPECT_TRUE(check_closure_axioms(id, 4096, SampleBudget{64, 7}).ok());
  try {
    check_closure_axioms(id, 4096);
    FAIL() << "expected a CapExceeded error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
  }
}

TEST(OperatorBounds, EveryClosureMapSitsBetweenIdentityAndTrivial) {
  Space s = singleton_div12();
  EXPECT_TRUE(check_operator_bounds(round_up_even(s)).ok());
  EXPECT_TRUE(check_operator_bounds(absorb_up(s)).ok());
  EXPECT_TRUE(check_operator_bounds(ClosureMap::identity(s)).ok());
  Space t = two_points_two_chain();
  ClosureMap skew = ClosureMap::from_table(t, "skew", {1, 1, 2, 3});
  EXPECT_FALSE(check_operator_bounds(skew).ok());  // bottom escapes upward
}

TEST(OperatorAlgebra, JoinAndMeetOfClosureMapsAreClosureMaps) {
  Space s = singleton_div12();
  ClosureMap c = round_up_even(s);
  ClosureMap d = absorb_up(s);
  ClosureMap j = join_maps({c, d});
  ClosureMap m = meet_maps({c, d});
  EXPECT_TRUE(check_closure_axioms(j).ok());
  EXPECT_TRUE(check_closure_axioms(m).ok());
  ClosureMap j_expect = ClosureMap::from_table(s, "j", {0, 5, 5, 5, 5, 5});
  ClosureMap m_expect = ClosureMap::from_table(s, "m", {0, 1, 2, 3, 5, 5});
  EXPECT_TRUE(same_behavior(j, j_expect));
  EXPECT_TRUE(same_behavior(m, m_expect));
  EXPECT_TRUE(pointwise_leq(m, c) && pointwise_leq(m, d));
  EXPECT_TRUE(pointwise_leq(c, j) && pointwise_leq(d, j));
}

TEST(OperatorAlgebra, EmptyFamiliesNeedAnExplicitSpace) {
  Space s = two_points_two_chain();
  EXPECT_TRUE(same_behavior(join_maps(s, {}), ClosureMap::identity(s)));
  EXPECT_TRUE(same_behavior(meet_maps(s, {}), ClosureMap::trivial(s)));
  try {
    join_maps({});
    FAIL() << "expected an EmptySource error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptySource);
  }
}

TEST(Additivity, MeetOfTwoAdditiveMapsNeedNotBeAdditive) {
  Space s = singleton_div12();
  ClosureMap c = round_up_even(s);
  ClosureMap d = absorb_up(s);
  EXPECT_TRUE(check_additive(c).ok());
  EXPECT_TRUE(check_additive(d).ok());
  ClosureMap m = meet_maps({c, d});
  Report r = check_additive(m);
  const LawResult* law = r.find("additive");
  ASSERT_NE(law, nullptr);
  ASSERT_FALSE(law->ok);
  ASSERT_TRUE(law->witness.has_value());
  // the join of 2 and 3 is 6; m fixes 2 and 3 but sends 6 all the way to 12.
  EXPECT_EQ(law->witness->bindings[1].second, "[pt=2]");
  EXPECT_EQ(law->witness->bindings[2].second, "[pt=3]");
}

TEST(Properties, KnownOperatorsClassifyCorrectly) {
  Space s = singleton_div12();
  ClosureMap c = round_up_even(s);
  ClosureMap d = absorb_up(s);
  EXPECT_TRUE(has_property(c, ClosureProperty::kIdempotent));
  EXPECT_TRUE(has_property(c, ClosureProperty::kFullyAdditive));
  EXPECT_FALSE(has_property(d, ClosureProperty::kIdempotent));
  EXPECT_TRUE(has_property(d, ClosureProperty::kAdditive));
  EXPECT_TRUE(has_property(ClosureMap::identity(s), ClosureProperty::kFullyAdditive));
  EXPECT_TRUE(has_property(ClosureMap::trivial(s), ClosureProperty::kIdempotent));
  EXPECT_TRUE(has_property(ClosureMap::trivial(s), ClosureProperty::kFullyAdditive));
  Report idem = check_idempotent(d);
  ASSERT_TRUE(idem.laws().front().witness.has_value());
  EXPECT_EQ(idem.laws().front().witness->bindings[1].second, "[pt=2]");
}

TEST(Properties, FixedPointsAndDensity) {
  Space s = singleton_div12();
  ClosureMap c = round_up_even(s);
  std::vector<FuzzySet> fps = fixed_points(c);
  ASSERT_EQ(fps.size(), 4u);
  EXPECT_EQ(fps[0].to_literal(), "[pt=1]");
  EXPECT_EQ(fps[1].to_literal(), "[pt=3]");
  EXPECT_EQ(fps[2].to_literal(), "[pt=4]");
  EXPECT_EQ(fps[3].to_literal(), "[pt=12]");
  PowersetDomain dom(s);
  EXPECT_TRUE(is_c_dense(c, dom.decode(4)));    // 6 rounds up to 12
  EXPECT_FALSE(is_c_dense(c, dom.decode(1)));   // 2 only reaches 4
  EXPECT_TRUE(is_c_closed(c, dom.decode(2)));   // 3 is fixed
  EXPECT_FALSE(is_c_closed(c, dom.decode(1)));
}

TEST(Continuity, IdentityMapIsAlwaysContinuousAndTrivialSourceIsNot) {
  Space s = two_points_two_chain();
  SetFunction idf = SetFunction::identity(s.carrier);
  ClosureMap id_op = ClosureMap::identity(s);
  ClosureMap triv = ClosureMap::trivial(s);
  EXPECT_TRUE(check_c_continuity(idf, id_op, id_op).ok());
  EXPECT_TRUE(check_c_continuity(idf, id_op, triv).ok());
  Report r = check_c_continuity(idf, triv, id_op);
  EXPECT_FALSE(r.find("image-criterion")->ok);
  EXPECT_FALSE(r.find("preimage-criterion")->ok);
  EXPECT_TRUE(r.find("criteria-agree")->ok);
  EXPECT_FALSE(r.has_finding());
  EXPECT_FALSE(is_continuous(idf, triv, id_op));
}

TEST(Continuity, CompositionPreservesContinuity) {
  Space s = two_points_two_chain();
  CarrierPtr y = share(CarrierSet("Y", {"a"}));
  Space t{y, s.basis};
  SetFunction f("f", s.carrier, y, {0, 0});
  SetFunction g = SetFunction::identity(y);
  ClosureMap cx = ClosureMap::trivial(s);
  ClosureMap cy = ClosureMap::trivial(t);
  ASSERT_TRUE(is_continuous(f, cx, cy));
  EXPECT_TRUE(check_continuity_composition(f, g, cx, cy, cy).ok());
  try {
    check_continuity_composition(SetFunction::identity(s.carrier), f,
                                 ClosureMap::trivial(s), ClosureMap::identity(s), cy);
    FAIL() << "expected a PreconditionFailed error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionFailed);
  }
}

TEST(Continuity, CarrierGuardsReject) {
  Space s = two_points_two_chain();
  CarrierPtr y = share(CarrierSet("Y", {"a"}));
  Space t{y, s.basis};
  SetFunction f("f", s.carrier, y, {0, 0});
  try {
    check_c_continuity(f, ClosureMap::identity(t), ClosureMap::identity(t));
    FAIL() << "expected a CarrierMismatch error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CarrierMismatch);
  }
}

TEST(InitialOperator, CollapseOntoTrivialTargetGivesTrivialSource) {
  Space s = two_points_two_chain();
  CarrierPtr y = share(CarrierSet("Y", {"a"}));
  Space t{y, s.basis};
  SetFunction f("collapse", s.carrier, y, {0, 0});
  ClosureMap init = initial_closure(f, ClosureMap::trivial(t));
  EXPECT_TRUE(same_behavior(init, ClosureMap::trivial(s)));
  EXPECT_TRUE(check_closure_axioms(init).ok());
  EXPECT_TRUE(is_continuous(f, init, ClosureMap::trivial(t)));
}

TEST(InitialOperator, SpreadsTheJoinAcrossEachFiber) {
  Space s = two_points_two_chain();
  CarrierPtr y = share(CarrierSet("Y", {"a"}));
  Space t{y, s.basis};
  SetFunction f("collapse", s.carrier, y, {0, 0});
  ClosureMap init = initial_closure(f, ClosureMap::identity(t));
  PowersetDomain dom(s);
  for (std::uint64_t code = 0; code < dom.size(); ++code) {
    FuzzySet u = dom.decode(code);
    FuzzySet v = init.apply(u);
    ElemId joined = s.basis->join(u.at(0), u.at(1));
    EXPECT_EQ(v.at(0), joined);
    EXPECT_EQ(v.at(1), joined);
  }
  EXPECT_TRUE(check_closure_axioms(init).ok());
  EXPECT_TRUE(has_property(init, ClosureProperty::kIdempotent));
}

TEST(InitialOperator, FactorizationBiconditionalHoldsForProbes) {
  Space s = two_points_two_chain();
  CarrierPtr y = share(CarrierSet("Y", {"a"}));
  CarrierPtr z = share(CarrierSet("Z", {"z"}));
  Space t{y, s.basis};
  Space r{z, s.basis};
  SetFunction f("collapse", s.carrier, y, {0, 0});
  for (const ClosureMap& cy : {ClosureMap::identity(t), ClosureMap::trivial(t)}) {
    for (std::vector<int> m : {std::vector<int>{0}, {1}}) {
      SetFunction g("probe", z, s.carrier, m);
      for (const ClosureMap& cz : {ClosureMap::identity(r), ClosureMap::trivial(r)}) {
        Report rep = check_initial_factorization(f, cy, g, cz);
        EXPECT_TRUE(rep.ok()) << rep.laws().front().law;
      }
    }
  }
}

TEST(InitialOperator, PreservesIdempotenceAndAdditivityOfTheTarget) {
  CarrierPtr x = share(CarrierSet("X", {"p", "q"}));
  CarrierPtr y = share(CarrierSet("Y", {"pt"}));
  Space t{y, share(divisor_lattice(12))};
  SetFunction f("collapse", x, y, {0, 0});
  ClosureMap cy = round_up_even(t);
  EXPECT_TRUE(check_initial_preserves_property(ClosureProperty::kIdempotent, f, cy).ok());
  EXPECT_TRUE(
      check_initial_preserves_property(ClosureProperty::kFullyAdditive, f, cy).ok());
  try {
    check_initial_preserves_property(ClosureProperty::kIdempotent, f, absorb_up(t));
    FAIL() << "expected a PropertyPreconditionFailed error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PropertyPreconditionFailed);
  }
}

TEST(InitialOperator, EmptyFamilyFallsBackToIdentity) {
  Space s = two_points_two_chain();
  InitialLift lift = initial_lift(s, {});
  EXPECT_TRUE(lift.empty_source);
  EXPECT_TRUE(same_behavior(lift.map, ClosureMap::identity(s)));
}

TEST(InitialOperator, FamilyLiftJoinsTheLegs) {
  Space s = two_points_two_chain();
  CarrierPtr y = share(CarrierSet("Y", {"a"}));
  Space t{y, s.basis};
  SetFunction f("collapse", s.carrier, y, {0, 0});
  SetFunction g = SetFunction::identity(s.carrier);
  // closure map on X that pulls q up whenever p is full.
  ClosureMap cq = ClosureMap::from_table(s, "p-forces-q", {0, 1, 3, 3});
  InitialLift lift = initial_lift(s, {{f, ClosureMap::identity(t)}, {g, cq}});
  EXPECT_FALSE(lift.empty_source);
  ClosureMap by_hand =
      join_maps(s, {initial_closure(f, ClosureMap::identity(t)), cq});
  EXPECT_TRUE(same_behavior(lift.map, by_hand));
  EXPECT_TRUE(check_closure_axioms(lift.map).ok());
  // the joined lift dominates each per-leg operator ...
  EXPECT_TRUE(pointwise_leq(initial_closure(f, ClosureMap::identity(t)), lift.map));
  EXPECT_TRUE(pointwise_leq(cq, lift.map));
  // ... which keeps the dominating leg continuous but can break the other.
  EXPECT_TRUE(is_continuous(f, lift.map, ClosureMap::identity(t)));
  EXPECT_FALSE(is_continuous(g, lift.map, cq));
}

TEST(InitialOperator, LiftFactorizationOneDirectionAlwaysHolds) {
  Space s = two_points_two_chain();
  CarrierPtr y = share(CarrierSet("Y", {"a"}));
  CarrierPtr z = share(CarrierSet("Z", {"z"}));
  Space t{y, s.basis};
  Space r{z, s.basis};
  SetFunction f("collapse", s.carrier, y, {0, 0});
  ClosureMap cq = ClosureMap::from_table(s, "p-forces-q", {0, 1, 3, 3});
  std::vector<std::pair<SetFunction, ClosureMap>> legs = {
      {f, ClosureMap::identity(t)}, {SetFunction::identity(s.carrier), cq}};
  for (std::vector<int> m : {std::vector<int>{0}, {1}}) {
    SetFunction probe("probe", z, s.carrier, m);
    for (const ClosureMap& cz : {ClosureMap::identity(r), ClosureMap::trivial(r)}) {
      Report rep = check_lift_factorization(s, legs, probe, cz);
      EXPECT_TRUE(rep.find("composites-imply-through-lift")->ok);
      EXPECT_FALSE(rep.has_finding());
    }
  }
}

TEST(InitialOperator, LiftBiconditionalHoldsForIdenticalLegsOnly) {
  Space s = two_points_two_chain();
  CarrierPtr y = share(CarrierSet("Y", {"a"}));
  Space t{y, s.basis};
  SetFunction f("collapse", s.carrier, y, {0, 0});
  ClosureMap cy = ClosureMap::identity(t);
  std::vector<std::pair<SetFunction, ClosureMap>> twins = {{f, cy}, {f, cy}};
  InitialLift lift = initial_lift(s, twins);
  EXPECT_TRUE(same_behavior(lift.map, initial_closure(f, cy)));
  SetFunction idx = SetFunction::identity(s.carrier);
  EXPECT_TRUE(check_lift_factorization(s, twins, idx, lift.map).ok());

  // incomparable legs: the probe rides the join, one composite breaks.
  ClosureMap cq = ClosureMap::from_table(s, "p-forces-q", {0, 1, 3, 3});
  std::vector<std::pair<SetFunction, ClosureMap>> mixed = {{f, cy}, {idx, cq}};
  InitialLift joined = initial_lift(s, mixed);
  Report rep = check_lift_factorization(s, mixed, idx, joined.map);
  EXPECT_TRUE(rep.find("composites-imply-through-lift")->ok);
  EXPECT_FALSE(rep.find("lift-factorization-biconditional")->ok);
  EXPECT_FALSE(rep.has_finding());
}

// Brute-forces every self-map of the powerset and keeps those satisfying the
// three axioms, then compares against the backtracking enumerator.
std::vector<std::vector<std::uint64_t>> brute_force_closure_tables(const Space& s) {
  PowersetDomain dom(s);
  const std::uint64_t n = dom.size();
  std::vector<FuzzySet> sets;
  for (std::uint64_t i = 0; i < n; ++i) sets.push_back(dom.decode(i));
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> table(n, 0);
  while (true) {
    bool good = table[0] == 0;  // bottom is code 0 in canonical order
    for (std::uint64_t i = 0; i < n && good; ++i) {
      if (!sets[i].leq(sets[table[i]])) good = false;
      for (std::uint64_t j = 0; j < n && good; ++j)
        if (sets[i].leq(sets[j]) && !sets[table[i]].leq(sets[table[j]])) good = false;
    }
    if (good) out.push_back(table);
    std::uint64_t k = 0;
    while (k < n && ++table[k] == n) table[k++] = 0;
    if (k == n) break;
  }
  return out;
}

std::vector<std::uint64_t> table_of(const ClosureMap& c) {
  PowersetDomain dom(c.space());
  std::vector<std::uint64_t> t(dom.size());
  for (std::uint64_t i = 0; i < dom.size(); ++i)
    t[i] = dom.encode(c.apply(dom.decode(i)));
  return t;
}

TEST(OperatorLattice, EnumerationMatchesBruteForceOnTwoPointsTwoChain) {
  Space s = two_points_two_chain();
  std::vector<ClosureMap> maps = enumerate_closure_maps(s);
  std::vector<std::vector<std::uint64_t>> expect = brute_force_closure_tables(s);
  ASSERT_EQ(maps.size(), expect.size());
  EXPECT_EQ(maps.size(), 4u);
  std::vector<std::vector<std::uint64_t>> got;
  for (const ClosureMap& c : maps) got.push_back(table_of(c));
  std::sort(got.begin(), got.end());
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(got, expect);
  for (const ClosureMap& c : maps) {
    EXPECT_TRUE(check_closure_axioms(c).ok());
    EXPECT_TRUE(pointwise_leq(ClosureMap::identity(s), c));
    EXPECT_TRUE(pointwise_leq(c, ClosureMap::trivial(s)));
  }
  // pointwise joins and meets of closure maps stay inside the enumerated set.
  auto member = [&](const ClosureMap& c) {
    std::vector<std::uint64_t> t = table_of(c);
    for (const auto& e : got)
      if (e == t) return true;
    return false;
  };
  for (const ClosureMap& a : maps)
    for (const ClosureMap& b : maps) {
      EXPECT_TRUE(member(join_maps({a, b})));
      EXPECT_TRUE(member(meet_maps({a, b})));
    }
}

TEST(OperatorLattice, EnumerationMatchesBruteForceOnSingletonDiv12) {
  Space s = singleton_div12();
  std::vector<ClosureMap> maps = enumerate_closure_maps(s);
  std::vector<std::vector<std::uint64_t>> expect = brute_force_closure_tables(s);
  ASSERT_EQ(maps.size(), expect.size());
  std::vector<std::vector<std::uint64_t>> got;
  for (const ClosureMap& c : maps) got.push_back(table_of(c));
  std::sort(got.begin(), got.end());
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(got, expect);
}

TEST(OperatorLattice, EnumerationRefusesOversizedSpaces) {
  CarrierPtr x = share(CarrierSet("X", {"p", "q", "r"}));
  Space s{x, share(FiniteLattice::chain("c3", {"0", "h", "1"}))};  // 27 codes
  try {
    enumerate_closure_maps(s);
    FAIL() << "expected a CapExceeded error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
  }
}

TEST(InitialOperator, SitsAtTheTopOfTheContinuousOperators) {
  Space s = two_points_two_chain();
  CarrierPtr y = share(CarrierSet("Y", {"a"}));
  Space t{y, s.basis};
  SetFunction f("collapse", s.carrier, y, {0, 0});
  Report r = report_initial_extremes(f, ClosureMap::identity(t));
  EXPECT_TRUE(r.find("pointwise-greatest-among-continuous")->ok);
  EXPECT_FALSE(r.find("pointwise-least-among-continuous")->ok);
  EXPECT_FALSE(r.has_finding());
}

}  // namespace
}  // namespace fuzclose
