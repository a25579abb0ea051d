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
// Walks through the bundled finite models: classifies the divisor monoids,
// prints a residuum table, builds the operator induced by a small open
// family, and shows an initial operator pulled back along a two-point map.

#include <iostream>

#include "fuzclose/fuzclose.hpp"

using namespace fuzclose;

int main() {
  std::cout << "--- divisor monoid on the divisors of 12 ---\n";
  TensorPtr gcd12 = share(divisor_monoid(12));
  std::cout << "classification: " << to_string(gcd12->classification()) << "\n";
  print_report(std::cout, "gcd12", check_gl_monoid(*gcd12));

  const FiniteLattice& lat = *gcd12->base();
  std::cout << "\nresiduum table (a b a=>b):\n";
  for (ElemId a = 0; a < lat.size(); ++a) {
    for (ElemId b = 0; b < lat.size(); ++b)
      std::cout << lat.label(a) << ' ' << lat.label(b) << ' '
                << lat.label(gcd12->residuum(a, b)) << "   ";
    std::cout << "\n";
  }

  std::cout << "\n--- operator induced by the open family {1, 2, 12} ---\n";
  LTopology tau;
  tau.name = "tau";
  tau.carrier = share(CarrierSet("pt", {"pt"}));
  tau.basis = gcd12->base();
  tau.tensor = gcd12;
  for (const char* label : {"1", "2", "12"})
    tau.opens.push_back(FuzzySet::bottom(tau.carrier, tau.basis)
                            .with_value(0, tau.basis->require_label(label)));
  ClosureMap c = closure_from_topology(tau);
  emit_closure_block(std::cout, c);
  print_report(std::cout, "induced operator", check_closure_axioms(c));
  print_report(std::cout, "induced operator", check_idempotent(c));

  std::cout << "\n--- initial operator along a two-point map ---\n";
  CarrierPtr two = share(CarrierSet("X", {"p", "q"}));
  SetFunction collapse("collapse", two, tau.carrier, {0, 0});
  ClosureMap init = initial_closure(collapse, c);
  emit_closure_block(std::cout, init);
  print_report(std::cout, "initial operator", check_closure_axioms(init));
  print_report(std::cout, "collapse", check_c_continuity(collapse, init, c));
  return 0;
}
