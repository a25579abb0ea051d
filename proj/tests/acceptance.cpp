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
// Acceptance gate: eleven behavioral criteria, each with a hard time budget
// where one applies.  Exactly one [PASS]/[FAIL] line is printed per
// criterion; indented "| " lines carry witnesses and instance counts.  The
// exit code is the number of failed criteria.

#include <unistd.h>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fuzclose/cli.hpp"
#include "fuzclose/generate.hpp"

namespace fuzclose {
namespace {

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult call_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliResult r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class TempDir {
 public:
  TempDir() {
    dir_ = std::filesystem::temp_directory_path() /
           ("fuzclose-acceptance-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(dir_, ec);
  }
  std::string write(const std::string& name, const std::string& text) const {
    std::filesystem::path path = dir_ / name;
    std::ofstream out(path);
    out << text;
    return path.string();
  }

 private:
  std::filesystem::path dir_;
};

class Gate {
 public:
  void criterion(int number, const std::string& label, long budget_ms,
                 const std::function<bool(std::ostream&)>& body) {
    std::ostringstream log;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = body(log);
    } catch (const std::exception& e) {
      log << "unexpected error: " << e.what() << "\n";
    }
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    bool in_time = budget_ms <= 0 || ms <= budget_ms;
    if (!in_time) log << "time budget of " << budget_ms << " ms exceeded\n";
    bool pass = ok && in_time;
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << number << ": "
              << label << " (" << ms << " ms)\n";
    std::istringstream lines(log.str());
    std::string line;
    while (std::getline(lines, line))
      if (!line.empty()) std::cout << "  | " << line << "\n";
    if (!pass) ++failures_;
  }

  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

std::string lattice_text(const FiniteLattice& lat) {
  std::ostringstream os;
  emit_lattice_block(os, lat);
  return os.str();
}

CarrierPtr carrier_of(const std::string& name, const std::string& stem, int n) {
  std::vector<std::string> points;
  for (int i = 0; i < n; ++i) points.push_back(stem + std::to_string(i));
  return share(CarrierSet(name, points));
}

// Every map dom -> cod, by mixed-radix counting over the codomain.
std::vector<SetFunction> all_functions(const CarrierPtr& dom, const CarrierPtr& cod) {
  const int n = dom->size();
  const int k = cod->size();
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(k);
  std::vector<SetFunction> out;
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<int> map(static_cast<std::size_t>(n));
    std::uint64_t c = code;
    for (int i = 0; i < n; ++i) {
      map[static_cast<std::size_t>(i)] = static_cast<int>(c % k);
      c /= static_cast<std::uint64_t>(k);
    }
    out.emplace_back("f" + std::to_string(code), dom, cod, std::move(map));
  }
  return out;
}

// forward(a) <= b  <=>  a <= backward(b), exhaustively over both powersets.
bool pair_adjunction_holds(const GroundMorphism& m, std::uint64_t& checked,
                           std::ostream& log) {
  PowersetDomain dom(m.domain_space());
  PowersetDomain cod(m.codomain_space());
  std::vector<FuzzySet> forwards, backwards;
  forwards.reserve(dom.size());
  backwards.reserve(cod.size());
  for (std::uint64_t i = 0; i < dom.size(); ++i)
    forwards.push_back(vb_forward(m, dom.decode(i)));
  for (std::uint64_t j = 0; j < cod.size(); ++j)
    backwards.push_back(vb_backward(m, cod.decode(j)));
  for (std::uint64_t i = 0; i < dom.size(); ++i) {
    FuzzySet a = dom.decode(i);
    for (std::uint64_t j = 0; j < cod.size(); ++j) {
      FuzzySet b = cod.decode(j);
      bool lhs = forwards[i].leq(b);
      bool rhs = a.leq(backwards[j]);
      ++checked;
      if (lhs != rhs) {
        log << "adjunction broken along " << m.name() << " at a=" << a.to_literal()
            << " b=" << b.to_literal() << "\n";
        return false;
      }
    }
  }
  return true;
}

FuzzySet brute_pair_forward(const GroundMorphism& m, const FuzzySet& a) {
  PowersetDomain cod(m.codomain_space());
  Space target = m.codomain_space();
  FuzzySet best = FuzzySet::top(target.carrier, target.basis);
  for (std::uint64_t j = 0; j < cod.size(); ++j) {
    FuzzySet b = cod.decode(j);
    if (a.leq(vb_backward(m, b))) best = best.meet(b);
  }
  return best;
}

LatticePtr diamond() {
  OrderSpec spec;
  spec.name = "dia";
  spec.labels = {"o", "a", "b", "i"};
  spec.kind = OrderKind::kCovers;
  spec.le_pairs = {{"o", "a"}, {"o", "b"}, {"a", "i"}, {"b", "i"}};
  return share(FiniteLattice::build(spec));
}

int run_gate() {
  Gate gate;
  TempDir tmp;

  LatticePtr c2 = share(FiniteLattice::chain("c2", {"0", "1"}));
  LatticePtr c3 = share(FiniteLattice::chain("c3", {"0", "h", "1"}));
  LatticePtr c4 = share(FiniteLattice::chain("c4", {"0", "a", "b", "1"}));
  LatticePtr div12 = share(divisor_lattice(12));

  // 1 -------------------------------------------------------------------------
  gate.criterion(
      1, "divisor-12 open family {1,2,12} induces the exact six-row operator table",
      1000, [&](std::ostream& log) {
        std::string lat = tmp.write("c1-lat.txt", lattice_text(*div12));
        std::string ten =
            tmp.write("c1-ten.txt", "tensor gcd12 over div12\ndefault: meet\n");
        std::string spc = tmp.write("c1-spc.txt", "carrier pt\npoints: pt\n");
        std::string tau = tmp.write("c1-tau.txt",
                                    "topology tau12 over pt in div12\n"
                                    "open: [pt=1]\n"
                                    "open: [pt=2]\n"
                                    "open: [pt=12]\n");
        CliResult r = call_cli({"closure-from-topology", "--lattice", lat, "--tensor",
                                ten, "--space", spc, "--topology", tau, "--emit"});
        if (r.code != 0) {
          log << "exit code " << r.code << "\n" << r.err;
          return false;
        }
        const std::vector<std::string> rows = {
            "c: [pt=1] -> [pt=1]",  "c: [pt=2] -> [pt=12]", "c: [pt=3] -> [pt=3]",
            "c: [pt=4] -> [pt=12]", "c: [pt=6] -> [pt=12]", "c: [pt=12] -> [pt=12]"};
        for (const std::string& row : rows)
          if (!contains(r.out, row)) {
            log << "missing row: " << row << "\n";
            return false;
          }
        log << "all six operator rows match, axioms reported clean\n";
        return true;
      });

  // 2 -------------------------------------------------------------------------
  gate.criterion(
      2, "divisor-36 table recovers opens {1,4,9,36} and fails idempotence with a witness",
      1000, [&](std::ostream& log) {
        std::string d36 = lattice_text(divisor_lattice(36));
        std::string clo = tmp.write("c2-clo.txt",
                                    d36 +
                                        "\ncarrier pt\npoints: pt\n"
                                        "\nclosure c36 over pt in div36\n"
                                        "kind: table\n"
                                        "t: [pt=1] -> [pt=1]\n"
                                        "t: [pt=2] -> [pt=2]\n"
                                        "t: [pt=3] -> [pt=6]\n"
                                        "t: [pt=4] -> [pt=4]\n"
                                        "t: [pt=6] -> [pt=18]\n"
                                        "t: [pt=9] -> [pt=9]\n"
                                        "t: [pt=12] -> [pt=36]\n"
                                        "t: [pt=18] -> [pt=36]\n"
                                        "t: [pt=36] -> [pt=36]\n");
        std::string ten = tmp.write(
            "c2-ten.txt", d36 + "\ntensor gcd36 over div36\ndefault: meet\n");
        CliResult opens =
            call_cli({"topology-from-closure", "--closure", clo, "--tensor", ten});
        const std::string want =
            "open: [pt=1]\nopen: [pt=4]\nopen: [pt=9]\nopen: [pt=36]\n";
        if (opens.code != 0 || opens.out != want) {
          log << "unexpected open family (exit " << opens.code << "):\n" << opens.out;
          return false;
        }
        CliResult idem = call_cli({"check-closure", clo, "--check", "idempotent"});
        if (idem.code != 1 || !contains(idem.out, "WITNESS check=idempotent")) {
          log << "expected a reported idempotence failure, got exit " << idem.code
              << "\n" << idem.out;
          return false;
        }
        std::istringstream lines(idem.out);
        std::string line;
        while (std::getline(lines, line))
          if (line.rfind("WITNESS", 0) == 0) log << line << "\n";
        return true;
      });

  // 3 -------------------------------------------------------------------------
  gate.criterion(
      3, "unit-chain roots: degree 1 and the limit are idempotent, the square root is not",
      1000, [&](std::ostream& log) {
        for (int m : {4, 10, 100}) {
          DiscretizedChain chain = DiscretizedChain::make(m);
          ClosureMap first = root_closure(chain, 1);
          ClosureMap square = root_closure(chain, 2);
          ClosureMap limit = root_closure_limit(chain);
          if (!has_property(first, ClosureProperty::kIdempotent)) {
            log << "degree-1 root not idempotent at m=" << m << "\n";
            return false;
          }
          if (!has_property(limit, ClosureProperty::kIdempotent)) {
            log << "limit root not idempotent at m=" << m << "\n";
            return false;
          }
          Report idem = check_idempotent(square);
          if (idem.ok() || !idem.laws().front().witness) {
            log << "square root unexpectedly idempotent at m=" << m << "\n";
            return false;
          }
          log << "m=" << m << " " << idem.laws().front().witness->to_line() << "\n";
        }
        return true;
      });

  // 4 -------------------------------------------------------------------------
  gate.criterion(
      4, "image/preimage adjunction, exhaustive over small carriers, three bases, paired maps",
      30000, [&](std::ostream& log) {
        std::vector<CarrierPtr> xs, ys;
        for (int n = 1; n <= 3; ++n) {
          xs.push_back(carrier_of("X" + std::to_string(n), "x", n));
          ys.push_back(carrier_of("Y" + std::to_string(n), "y", n));
        }
        std::uint64_t fixed_fns = 0;
        for (const LatticePtr& basis : {div12, c2, c4})
          for (const CarrierPtr& x : xs)
            for (const CarrierPtr& y : ys)
              for (const SetFunction& f : all_functions(x, y)) {
                Report r = check_fuzzy_adjunction(f, basis, 4096);
                if (!r.ok()) {
                  log << "fixed-basis adjunction broken for " << f.name()
                      << " over " << basis->name() << "\n";
                  return false;
                }
                ++fixed_fns;
              }
        log << "fixed-basis: every map over every basis passed (" << fixed_fns
            << " maps, each exhausted over both powersets)\n";

        std::mt19937 rng(404);
        std::vector<BasisComorphism> phis;
        phis.push_back(BasisComorphism::identity(div12));
        phis.push_back(BasisComorphism::identity(c4));
        phis.push_back(random_meet_comorphism("mc-c2-div12", c2, div12, rng));
        phis.push_back(random_meet_comorphism("mc-c4-div12", c4, div12, rng));
        phis.push_back(random_meet_comorphism("mc-c2-c4", c2, c4, rng));
        std::uint64_t pair_checks = 0;
        for (const BasisComorphism& phi : phis)
          for (const CarrierPtr& x : xs)
            for (const CarrierPtr& y : ys)
              for (const SetFunction& f : all_functions(x, y))
                if (!pair_adjunction_holds(GroundMorphism(f, phi), pair_checks, log))
                  return false;
        log << "paired maps: " << pair_checks << " (a, b) comparisons across "
            << phis.size() << " distinct basis maps\n";
        return true;
      });

  // 5 -------------------------------------------------------------------------
  gate.criterion(
      5, "tensor-residuum adjunction on divisor monoids and min-chains up to ten elements",
      5000, [&](std::ostream& log) {
        std::vector<std::pair<std::string, TensorPtr>> monoids;
        monoids.emplace_back("gcd12", share(divisor_monoid(12)));
        monoids.emplace_back("gcd36", share(divisor_monoid(36)));
        for (int m = 1; m <= 9; ++m) {
          DiscretizedChain chain = DiscretizedChain::make(m);
          monoids.emplace_back("min" + std::to_string(m), chain.monoid);
        }
        for (const auto& [tag, t] : monoids) {
          if (!check_residuation_law(*t).ok()) {
            log << "residuation law broken on " << tag << "\n";
            return false;
          }
        }
        log << monoids.size() << " monoids, each exhausted over all triples\n";
        return true;
      });

  // 6 -------------------------------------------------------------------------
  gate.criterion(
      6, "image- and preimage-continuity verdicts agree on generated instances",
      60000, [&](std::ostream& log) {
        CarrierPtr x1 = carrier_of("X1", "x", 1), x2 = carrier_of("X2", "x", 2);
        CarrierPtr y1 = carrier_of("Y1", "y", 1), y2 = carrier_of("Y2", "y", 2);
        struct FixedCase {
          Space dom, cod;
        };
        std::vector<FixedCase> fixed = {{{x2, c2}, {y2, c2}},
                                        {{x2, c3}, {y2, c3}},
                                        {{x1, div12}, {y1, div12}},
                                        {{x2, c4}, {y1, c4}}};
        int fixed_done = 0;
        for (int i = 0; i < 200; ++i) {
          const FixedCase& cs = fixed[static_cast<std::size_t>(i) % fixed.size()];
          std::mt19937 rng(6000 + i);
          SetFunction f = random_set_function("f", cs.dom.carrier, cs.cod.carrier, rng);
          ClosureMap cx = random_closure_map(cs.dom, rng, "cx");
          ClosureMap cy = random_closure_map(cs.cod, rng, "cy");
          Report r = check_c_continuity(f, cx, cy);
          const LawResult* agree = r.find("criteria-agree");
          if (!agree || !agree->ok) {
            log << "fixed-basis verdicts split at instance " << i << "\n";
            if (agree && agree->witness) log << agree->witness->to_line() << "\n";
            return false;
          }
          ++fixed_done;
        }

        int vb_done = 0;
        for (int i = 0; i < 200; ++i) {
          std::mt19937 rng(6600 + i);
          GroundMorphism m = [&]() {
            switch (i % 4) {
              case 0:
                return GroundMorphism(
                    random_set_function("f", x2, y2, rng),
                    random_meet_comorphism("phi", c2, c3, rng));
              case 1:
                return GroundMorphism(
                    random_set_function("f", x1, y1, rng),
                    random_meet_comorphism("phi", c2, div12, rng));
              case 2:
                return GroundMorphism(
                    random_set_function("f", x2, y1, rng),
                    random_meet_comorphism("phi", c3, c4, rng));
              default:
                return GroundMorphism(random_set_function("f", x1, y1, rng),
                                      BasisComorphism::identity(div12));
            }
          }();
          ClosureMap cxl = random_closure_map(m.domain_space(), rng, "cxl");
          ClosureMap cym = random_closure_map(m.codomain_space(), rng, "cym");
          Report r = check_vb_continuity(m, cxl, cym);
          const LawResult* agree = r.find("criteria-agree");
          if (!agree || !agree->ok) {
            log << "variable-basis verdicts split at instance " << i << "\n";
            if (agree && agree->witness) log << agree->witness->to_line() << "\n";
            return false;
          }
          ++vb_done;
        }
        log << fixed_done << " fixed-basis and " << vb_done
            << " variable-basis instances, verdicts agreed on every one\n";
        return true;
      });

  // 7 -------------------------------------------------------------------------
  gate.criterion(
      7, "initial operators: axioms, continuity of the map, factorization biconditional",
      120000, [&](std::ostream& log) {
        CarrierPtr x1 = carrier_of("X1", "x", 1), x2 = carrier_of("X2", "x", 2);
        CarrierPtr y1 = carrier_of("Y1", "y", 1), y2 = carrier_of("Y2", "y", 2);
        CarrierPtr z1 = carrier_of("Z1", "z", 1), z2 = carrier_of("Z2", "z", 2);
        struct FixedCase {
          Space dom, cod;
        };
        std::vector<FixedCase> fixed = {{{x2, c2}, {y2, c2}},
                                        {{x1, div12}, {y1, div12}},
                                        {{x2, c3}, {y1, c3}},
                                        {{x2, c4}, {y2, c4}}};
        int fixed_probes = 0;
        for (int i = 0; i < 100; ++i) {
          const FixedCase& cs = fixed[static_cast<std::size_t>(i) % fixed.size()];
          std::mt19937 rng(7000 + i);
          SetFunction f = random_set_function("f", cs.dom.carrier, cs.cod.carrier, rng);
          ClosureMap cy = random_closure_map(cs.cod, rng, "cy");
          ClosureMap init = initial_closure(f, cy);
          if (!check_closure_axioms(init).ok()) {
            log << "initial operator broke an axiom at fixed instance " << i << "\n";
            return false;
          }
          if (!is_continuous(f, init, cy)) {
            log << "map not continuous into its own initial structure, instance " << i
                << "\n";
            return false;
          }
          for (int p = 0; p < 10; ++p) {
            const CarrierPtr& z = (p % 2 == 0) ? z1 : z2;
            SetFunction g = random_set_function("g", z, cs.dom.carrier, rng);
            ClosureMap cz = random_closure_map(Space{z, cs.dom.basis}, rng, "cz");
            if (!check_initial_factorization(f, cy, g, cz).ok()) {
              log << "factorization biconditional broke at fixed instance " << i
                  << ", probe " << p << "\n";
              return false;
            }
            ++fixed_probes;
          }
        }

        int vb_probes = 0;
        for (int i = 0; i < 100; ++i) {
          std::mt19937 rng(7600 + i);
          GroundMorphism m = [&]() {
            switch (i % 3) {
              case 0:
                return GroundMorphism(
                    random_set_function("f", x2, y1, rng),
                    random_meet_comorphism("phi", c2, c3, rng));
              case 1:
                return GroundMorphism(random_set_function("f", x1, y1, rng),
                                      BasisComorphism::identity(div12));
              default:
                return GroundMorphism(
                    random_set_function("f", x2, y2, rng),
                    random_meet_comorphism("phi", c3, c4, rng));
            }
          }();
          ClosureMap cym = random_closure_map(m.codomain_space(), rng, "cym");
          ClosureMap init = initial_vb_closure(m, cym);
          if (!check_closure_axioms(init).ok()) {
            log << "initial operator broke an axiom at paired instance " << i << "\n";
            return false;
          }
          if (!is_vb_continuous(m, init, cym)) {
            log << "morphism not continuous into its own initial structure, instance "
                << i << "\n";
            return false;
          }
          const LatticePtr& l = m.domain_space().basis;
          for (int p = 0; p < 10; ++p) {
            const CarrierPtr& z = (p % 2 == 0) ? z1 : z2;
            BasisComorphism psi = (i % 3 == 1)
                                      ? BasisComorphism::identity(div12)
                                      : random_meet_comorphism("psi", l, div12, rng);
            GroundMorphism probe(random_set_function("g", z, m.fn().domain(), rng),
                                 psi);
            ClosureMap czn =
                random_closure_map(Space{z, psi.target()}, rng, "czn");
            if (!check_vb_initial_factorization(m, cym, probe, czn).ok()) {
              log << "factorization biconditional broke at paired instance " << i
                  << ", probe " << p << "\n";
              return false;
            }
            ++vb_probes;
          }
        }
        log << "100 fixed-basis and 100 paired instances, " << fixed_probes << " + "
            << vb_probes << " factorization probes, all clean\n";
        return true;
      });

  // 8 -------------------------------------------------------------------------
  gate.criterion(
      8, "enumerated closure maps are closed under pointwise join/meet with identity and trivial as the bounds",
      30000, [&](std::ostream& log) {
        CarrierPtr pt = carrier_of("P", "p", 1);
        CarrierPtr two = carrier_of("Q", "q", 2);
        struct SpaceCase {
          std::string tag;
          Space sp;
        };
        std::vector<SpaceCase> cases = {{"two-point/2-chain", {two, c2}},
                                        {"point/div12", {pt, div12}},
                                        {"two-point/3-chain", {two, c3}}};
        for (const SpaceCase& cs : cases) {
          PowersetDomain dom(cs.sp);
          const std::uint64_t n = dom.size();
          std::vector<ClosureMap> maps = enumerate_closure_maps(cs.sp, 16);

          std::vector<std::vector<std::uint64_t>> join_of(n), meet_of(n);
          for (std::uint64_t i = 0; i < n; ++i) {
            join_of[i].resize(n);
            meet_of[i].resize(n);
            for (std::uint64_t j = 0; j < n; ++j) {
              join_of[i][j] = dom.encode(dom.decode(i).join(dom.decode(j)));
              meet_of[i][j] = dom.encode(dom.decode(i).meet(dom.decode(j)));
            }
          }

          std::vector<std::vector<std::uint64_t>> tables;
          tables.reserve(maps.size());
          for (const ClosureMap& c : maps) {
            std::vector<std::uint64_t> tab(n);
            for (std::uint64_t k = 0; k < n; ++k)
              tab[k] = dom.encode(c.apply(dom.decode(k)));
            tables.push_back(std::move(tab));
          }
          std::set<std::vector<std::uint64_t>> index(tables.begin(), tables.end());

          std::vector<std::uint64_t> id_tab(n), triv_tab(n);
          for (std::uint64_t k = 0; k < n; ++k) {
            id_tab[k] = k;
            triv_tab[k] = (k == 0) ? 0 : n - 1;
          }
          if (!index.count(id_tab) || !index.count(triv_tab)) {
            log << cs.tag << ": identity or trivial operator missing\n";
            return false;
          }
          for (const auto& tab : tables)
            for (std::uint64_t k = 0; k < n; ++k)
              if (join_of[id_tab[k]][tab[k]] != tab[k] ||
                  join_of[tab[k]][triv_tab[k]] != triv_tab[k]) {
                log << cs.tag << ": an operator escapes the identity/trivial bounds\n";
                return false;
              }

          std::uint64_t pairs = 0;
          for (std::size_t a = 0; a < tables.size(); ++a)
            for (std::size_t b = a; b < tables.size(); ++b) {
              std::vector<std::uint64_t> jt(n), mt(n);
              for (std::uint64_t k = 0; k < n; ++k) {
                jt[k] = join_of[tables[a][k]][tables[b][k]];
                mt[k] = meet_of[tables[a][k]][tables[b][k]];
              }
              if (!index.count(jt) || !index.count(mt)) {
                log << cs.tag << ": pointwise join or meet of two operators escapes the family\n";
                return false;
              }
              ++pairs;
            }
          log << cs.tag << ": " << maps.size() << " operators, " << pairs
              << " pairs closed under join and meet\n";
        }
        return true;
      });

  // 9 -------------------------------------------------------------------------
  gate.criterion(
      9, "initial operators preserve idempotence and full additivity, fixed and paired",
      120000, [&](std::ostream& log) {
        CarrierPtr x1 = carrier_of("X1", "x", 1), x2 = carrier_of("X2", "x", 2);
        CarrierPtr y1 = carrier_of("Y1", "y", 1), y2 = carrier_of("Y2", "y", 2);
        struct FixedCase {
          Space dom, cod;
        };
        std::vector<FixedCase> fixed = {{{x2, c2}, {y2, c2}},
                                        {{x1, div12}, {y1, div12}},
                                        {{x2, c3}, {y1, c3}},
                                        {{x2, c4}, {y2, c4}}};
        int done = 0;
        for (int i = 0; i < 100; ++i) {
          const FixedCase& cs = fixed[static_cast<std::size_t>(i) % fixed.size()];
          std::mt19937 rng(9000 + i);
          SetFunction f = random_set_function("f", cs.dom.carrier, cs.cod.carrier, rng);
          ClosureMap idem = random_idempotent_closure(cs.cod, rng);
          ClosureMap addv = random_fully_additive_closure(cs.cod, rng);
          Report ri = check_initial_preserves_property(ClosureProperty::kIdempotent, f, idem);
          Report ra =
              check_initial_preserves_property(ClosureProperty::kFullyAdditive, f, addv);
          if (!ri.ok() || !ra.ok() || ri.has_finding() || ra.has_finding()) {
            log << "fixed-basis preservation broke at instance " << i << "\n";
            return false;
          }
          ++done;
        }

        int vb_done = 0;
        for (int i = 0; i < 100; ++i) {
          std::mt19937 rng(9500 + i);
          GroundMorphism m = [&]() {
            switch (i % 3) {
              case 0:
                return GroundMorphism(
                    random_set_function("f", x2, y2, rng),
                    random_meet_comorphism("phi", c2, c3, rng));
              case 1:
                return GroundMorphism(random_set_function("f", x1, y1, rng),
                                      BasisComorphism::identity(div12));
              default:
                return GroundMorphism(
                    random_set_function("f", x2, y1, rng),
                    random_meet_comorphism("phi", c3, c4, rng));
            }
          }();
          ClosureMap idem = random_idempotent_closure(m.codomain_space(), rng);
          ClosureMap addv = random_fully_additive_closure(m.codomain_space(), rng);
          Report ri =
              check_vb_initial_preserves_property(ClosureProperty::kIdempotent, m, idem);
          Report ra = check_vb_initial_preserves_property(ClosureProperty::kFullyAdditive,
                                                          m, addv);
          if (!ri.ok() || !ra.ok() || ri.has_finding() || ra.has_finding()) {
            log << "paired preservation broke at instance " << i << "\n";
            return false;
          }
          ++vb_done;
        }
        log << done << " fixed-basis and " << vb_done
            << " paired instances, idempotence and full additivity both retained\n";
        return true;
      });

  // 10 ------------------------------------------------------------------------
  gate.criterion(
      10, "pointwise pair-forward image equals the brute-force global meet",
      60000, [&](std::ostream& log) {
        CarrierPtr x1 = carrier_of("X1", "x", 1), x2 = carrier_of("X2", "x", 2);
        CarrierPtr y2 = carrier_of("Y2", "y", 2), y3 = carrier_of("Y3", "y", 3);
        LatticePtr dia = diamond();
        std::mt19937 rng(1010);
        BasisComorphism blur("blur", dia, c2, {0, 1, 1, 1});  // breaks binary meets
        BasisComorphism mc_c2_div12 = random_meet_comorphism("mc1", c2, div12, rng);
        BasisComorphism mc_c4_c3 = random_meet_comorphism("mc2", c4, c3, rng);
        BasisComorphism mc_c3_c4 = random_meet_comorphism("mc3", c3, c4, rng);

        struct PairCase {
          CarrierPtr x, y;
          BasisComorphism phi;
        };
        std::vector<PairCase> cases = {{x2, y2, blur},
                                       {x2, y2, BasisComorphism::identity(div12)},
                                       {x2, y2, mc_c2_div12},
                                       {x1, y3, mc_c4_c3},
                                       {x2, y2, mc_c3_c4},
                                       {x1, y3, blur}};
        std::uint64_t compared = 0;
        for (const PairCase& cs : cases)
          for (int seed = 1; seed <= 3; ++seed) {
            std::mt19937 frng(1100 + seed);
            GroundMorphism m(random_set_function("f", cs.x, cs.y, frng), cs.phi);
            PowersetDomain dom(m.domain_space());
            for (std::uint64_t i = 0; i < dom.size(); ++i) {
              FuzzySet a = dom.decode(i);
              if (!(vb_forward(m, a) == brute_pair_forward(m, a))) {
                log << "pointwise image diverges from the global meet along "
                    << m.name() << " at " << a.to_literal() << "\n";
                return false;
              }
              ++compared;
            }
          }
        log << compared << " forward images matched the brute-force meet (includes a meet-breaking basis map)\n";
        return true;
      });

  // 11 ------------------------------------------------------------------------
  gate.criterion(
      11, "identity-comorphism reduction: paired verdicts match the fixed-basis ones",
      0, [&](std::ostream& log) {
        CarrierPtr x1 = carrier_of("X1", "x", 1), x2 = carrier_of("X2", "x", 2);
        CarrierPtr y1 = carrier_of("Y1", "y", 1), y2 = carrier_of("Y2", "y", 2);
        CarrierPtr z2 = carrier_of("Z2", "z", 2);
        struct FixedCase {
          Space dom, cod;
        };
        std::vector<FixedCase> combos = {{{x2, c2}, {y2, c2}},
                                         {{x1, div12}, {y1, div12}},
                                         {{x2, c3}, {y1, c3}},
                                         {{x2, c4}, {y2, c4}}};
        int done = 0;
        for (int i = 0; i < 120; ++i) {
          const FixedCase& cs = combos[static_cast<std::size_t>(i) % combos.size()];
          std::mt19937 rng(11000 + i);
          SetFunction f = random_set_function("f", cs.dom.carrier, cs.cod.carrier, rng);
          GroundMorphism m = GroundMorphism::from_fixed(f, cs.dom.basis);
          ClosureMap cx = random_closure_map(cs.dom, rng, "cx");
          ClosureMap cy = random_closure_map(cs.cod, rng, "cy");

          PowersetDomain dom(cs.dom), cod(cs.cod);
          for (std::uint64_t k = 0; k < dom.size(); ++k) {
            FuzzySet a = dom.decode(k);
            if (!(vb_forward(m, a) == fuzzy_forward(f, a))) {
              log << "forward images differ at instance " << i << "\n";
              return false;
            }
          }
          for (std::uint64_t k = 0; k < cod.size(); ++k) {
            FuzzySet b = cod.decode(k);
            if (!(vb_backward(m, b) == fuzzy_backward(f, b))) {
              log << "backward images differ at instance " << i << "\n";
              return false;
            }
          }

          Report rf = check_c_continuity(f, cx, cy);
          Report rv = check_vb_continuity(m, cx, cy);
          for (const char* law : {"image-criterion", "preimage-criterion"}) {
            const LawResult* a = rf.find(law);
            const LawResult* b = rv.find(law);
            if (!a || !b || a->ok != b->ok) {
              log << "continuity verdict '" << law << "' differs at instance " << i
                  << "\n";
              return false;
            }
          }
          if (is_continuous(f, cx, cy) != is_vb_continuous(m, cx, cy)) {
            log << "overall continuity verdicts differ at instance " << i << "\n";
            return false;
          }

          if (!same_behavior(initial_vb_closure(m, cy), initial_closure(f, cy))) {
            log << "initial operators differ at instance " << i << "\n";
            return false;
          }

          SetFunction g = random_set_function("g", z2, cs.dom.carrier, rng);
          ClosureMap cz = random_closure_map(Space{z2, cs.dom.basis}, rng, "cz");
          GroundMorphism probe = GroundMorphism::from_fixed(g, cs.dom.basis);
          bool fixed_fact = check_initial_factorization(f, cy, g, cz).ok();
          bool vb_fact = check_vb_initial_factorization(m, cy, probe, cz).ok();
          if (fixed_fact != vb_fact) {
            log << "factorization verdicts differ at instance " << i << "\n";
            return false;
          }

          ClosureMap idem = random_idempotent_closure(cs.cod, rng);
          bool fixed_pres =
              check_initial_preserves_property(ClosureProperty::kIdempotent, f, idem)
                  .ok();
          bool vb_pres =
              check_vb_initial_preserves_property(ClosureProperty::kIdempotent, m, idem)
                  .ok();
          if (fixed_pres != vb_pres) {
            log << "preservation verdicts differ at instance " << i << "\n";
            return false;
          }

          InitialLift fixed_lift = initial_lift(cs.dom, {{f, cy}});
          InitialLift vb_lift = initial_vb_lift(cs.dom, {{m, cy}});
          if (!same_behavior(fixed_lift.map, vb_lift.map)) {
            log << "single-leg lifts differ at instance " << i << "\n";
            return false;
          }
          ++done;
        }
        log << done << " instances, every paired verdict equal to its fixed-basis counterpart\n";
        return true;
      });

  return gate.failures();
}

}  // namespace
}  // namespace fuzclose

int main() {
  int failures = fuzclose::run_gate();
  std::cout << "acceptance: " << (11 - failures) << "/11 criteria passed\n";
  return failures;
}
