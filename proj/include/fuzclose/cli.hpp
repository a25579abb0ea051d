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
// Command-line front-end.  Exit codes: 0 all requested checks passed, 1 a
// requested check failed (counterexamples go to standard output as WITNESS
// lines), 2 parse or usage error.  The environment variable FUZCLOSE_CAP
// overrides the default enumeration cap.

#pragma once

#include <cstdint>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "fuzclose/closure.hpp"
#include "fuzclose/comorphism.hpp"
#include "fuzclose/error.hpp"
#include "fuzclose/examples.hpp"
#include "fuzclose/fuzzy.hpp"
#include "fuzclose/io.hpp"
#include "fuzclose/lattice.hpp"
#include "fuzclose/report.hpp"
#include "fuzclose/tensor.hpp"
#include "fuzclose/topology.hpp"
#include "fuzclose/variable.hpp"

namespace fuzclose {
namespace detail {

// "c: LITERAL -> LITERAL" rows in canonical enumeration order.
inline void emit_operator_rows(std::ostream& out, const ClosureMap& c,
                               std::size_t cap) {
  PowersetDomain dom(c.space());
  if (dom.saturated() || dom.size() > cap)
    throw Error(ErrorCode::CapExceeded,
                "operator table on " + c.space().describe() + " exceeds the cap");
  for (std::uint64_t code = 0; code < dom.size(); ++code) {
    FuzzySet u = dom.decode(code);
    out << "c: " << u.to_literal() << " -> " << c.apply(u).to_literal() << "\n";
  }
}

inline ClosureProperty property_from_flag(const std::string& flag) {
  if (flag == "idempotent") return ClosureProperty::kIdempotent;
  if (flag == "additive") return ClosureProperty::kAdditive;
  if (flag == "fully-additive") return ClosureProperty::kFullyAdditive;
  throw Error(ErrorCode::ParseError, "unknown property '" + flag + "'");
}

// Distinct names of all blocks of one kind, in load order across files.
inline std::vector<std::string> names_across(const Registry& reg, BlockKind kind,
                                             const std::vector<std::string>& files,
                                             const char* what) {
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (const std::string& file : files)
    for (const std::string& name : reg.declared(kind, file))
      if (seen.insert(name).second) names.push_back(name);
  if (names.empty())
    throw Error(ErrorCode::ParseError,
                std::string("the given files declare no ") + what + " block");
  return names;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  const std::size_t cap = powerset_cap_from_env();
  int rc = 0;

  CLI::App app{"finite-model toolkit for lattice-valued closure operators"};
  app.require_subcommand(1);

  // check-lattice -------------------------------------------------------------
  auto* cmd_lat = app.add_subcommand(
      "check-lattice", "verify the lattice laws for every lattice block");
  std::vector<std::string> lat_files;
  bool lat_frame = false;
  cmd_lat->add_option("files", lat_files, "definition files")->required();
  cmd_lat->add_flag("--frame", lat_frame,
                    "also report the infinite distributive laws");
  cmd_lat->callback([&]() {
    bool all = true;
    for (const std::string& file : lat_files) {
      Registry reg(cap);
      try {
        reg.load_file(file);
      } catch (const Error& e) {
        switch (e.code()) {
          case ErrorCode::NotAPoset:
          case ErrorCode::NoJoin:
          case ErrorCode::NoMeet:
          case ErrorCode::NoBoundedElement:
          case ErrorCode::DuplicateLabel:
            out << "[FAIL] " << file << ": lattice construction\n";
            out << "WITNESS error=" << to_string(e.code()) << "\n";
            out << e.what() << "\n";
            all = false;
            continue;
          default:
            throw;
        }
      }
      for (const std::string& name :
           detail::names_across(reg, BlockKind::kLattice, {file}, "lattice")) {
        const FiniteLattice& lat = *reg.lattice(name);
        all &= print_report(out, "lattice '" + name + "'", check_lattice_laws(lat));
        if (lat_frame)
          all &= print_report(out, "lattice '" + name + "'",
                              check_frame_distributivity(lat));
      }
    }
    if (!all) rc = 1;
  });

  // check-cqm ------------------------------------------------------------------
  auto* cmd_cqm = app.add_subcommand(
      "check-cqm", "verify isotonicity and top-idempotence for every tensor block");
  std::vector<std::string> cqm_files;
  cmd_cqm->add_option("files", cqm_files, "definition files")->required();
  cmd_cqm->callback([&]() {
    Registry reg(cap);
    for (const std::string& file : cqm_files) reg.load_file(file);
    bool all = true;
    for (const std::string& name :
         detail::names_across(reg, BlockKind::kTensor, cqm_files, "tensor"))
      all &= print_report(out, "tensor '" + name + "'", check_cqm(*reg.tensor(name)));
    if (!all) rc = 1;
  });

  // check-gl -------------------------------------------------------------------
  auto* cmd_gl = app.add_subcommand(
      "check-gl", "verify the full residuated-monoid laws for every tensor block");
  std::vector<std::string> gl_files;
  cmd_gl->add_option("files", gl_files, "definition files")->required();
  cmd_gl->callback([&]() {
    Registry reg(cap);
    for (const std::string& file : gl_files) reg.load_file(file);
    bool all = true;
    for (const std::string& name :
         detail::names_across(reg, BlockKind::kTensor, gl_files, "tensor")) {
      const TensorStructure& t = *reg.tensor(name);
      Report merged = check_cqm(t);
      merged.merge(check_gl_monoid(t));
      merged.merge(check_residuation_law(t));
      all &= print_report(out, "tensor '" + name + "'", merged);
    }
    if (!all) rc = 1;
  });

  // residuum -------------------------------------------------------------------
  auto* cmd_res = app.add_subcommand(
      "residuum", "print residuum values of the first tensor block in the file");
  std::string res_file;
  bool res_table = false, res_law = false;
  std::vector<std::string> res_of;
  cmd_res->add_option("file", res_file, "definition file")->required();
  cmd_res->add_flag("--table", res_table, "print the full residuum table");
  cmd_res->add_option("--of", res_of, "print one value: --of A B")->expected(2);
  cmd_res->add_flag("--law", res_law, "check the adjunction law");
  cmd_res->callback([&]() {
    Registry reg(cap);
    reg.load_file(res_file);
    const TensorStructure& t = *reg.tensor(reg.first(BlockKind::kTensor, res_file));
    const FiniteLattice& lat = *t.base();
    bool printed = false;
    if (res_of.size() == 2) {
      ElemId a = lat.require_label(res_of[0]);
      ElemId b = lat.require_label(res_of[1]);
      out << "res: " << lat.label(a) << ' ' << lat.label(b) << ' '
          << lat.label(t.residuum(a, b)) << "\n";
      printed = true;
    }
    if (res_law) {
      if (!print_report(out, "tensor '" + t.name() + "'", check_residuation_law(t)))
        rc = 1;
      printed = true;
    }
    if (res_table || !printed)
      for (ElemId a = 0; a < lat.size(); ++a)
        for (ElemId b = 0; b < lat.size(); ++b)
          out << "res: " << lat.label(a) << ' ' << lat.label(b) << ' '
              << lat.label(t.residuum(a, b)) << "\n";
  });

  // closure-from-topology --------------------------------------------------------
  auto* cmd_cft = app.add_subcommand(
      "closure-from-topology", "build the operator induced by an open family");
  std::string cft_lattice, cft_tensor, cft_space, cft_topology;
  bool cft_emit = false;
  cmd_cft->add_option("--lattice", cft_lattice, "file with the basis lattice")->required();
  cmd_cft->add_option("--tensor", cft_tensor, "file with the tensor")->required();
  cmd_cft->add_option("--space", cft_space, "file with the carrier")->required();
  cmd_cft->add_option("--topology", cft_topology, "file with the open family")->required();
  cmd_cft->add_flag("--emit", cft_emit, "print the operator table");
  cmd_cft->callback([&]() {
    Registry reg(cap);
    for (const std::string& file : {cft_lattice, cft_tensor, cft_space, cft_topology})
      reg.load_file(file);
    LTopology tau = reg.topology(reg.first(BlockKind::kTopology, cft_topology));
    LatticePtr lat = reg.lattice(reg.first(BlockKind::kLattice, cft_lattice));
    CarrierPtr car = reg.carrier(reg.first(BlockKind::kCarrier, cft_space));
    if (!(*tau.basis == *lat))
      throw Error(ErrorCode::SpaceMismatch,
                  "topology '" + tau.name + "' is not over the --lattice lattice");
    if (!(*tau.carrier == *car))
      throw Error(ErrorCode::SpaceMismatch,
                  "topology '" + tau.name + "' is not over the --space carrier");
    if (!tau.tensor) tau.tensor = reg.tensor(reg.first(BlockKind::kTensor, cft_tensor));
    ClosureMap c = closure_from_topology(tau, cap);
    bool ok = print_report(out, "operator '" + c.name() + "'",
                           check_closure_axioms(c, cap));
    if (cft_emit) detail::emit_operator_rows(out, c, cap);
    if (!ok) rc = 1;
  });

  // topology-from-closure ---------------------------------------------------------
  auto* cmd_tfc = app.add_subcommand(
      "topology-from-closure", "recover the open family from an operator's fixed points");
  std::string tfc_closure, tfc_tensor;
  bool tfc_emit = false;
  cmd_tfc->add_option("--closure", tfc_closure, "file with the operator")->required();
  cmd_tfc->add_option("--tensor", tfc_tensor, "file with the tensor")->required();
  cmd_tfc->add_flag("--emit", tfc_emit, "print a reloadable topology block");
  cmd_tfc->callback([&]() {
    Registry reg(cap);
    reg.load_file(tfc_closure);
    reg.load_file(tfc_tensor);
    const ClosureMap& c = reg.closure(reg.first(BlockKind::kClosure, tfc_closure));
    TensorPtr t = reg.tensor(reg.first(BlockKind::kTensor, tfc_tensor));
    LTopology tau = topology_from_closure(c, std::move(t), cap);
    if (tfc_emit) {
      emit_topology_block(out, tau);
    } else {
      for (const FuzzySet& open : tau.opens)
        out << "open: " << open.to_literal() << "\n";
    }
  });

  // check-closure -------------------------------------------------------------
  auto* cmd_cc = app.add_subcommand(
      "check-closure", "check the axioms (or one property) of every closure block");
  std::vector<std::string> cc_files;
  std::string cc_check = "axioms";
  cmd_cc->add_option("files", cc_files, "definition files")->required();
  cmd_cc->add_option("--check", cc_check, "axioms|idempotent|additive|fully-additive")
      ->check(CLI::IsMember({"axioms", "idempotent", "additive", "fully-additive"}));
  cmd_cc->callback([&]() {
    Registry reg(cap);
    for (const std::string& file : cc_files) reg.load_file(file);
    bool all = true;
    for (const std::string& name :
         detail::names_across(reg, BlockKind::kClosure, cc_files, "closure")) {
      const ClosureMap& c = reg.closure(name);
      Report r = cc_check == "axioms"
                     ? check_closure_axioms(c, cap)
                     : check_property(c, detail::property_from_flag(cc_check), cap);
      all &= print_report(out, "closure '" + name + "'", r);
    }
    if (!all) rc = 1;
  });

  // check-continuity ------------------------------------------------------------
  auto* cmd_cont = app.add_subcommand(
      "check-continuity", "check a map between two operator-equipped spaces");
  std::string cont_fn, cont_cx, cont_cy;
  cmd_cont->add_option("--fn", cont_fn, "file with the map")->required();
  cmd_cont->add_option("--cx", cont_cx, "file with the domain operator")->required();
  cmd_cont->add_option("--cy", cont_cy, "file with the codomain operator")->required();
  cmd_cont->callback([&]() {
    Registry reg(cap);
    for (const std::string& file : {cont_fn, cont_cx, cont_cy}) reg.load_file(file);
    const SetFunction& f = reg.fn(reg.first(BlockKind::kFn, cont_fn));
    const ClosureMap& cx = reg.closure(reg.first(BlockKind::kClosure, cont_cx));
    const ClosureMap& cy = reg.closure(reg.first(BlockKind::kClosure, cont_cy));
    if (!print_report(out, "fn '" + f.name() + "'", check_c_continuity(f, cx, cy, cap)))
      rc = 1;
  });

  // check-vb-continuity ----------------------------------------------------------
  auto* cmd_vcont = app.add_subcommand(
      "check-vb-continuity", "check a morphism between spaces over different bases");
  std::string vcont_ground, vcont_cxl, vcont_cym;
  cmd_vcont->add_option("--ground", vcont_ground, "file with the ground morphism")->required();
  cmd_vcont->add_option("--cxl", vcont_cxl, "file with the domain operator")->required();
  cmd_vcont->add_option("--cym", vcont_cym, "file with the codomain operator")->required();
  cmd_vcont->callback([&]() {
    Registry reg(cap);
    for (const std::string& file : {vcont_ground, vcont_cxl, vcont_cym})
      reg.load_file(file);
    const GroundMorphism& m = reg.ground(reg.first(BlockKind::kGround, vcont_ground));
    const ClosureMap& cxl = reg.closure(reg.first(BlockKind::kClosure, vcont_cxl));
    const ClosureMap& cym = reg.closure(reg.first(BlockKind::kClosure, vcont_cym));
    if (!print_report(out, "morphism " + m.name(), check_vb_continuity(m, cxl, cym, cap)))
      rc = 1;
  });

  // initial ---------------------------------------------------------------------
  auto* cmd_init = app.add_subcommand(
      "initial", "build the initial operator along a map into an operator-equipped space");
  std::string init_fn, init_cy;
  bool init_emit = false;
  cmd_init->add_option("--fn", init_fn, "file with the map")->required();
  cmd_init->add_option("--cy", init_cy, "file with the codomain operator")->required();
  cmd_init->add_flag("--emit", init_emit, "print the operator table");
  cmd_init->callback([&]() {
    Registry reg(cap);
    reg.load_file(init_fn);
    reg.load_file(init_cy);
    const SetFunction& f = reg.fn(reg.first(BlockKind::kFn, init_fn));
    const ClosureMap& cy = reg.closure(reg.first(BlockKind::kClosure, init_cy));
    ClosureMap init = initial_closure(f, cy, cap);
    bool ok = print_report(out, "operator '" + init.name() + "'",
                           check_closure_axioms(init, cap));
    ok &= print_report(out, "fn '" + f.name() + "'",
                       check_c_continuity(f, init, cy, cap));
    if (init_emit) detail::emit_operator_rows(out, init, cap);
    if (!ok) rc = 1;
  });

  // initial-vb --------------------------------------------------------------------
  auto* cmd_vinit = app.add_subcommand(
      "initial-vb", "build the initial operator along a ground morphism");
  std::string vinit_ground, vinit_cym;
  bool vinit_emit = false;
  cmd_vinit->add_option("--ground", vinit_ground, "file with the ground morphism")->required();
  cmd_vinit->add_option("--cym", vinit_cym, "file with the codomain operator")->required();
  cmd_vinit->add_flag("--emit", vinit_emit, "print the operator table");
  cmd_vinit->callback([&]() {
    Registry reg(cap);
    reg.load_file(vinit_ground);
    reg.load_file(vinit_cym);
    const GroundMorphism& m = reg.ground(reg.first(BlockKind::kGround, vinit_ground));
    const ClosureMap& cym = reg.closure(reg.first(BlockKind::kClosure, vinit_cym));
    ClosureMap init = initial_vb_closure(m, cym, cap);
    bool ok = print_report(out, "operator '" + init.name() + "'",
                           check_closure_axioms(init, cap));
    ok &= print_report(out, "morphism " + m.name(),
                       check_vb_continuity(m, init, cym, cap));
    if (vinit_emit) detail::emit_operator_rows(out, init, cap);
    if (!ok) rc = 1;
  });

  // lift ----------------------------------------------------------------------
  auto* cmd_lift = app.add_subcommand(
      "lift", "join of initial operators over a family of maps out of one carrier");
  std::vector<std::string> lift_sources;
  std::string lift_space, lift_lattice;
  bool lift_emit = false;
  cmd_lift->add_option("--source", lift_sources,
                       "file with one leg: its first fn and first closure block");
  cmd_lift->add_option("--space", lift_space, "carrier file, for an empty family");
  cmd_lift->add_option("--lattice", lift_lattice, "lattice file, for an empty family");
  cmd_lift->add_flag("--emit", lift_emit, "print the operator table");
  cmd_lift->callback([&]() {
    Registry reg(cap);
    for (const std::string& file : lift_sources) reg.load_file(file);
    std::vector<std::pair<SetFunction, ClosureMap>> legs;
    for (const std::string& file : lift_sources)
      legs.emplace_back(reg.fn(reg.first(BlockKind::kFn, file)),
                        reg.closure(reg.first(BlockKind::kClosure, file)));
    InitialLift lifted = [&]() {
      if (legs.empty()) {
        if (lift_space.empty() || lift_lattice.empty())
          throw Error(ErrorCode::EmptySource,
                      "an empty source family needs --space and --lattice");
        reg.load_file(lift_space);
        reg.load_file(lift_lattice);
        Space sp{reg.carrier(reg.first(BlockKind::kCarrier, lift_space)),
                 reg.lattice(reg.first(BlockKind::kLattice, lift_lattice))};
        return initial_lift(std::move(sp), {}, cap);
      }
      Space sp{legs.front().first.domain(), legs.front().second.space().basis};
      return initial_lift(std::move(sp), legs, cap);
    }();
    if (lifted.empty_source)
      out << "note: empty source family, the lift is the discrete operator\n";
    bool ok = print_report(out, "operator '" + lifted.map.name() + "'",
                           check_closure_axioms(lifted.map, cap));
    for (const auto& [fn, cy] : legs)
      ok &= print_report(out, "fn '" + fn.name() + "'",
                         check_c_continuity(fn, lifted.map, cy, cap));
    if (lift_emit) detail::emit_operator_rows(out, lifted.map, cap);
    if (!ok) rc = 1;
  });

  // props -----------------------------------------------------------------------
  auto* cmd_props = app.add_subcommand(
      "props", "check one property of every closure block in the files");
  std::vector<std::string> props_files;
  std::string props_check;
  cmd_props->add_option("files", props_files, "definition files")->required();
  cmd_props->add_option("--check", props_check, "idempotent|additive|fully-additive")
      ->required()
      ->check(CLI::IsMember({"idempotent", "additive", "fully-additive"}));
  cmd_props->callback([&]() {
    Registry reg(cap);
    for (const std::string& file : props_files) reg.load_file(file);
    bool all = true;
    for (const std::string& name :
         detail::names_across(reg, BlockKind::kClosure, props_files, "closure"))
      all &= print_report(
          out, "closure '" + name + "'",
          check_property(reg.closure(name), detail::property_from_flag(props_check), cap));
    if (!all) rc = 1;
  });

  // examples --------------------------------------------------------------------
  auto* cmd_ex = app.add_subcommand("examples", "built-in worked examples");
  cmd_ex->require_subcommand(1);
  auto* cmd_ex_run = cmd_ex->add_subcommand(
      "run-paper", "recompute the worked examples and diff against golden tables");
  cmd_ex_run->callback([&]() {
    if (!run_builtin_examples(out)) rc = 1;
  });

  // parse ---------------------------------------------------------------------
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("fuzclose");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

}  // namespace fuzclose
