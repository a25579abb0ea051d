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
// Text formats and the registry that loads them.  A file is a sequence of
// named blocks; a block starts with a header line
//
//   lattice NAME                            carrier NAME
//   tensor NAME over LATTICE                fuzzyset NAME over CARRIER in LATTICE
//   fn NAME: DOM -> COD                     comorph NAME: SRC -> TGT
//   closure NAME over CARRIER in LATTICE    topology NAME over CARRIER in LATTICE
//   ground NAME: fn=FN comorph=COMORPH
//
// followed by "key: ..." body lines (elements:, order-kind:, le:, bottom:,
// top:, tx:, default:, points:, v:, m:, kind:, t:, tensor:, open:).
// '#' starts a comment; blank lines are skipped.  Every name a block refers
// to must already be defined, either earlier in the same file or in a file
// loaded before it.  Loading the same name twice is allowed only when both
// definitions are structurally identical.
//
// Fuzzy sets are written inline as "[p1=e1,p2=e2,...]" with points in any
// order but each point exactly once; "[]" denotes the only set over an
// empty carrier.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzclose/closure.hpp"
#include "fuzclose/comorphism.hpp"
#include "fuzclose/error.hpp"
#include "fuzclose/fuzzy.hpp"
#include "fuzclose/lattice.hpp"
#include "fuzclose/report.hpp"
#include "fuzclose/tensor.hpp"
#include "fuzclose/topology.hpp"
#include "fuzclose/variable.hpp"

namespace fuzclose {

enum class BlockKind {
  kLattice,
  kTensor,
  kCarrier,
  kFuzzySet,
  kFn,
  kComorph,
  kClosure,
  kTopology,
  kGround,
};

inline const char* to_string(BlockKind k) {
  switch (k) {
    case BlockKind::kLattice: return "lattice";
    case BlockKind::kTensor: return "tensor";
    case BlockKind::kCarrier: return "carrier";
    case BlockKind::kFuzzySet: return "fuzzyset";
    case BlockKind::kFn: return "fn";
    case BlockKind::kComorph: return "comorph";
    case BlockKind::kClosure: return "closure";
    case BlockKind::kTopology: return "topology";
    case BlockKind::kGround: return "ground";
  }
  return "unknown";
}

// Enumeration cap, overridable through the FUZCLOSE_CAP environment variable.
inline std::size_t powerset_cap_from_env() {
  if (const char* s = std::getenv("FUZCLOSE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultPowersetCap;
}

namespace detail {

struct SourceLine {
  int number = 0;
  std::string text;
};

inline std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

inline std::vector<SourceLine> preprocess(std::string_view text) {
  std::vector<SourceLine> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw = nl == std::string_view::npos
                               ? text.substr(pos)
                               : text.substr(pos, nl - pos);
    ++number;
    std::string line(raw);
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (!line.empty()) out.push_back(SourceLine{number, std::move(line)});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

[[noreturn]] inline void parse_fail(const std::string& origin, int line,
                                    const std::string& message) {
  throw Error(ErrorCode::ParseError,
              origin + ":" + std::to_string(line) + ": " + message);
}

}  // namespace detail

// Parses "[p1=e1,...]" against a known carrier and basis.
inline FuzzySet parse_fuzzy_literal(std::string_view text, const CarrierPtr& carrier,
                                    const LatticePtr& basis) {
  std::string s = detail::trim(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw Error(ErrorCode::ParseError, "fuzzy-set literal must look like [p=e,...]: " + s);
  s = s.substr(1, s.size() - 2);
  std::vector<ElemId> values(static_cast<std::size_t>(carrier->size()), -1);
  std::size_t pos = 0;
  if (!detail::trim(s).empty()) {
    while (pos <= s.size()) {
      std::size_t comma = s.find(',', pos);
      std::string item = detail::trim(
          comma == std::string::npos ? s.substr(pos) : s.substr(pos, comma - pos));
      std::size_t eq = item.find('=');
      if (eq == std::string::npos)
        throw Error(ErrorCode::ParseError, "fuzzy-set entry needs point=element: " + item);
      std::string point = detail::trim(item.substr(0, eq));
      std::string elem = detail::trim(item.substr(eq + 1));
      auto p = carrier->find(point);
      if (!p)
        throw Error(ErrorCode::ParseError,
                    "carrier '" + carrier->name() + "' has no point '" + point + "'");
      auto e = basis->find(elem);
      if (!e)
        throw Error(ErrorCode::ParseError,
                    "lattice '" + basis->name() + "' has no element '" + elem + "'");
      if (values[static_cast<std::size_t>(*p)] != -1)
        throw Error(ErrorCode::ParseError, "point '" + point + "' assigned twice");
      values[static_cast<std::size_t>(*p)] = *e;
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  for (int i = 0; i < carrier->size(); ++i)
    if (values[static_cast<std::size_t>(i)] == -1)
      throw Error(ErrorCode::ParseError,
                  "fuzzy-set literal misses point '" + carrier->point(i) + "'");
  return FuzzySet(carrier, basis, std::move(values));
}

class Registry {
 public:
  explicit Registry(std::size_t cap = powerset_cap_from_env()) : cap_(cap) {}

  std::size_t cap() const { return cap_; }

  void load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
      throw Error(ErrorCode::ParseError, "cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    load_string(buffer.str(), path);
  }

  void load_string(std::string_view text, const std::string& origin = "<input>") {
    auto lines = detail::preprocess(text);
    std::size_t i = 0;
    while (i < lines.size()) {
      auto head_tokens = detail::split_ws(lines[i].text);
      const std::string& keyword = head_tokens.front();
      std::optional<BlockKind> kind = kind_of(keyword);
      if (!kind)
        detail::parse_fail(origin, lines[i].number,
                           "expected a block header, got '" + keyword + "'");
      std::size_t body_begin = i + 1;
      std::size_t body_end = body_begin;
      while (body_end < lines.size() &&
             !kind_of(detail::split_ws(lines[body_end].text).front()))
        ++body_end;
      std::vector<detail::SourceLine> body(lines.begin() + body_begin,
                                           lines.begin() + body_end);
      dispatch(*kind, origin, lines[i], body);
      i = body_end;
    }
  }

  LatticePtr lattice(const std::string& name) const {
    return fetch(lattices_, name, "lattice");
  }
  TensorPtr tensor(const std::string& name) const {
    return fetch(tensors_, name, "tensor");
  }
  CarrierPtr carrier(const std::string& name) const {
    return fetch(carriers_, name, "carrier");
  }
  const FuzzySet& fuzzyset(const std::string& name) const {
    return fetch_ref(fuzzysets_, name, "fuzzyset");
  }
  const SetFunction& fn(const std::string& name) const {
    return fetch_ref(fns_, name, "fn");
  }
  const BasisComorphism& comorphism(const std::string& name) const {
    return fetch_ref(comorphs_, name, "comorph");
  }
  const ClosureMap& closure(const std::string& name) const {
    return fetch_ref(closures_, name, "closure");
  }
  const LTopology& topology(const std::string& name) const {
    return fetch_ref(topologies_, name, "topology");
  }
  const GroundMorphism& ground(const std::string& name) const {
    return fetch_ref(grounds_, name, "ground");
  }

  // Names of blocks of one kind declared in one origin, in file order.
  std::vector<std::string> declared(BlockKind kind, const std::string& origin) const {
    std::vector<std::string> out;
    for (const auto& d : decls_)
      if (d.kind == kind && d.origin == origin) out.push_back(d.name);
    return out;
  }

  std::string first(BlockKind kind, const std::string& origin) const {
    for (const auto& d : decls_)
      if (d.kind == kind && d.origin == origin) return d.name;
    throw Error(ErrorCode::ParseError,
                "file '" + origin + "' declares no " + std::string(to_string(kind)) +
                    " block");
  }

 private:
  struct Decl {
    std::string origin;
    BlockKind kind;
    std::string name;
  };

  static std::optional<BlockKind> kind_of(const std::string& keyword) {
    if (keyword == "lattice") return BlockKind::kLattice;
    if (keyword == "tensor") return BlockKind::kTensor;
    if (keyword == "carrier") return BlockKind::kCarrier;
    if (keyword == "fuzzyset") return BlockKind::kFuzzySet;
    if (keyword == "fn") return BlockKind::kFn;
    if (keyword == "comorph") return BlockKind::kComorph;
    if (keyword == "closure") return BlockKind::kClosure;
    if (keyword == "topology") return BlockKind::kTopology;
    if (keyword == "ground") return BlockKind::kGround;
    return std::nullopt;
  }

  template <typename Map>
  static typename Map::mapped_type fetch(const Map& map, const std::string& name,
                                         const char* what) {
    auto it = map.find(name);
    if (it == map.end())
      throw Error(ErrorCode::ParseError,
                  std::string("unknown ") + what + " '" + name + "'");
    return it->second;
  }

  template <typename Map>
  static const typename Map::mapped_type& fetch_ref(const Map& map,
                                                    const std::string& name,
                                                    const char* what) {
    auto it = map.find(name);
    if (it == map.end())
      throw Error(ErrorCode::ParseError,
                  std::string("unknown ") + what + " '" + name + "'");
    return it->second;
  }

  void dispatch(BlockKind kind, const std::string& origin,
                const detail::SourceLine& head,
                const std::vector<detail::SourceLine>& body) {
    switch (kind) {
      case BlockKind::kLattice: return parse_lattice(origin, head, body);
      case BlockKind::kTensor: return parse_tensor(origin, head, body);
      case BlockKind::kCarrier: return parse_carrier(origin, head, body);
      case BlockKind::kFuzzySet: return parse_fuzzyset(origin, head, body);
      case BlockKind::kFn: return parse_fn(origin, head, body);
      case BlockKind::kComorph: return parse_comorph(origin, head, body);
      case BlockKind::kClosure: return parse_closure(origin, head, body);
      case BlockKind::kTopology: return parse_topology(origin, head, body);
      case BlockKind::kGround: return parse_ground(origin, head, body);
    }
  }

  // --- header helpers -----------------------------------------------------

  // "NAME over A in B" (with_in) or "NAME over A" (without).
  static void parse_over(const std::string& origin, const detail::SourceLine& head,
                         bool with_in, std::string& name, std::string& a,
                         std::string& b) {
    auto tokens = detail::split_ws(head.text);
    if (with_in) {
      if (tokens.size() != 6 || tokens[2] != "over" || tokens[4] != "in")
        detail::parse_fail(origin, head.number,
                           "expected '" + tokens[0] + " NAME over CARRIER in LATTICE'");
      name = tokens[1];
      a = tokens[3];
      b = tokens[5];
    } else {
      if (tokens.size() != 4 || tokens[2] != "over")
        detail::parse_fail(origin, head.number,
                           "expected '" + tokens[0] + " NAME over LATTICE'");
      name = tokens[1];
      a = tokens[3];
      b.clear();
    }
  }

  // "KEYWORD NAME: LEFT -> RIGHT"
  static void parse_arrow(const std::string& origin, const detail::SourceLine& head,
                          std::string& name, std::string& left, std::string& right) {
    auto tokens = detail::split_ws(head.text);
    std::string rest = head.text.substr(tokens[0].size());
    std::size_t colon = rest.find(':');
    if (colon == std::string::npos)
      detail::parse_fail(origin, head.number,
                         "expected '" + tokens[0] + " NAME: A -> B'");
    name = detail::trim(rest.substr(0, colon));
    std::string arrow = rest.substr(colon + 1);
    std::size_t sep = arrow.find("->");
    if (name.empty() || sep == std::string::npos)
      detail::parse_fail(origin, head.number,
                         "expected '" + tokens[0] + " NAME: A -> B'");
    left = detail::trim(arrow.substr(0, sep));
    right = detail::trim(arrow.substr(sep + 2));
    if (left.empty() || right.empty())
      detail::parse_fail(origin, head.number,
                         "expected '" + tokens[0] + " NAME: A -> B'");
  }

  // Body line "key: rest"; returns false if the line has a different key.
  static bool body_line(const detail::SourceLine& line, const char* key,
                        std::string& rest) {
    auto colon = line.text.find(':');
    if (colon == std::string::npos) return false;
    if (detail::trim(line.text.substr(0, colon)) != key) return false;
    rest = detail::trim(line.text.substr(colon + 1));
    return true;
  }

  [[noreturn]] static void unknown_body(const std::string& origin,
                                        const detail::SourceLine& line,
                                        const char* block) {
    detail::parse_fail(origin, line.number,
                       std::string("unexpected line in a ") + block + " block: '" +
                           line.text + "'");
  }

  // --- block parsers -------------------------------------------------------

  void parse_lattice(const std::string& origin, const detail::SourceLine& head,
                     const std::vector<detail::SourceLine>& body) {
    auto tokens = detail::split_ws(head.text);
    if (tokens.size() != 2)
      detail::parse_fail(origin, head.number, "expected 'lattice NAME'");
    OrderSpec spec;
    spec.name = tokens[1];
    bool kind_seen = false;
    for (const auto& line : body) {
      std::string rest;
      if (body_line(line, "elements", rest)) {
        auto elems = detail::split_ws(rest);
        spec.labels.insert(spec.labels.end(), elems.begin(), elems.end());
      } else if (body_line(line, "order-kind", rest)) {
        if (rest == "covers") spec.kind = OrderKind::kCovers;
        else if (rest == "full") spec.kind = OrderKind::kFull;
        else detail::parse_fail(origin, line.number,
                                "order-kind must be 'covers' or 'full', got '" + rest + "'");
        kind_seen = true;
      } else if (body_line(line, "le", rest)) {
        auto pair = detail::split_ws(rest);
        if (pair.size() != 2)
          detail::parse_fail(origin, line.number, "expected 'le: A B'");
        spec.le_pairs.emplace_back(pair[0], pair[1]);
      } else if (body_line(line, "bottom", rest)) {
        spec.bottom_hint = rest;
      } else if (body_line(line, "top", rest)) {
        spec.top_hint = rest;
      } else {
        unknown_body(origin, line, "lattice");
      }
    }
    (void)kind_seen;
    store(lattices_, origin, BlockKind::kLattice, spec.name,
          share(FiniteLattice::build(spec)),
          [](const LatticePtr& a, const LatticePtr& b) { return *a == *b; });
  }

  void parse_tensor(const std::string& origin, const detail::SourceLine& head,
                    const std::vector<detail::SourceLine>& body) {
    auto tokens = detail::split_ws(head.text);
    if (tokens.size() != 4 || tokens[2] != "over")
      detail::parse_fail(origin, head.number, "expected 'tensor NAME over LATTICE'");
    const std::string& name = tokens[1];
    LatticePtr base = lattice(tokens[3]);
    const int n = base->size();
    bool default_meet = false;
    std::vector<ElemId> table(static_cast<std::size_t>(n) * n, -1);
    for (const auto& line : body) {
      std::string rest;
      if (body_line(line, "default", rest)) {
        if (rest != "meet")
          detail::parse_fail(origin, line.number,
                             "the only supported default is 'meet', got '" + rest + "'");
        default_meet = true;
      } else if (body_line(line, "tx", rest)) {
        auto triple = detail::split_ws(rest);
        if (triple.size() != 3)
          detail::parse_fail(origin, line.number, "expected 'tx: A B C'");
        auto resolve = [&](const std::string& s) -> ElemId {
          auto e = base->find(s);
          if (!e)
            detail::parse_fail(origin, line.number,
                               "lattice '" + base->name() + "' has no element '" + s + "'");
          return *e;
        };
        table[static_cast<std::size_t>(resolve(triple[0])) * n + resolve(triple[1])] =
            resolve(triple[2]);
      } else {
        unknown_body(origin, line, "tensor");
      }
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        ElemId& cell = table[static_cast<std::size_t>(a) * n + b];
        if (cell == -1) {
          if (!default_meet)
            detail::parse_fail(origin, head.number,
                               "tensor '" + name + "' misses entry for (" +
                                   base->label(a) + ", " + base->label(b) +
                                   ") and has no default");
          cell = base->meet(a, b);
        }
      }
    TensorStructure t(name, std::move(base), std::move(table));
    t.classify();
    store(tensors_, origin, BlockKind::kTensor, name, share(std::move(t)),
          [](const TensorPtr& a, const TensorPtr& b) {
            if (!(*a->base() == *b->base())) return false;
            for (int x = 0; x < a->base()->size(); ++x)
              for (int y = 0; y < a->base()->size(); ++y)
                if (a->tensor(x, y) != b->tensor(x, y)) return false;
            return true;
          });
  }

  void parse_carrier(const std::string& origin, const detail::SourceLine& head,
                     const std::vector<detail::SourceLine>& body) {
    auto tokens = detail::split_ws(head.text);
    if (tokens.size() != 2)
      detail::parse_fail(origin, head.number, "expected 'carrier NAME'");
    std::vector<std::string> points;
    for (const auto& line : body) {
      std::string rest;
      if (body_line(line, "points", rest)) {
        auto p = detail::split_ws(rest);
        points.insert(points.end(), p.begin(), p.end());
      } else {
        unknown_body(origin, line, "carrier");
      }
    }
    store(carriers_, origin, BlockKind::kCarrier, tokens[1],
          share(CarrierSet(tokens[1], std::move(points))),
          [](const CarrierPtr& a, const CarrierPtr& b) { return *a == *b; });
  }

  void parse_fuzzyset(const std::string& origin, const detail::SourceLine& head,
                      const std::vector<detail::SourceLine>& body) {
    std::string name, carrier_name, lattice_name;
    parse_over(origin, head, true, name, carrier_name, lattice_name);
    CarrierPtr c = carrier(carrier_name);
    LatticePtr l = lattice(lattice_name);
    std::vector<ElemId> values(static_cast<std::size_t>(c->size()), -1);
    for (const auto& line : body) {
      std::string rest;
      if (!body_line(line, "v", rest)) unknown_body(origin, line, "fuzzyset");
      auto pair = detail::split_ws(rest);
      if (pair.size() != 2)
        detail::parse_fail(origin, line.number, "expected 'v: POINT ELEMENT'");
      auto p = c->find(pair[0]);
      if (!p)
        detail::parse_fail(origin, line.number,
                           "carrier '" + c->name() + "' has no point '" + pair[0] + "'");
      auto e = l->find(pair[1]);
      if (!e)
        detail::parse_fail(origin, line.number,
                           "lattice '" + l->name() + "' has no element '" + pair[1] + "'");
      if (values[static_cast<std::size_t>(*p)] != -1)
        detail::parse_fail(origin, line.number, "point '" + pair[0] + "' assigned twice");
      values[static_cast<std::size_t>(*p)] = *e;
    }
    for (int i = 0; i < c->size(); ++i)
      if (values[static_cast<std::size_t>(i)] == -1)
        detail::parse_fail(origin, head.number,
                           "fuzzyset '" + name + "' misses point '" + c->point(i) + "'");
    store(fuzzysets_, origin, BlockKind::kFuzzySet, name,
          FuzzySet(std::move(c), std::move(l), std::move(values)),
          [](const FuzzySet& a, const FuzzySet& b) { return a == b; });
  }

  void parse_fn(const std::string& origin, const detail::SourceLine& head,
                const std::vector<detail::SourceLine>& body) {
    std::string name, dom_name, cod_name;
    parse_arrow(origin, head, name, dom_name, cod_name);
    CarrierPtr dom = carrier(dom_name);
    CarrierPtr cod = carrier(cod_name);
    std::vector<int> map(static_cast<std::size_t>(dom->size()), -1);
    for (const auto& line : body) {
      std::string rest;
      if (!body_line(line, "m", rest)) unknown_body(origin, line, "fn");
      auto pair = detail::split_ws(rest);
      if (pair.size() != 2)
        detail::parse_fail(origin, line.number, "expected 'm: X Y'");
      auto x = dom->find(pair[0]);
      if (!x)
        detail::parse_fail(origin, line.number,
                           "carrier '" + dom->name() + "' has no point '" + pair[0] + "'");
      auto y = cod->find(pair[1]);
      if (!y)
        detail::parse_fail(origin, line.number,
                           "carrier '" + cod->name() + "' has no point '" + pair[1] + "'");
      if (map[static_cast<std::size_t>(*x)] != -1)
        detail::parse_fail(origin, line.number, "point '" + pair[0] + "' mapped twice");
      map[static_cast<std::size_t>(*x)] = *y;
    }
    for (int i = 0; i < dom->size(); ++i)
      if (map[static_cast<std::size_t>(i)] == -1)
        detail::parse_fail(origin, head.number,
                           "fn '" + name + "' misses point '" + dom->point(i) + "'");
    store(fns_, origin, BlockKind::kFn, name,
          SetFunction(name, std::move(dom), std::move(cod), std::move(map)),
          [](const SetFunction& a, const SetFunction& b) {
            if (!(*a.domain() == *b.domain()) || !(*a.codomain() == *b.codomain()))
              return false;
            for (int x = 0; x < a.domain()->size(); ++x)
              if (a.apply(x) != b.apply(x)) return false;
            return true;
          });
  }

  void parse_comorph(const std::string& origin, const detail::SourceLine& head,
                     const std::vector<detail::SourceLine>& body) {
    std::string name, src_name, tgt_name;
    parse_arrow(origin, head, name, src_name, tgt_name);
    LatticePtr src = lattice(src_name);
    LatticePtr tgt = lattice(tgt_name);
    std::vector<ElemId> map(static_cast<std::size_t>(src->size()), -1);
    for (const auto& line : body) {
      std::string rest;
      if (!body_line(line, "m", rest)) unknown_body(origin, line, "comorph");
      auto pair = detail::split_ws(rest);
      if (pair.size() != 2)
        detail::parse_fail(origin, line.number, "expected 'm: BETA ALPHA'");
      auto b = src->find(pair[0]);
      if (!b)
        detail::parse_fail(origin, line.number,
                           "lattice '" + src->name() + "' has no element '" + pair[0] + "'");
      auto a = tgt->find(pair[1]);
      if (!a)
        detail::parse_fail(origin, line.number,
                           "lattice '" + tgt->name() + "' has no element '" + pair[1] + "'");
      if (map[static_cast<std::size_t>(*b)] != -1)
        detail::parse_fail(origin, line.number, "element '" + pair[0] + "' mapped twice");
      map[static_cast<std::size_t>(*b)] = *a;
    }
    for (int i = 0; i < src->size(); ++i)
      if (map[static_cast<std::size_t>(i)] == -1)
        detail::parse_fail(origin, head.number,
                           "comorph '" + name + "' misses element '" + src->label(i) + "'");
    store(comorphs_, origin, BlockKind::kComorph, name,
          BasisComorphism(name, std::move(src), std::move(tgt), std::move(map)),
          [](const BasisComorphism& a, const BasisComorphism& b) {
            if (!(*a.source() == *b.source()) || !(*a.target() == *b.target()))
              return false;
            for (int x = 0; x < a.source()->size(); ++x)
              if (a.apply(x) != b.apply(x)) return false;
            return true;
          });
  }

  void parse_closure(const std::string& origin, const detail::SourceLine& head,
                     const std::vector<detail::SourceLine>& body) {
    std::string name, carrier_name, lattice_name;
    parse_over(origin, head, true, name, carrier_name, lattice_name);
    Space space{carrier(carrier_name), lattice(lattice_name)};

    std::optional<std::string> kind;
    std::vector<std::pair<FuzzySet, FuzzySet>> rows;
    for (const auto& line : body) {
      std::string rest;
      if (body_line(line, "kind", rest)) {
        kind = rest;
      } else if (body_line(line, "t", rest)) {
        std::size_t sep = rest.find("->");
        if (sep == std::string::npos)
          detail::parse_fail(origin, line.number, "expected 't: [..] -> [..]'");
        try {
          rows.emplace_back(
              parse_fuzzy_literal(detail::trim(rest.substr(0, sep)), space.carrier,
                                  space.basis),
              parse_fuzzy_literal(detail::trim(rest.substr(sep + 2)), space.carrier,
                                  space.basis));
        } catch (const Error& e) {
          detail::parse_fail(origin, line.number, e.what());
        }
      } else {
        unknown_body(origin, line, "closure");
      }
    }
    if (!kind)
      detail::parse_fail(origin, head.number, "closure '" + name + "' needs a kind line");

    ClosureMap built = build_closure(origin, head, name, space, *kind, rows);
    store(closures_, origin, BlockKind::kClosure, name, std::move(built),
          [this](const ClosureMap& a, const ClosureMap& b) {
            return a.space() == b.space() && same_behavior(a, b, cap_);
          });
  }

  ClosureMap build_closure(const std::string& origin, const detail::SourceLine& head,
                           const std::string& name, const Space& space,
                           const std::string& kind,
                           const std::vector<std::pair<FuzzySet, FuzzySet>>& rows) {
    auto tokens = detail::split_ws(kind);
    if (tokens.size() == 1 && tokens[0] == "identity")
      return ClosureMap::identity(space).renamed(name);
    if (tokens.size() == 1 && tokens[0] == "trivial")
      return ClosureMap::trivial(space).renamed(name);
    if (tokens.size() == 1 && tokens[0] == "table") {
      PowersetDomain dom(space);
      if (dom.saturated() || dom.size() > 1000000)
        detail::parse_fail(origin, head.number,
                           "table closure '" + name + "' needs more rows than is sensible");
      std::vector<std::uint64_t> table(dom.size(), dom.size());
      for (const auto& [from, to] : rows) {
        std::uint64_t code = dom.encode(from);
        if (table[code] != dom.size())
          detail::parse_fail(origin, head.number,
                             "closure '" + name + "' maps " + from.to_literal() + " twice");
        table[code] = dom.encode(to);
      }
      for (std::uint64_t code = 0; code < dom.size(); ++code)
        if (table[code] == dom.size())
          detail::parse_fail(origin, head.number,
                             "closure '" + name + "' misses a row for " +
                                 dom.decode(code).to_literal());
      return ClosureMap::from_table(space, name, std::move(table));
    }
    if (tokens.size() == 2 && tokens[0] == "topology") {
      const LTopology& tau = topology(tokens[1]);
      if (!(Space{tau.carrier, tau.basis} == space))
        detail::parse_fail(origin, head.number,
                           "topology '" + tokens[1] + "' lives on a different space");
      if (!tau.tensor)
        detail::parse_fail(origin, head.number,
                           "topology '" + tokens[1] + "' carries no tensor line");
      return closure_from_topology(tau, cap_).renamed(name);
    }
    detail::parse_fail(origin, head.number,
                       "closure kind must be identity, trivial, table, or 'topology NAME', got '" +
                           kind + "'");
  }

  void parse_topology(const std::string& origin, const detail::SourceLine& head,
                      const std::vector<detail::SourceLine>& body) {
    std::string name, carrier_name, lattice_name;
    parse_over(origin, head, true, name, carrier_name, lattice_name);
    LTopology tau;
    tau.name = name;
    tau.carrier = carrier(carrier_name);
    tau.basis = lattice(lattice_name);
    for (const auto& line : body) {
      std::string rest;
      if (body_line(line, "tensor", rest)) {
        tau.tensor = tensor(rest);
        if (!(*tau.tensor->base() == *tau.basis))
          detail::parse_fail(origin, line.number,
                             "tensor '" + rest + "' is not over lattice '" +
                                 tau.basis->name() + "'");
      } else if (body_line(line, "open", rest)) {
        try {
          tau.opens.push_back(parse_fuzzy_literal(rest, tau.carrier, tau.basis));
        } catch (const Error& e) {
          detail::parse_fail(origin, line.number, e.what());
        }
      } else {
        unknown_body(origin, line, "topology");
      }
    }
    store(topologies_, origin, BlockKind::kTopology, name, std::move(tau),
          [](const LTopology& a, const LTopology& b) {
            return *a.carrier == *b.carrier && *a.basis == *b.basis &&
                   a.opens == b.opens;
          });
  }

  void parse_ground(const std::string& origin, const detail::SourceLine& head,
                    const std::vector<detail::SourceLine>& body) {
    auto tokens = detail::split_ws(head.text);
    std::string rest = head.text.substr(tokens[0].size());
    std::size_t colon = rest.find(':');
    if (colon == std::string::npos)
      detail::parse_fail(origin, head.number,
                         "expected 'ground NAME: fn=FN comorph=COMORPH'");
    std::string name = detail::trim(rest.substr(0, colon));
    std::optional<std::string> fn_name, comorph_name;
    for (const std::string& tok : detail::split_ws(rest.substr(colon + 1))) {
      std::size_t eq = tok.find('=');
      if (eq == std::string::npos)
        detail::parse_fail(origin, head.number, "expected key=value, got '" + tok + "'");
      std::string key = tok.substr(0, eq);
      std::string value = tok.substr(eq + 1);
      if (key == "fn") fn_name = value;
      else if (key == "comorph") comorph_name = value;
      else detail::parse_fail(origin, head.number, "unknown key '" + key + "'");
    }
    if (name.empty() || !fn_name || !comorph_name)
      detail::parse_fail(origin, head.number,
                         "expected 'ground NAME: fn=FN comorph=COMORPH'");
    for (const auto& line : body) unknown_body(origin, line, "ground");
    store(grounds_, origin, BlockKind::kGround, name,
          GroundMorphism(fn(*fn_name), comorphism(*comorph_name)),
          [](const GroundMorphism& a, const GroundMorphism& b) {
            return a.name() == b.name();
          });
  }

  template <typename Map, typename Value, typename Equal>
  void store(Map& map, const std::string& origin, BlockKind kind,
             const std::string& name, Value value, Equal equal) {
    auto it = map.find(name);
    if (it != map.end()) {
      if (!equal(it->second, value))
        throw Error(ErrorCode::ParseError,
                    "conflicting redefinition of " + std::string(to_string(kind)) +
                        " '" + name + "' in '" + origin + "'");
    } else {
      map.emplace(name, std::move(value));
    }
    decls_.push_back(Decl{origin, kind, name});
  }

  std::size_t cap_;
  std::map<std::string, LatticePtr> lattices_;
  std::map<std::string, TensorPtr> tensors_;
  std::map<std::string, CarrierPtr> carriers_;
  std::map<std::string, FuzzySet> fuzzysets_;
  std::map<std::string, SetFunction> fns_;
  std::map<std::string, BasisComorphism> comorphs_;
  std::map<std::string, ClosureMap> closures_;
  std::map<std::string, LTopology> topologies_;
  std::map<std::string, GroundMorphism> grounds_;
  std::vector<Decl> decls_;
};

// --- emitters ---------------------------------------------------------------

// Writes the full relation so the block re-parses without cover inference.
inline void emit_lattice_block(std::ostream& out, const FiniteLattice& lat) {
  out << "lattice " << lat.name() << "\n";
  out << "elements:";
  for (int i = 0; i < lat.size(); ++i) out << ' ' << lat.label(i);
  out << "\n";
  out << "order-kind: full\n";
  for (int a = 0; a < lat.size(); ++a)
    for (int b = 0; b < lat.size(); ++b)
      if (a != b && lat.leq(a, b))
        out << "le: " << lat.label(a) << ' ' << lat.label(b) << "\n";
  out << "bottom: " << lat.label(lat.bottom()) << "\n";
  out << "top: " << lat.label(lat.top()) << "\n";
}

inline void emit_carrier_block(std::ostream& out, const CarrierSet& carrier) {
  out << "carrier " << carrier.name() << "\n";
  out << "points:";
  for (int i = 0; i < carrier.size(); ++i) out << ' ' << carrier.point(i);
  out << "\n";
}

// Emits a table block covering the whole powerset, in canonical code order.
inline void emit_closure_block(std::ostream& out, const ClosureMap& c,
                               std::size_t cap = kDefaultPowersetCap) {
  PowersetDomain dom(c.space());
  if (dom.saturated() || dom.size() > cap)
    throw Error(ErrorCode::CapExceeded,
                "operator table on " + c.space().describe() + " exceeds the cap");
  out << "closure " << c.name() << " over " << c.space().carrier->name() << " in "
      << c.space().basis->name() << "\n";
  out << "kind: table\n";
  for (std::uint64_t code = 0; code < dom.size(); ++code) {
    FuzzySet u = dom.decode(code);
    out << "t: " << u.to_literal() << " -> " << c.apply(u).to_literal() << "\n";
  }
}

// Lattice + carrier + table: a self-contained, re-loadable description.
inline void emit_closure_bundle(std::ostream& out, const ClosureMap& c,
                                std::size_t cap = kDefaultPowersetCap) {
  emit_lattice_block(out, *c.space().basis);
  out << "\n";
  emit_carrier_block(out, *c.space().carrier);
  out << "\n";
  emit_closure_block(out, c, cap);
}

inline void emit_topology_block(std::ostream& out, const LTopology& tau) {
  out << "topology " << tau.name << " over " << tau.carrier->name() << " in "
      << tau.basis->name() << "\n";
  if (tau.tensor) out << "tensor: " << tau.tensor->name() << "\n";
  for (const FuzzySet& open : tau.opens) out << "open: " << open.to_literal() << "\n";
}

// Prints one line per law plus a WITNESS line per failure; returns report.ok().
inline bool print_report(std::ostream& out, const std::string& subject,
                         const Report& report) {
  for (const LawResult& law : report.laws()) {
    out << (law.ok ? "[PASS] " : "[FAIL] ") << subject << ": " << law.law << "\n";
    if (!law.ok && law.witness) {
      Witness w = *law.witness;
      w.bindings.insert(w.bindings.begin(), {"check", law.law});
      out << w.to_line() << "\n";
    }
  }
  return report.ok();
}

}  // namespace fuzclose
