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

#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace fuzclose {

// A witness is a set of key/value bindings that pin down a concrete
// counterexample (element labels, fuzzy-set literals, law names).  It prints
// as a single machine-parseable line: "WITNESS k1=v1 k2=v2 ...".
struct Witness {
  std::vector<std::pair<std::string, std::string>> bindings;

  Witness& bind(std::string key, std::string value) {
    bindings.emplace_back(std::move(key), std::move(value));
    return *this;
  }

  std::string to_line() const {
    std::ostringstream os;
    os << "WITNESS";
    for (const auto& [k, v] : bindings) os << ' ' << k << '=' << v;
    return os.str();
  }
};

// Outcome of checking one named law on one instance.  `finding` marks a
// failure that contradicts a statement expected to hold universally (as
// opposed to a property that can legitimately fail on a given instance).
struct LawResult {
  std::string law;
  bool ok = true;
  std::optional<Witness> witness;
  bool finding = false;
};

class Report {
 public:
  void add_pass(std::string law) {
    laws_.push_back(LawResult{std::move(law), true, std::nullopt, false});
  }

  void add_fail(std::string law, Witness witness, bool finding = false) {
    laws_.push_back(LawResult{std::move(law), false, std::move(witness), finding});
  }

  void add(LawResult result) { laws_.push_back(std::move(result)); }

  // Appends every law of `other`, optionally namespacing with a prefix.
  void merge(const Report& other, const std::string& prefix = "") {
    for (const auto& law : other.laws_) {
      LawResult copy = law;
      if (!prefix.empty()) copy.law = prefix + "." + copy.law;
      laws_.push_back(std::move(copy));
    }
  }

  bool ok() const {
    for (const auto& law : laws_)
      if (!law.ok) return false;
    return true;
  }

  bool has_finding() const {
    for (const auto& law : laws_)
      if (!law.ok && law.finding) return true;
    return false;
  }

  const std::vector<LawResult>& laws() const { return laws_; }

  const LawResult* find(const std::string& law) const {
    for (const auto& result : laws_)
      if (result.law == law) return &result;
    return nullptr;
  }

 private:
  std::vector<LawResult> laws_;
};

}  // namespace fuzclose
