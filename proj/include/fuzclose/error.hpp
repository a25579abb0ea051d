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

#include <stdexcept>
#include <string>

namespace fuzclose {

enum class ErrorCode {
  NotAPoset,
  NoJoin,
  NoMeet,
  NoBoundedElement,
  DuplicateLabel,
  ForeignElement,
  ForeignPoint,
  CarrierMismatch,
  SpaceMismatch,
  CompositionMismatch,
  CapExceeded,
  EmptySource,
  NotGLMonoid,
  InvalidN,
  PreconditionFailed,
  PropertyPreconditionFailed,
  ParseError,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAPoset: return "NotAPoset";
    case ErrorCode::NoJoin: return "NoJoin";
    case ErrorCode::NoMeet: return "NoMeet";
    case ErrorCode::NoBoundedElement: return "NoBoundedElement";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::ForeignElement: return "ForeignElement";
    case ErrorCode::ForeignPoint: return "ForeignPoint";
    case ErrorCode::CarrierMismatch: return "CarrierMismatch";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::CompositionMismatch: return "CompositionMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::EmptySource: return "EmptySource";
    case ErrorCode::NotGLMonoid: return "NotGLMonoid";
    case ErrorCode::InvalidN: return "InvalidN";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::PropertyPreconditionFailed: return "PropertyPreconditionFailed";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fuzclose
