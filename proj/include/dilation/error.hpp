// Copyright 2026 The dilation Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dilation {

enum class ErrorKind {
  TooFewVertices,
  DegenerateEdge,
  NonFinite,
  InvalidSampleCount,
  NotConvex,
  NotSimple,
  CoincidentPoints,
  InvalidDimension,
  TriangleInequalityViolated,
  InvalidSpec,
  NotZindler,
  DegenerateRing,
  InvalidLocator,
  Unreachable,
  Disconnected,
  InvalidSampleSpacing,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TooFewVertices: return "TooFewVertices";
    case ErrorKind::DegenerateEdge: return "DegenerateEdge";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::InvalidSampleCount: return "InvalidSampleCount";
    case ErrorKind::NotConvex: return "NotConvex";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::InvalidDimension: return "InvalidDimension";
    case ErrorKind::TriangleInequalityViolated: return "TriangleInequalityViolated";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::NotZindler: return "NotZindler";
    case ErrorKind::DegenerateRing: return "DegenerateRing";
    case ErrorKind::InvalidLocator: return "InvalidLocator";
    case ErrorKind::Unreachable: return "Unreachable";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::InvalidSampleSpacing: return "InvalidSampleSpacing";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure in the library surfaces as this exception; `kind()` is the
/// machine-readable part.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string &what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dilation
