/**
 *  Copyright (c) 2026 the infomat authors.
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing,
 *  software distributed under the License is distributed on an "AS
 *  IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either
 *  express or implied.  See the License for the specific language
 *  governing permissions and limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace infomat {

/// Failure categories raised by the library. Every throwing code path
/// uses exactly one of these, so callers can dispatch without parsing
/// messages.
enum class Errc {
  DuplicateOutcome,
  OutcomeOutOfRange,
  ProbabilityNotNormalized,
  NegativeProbability,
  EmptyVariableSet,
  UnmappedOutcome,
  IndexOutOfRange,
  IndicesNotDistinct,
  TooManyVariables,
  WrongArity,
  OutOfRange,
  NoConvergence,
  ShapeMismatch,
  InvalidSampleCount,
  NotSymmetric,
  ParseError,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& message);

}  // namespace infomat
