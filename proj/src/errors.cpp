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

#include "infomat/errors.hpp"

namespace infomat {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DuplicateOutcome: return "DuplicateOutcome";
    case Errc::OutcomeOutOfRange: return "OutcomeOutOfRange";
    case Errc::ProbabilityNotNormalized: return "ProbabilityNotNormalized";
    case Errc::NegativeProbability: return "NegativeProbability";
    case Errc::EmptyVariableSet: return "EmptyVariableSet";
    case Errc::UnmappedOutcome: return "UnmappedOutcome";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::IndicesNotDistinct: return "IndicesNotDistinct";
    case Errc::TooManyVariables: return "TooManyVariables";
    case Errc::WrongArity: return "WrongArity";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::InvalidSampleCount: return "InvalidSampleCount";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code) {}

void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace infomat
