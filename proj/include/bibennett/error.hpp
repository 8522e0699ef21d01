// Copyright 2026 The bibennett Authors.
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

#ifndef BIBENNETT_ERROR_HPP_
#define BIBENNETT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace bibennett {

enum class ErrorKind {
  kConvention,        // a1 <= 0 or a2 <= 0
  kDegenerate,        // a1 == a2, coincident points, singular systems
  kInvalidScale,      // k < 0
  kPole,              // tau == 0 or a vanishing denominator in a closed form
  kNoRealFamily,
  kExcludedBranch,
  kTrivial,
  kPrecondition,
  kNotIsometric,
  kDegreeBound,
  kDegenerateResultant,
  kDegenerateQuadric,
  kUndefinedLine,
  kNoRealTauBar,
  kIrrational,        // an exact square root was requested but does not exist
  kParse,
  kSchema,
  kValidation,
  kIo,
};

const char* ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bibennett

#endif  // BIBENNETT_ERROR_HPP_
