// Copyright 2026 The Authors.
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

#ifndef FAIR_RANGE_ERROR_H_
#define FAIR_RANGE_ERROR_H_

#include <stdexcept>
#include <string>

namespace fair_range {

enum class ErrorKind {
  kInvalidArgument,
  kInfeasible,
  kIterationLimit,
  kBudgetExceeded,
  kUndecided,
  // An invariant that the algorithm guarantees was violated. Indicates a bug
  // upstream of the stage that raised it.
  kInternal,
  kCertificate,
};

const char* ErrorKindName(ErrorKind kind);

class FairRangeError : public std::runtime_error {
 public:
  FairRangeError(ErrorKind kind, const std::string& stage,
                 const std::string& message)
      : std::runtime_error(stage + ": " + message), kind_(kind), stage_(stage) {}

  ErrorKind kind() const { return kind_; }
  const std::string& stage() const { return stage_; }

 private:
  ErrorKind kind_;
  std::string stage_;
};

}  // namespace fair_range

#endif  // FAIR_RANGE_ERROR_H_
