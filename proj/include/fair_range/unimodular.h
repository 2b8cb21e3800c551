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

#ifndef FAIR_RANGE_UNIMODULAR_H_
#define FAIR_RANGE_UNIMODULAR_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fair_range/linear_program.h"
#include "fair_range/lp_builders.h"

namespace fair_range {

using IntMatrix = std::vector<std::vector<int>>;

// Row-by-row integer matrix of `lp` with every <= row negated, so all
// inequalities read ">=". When `include_upper_bounds` is set, one row -e_j
// per finite variable upper bound follows the LP rows. Throws if a
// coefficient is not an integer.
IntMatrix ConstraintMatrixGe(const LinearProgram& lp, bool include_upper_bounds);

enum class RowRole {
  kBudget,
  kGroupLower,
  kGroupUpper,
  kCoreBall,
  kSuperBall,
  kUnitBound,
  kOther,
};

struct RowTag {
  RowRole role = RowRole::kOther;
  int index = 0;  // group, location or variable
};

// Tags for ConstraintMatrixGe(slp.lp, include_upper_bounds).
std::vector<RowTag> StructuredRowTags(const StructuredLp& slp,
                                      bool include_upper_bounds);

// Determinant by fraction-free Gaussian elimination.
std::int64_t ExactDeterminant(IntMatrix square);

struct SigningResult {
  enum class Status { kFound, kNone, kUndecided };
  Status status = Status::kUndecided;
  std::vector<int> signs;  // parallel to the requested rows, each +1 or -1
  bool used_fallback = false;
};

// Searches for signs s_r such that sum_r s_r * m[r][c] lies in {-1,0,1} for
// every column c. With `tags`, first tries the signing that pairs the two
// range rows of a group, cancels the budget row against single range rows,
// and pairs each ball row with its super ball row; bound rows then pull
// each column sum toward zero. Otherwise, or if that fails, searches
// exhaustively when rows.size() <= kMaxExhaustiveRows.
inline constexpr int kMaxExhaustiveRows = 20;
SigningResult GhouilaHouriCheck(const IntMatrix& m, std::span<const int> rows,
                                const std::vector<RowTag>* tags = nullptr);

bool IsValidSigning(const IntMatrix& m, std::span<const int> rows,
                    std::span<const int> signs);

struct DeterminantCheck {
  bool ok = true;
  std::int64_t trials = 0;
  std::int64_t nonzero = 0;  // submatrices with det = +-1
  std::vector<int> witness_rows;
  std::vector<int> witness_cols;
  std::int64_t witness_det = 0;
};

// Samples `trials` square submatrices of dimension 1..max_dim. Half are
// uniform; the rest draw columns from the support of the sampled rows so
// that nonsingular submatrices are common.
DeterminantCheck SubmatrixDeterminantCheck(const IntMatrix& m, int trials,
                                           int max_dim, std::uint64_t seed);

// Structural scan of each column of the StructuredLP matrix (>= form, no
// bound rows): at most five nonzeros, with +1 in the lower range row and -1
// in the upper range row of its own group, -1 in the budget row, at most one
// +1 ball row and at most one -1 super ball row, the ball contained in the
// super ball of the same location.
std::vector<std::string> CheckStructuredColumns(const IntMatrix& m,
                                                const std::vector<RowTag>& tags,
                                                const std::vector<int>& group_of_column);

}  // namespace fair_range

#endif  // FAIR_RANGE_UNIMODULAR_H_
