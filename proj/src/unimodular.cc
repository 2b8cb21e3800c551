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

#include "fair_range/unimodular.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <utility>

#include "fair_range/error.h"

namespace fair_range {

IntMatrix ConstraintMatrixGe(const LinearProgram& lp,
                             bool include_upper_bounds) {
  IntMatrix m;
  m.reserve(lp.rows.size());
  for (const LinearRow& row : lp.rows) {
    std::vector<int> dense(lp.num_vars, 0);
    const int sign = row.sense == RowSense::kLessEqual ? -1 : 1;
    for (const LinearTerm& t : row.terms) {
      const double c = std::round(t.coef);
      if (c != t.coef) {
        throw FairRangeError(ErrorKind::kInvalidArgument, "unimodular",
                             "non-integer coefficient");
      }
      dense[t.var] += sign * static_cast<int>(c);
    }
    m.push_back(std::move(dense));
  }
  if (include_upper_bounds) {
    for (int j = 0; j < lp.num_vars; ++j) {
      if (lp.upper[j] == kInfinity) continue;
      std::vector<int> dense(lp.num_vars, 0);
      dense[j] = -1;
      m.push_back(std::move(dense));
    }
  }
  return m;
}

std::vector<RowTag> StructuredRowTags(const StructuredLp& slp,
                                      bool include_upper_bounds) {
  std::vector<RowTag> tags;
  for (const StructuredRowInfo& info : slp.row_info) {
    RowRole role = RowRole::kOther;
    switch (info.kind) {
      case StructuredRowKind::kGroupLower: role = RowRole::kGroupLower; break;
      case StructuredRowKind::kGroupUpper: role = RowRole::kGroupUpper; break;
      case StructuredRowKind::kBudget: role = RowRole::kBudget; break;
      case StructuredRowKind::kCoreBall: role = RowRole::kCoreBall; break;
      case StructuredRowKind::kSuperBall: role = RowRole::kSuperBall; break;
    }
    tags.push_back({role, info.index});
  }
  if (include_upper_bounds) {
    for (int j = 0; j < slp.lp.num_vars; ++j)
      if (slp.lp.upper[j] != kInfinity) tags.push_back({RowRole::kUnitBound, j});
  }
  return tags;
}

std::int64_t ExactDeterminant(IntMatrix a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
  int sign = 1;
  __int128 prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i) {
        if (m[i][k] != 0) {
          swap = i;
          break;
        }
      }
      if (swap < 0) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * static_cast<std::int64_t>(m[n - 1][n - 1]);
}

bool IsValidSigning(const IntMatrix& m, std::span<const int> rows,
                    std::span<const int> signs) {
  if (rows.empty()) return true;
  const int cols = static_cast<int>(m[rows[0]].size());
  for (int c = 0; c < cols; ++c) {
    int sum = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) sum += signs[i] * m[rows[i]][c];
    if (sum < -1 || sum > 1) return false;
  }
  return true;
}

namespace {

std::vector<int> ConstructiveSigning(const IntMatrix& m,
                                     std::span<const int> rows,
                                     const std::vector<RowTag>& tags) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> signs(n, 1);
  bool has_budget = false;
  std::vector<std::pair<int, int>> group_rows;   // lower / upper positions
  std::vector<std::pair<int, int>> ball_rows;    // core / super positions
  auto slot = [](std::vector<std::pair<int, int>>& v, int idx) -> auto& {
    if (static_cast<int>(v.size()) <= idx) v.resize(idx + 1, {-1, -1});
    return v[idx];
  };
  std::vector<int> bound_positions;
  for (int i = 0; i < n; ++i) {
    const RowTag& tag = tags[rows[i]];
    switch (tag.role) {
      case RowRole::kBudget: has_budget = true; break;
      case RowRole::kGroupLower: slot(group_rows, tag.index).first = i; break;
      case RowRole::kGroupUpper: slot(group_rows, tag.index).second = i; break;
      case RowRole::kCoreBall: slot(ball_rows, tag.index).first = i; break;
      case RowRole::kSuperBall: slot(ball_rows, tag.index).second = i; break;
      case RowRole::kUnitBound: bound_positions.push_back(i); break;
      case RowRole::kOther: return {};
    }
  }
  // Budget row (all -1) keeps sign +1.
  for (const auto& [lo, hi] : group_rows) {
    if (lo >= 0 && hi >= 0) continue;  // +1 and -1 rows cancel with (+,+)
    // A single range row should contribute +1 against the budget's -1, or
    // -1 on its own. Lower rows are +1 on the group, upper rows -1.
    const int target = has_budget ? 1 : -1;
    if (lo >= 0) signs[lo] = target;
    if (hi >= 0) signs[hi] = -target;
  }
  for (const auto& [core, super] : ball_rows) {
    if (core >= 0 && super >= 0) {
      signs[core] = -1;  // 0 on the ball, +1 on the rest of the super ball
      signs[super] = -1;
    } else if (core >= 0) {
      signs[core] = 1;
    } else if (super >= 0) {
      signs[super] = -1;
    }
  }
  if (!bound_positions.empty()) {
    const int cols = static_cast<int>(m[rows[0]].size());
    std::vector<int> partial(cols, 0);
    for (int i = 0; i < n; ++i) {
      if (tags[rows[i]].role == RowRole::kUnitBound) continue;
      for (int c = 0; c < cols; ++c) partial[c] += signs[i] * m[rows[i]][c];
    }
    for (int i : bound_positions) {
      const int c = tags[rows[i]].index;
      const int entry = m[rows[i]][c];
      signs[i] = partial[c] * entry > 0 ? -1 : 1;
      partial[c] += signs[i] * entry;
    }
  }
  return signs;
}

bool ExhaustiveSigning(const IntMatrix& m, std::span<const int> rows,
                       std::vector<int>& signs) {
  const int n = static_cast<int>(rows.size());
  const int cols = static_cast<int>(m[rows[0]].size());
  // remaining[i][c]: nonzeros in column c among rows i..n-1.
  std::vector<std::vector<int>> remaining(n + 1, std::vector<int>(cols, 0));
  for (int i = n - 1; i >= 0; --i)
    for (int c = 0; c < cols; ++c)
      remaining[i][c] = remaining[i + 1][c] + (m[rows[i]][c] != 0 ? 1 : 0);
  std::vector<int> partial(cols, 0);
  signs.assign(n, 1);
  auto dfs = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (int s : {1, -1}) {
      bool ok = true;
      for (int c = 0; c < cols; ++c) {
        partial[c] += s * m[rows[i]][c];
        if (std::abs(partial[c]) - remaining[i + 1][c] > 1) ok = false;
      }
      signs[i] = s;
      if (ok && self(self, i + 1)) return true;
      for (int c = 0; c < cols; ++c) partial[c] -= s * m[rows[i]][c];
    }
    return false;
  };
  return dfs(dfs, 0);
}

}  // namespace

SigningResult GhouilaHouriCheck(const IntMatrix& m, std::span<const int> rows,
                                const std::vector<RowTag>* tags) {
  SigningResult result;
  if (rows.empty()) {
    result.status = SigningResult::Status::kFound;
    return result;
  }
  if (tags) {
    std::vector<int> signs = ConstructiveSigning(m, rows, *tags);
    if (!signs.empty() && IsValidSigning(m, rows, signs)) {
      result.status = SigningResult::Status::kFound;
      result.signs = std::move(signs);
      return result;
    }
  }
  if (static_cast<int>(rows.size()) > kMaxExhaustiveRows) {
    result.status = SigningResult::Status::kUndecided;
    return result;
  }
  result.used_fallback = true;
  std::vector<int> signs;
  if (ExhaustiveSigning(m, rows, signs)) {
    result.status = SigningResult::Status::kFound;
    result.signs = std::move(signs);
  } else {
    result.status = SigningResult::Status::kNone;
  }
  return result;
}

DeterminantCheck SubmatrixDeterminantCheck(const IntMatrix& m, int trials,
                                           int max_dim, std::uint64_t seed) {
  DeterminantCheck out;
  const int nr = static_cast<int>(m.size());
  if (nr == 0) return out;
  const int nc = static_cast<int>(m[0].size());
  const int cap = std::min({max_dim, nr, nc});
  if (cap <= 0) return out;
  std::mt19937_64 rng(seed);
  std::vector<int> all_rows(nr), all_cols(nc);
  std::iota(all_rows.begin(), all_rows.end(), 0);
  std::iota(all_cols.begin(), all_cols.end(), 0);
  for (int t = 0; t < trials; ++t) {
    const int dim = std::uniform_int_distribution<int>(1, cap)(rng);
    std::vector<int> rs, cs;
    std::sample(all_rows.begin(), all_rows.end(), std::back_inserter(rs), dim,
                rng);
    if (t % 2 == 1) {
      std::vector<int> support;
      for (int c = 0; c < nc; ++c)
        for (int r : rs)
          if (m[r][c] != 0) {
            support.push_back(c);
            break;
          }
      std::sample(support.begin(), support.end(), std::back_inserter(cs),
                  std::min<int>(dim, support.size()), rng);
      while (static_cast<int>(cs.size()) < dim) {
        const int c = std::uniform_int_distribution<int>(0, nc - 1)(rng);
        if (std::find(cs.begin(), cs.end(), c) == cs.end()) cs.push_back(c);
      }
      std::sort(cs.begin(), cs.end());
    } else {
      std::sample(all_cols.begin(), all_cols.end(), std::back_inserter(cs), dim,
                  rng);
    }
    IntMatrix sub(dim, std::vector<int>(dim));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) sub[i][j] = m[rs[i]][cs[j]];
    const std::int64_t det = ExactDeterminant(std::move(sub));
    ++out.trials;
    if (det != 0) ++out.nonzero;
    if (det < -1 || det > 1) {
      out.ok = false;
      out.witness_rows = rs;
      out.witness_cols = cs;
      out.witness_det = det;
      return out;
    }
  }
  return out;
}

std::vector<std::string> CheckStructuredColumns(
    const IntMatrix& m, const std::vector<RowTag>& tags,
    const std::vector<int>& group_of_column) {
  std::vector<std::string> out;
  if (m.empty()) return out;
  const int nc = static_cast<int>(m[0].size());
  for (int c = 0; c < nc; ++c) {
    int nonzeros = 0;
    int core_loc = -1, super_loc = -1, cores = 0, supers = 0;
    bool bad = false;
    for (std::size_t r = 0; r < m.size(); ++r) {
      const int e = m[r][c];
      if (e == 0) continue;
      ++nonzeros;
      const RowTag& tag = tags[r];
      switch (tag.role) {
        case RowRole::kGroupLower:
          bad |= e != 1 || tag.index != group_of_column[c];
          break;
        case RowRole::kGroupUpper:
          bad |= e != -1 || tag.index != group_of_column[c];
          break;
        case RowRole::kBudget: bad |= e != -1; break;
        case RowRole::kCoreBall:
          bad |= e != 1;
          ++cores;
          core_loc = tag.index;
          break;
        case RowRole::kSuperBall:
          bad |= e != -1;
          ++supers;
          super_loc = tag.index;
          break;
        default: bad = true; break;
      }
    }
    if (nonzeros > 5) bad = true;
    if (cores > 1 || supers > 1) bad = true;
    if (cores == 1 && super_loc != core_loc) bad = true;
    if (bad) out.push_back("column " + std::to_string(c));
  }
  return out;
}

}  // namespace fair_range
