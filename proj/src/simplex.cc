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

#include "fair_range/simplex.h"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "fair_range/error.h"

namespace fair_range {

const char* LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "unknown";
}

StandardForm ToStandardForm(const LinearProgram& lp) {
  if (auto problems = lp.Validate(); !problems.empty()) {
    throw FairRangeError(ErrorKind::kInvalidArgument, "simplex",
                         "malformed LP: " + problems.front());
  }
  StandardForm sf;
  sf.num_structural = lp.num_vars;
  sf.shift = lp.lower;
  sf.cost_offset = lp.objective_offset;
  for (int j = 0; j < lp.num_vars; ++j)
    sf.cost_offset += lp.objective[j] * lp.lower[j];

  struct PendingRow {
    std::vector<LinearTerm> terms;
    RowSense sense;
    double rhs;
  };
  std::vector<PendingRow> pending;
  pending.reserve(lp.rows.size() + lp.num_vars);
  for (const LinearRow& row : lp.rows) {
    PendingRow pr{{}, row.sense, row.rhs};
    for (const LinearTerm& t : row.terms) {
      if (t.coef == 0.0) continue;
      pr.terms.push_back(t);
      pr.rhs -= t.coef * lp.lower[t.var];
    }
    pending.push_back(std::move(pr));
  }
  for (int j = 0; j < lp.num_vars; ++j) {
    if (lp.upper[j] < kInfinity) {
      pending.push_back(
          {{{j, 1.0}}, RowSense::kLessEqual, lp.upper[j] - lp.lower[j]});
    }
  }

  int next_col = lp.num_vars;
  for (PendingRow& pr : pending) {
    if (pr.sense != RowSense::kEqual) {
      pr.terms.push_back(
          {next_col++, pr.sense == RowSense::kLessEqual ? 1.0 : -1.0});
    }
    if (pr.rhs < 0) {
      pr.rhs = -pr.rhs;
      for (LinearTerm& t : pr.terms) t.coef = -t.coef;
    }
    sf.rows.push_back(std::move(pr.terms));
    sf.rhs.push_back(pr.rhs);
  }
  sf.num_cols = next_col;
  sf.cost.assign(sf.num_cols, 0.0);
  for (int j = 0; j < lp.num_vars; ++j) sf.cost[j] = lp.objective[j];
  return sf;
}

namespace {

constexpr double kZero = 1e-13;

// Dense tableau [A | rhs] with an objective row of reduced costs whose last
// entry holds minus the current objective value.
class Tableau {
 public:
  Tableau(const StandardForm& sf, const SimplexOptions& options)
      : sf_(sf), options_(options), m_(sf.num_rows()), n_(sf.num_cols) {
    // Rows whose own slack enters with +1 start with it basic.
    std::vector<int> slack_of_row(m_, -1);
    for (int i = 0; i < m_; ++i) {
      for (const LinearTerm& t : sf.rows[i]) {
        if (t.var >= sf.num_structural && t.coef == 1.0) slack_of_row[i] = t.var;
      }
    }
    num_art_ = 0;
    for (int i = 0; i < m_; ++i)
      if (slack_of_row[i] < 0) ++num_art_;
    cols_ = n_ + num_art_;
    stride_ = static_cast<std::size_t>(cols_) + 1;
    t_.assign(static_cast<std::size_t>(m_) * stride_, 0.0);
    basis_.assign(m_, -1);
    barred_.assign(cols_, false);
    int art = n_;
    for (int i = 0; i < m_; ++i) {
      double* row = Row(i);
      for (const LinearTerm& t : sf.rows[i]) row[t.var] += t.coef;
      row[cols_] = sf.rhs[i];
      if (slack_of_row[i] >= 0) {
        basis_[i] = slack_of_row[i];
      } else {
        row[art] = 1.0;
        basis_[i] = art++;
      }
    }
    obj_.assign(stride_, 0.0);
  }

  bool IsArtificial(int col) const { return col >= n_; }

  // Returns false when phase 1 ends with positive infeasibility.
  bool PhaseOne() {
    if (num_art_ == 0) return true;
    std::fill(obj_.begin(), obj_.end(), 0.0);
    for (int j = n_; j < cols_; ++j) obj_[j] = 1.0;
    for (int i = 0; i < m_; ++i) {
      if (!IsArtificial(basis_[i])) continue;
      const double* row = Row(i);
      for (std::size_t j = 0; j < stride_; ++j) obj_[j] -= row[j];
    }
    double bmax = 1.0;
    for (double b : sf_.rhs) bmax = std::max(bmax, b);
    const LpStatus status = Iterate(/*bar_leaving_artificials=*/true);
    if (status == LpStatus::kUnbounded) {
      throw FairRangeError(ErrorKind::kInternal, "simplex",
                           "phase one reported unbounded");
    }
    if (-obj_[cols_] > options_.feasibility_tolerance * bmax) return false;

    redundant_.assign(m_, false);
    for (int i = 0; i < m_; ++i) {
      if (!IsArtificial(basis_[i])) continue;
      const double* row = Row(i);
      int best = -1;
      double best_mag = options_.pivot_tolerance;
      for (int j = 0; j < n_; ++j) {
        if (std::abs(row[j]) > best_mag) {
          best_mag = std::abs(row[j]);
          best = j;
        }
      }
      if (best >= 0) {
        Pivot(i, best);
      } else {
        redundant_[i] = true;
      }
    }
    for (int j = n_; j < cols_; ++j) barred_[j] = true;
    return true;
  }

  LpStatus PhaseTwo() {
    if (redundant_.empty()) redundant_.assign(m_, false);
    for (int j = n_; j < cols_; ++j) barred_[j] = true;
    std::fill(obj_.begin(), obj_.end(), 0.0);
    for (int j = 0; j < n_; ++j) obj_[j] = sf_.cost[j];
    for (int i = 0; i < m_; ++i) {
      const int b = basis_[i];
      const double cb = IsArtificial(b) ? 0.0 : sf_.cost[b];
      if (cb == 0.0) continue;
      const double* row = Row(i);
      for (std::size_t j = 0; j < stride_; ++j) obj_[j] -= cb * row[j];
    }
    cost_scale_ = 1.0;
    for (double c : sf_.cost) cost_scale_ = std::max(cost_scale_, std::abs(c));
    return Iterate(false);
  }

  std::vector<double> Solution() const {
    std::vector<double> z(n_, 0.0);
    for (int i = 0; i < m_; ++i) {
      if (!IsArtificial(basis_[i])) z[basis_[i]] = std::max(0.0, Row(i)[cols_]);
    }
    return z;
  }

  void Basis(std::vector<int>& basis, std::vector<int>& kept) const {
    basis.clear();
    kept.clear();
    for (int i = 0; i < m_; ++i) {
      if (!redundant_.empty() && redundant_[i]) continue;
      basis.push_back(basis_[i]);
      kept.push_back(i);
    }
  }

  std::int64_t iterations() const { return iterations_; }

 private:
  double* Row(int i) { return t_.data() + static_cast<std::size_t>(i) * stride_; }
  const double* Row(int i) const {
    return t_.data() + static_cast<std::size_t>(i) * stride_;
  }

  LpStatus Iterate(bool bar_leaving_artificials) {
    int degenerate_streak = 0;
    const double rc_tol = 1e-9 * cost_scale_;
    for (;;) {
      const bool bland = degenerate_streak >= options_.bland_after_degenerate;
      int enter = -1;
      double best = -rc_tol;
      for (int j = 0; j < cols_; ++j) {
        if (barred_[j]) continue;
        if (obj_[j] < best) {
          enter = j;
          if (bland) break;
          best = obj_[j];
        }
      }
      if (enter < 0) return LpStatus::kOptimal;

      int leave = -1;
      double best_ratio = 0.0;
      double best_piv = 0.0;
      for (int i = 0; i < m_; ++i) {
        const double* row = Row(i);
        const double a = row[enter];
        if (a <= options_.pivot_tolerance) continue;
        const double ratio = row[cols_] / a;
        if (leave < 0 || ratio < best_ratio - 1e-12 * (1.0 + best_ratio)) {
          leave = i;
          best_ratio = ratio;
          best_piv = a;
        } else if (ratio <= best_ratio + 1e-12 * (1.0 + best_ratio)) {
          const bool take = bland ? basis_[i] < basis_[leave] : a > best_piv;
          if (take) {
            leave = i;
            best_ratio = std::min(best_ratio, ratio);
            best_piv = a;
          }
        }
      }
      if (leave < 0) return LpStatus::kUnbounded;

      degenerate_streak = best_ratio <= 1e-12 ? degenerate_streak + 1 : 0;
      const int leaving_col = basis_[leave];
      Pivot(leave, enter);
      if (bar_leaving_artificials && IsArtificial(leaving_col)) {
        barred_[leaving_col] = true;
      }
      if (++iterations_ > options_.max_iterations) {
        throw FairRangeError(ErrorKind::kIterationLimit, "simplex",
                             "iteration limit");
      }
    }
  }

  void Pivot(int r, int e) {
    double* prow = Row(r);
    const double inv = 1.0 / prow[e];
    nz_.clear();
    for (std::size_t j = 0; j < stride_; ++j) {
      if (prow[j] == 0.0) continue;
      prow[j] *= inv;
      if (std::abs(prow[j]) < kZero) {
        prow[j] = 0.0;
      } else {
        nz_.push_back(static_cast<int>(j));
      }
    }
    prow[e] = 1.0;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      double* row = Row(i);
      const double f = row[e];
      if (f == 0.0) continue;
      for (int j : nz_) {
        double v = row[j] - f * prow[j];
        if (std::abs(v) < kZero) v = 0.0;
        row[j] = v;
      }
      row[e] = 0.0;
    }
    const double f = obj_[e];
    if (f != 0.0) {
      for (int j : nz_) obj_[j] -= f * prow[j];
      obj_[e] = 0.0;
    }
    basis_[r] = e;
  }

  const StandardForm& sf_;
  const SimplexOptions& options_;
  int m_;
  int n_;
  int num_art_ = 0;
  int cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<double> t_;
  std::vector<double> obj_;
  std::vector<int> basis_;
  std::vector<bool> barred_;
  std::vector<bool> redundant_;
  std::vector<int> nz_;
  double cost_scale_ = 1.0;
  std::int64_t iterations_ = 0;
};

}  // namespace

LpResult SolveVertex(const LinearProgram& lp, const SimplexOptions& options) {
  const StandardForm sf = ToStandardForm(lp);
  Tableau tableau(sf, options);
  LpResult result;
  if (!tableau.PhaseOne()) {
    result.status = LpStatus::kInfeasible;
    result.iterations = tableau.iterations();
    return result;
  }
  result.status = tableau.PhaseTwo();
  result.iterations = tableau.iterations();
  if (result.status != LpStatus::kOptimal) return result;

  const std::vector<double> z = tableau.Solution();
  result.x.resize(lp.num_vars);
  for (int j = 0; j < lp.num_vars; ++j) result.x[j] = z[j] + sf.shift[j];
  result.objective = lp.Evaluate(result.x);
  tableau.Basis(result.basis, result.kept_rows);
  return result;
}

}  // namespace fair_range
