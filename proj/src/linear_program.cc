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

#include "fair_range/linear_program.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace fair_range {

LinearProgram::LinearProgram(int n)
    : num_vars(n), objective(n, 0.0), lower(n, 0.0), upper(n, kInfinity) {
  var_names.reserve(n);
  for (int j = 0; j < n; ++j) var_names.push_back("v" + std::to_string(j));
}

int LinearProgram::AddRow(std::vector<LinearTerm> terms, RowSense sense,
                          double rhs, std::string name) {
  rows.push_back({std::move(terms), sense, rhs, std::move(name)});
  return num_rows() - 1;
}

double LinearProgram::Evaluate(std::span<const double> x) const {
  double value = objective_offset;
  for (int j = 0; j < num_vars; ++j) value += objective[j] * x[j];
  return value;
}

double LinearProgram::MaxViolation(std::span<const double> x) const {
  double worst = 0.0;
  for (int j = 0; j < num_vars; ++j) {
    worst = std::max(worst, lower[j] - x[j]);
    if (upper[j] < kInfinity) worst = std::max(worst, x[j] - upper[j]);
  }
  for (const LinearRow& row : rows) {
    double lhs = 0.0;
    for (const LinearTerm& t : row.terms) lhs += t.coef * x[t.var];
    switch (row.sense) {
      case RowSense::kLessEqual: worst = std::max(worst, lhs - row.rhs); break;
      case RowSense::kGreaterEqual:
        worst = std::max(worst, row.rhs - lhs);
        break;
      case RowSense::kEqual: worst = std::max(worst, std::abs(lhs - row.rhs)); break;
    }
  }
  return worst;
}

std::vector<std::string> LinearProgram::Validate() const {
  std::vector<std::string> problems;
  if (static_cast<int>(objective.size()) != num_vars ||
      static_cast<int>(lower.size()) != num_vars ||
      static_cast<int>(upper.size()) != num_vars) {
    problems.push_back("vector sizes do not match num_vars");
    return problems;
  }
  for (int j = 0; j < num_vars; ++j) {
    if (!std::isfinite(lower[j])) {
      problems.push_back("non-finite lower bound on " + var_names[j]);
    }
    if (upper[j] < lower[j]) {
      problems.push_back("empty bound interval on " + var_names[j]);
    }
  }
  for (int i = 0; i < num_rows(); ++i) {
    const LinearRow& row = rows[i];
    if (!std::isfinite(row.rhs)) {
      problems.push_back("non-finite rhs in row " + std::to_string(i));
    }
    for (const LinearTerm& t : row.terms) {
      if (t.var < 0 || t.var >= num_vars) {
        problems.push_back("row " + std::to_string(i) +
                           " references invalid variable");
      }
    }
  }
  return problems;
}

namespace {

void WriteTerms(std::ostream& os, const std::vector<LinearTerm>& terms,
                const std::vector<std::string>& names) {
  bool first = true;
  for (const LinearTerm& t : terms) {
    if (t.coef == 0.0) continue;
    if (t.coef < 0) {
      os << (first ? "- " : " - ");
    } else if (!first) {
      os << " + ";
    }
    const double mag = std::abs(t.coef);
    if (mag != 1.0) os << mag << " ";
    os << names[t.var];
    first = false;
  }
  if (first) os << "0 " << (names.empty() ? "x" : names.front());
}

}  // namespace

std::string LinearProgram::ToLpFormat() const {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "\\ objective offset: " << objective_offset << "\n";
  os << "Minimize\n obj: ";
  std::vector<LinearTerm> obj_terms;
  for (int j = 0; j < num_vars; ++j)
    if (objective[j] != 0.0) obj_terms.push_back({j, objective[j]});
  WriteTerms(os, obj_terms, var_names);
  os << "\nSubject To\n";
  for (int i = 0; i < num_rows(); ++i) {
    const LinearRow& row = rows[i];
    os << " " << (row.name.empty() ? "r" + std::to_string(i) : row.name)
       << ": ";
    WriteTerms(os, row.terms, var_names);
    switch (row.sense) {
      case RowSense::kLessEqual: os << " <= "; break;
      case RowSense::kGreaterEqual: os << " >= "; break;
      case RowSense::kEqual: os << " = "; break;
    }
    os << row.rhs << "\n";
  }
  os << "Bounds\n";
  for (int j = 0; j < num_vars; ++j) {
    os << " " << lower[j] << " <= " << var_names[j];
    if (upper[j] < kInfinity) os << " <= " << upper[j];
    os << "\n";
  }
  os << "End\n";
  return os.str();
}

}  // namespace fair_range
