// Copyright 2026 The catgadget Authors
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

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace catgadget::lp {

/// minimize c^T x  subject to  A x = b,  x >= 0.
/// A is stored column-wise and sparse; rows are dense.
class LinearProgram {
public:
    explicit LinearProgram(std::vector<double> rhs);

    /// Returns the new column's index.
    std::size_t add_column(double cost, std::span<const int> rows, std::span<const double> values);

    std::size_t num_rows() const { return rhs_.size(); }
    std::size_t num_columns() const { return cost_.size(); }
    const std::vector<double> &rhs() const { return rhs_; }
    double cost(std::size_t j) const { return cost_[j]; }

    std::span<const int> column_rows(std::size_t j) const {
        return {rows_.data() + starts_[j], starts_[j + 1] - starts_[j]};
    }
    std::span<const double> column_values(std::size_t j) const {
        return {values_.data() + starts_[j], starts_[j + 1] - starts_[j]};
    }

private:
    std::vector<double> rhs_;
    std::vector<double> cost_;
    std::vector<std::size_t> starts_{0};
    std::vector<int> rows_;
    std::vector<double> values_;
};

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

std::string_view to_string(Status status);

struct Options {
    double feasibility_tol = 1e-9;
    double optimality_tol = 1e-9;
    double pivot_tol = 1e-7;
    int refactor_interval = 64;
    /// Consecutive zero-length steps before switching to Bland's rule.
    int stall_threshold = 40;
    long max_iterations = 1'000'000;
    /// Relative size of the right-hand-side shift used to break primal
    /// degeneracy. It is removed before returning and any infeasibility it
    /// leaves behind is repaired with dual simplex pivots. An infeasible
    /// verdict under the shift is rechecked without it. 0 disables it.
    double perturbation = 1e-6;
};

struct Solution {
    Status status = Status::IterationLimit;
    double objective = 0.0;
    std::vector<double> x;
    /// Row prices y with c_j - y.a_j >= 0 for every column at optimality.
    std::vector<double> duals;
    /// Final basis, one column index per row. An entry >= num_columns()
    /// marks the artificial of row (entry - num_columns()).
    std::vector<std::size_t> basis;
    long iterations = 0;
    /// max_i |(A x - b)_i|
    double primal_residual = 0.0;
};

/// Two-phase revised simplex with an explicit dense basis inverse and
/// Devex pricing.
///
/// `warm_basis` (for instance the basis of an earlier solve of the same rows
/// with fewer columns) is used as the starting point when it names
/// num_rows() distinct structural columns forming a nonsingular, primal
/// feasible basis; otherwise the solve starts cold.
Solution solve(const LinearProgram &problem, const Options &options = {},
               std::span<const std::size_t> warm_basis = {});

}  // namespace catgadget::lp
