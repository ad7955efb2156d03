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


#include "catgadget/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "catgadget/kernels.hpp"

namespace catgadget::lp {

LinearProgram::LinearProgram(std::vector<double> rhs) : rhs_(std::move(rhs)) {
    if (rhs_.empty()) {
        throw std::invalid_argument("linear program needs at least one row");
    }
}

std::size_t LinearProgram::add_column(double cost, std::span<const int> rows, std::span<const double> values) {
    if (rows.size() != values.size()) {
        throw std::invalid_argument("column rows/values length mismatch");
    }
    for (int r : rows) {
        if (r < 0 || static_cast<std::size_t>(r) >= rhs_.size()) {
            throw std::out_of_range("column row index out of range");
        }
    }
    cost_.push_back(cost);
    rows_.insert(rows_.end(), rows.begin(), rows.end());
    values_.insert(values_.end(), values.begin(), values.end());
    starts_.push_back(rows_.size());
    return cost_.size() - 1;
}

std::string_view to_string(Status status) {
    switch (status) {
        case Status::Optimal: return "optimal";
        case Status::Infeasible: return "infeasible";
        case Status::Unbounded: return "unbounded";
        case Status::IterationLimit: return "iteration_limit";
    }
    return "unknown";
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Deterministic value in [0, 1) per row so that solves are reproducible.
double row_jitter(std::size_t i) {
    std::uint64_t z = static_cast<std::uint64_t>(i) + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

class RevisedSimplex {
public:
    RevisedSimplex(const LinearProgram &lp, const Options &opt)
        : lp_(lp), opt_(opt), m_(lp.num_rows()), n_(lp.num_columns()) {
        // Rows with negative rhs are negated so the artificial start is feasible.
        row_sign_.resize(m_);
        rhs_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            row_sign_[i] = lp.rhs()[i] < 0.0 ? -1.0 : 1.0;
            rhs_[i] = std::abs(lp.rhs()[i]);
        }
        value_start_.resize(n_ + 1, 0);
        for (std::size_t j = 0; j < n_; ++j) {
            const auto rows = lp.column_rows(j);
            const auto vals = lp.column_values(j);
            for (std::size_t k = 0; k < rows.size(); ++k) {
                signed_values_.push_back(vals[k] * row_sign_[static_cast<std::size_t>(rows[k])]);
            }
            value_start_[j + 1] = signed_values_.size();
        }
        basis_.resize(m_);
        is_basic_.assign(n_ + m_, 0);
        binv_.assign(m_ * m_, 0.0);
        for (std::size_t i = 0; i < m_; ++i) {
            basis_[i] = n_ + i;
            is_basic_[n_ + i] = 1;
            binv_[i * m_ + i] = 1.0;
        }
        x_basic_.assign(m_, 0.0);
        y_.resize(m_);
        u_.resize(m_);
        pivot_row_.resize(m_);
        cost_basic_.resize(m_);
        d_.resize(n_);
        weight_.resize(n_);
    }

    Solution run(std::span<const std::size_t> warm_basis) {
        Solution sol;
        const std::vector<double> exact_rhs = rhs_;
        std::vector<double> phase2(n_ + m_, 0.0);
        for (std::size_t j = 0; j < n_; ++j) {
            phase2[j] = lp_.cost(j);
        }
        Status st = Status::Optimal;
        if (try_warm_start(warm_basis)) {
            st = run_primal(phase2);
        } else {
            st = cold_start(phase2);
        }
        // Drop the perturbation; the basis stays dual feasible, so dual
        // pivots restore primal feasibility. Alternate until both hold.
        rhs_ = exact_rhs;
        for (int round = 0; st == Status::Optimal && round < 8; ++round) {
            refactor();
            st = run_dual(phase2);
            if (st != Status::Optimal) {
                break;
            }
            compute_reduced_costs(phase2);
            if (price(false) == kNone) {
                break;
            }
            st = run_primal(phase2);
        }
        if (st != Status::Optimal) {
            return finish(sol, st);
        }

        refactor();
        sol.basis = basis_;
        sol.x.assign(n_, 0.0);
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) {
                sol.x[basis_[i]] = std::max(0.0, x_basic_[i]);
            }
        }
        for (std::size_t j = 0; j < n_; ++j) {
            sol.objective += lp_.cost(j) * sol.x[j];
        }
        compute_reduced_costs(phase2);
        sol.duals.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            sol.duals[i] = y_[i] * row_sign_[i];
        }
        std::vector<double> residual(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            residual[i] = -lp_.rhs()[i];
        }
        for (std::size_t j = 0; j < n_; ++j) {
            if (sol.x[j] == 0.0) {
                continue;
            }
            const auto rows = lp_.column_rows(j);
            const auto vals = lp_.column_values(j);
            for (std::size_t k = 0; k < rows.size(); ++k) {
                residual[static_cast<std::size_t>(rows[k])] += vals[k] * sol.x[j];
            }
        }
        for (double r : residual) {
            sol.primal_residual = std::max(sol.primal_residual, std::abs(r));
        }
        return finish(sol, Status::Optimal);
    }

private:
    // Two-phase start from the all-artificial basis with a perturbed rhs.
    Status cold_start(const std::vector<double> &phase2) {
        if (opt_.perturbation > 0.0) {
            for (std::size_t i = 0; i < m_; ++i) {
                rhs_[i] += opt_.perturbation * (1.0 + rhs_[i]) * (1.0 + row_jitter(i));
            }
        }
        x_basic_ = rhs_;
        std::vector<double> phase1(n_ + m_, 0.0);
        std::fill(phase1.begin() + static_cast<std::ptrdiff_t>(n_), phase1.end(), 1.0);
        const Status st = run_primal(phase1);
        if (st == Status::IterationLimit) {
            return st;
        }
        double infeasibility = 0.0;
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] >= n_) {
                infeasibility += std::max(0.0, x_basic_[i]);
            }
        }
        double scale = 1.0;
        for (double v : rhs_) {
            scale = std::max(scale, v);
        }
        if (infeasibility > 1e-7 * scale) {
            return Status::Infeasible;
        }
        drive_out_artificials();
        return run_primal(phase2);
    }

    // Installs `warm` when it is a usable feasible basis. The rhs is then
    // shifted by B*delta with delta > 0, which lifts every basic variable off
    // its bound without losing feasibility.
    bool try_warm_start(std::span<const std::size_t> warm) {
        if (warm.size() != m_) {
            return false;
        }
        std::vector<char> seen(n_, 0);
        for (std::size_t j : warm) {
            if (j >= n_ || seen[j]) {
                return false;
            }
            seen[j] = 1;
        }
        const std::vector<std::size_t> saved_basis = basis_;
        const std::vector<char> saved_flags = is_basic_;
        std::fill(is_basic_.begin(), is_basic_.end(), 0);
        for (std::size_t i = 0; i < m_; ++i) {
            basis_[i] = warm[i];
            is_basic_[warm[i]] = 1;
        }
        try {
            refactor();
        } catch (const std::runtime_error &) {
            basis_ = saved_basis;
            is_basic_ = saved_flags;
            refactor();
            return false;
        }
        for (double x : x_basic_) {
            if (x < -opt_.feasibility_tol) {
                basis_ = saved_basis;
                is_basic_ = saved_flags;
                refactor();
                return false;
            }
        }
        if (opt_.perturbation > 0.0) {
            for (std::size_t i = 0; i < m_; ++i) {
                const double delta = opt_.perturbation * (1.0 + row_jitter(i));
                const auto rows = lp_.column_rows(basis_[i]);
                const double *v = column_values(basis_[i]);
                for (std::size_t k = 0; k < rows.size(); ++k) {
                    rhs_[static_cast<std::size_t>(rows[k])] += delta * v[k];
                }
            }
            refactor();
        }
        return true;
    }

    Solution &finish(Solution &sol, Status st) const {
        sol.status = st;
        sol.iterations = iterations_;
        return sol;
    }

    std::span<double> binv_col(std::size_t c) { return {binv_.data() + c * m_, m_}; }

    const double *column_values(std::size_t j) const { return signed_values_.data() + value_start_[j]; }

    // u = B^{-1} a_j
    void ftran(std::size_t j) {
        std::fill(u_.begin(), u_.end(), 0.0);
        const auto rows = lp_.column_rows(j);
        const double *v = column_values(j);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            kernels::axpy(v[k], binv_col(static_cast<std::size_t>(rows[k])), u_);
        }
    }

    double row_dot(std::span<const double> row, std::size_t j) const {
        const auto rows = lp_.column_rows(j);
        const double *v = column_values(j);
        double acc = 0.0;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            acc += row[static_cast<std::size_t>(rows[k])] * v[k];
        }
        return acc;
    }

    void compute_reduced_costs(const std::vector<double> &cost) {
        for (std::size_t i = 0; i < m_; ++i) {
            cost_basic_[i] = cost[basis_[i]];
        }
        for (std::size_t c = 0; c < m_; ++c) {
            y_[c] = kernels::dot(cost_basic_, binv_col(c));
        }
        for (std::size_t j = 0; j < n_; ++j) {
            d_[j] = is_basic_[j] ? 0.0 : cost[j] - row_dot(y_, j);
        }
    }

    void load_pivot_row(std::size_t r) {
        for (std::size_t c = 0; c < m_; ++c) {
            pivot_row_[c] = binv_[c * m_ + r];
        }
    }

    // Devex pricing: largest d_j^2 / w_j among improving columns. Bland mode
    // takes the lowest improving index instead.
    std::size_t price(bool bland) const {
        std::size_t best = kNone;
        double best_score = 0.0;
        for (std::size_t j = 0; j < n_; ++j) {
            const double d = d_[j];
            if (is_basic_[j] || d >= -opt_.optimality_tol) {
                continue;
            }
            if (bland) {
                return j;
            }
            const double score = d * d / weight_[j];
            if (best == kNone || score > best_score) {
                best_score = score;
                best = j;
            }
        }
        return best;
    }

    std::size_t ratio_test(bool bland) const {
        if (bland) {
            std::size_t r = kNone;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < m_; ++i) {
                if (u_[i] <= opt_.pivot_tol) {
                    continue;
                }
                const double t = std::max(0.0, x_basic_[i]) / u_[i];
                if (r == kNone || t < best - 1e-12 || (t <= best + 1e-12 && basis_[i] < basis_[r])) {
                    best = std::min(best, t);
                    r = i;
                }
            }
            return r;
        }
        // Harris two-pass: bound the step with relaxed feasibility, then take
        // the largest pivot among the rows that block within that bound.
        double theta_max = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m_; ++i) {
            if (u_[i] > opt_.pivot_tol) {
                theta_max = std::min(theta_max, (std::max(0.0, x_basic_[i]) + opt_.feasibility_tol) / u_[i]);
            }
        }
        if (!std::isfinite(theta_max)) {
            return kNone;
        }
        std::size_t r = kNone;
        double best_pivot = 0.0;
        for (std::size_t i = 0; i < m_; ++i) {
            if (u_[i] > opt_.pivot_tol && std::max(0.0, x_basic_[i]) / u_[i] <= theta_max && u_[i] > best_pivot) {
                best_pivot = u_[i];
                r = i;
            }
        }
        return r;
    }

    // Updates reduced costs and reference weights from the pivot row held in
    // pivot_row_. Must run before the basis change; u_ holds B^{-1} a_q.
    void update_pricing(std::size_t r, std::size_t q) {
        const double alpha_q = u_[r];
        const double step = d_[q] / alpha_q;
        const double wq = weight_[q];
        double max_weight = 0.0;
        for (std::size_t j = 0; j < n_; ++j) {
            if (is_basic_[j] || j == q) {
                continue;
            }
            const double alpha = row_dot(pivot_row_, j);
            if (alpha != 0.0) {
                d_[j] -= step * alpha;
                const double ratio = alpha / alpha_q;
                weight_[j] = std::max(weight_[j], ratio * ratio * wq);
                max_weight = std::max(max_weight, weight_[j]);
            }
        }
        const std::size_t leaving = basis_[r];
        if (leaving < n_) {
            d_[leaving] = -step;
            weight_[leaving] = std::max(wq / (alpha_q * alpha_q), 1.0);
        }
        d_[q] = 0.0;
        // Restart the reference framework before the weights lose meaning.
        if (max_weight > 1e8) {
            std::fill(weight_.begin(), weight_.end(), 1.0);
        }
    }

    // Basis change at row r with entering column q and primal step theta.
    void pivot(std::size_t r, std::size_t q, double theta) {
        const double ur = u_[r];
        if (theta != 0.0) {
            kernels::axpy(-theta, u_, x_basic_);
        }
        x_basic_[r] = theta;
        for (std::size_t c = 0; c < m_; ++c) {
            auto col = binv_col(c);
            const double f = col[r] / ur;
            if (f != 0.0) {
                kernels::axpy(-f, u_, col);
                col[r] = f;
            }
        }
        is_basic_[basis_[r]] = 0;
        is_basic_[q] = 1;
        basis_[r] = q;
        ++since_refactor_;
        ++iterations_;
    }

    void refactor() {
        // Gauss-Jordan on [B | I] with partial pivoting, row-major scratch.
        const std::size_t w = 2 * m_;
        std::vector<double> aug(m_ * w, 0.0);
        for (std::size_t c = 0; c < m_; ++c) {
            const std::size_t var = basis_[c];
            if (var >= n_) {
                aug[(var - n_) * w + c] = 1.0;
            } else {
                const auto rows = lp_.column_rows(var);
                const double *v = column_values(var);
                for (std::size_t k = 0; k < rows.size(); ++k) {
                    aug[static_cast<std::size_t>(rows[k]) * w + c] = v[k];
                }
            }
            aug[c * w + m_ + c] = 1.0;
        }
        for (std::size_t col = 0; col < m_; ++col) {
            std::size_t p = col;
            for (std::size_t r = col + 1; r < m_; ++r) {
                if (std::abs(aug[r * w + col]) > std::abs(aug[p * w + col])) {
                    p = r;
                }
            }
            if (std::abs(aug[p * w + col]) < 1e-13) {
                throw std::runtime_error("simplex: basis became singular");
            }
            if (p != col) {
                std::swap_ranges(aug.begin() + static_cast<std::ptrdiff_t>(p * w),
                                 aug.begin() + static_cast<std::ptrdiff_t>(p * w + w),
                                 aug.begin() + static_cast<std::ptrdiff_t>(col * w));
            }
            const double inv = 1.0 / aug[col * w + col];
            std::span<double> prow(aug.data() + col * w, w);
            for (double &v : prow) {
                v *= inv;
            }
            for (std::size_t r = 0; r < m_; ++r) {
                const double f = aug[r * w + col];
                if (r != col && f != 0.0) {
                    kernels::axpy(-f, prow, std::span<double>(aug.data() + r * w, w));
                }
            }
        }
        for (std::size_t r = 0; r < m_; ++r) {
            for (std::size_t c = 0; c < m_; ++c) {
                binv_[c * m_ + r] = aug[r * w + m_ + c];
            }
        }
        std::fill(x_basic_.begin(), x_basic_.end(), 0.0);
        for (std::size_t c = 0; c < m_; ++c) {
            if (rhs_[c] != 0.0) {
                kernels::axpy(rhs_[c], binv_col(c), x_basic_);
            }
        }
        since_refactor_ = 0;
    }

    Status run_primal(const std::vector<double> &cost) {
        int stalled = 0;
        std::fill(weight_.begin(), weight_.end(), 1.0);
        compute_reduced_costs(cost);
        bool fresh = true;
        while (true) {
            if (iterations_ >= opt_.max_iterations) {
                return Status::IterationLimit;
            }
            if (since_refactor_ >= opt_.refactor_interval) {
                refactor();
                compute_reduced_costs(cost);
                fresh = true;
            }
            const bool bland = stalled >= opt_.stall_threshold;
            const std::size_t q = price(bland);
            if (q == kNone) {
                if (fresh) {
                    return Status::Optimal;
                }
                // Confirm against reduced costs recomputed from scratch.
                compute_reduced_costs(cost);
                fresh = true;
                continue;
            }
            ftran(q);
            const std::size_t r = ratio_test(bland);
            if (r == kNone) {
                return Status::Unbounded;
            }
            const double theta = std::max(0.0, x_basic_[r]) / u_[r];
            load_pivot_row(r);
            update_pricing(r, q);
            pivot(r, q, theta);
            fresh = false;
            stalled = theta <= 1e-12 ? stalled + 1 : 0;
        }
    }

    // Dual simplex from a dual feasible basis until x_B >= -feasibility_tol.
    Status run_dual(const std::vector<double> &cost) {
        compute_reduced_costs(cost);
        while (true) {
            if (iterations_ >= opt_.max_iterations) {
                return Status::IterationLimit;
            }
            if (since_refactor_ >= opt_.refactor_interval) {
                refactor();
                compute_reduced_costs(cost);
            }
            std::size_t r = kNone;
            double worst = -opt_.feasibility_tol;
            for (std::size_t i = 0; i < m_; ++i) {
                if (x_basic_[i] < worst) {
                    worst = x_basic_[i];
                    r = i;
                }
            }
            if (r == kNone) {
                return Status::Optimal;
            }
            load_pivot_row(r);
            std::size_t q = kNone;
            double best_ratio = std::numeric_limits<double>::infinity();
            double best_alpha = 0.0;
            for (std::size_t j = 0; j < n_; ++j) {
                if (is_basic_[j]) {
                    continue;
                }
                const double alpha = row_dot(pivot_row_, j);
                if (alpha >= -opt_.pivot_tol) {
                    continue;
                }
                const double ratio = std::max(0.0, d_[j]) / -alpha;
                if (ratio < best_ratio - 1e-12 || (ratio <= best_ratio + 1e-12 && -alpha > best_alpha)) {
                    best_ratio = std::min(best_ratio, ratio);
                    best_alpha = -alpha;
                    q = j;
                }
            }
            if (q == kNone) {
                return Status::Infeasible;
            }
            ftran(q);
            const double theta = x_basic_[r] / u_[r];
            update_pricing(r, q);
            pivot(r, q, theta);
        }
    }

    void drive_out_artificials() {
        for (std::size_t r = 0; r < m_; ++r) {
            if (basis_[r] < n_) {
                continue;
            }
            load_pivot_row(r);
            std::size_t best = kNone;
            double best_abs = 1e-7;
            for (std::size_t j = 0; j < n_; ++j) {
                if (is_basic_[j]) {
                    continue;
                }
                const double v = std::abs(row_dot(pivot_row_, j));
                if (v > best_abs) {
                    best_abs = v;
                    best = j;
                }
            }
            if (best == kNone) {
                continue;  // redundant row; the artificial stays basic at zero
            }
            ftran(best);
            pivot(r, best, 0.0);
        }
        refactor();
    }

    const LinearProgram &lp_;
    const Options &opt_;
    std::size_t m_;
    std::size_t n_;
    std::vector<double> row_sign_;
    std::vector<double> rhs_;
    std::vector<double> signed_values_;
    std::vector<std::size_t> value_start_;
    std::vector<std::size_t> basis_;
    std::vector<char> is_basic_;
    std::vector<double> binv_;  // column-major B^{-1}
    std::vector<double> x_basic_;
    std::vector<double> y_;
    std::vector<double> u_;
    std::vector<double> pivot_row_;
    std::vector<double> cost_basic_;
    std::vector<double> d_;
    std::vector<double> weight_;
    long iterations_ = 0;
    int since_refactor_ = 0;
};

}  // namespace

Solution solve(const LinearProgram &problem, const Options &options, std::span<const std::size_t> warm_basis) {
    RevisedSimplex solver(problem, options);
    Solution sol = solver.run(warm_basis);
    if (sol.status == Status::Infeasible && options.perturbation > 0.0) {
        // With linearly dependent rows the shifted rhs can leave the range
        // of A even though the exact one is inside it. Confirm unperturbed.
        Options exact = options;
        exact.perturbation = 0.0;
        RevisedSimplex retry(problem, exact);
        Solution second = retry.run(warm_basis);
        second.iterations += sol.iterations;
        return second;
    }
    return sol;
}

}  // namespace catgadget::lp
