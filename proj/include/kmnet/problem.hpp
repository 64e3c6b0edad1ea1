/*
 * Copyright 2026 The kmnet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <vector>

#include "kmnet/linalg.hpp"

namespace kmnet
{

/// One agent's private equation coeffs * x = rhs (mu_i rows, q columns).
struct EquationBlock
{
    Matrix coeffs;
    Vector rhs;
};

/**
 * Row partition of a linear system across m agents. Agent i privately owns
 * block i; the stacked state holds the m agent estimates consecutively,
 * each of dimension q.
 */
class PartitionedSystem
{
public:
    explicit PartitionedSystem(std::vector<EquationBlock> blocks);

    int agent_count() const { return static_cast<int>(blocks_.size()); }
    int unknown_dim() const { return q_; }
    int state_dim() const { return agent_count() * q_; }
    int total_rows() const;
    const EquationBlock& block(int i) const { return blocks_.at(static_cast<size_t>(i)); }
    const std::vector<EquationBlock>& blocks() const { return blocks_; }

private:
    std::vector<EquationBlock> blocks_;
    int q_ = 0;
};

// Strips all-zero rows whose right-hand side is zero. All-zero rows with a
// nonzero right-hand side are inconsistent and rejected; so is an agent left
// with no rows at all (degenerate block).
PartitionedSystem preprocess_system(const PartitionedSystem& sys);

// theta_i = 1 / lambda_max(A_i A_i^T), strictly interior to the admissible
// interval (0, 2/lambda_max). Throws on a zero block ("degenerate block").
Vector default_thetas(const PartitionedSystem& sys);

// Alternative policy theta_i = 2/kappa_i with kappa_i = ||A_i A_i^T||_inf;
// rejected when the candidate lands on the interval endpoint.
Vector infnorm_thetas(const PartitionedSystem& sys);

/**
 * Block-diagonal affine reformulation of the partitioned system:
 * agent i maps x_i to (I_q - theta_i A_i^T A_i) x_i + theta_i A_i^T b_i.
 * For admissible step sizes every diagonal block has spectral norm <= 1,
 * so the stacked affine map is nonexpansive and its fixed points are
 * exactly the solutions of the stacked equation.
 */
class TildeSystem
{
public:
    TildeSystem(const PartitionedSystem& sys, const Vector& thetas);

    int agent_count() const { return static_cast<int>(blocks_.size()); }
    int unknown_dim() const { return q_; }
    int state_dim() const { return agent_count() * q_; }
    const Matrix& block(int i) const { return blocks_.at(static_cast<size_t>(i)); }
    const Vector& block_offset(int i) const { return offsets_.at(static_cast<size_t>(i)); }
    const Vector& thetas() const { return thetas_; }
    /// Stacked offset vector.
    const Vector& offset() const { return offset_stacked_; }

    /// Linear part only (block-diagonal action).
    Vector apply_linear(const Vector& x) const;
    /// Full affine map: linear part plus offset.
    Vector apply(const Vector& x) const;

private:
    std::vector<Matrix> blocks_;
    std::vector<Vector> offsets_;
    Vector thetas_;
    Vector offset_stacked_;
    int q_ = 0;
};

// Validates thetas against the open admissibility interval and assembles the
// reformulated system. Throws ValidationError("step size out of range") when
// any theta sits on or outside the interval.
TildeSystem build_tilde(const PartitionedSystem& sys, const Vector& thetas);

/// f(x) = sum_i ||A_i x_i - b_i||^2 over the stacked state.
double residual(const PartitionedSystem& sys, const Vector& x);

/// sum_i ||x_i - mean||^2; zero exactly on the consensus subspace.
double consensus_error(const Vector& x, int agent_count);

/// Stacks m copies of v.
Vector consensus_state(int agent_count, const Vector& v);

}  // namespace kmnet
