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

#include <Eigen/Dense>

#include <cstdint>
#include <string>

namespace kmnet
{

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Largest eigenvalue of a symmetric positive semidefinite matrix by power
// iteration with a deterministic start vector.
double power_iteration_lambda_max(const Matrix& s, double tol = 1e-12, int max_iters = 10000);

/// Affine solution set {point + basis * c}, basis columns orthonormal.
struct AffineSet
{
    Vector point;
    Matrix basis;

    int dimension() const { return static_cast<int>(basis.cols()); }
    // Distance from v to the set.
    double distance(const Vector& v) const;
    bool contains(const Vector& v, double tol) const { return distance(v) <= tol; }
};

// Solution set of a * x = rhs via SVD with relative rank threshold.
// Throws InfeasibleError when the system is inconsistent beyond
// feasibility_tol * (1 + ||rhs||).
AffineSet solve_affine_set(const Matrix& a, const Vector& rhs,
                           double rank_rel_tol = 1e-9, double feasibility_tol = 1e-8);

// Same direction subspace and mutual membership of the particular points.
bool affine_sets_equal(const AffineSet& lhs, const AffineSet& rhs, double tol);

uint64_t fnv1a64(const void* data, std::size_t n);
uint64_t fnv1a64(const std::string& s);

// 17 significant digits; round-trips double exactly.
std::string format_full(double v);

std::string to_hex(uint64_t v);

}  // namespace kmnet
