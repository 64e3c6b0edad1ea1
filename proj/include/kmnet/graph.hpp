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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kmnet/linalg.hpp"

namespace kmnet
{

/// A communication graph with its m x m weight matrix. weights(i, j) is the
/// weight agent i assigns to the value received from agent j.
struct WeightedGraph
{
    std::string label;
    Matrix weights;
};

struct StochasticityReport
{
    bool pass = false;
    double tolerance = 0.0;
    Vector row_sums;
    Vector col_sums;
    double min_entry = 0.0;
    std::vector<int> bad_rows;  // 0-based rows whose sum is off
    std::vector<int> bad_cols;

    std::string summary() const;
};

// Row and column sums within tol of 1, entries >= -tol.
StochasticityReport validate_doubly_stochastic(const WeightedGraph& g, double tol = 1e-10);

/// The finite set of communication graphs an experiment switches over.
/// Immutable after construction apart from the designated core.
class GraphUniverse
{
public:
    explicit GraphUniverse(std::vector<WeightedGraph> graphs);

    int size() const { return static_cast<int>(graphs_.size()); }
    int agent_count() const { return m_; }
    const WeightedGraph& graph(int k) const { return graphs_.at(static_cast<size_t>(k)); }
    const std::vector<WeightedGraph>& graphs() const { return graphs_; }
    /// Index of the graph with the given label, or -1.
    int find_label(const std::string& label) const;

    /// (W_k kron I_q) x without materializing the Kronecker product.
    Vector apply(int k, int q, const Vector& x) const;

    void set_designated_core(std::vector<int> core);
    const std::optional<std::vector<int>>& designated_core() const { return core_; }

private:
    std::vector<WeightedGraph> graphs_;
    int m_ = 0;
    std::optional<std::vector<int>> core_;
};

struct ConnectivityReport
{
    bool pass = false;
    double lambda2_re = 0.0;
    bool spectral_pass = false;
    bool reachability_pass = false;
};

// Union-connectivity check: Re(lambda_2(sum_k (I_m - W_k))) > 0, eigenvalues
// sorted by (Re, Im), cross-checked against directed reachability of the
// union sparsity pattern. Disagreement raises NumericalError.
ConnectivityReport validate_union_connectivity(const GraphUniverse& u, double eig_tol = 1e-9);

/// Directed arc: `to` receives from `from` with the given weight. 0-based.
struct Arc
{
    int from = 0;
    int to = 0;
    double weight = 0.0;
};

// Assembles W from explicit arcs plus per-agent self weights. Self-loops in
// the arc list are rejected; the diagonal is carried by self_weights only.
WeightedGraph graph_from_arcs(std::string label, int m, const std::vector<Arc>& arcs,
                              const Vector& self_weights);

// Symmetric doubly stochastic weights from an undirected edge list,
// w_ij = 1 / (1 + max(deg_i, deg_j)), remainder on the diagonal.
WeightedGraph metropolis_graph(std::string label, int m,
                               const std::vector<std::pair<int, int>>& undirected_edges);

// One graph per undirected edge: the endpoints average with weight 1/2 and
// everyone else holds their value. Labels "edge-<i>-<j>" with 1-based ids.
GraphUniverse gossip_universe(int m, const std::vector<std::pair<int, int>>& edges);

}  // namespace kmnet
