// Copyright 2026 The equivar Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Raw data points fed to embeddings: real feature vectors and small
 * directed graphs.
 */

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "equivar/groups.hpp"

namespace equivar {

/**
 * Directed graph on a fixed node set; self-loops allowed. Edges are kept
 * sorted and unique, so two graphs with the same edge set compare equal.
 */
class GraphData {
  public:
    using Edge = std::pair<std::size_t, std::size_t>;

    explicit GraphData(std::size_t num_nodes = 6) : num_nodes_(num_nodes) {}
    GraphData(std::size_t num_nodes, std::vector<Edge> edges);

    [[nodiscard]] std::size_t num_nodes() const noexcept { return num_nodes_; }
    [[nodiscard]] const std::vector<Edge> &edges() const noexcept { return edges_; }
    [[nodiscard]] bool has_edge(std::size_t i, std::size_t j) const;

    /// Edge (i, j) becomes (σ(i), σ(j)).
    [[nodiscard]] GraphData relabel(const Permutation &sigma) const;

    /// Connectivity of the underlying undirected graph.
    [[nodiscard]] bool is_connected() const;

    /// Adjacency-list text, one `i: j k l` line per node.
    [[nodiscard]] std::string to_text() const;
    static GraphData parse(const std::string &text, std::size_t num_nodes = 6);

    friend bool operator==(const GraphData &, const GraphData &) = default;

  private:
    std::size_t num_nodes_;
    std::vector<Edge> edges_;
};

using DataPoint = std::variant<std::vector<double>, GraphData>;

/// Feature vector held by `x`; throws std::invalid_argument for graphs.
const std::vector<double> &features(const DataPoint &x);
/// Graph held by `x`; throws std::invalid_argument for feature vectors.
const GraphData &graph(const DataPoint &x);

} // namespace equivar
