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

#include "equivar/data.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace equivar {

GraphData::GraphData(std::size_t num_nodes, std::vector<Edge> edges)
    : num_nodes_(num_nodes), edges_(std::move(edges)) {
    for (const auto &[i, j] : edges_) {
        if (i >= num_nodes_ || j >= num_nodes_) {
            throw std::invalid_argument("GraphData: edge (" + std::to_string(i) +
                                        ", " + std::to_string(j) +
                                        ") outside node range");
        }
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool GraphData::has_edge(std::size_t i, std::size_t j) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge{i, j});
}

GraphData GraphData::relabel(const Permutation &sigma) const {
    if (sigma.size() != num_nodes_) {
        throw std::invalid_argument("GraphData::relabel: permutation size " +
                                    std::to_string(sigma.size()) +
                                    " does not match node count");
    }
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const auto &[i, j] : edges_) {
        out.emplace_back(sigma(i), sigma(j));
    }
    return {num_nodes_, std::move(out)};
}

bool GraphData::is_connected() const {
    if (num_nodes_ <= 1) {
        return true;
    }
    std::vector<std::vector<std::size_t>> adj(num_nodes_);
    for (const auto &[i, j] : edges_) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    std::vector<bool> seen(num_nodes_, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (auto w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == num_nodes_;
}

std::string GraphData::to_text() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < num_nodes_; ++i) {
        os << i << ':';
        for (const auto &[a, b] : edges_) {
            if (a == i) {
                os << ' ' << b;
            }
        }
        os << '\n';
    }
    return os.str();
}

GraphData GraphData::parse(const std::string &text, std::size_t num_nodes) {
    std::vector<Edge> edges;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("graph line " + std::to_string(lineno) +
                                        ": expected `i: j k l`");
        }
        std::istringstream head(line.substr(0, colon));
        long long src = -1;
        if (!(head >> src) || src < 0) {
            throw std::invalid_argument("graph line " + std::to_string(lineno) +
                                        ": bad source node");
        }
        std::istringstream tail(line.substr(colon + 1));
        std::string tok;
        while (tail >> tok) {
            std::size_t used = 0;
            long long dst = -1;
            try {
                dst = std::stoll(tok, &used);
            } catch (const std::exception &) {
                used = 0;
            }
            if (used != tok.size() || dst < 0) {
                throw std::invalid_argument("graph line " +
                                            std::to_string(lineno) +
                                            ": bad target '" + tok + "'");
            }
            edges.emplace_back(static_cast<std::size_t>(src),
                               static_cast<std::size_t>(dst));
        }
    }
    return {num_nodes, std::move(edges)};
}

const std::vector<double> &features(const DataPoint &x) {
    if (const auto *v = std::get_if<std::vector<double>>(&x)) {
        return *v;
    }
    throw std::invalid_argument("expected a feature vector, got a graph");
}

const GraphData &graph(const DataPoint &x) {
    if (const auto *g = std::get_if<GraphData>(&x)) {
        return *g;
    }
    throw std::invalid_argument("expected a graph, got a feature vector");
}

} // namespace equivar
