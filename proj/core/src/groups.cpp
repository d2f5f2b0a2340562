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

#include "equivar/groups.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace equivar {

namespace {

/// Basis index reached by P_σ from `b` on n qubits.
std::size_t permute_index(const Permutation &perm, std::size_t b,
                          std::size_t n) {
    std::size_t out = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = perm(j);
        if (b & (std::size_t{1} << (n - 1 - src))) {
            out |= std::size_t{1} << (n - 1 - j);
        }
    }
    return out;
}

std::vector<std::size_t> index_map(const Permutation &perm) {
    const std::size_t n = perm.size();
    std::vector<std::size_t> map(std::size_t{1} << n);
    for (std::size_t b = 0; b < map.size(); ++b) {
        map[b] = permute_index(perm, b, n);
    }
    return map;
}

void check_square_dim(const Representation &rep, const ComplexMatrix &a,
                      const char *what) {
    if (!a.is_square() || a.rows() != rep.dim()) {
        throw std::invalid_argument(std::string(what) + ": operator of size " +
                                    std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) +
                                    " does not match representation dimension " +
                                    std::to_string(rep.dim()));
    }
}

} // namespace

Permutation::Permutation(std::vector<std::size_t> images)
    : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto v : images_) {
        if (v >= images_.size() || seen[v]) {
            throw std::invalid_argument("Permutation: not a bijection");
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = i;
    }
    return Permutation(std::move(v));
}

Permutation Permutation::from_cycles(
    std::size_t n, const std::vector<std::vector<std::size_t>> &cycles) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = i;
    }
    std::vector<bool> used(n, false);
    for (const auto &cyc : cycles) {
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            const std::size_t from = cyc[k];
            if (from >= n || used[from]) {
                throw std::invalid_argument(
                    "Permutation::from_cycles: cycles overlap or leave range");
            }
            used[from] = true;
            v[from] = cyc[(k + 1) % cyc.size()];
        }
    }
    return Permutation(std::move(v));
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != i) {
            return false;
        }
    }
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> v(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        v[images_[i]] = i;
    }
    return Permutation(std::move(v));
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (seen[start] || images_[start] == start) {
            seen[start] = true;
            continue;
        }
        std::vector<std::size_t> cyc;
        for (std::size_t i = start; !seen[i]; i = images_[i]) {
            seen[i] = true;
            cyc.push_back(i);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

Permutation Permutation::then(const Permutation &b) const {
    if (b.size() != size()) {
        throw std::invalid_argument("Permutation::then: size mismatch");
    }
    std::vector<std::size_t> v(size());
    for (std::size_t i = 0; i < size(); ++i) {
        v[i] = b.images_[images_[i]];
    }
    return Permutation(std::move(v));
}

std::vector<SwapGate> perm_to_swap_network(const Permutation &perm) {
    std::vector<SwapGate> out;
    for (const auto &cyc : perm.cycles()) {
        for (std::size_t k = 0; k + 1 < cyc.size(); ++k) {
            out.push_back({cyc[k], cyc[k + 1]});
        }
    }
    return out;
}

ComplexMatrix swap_network_matrix(const std::vector<SwapGate> &network,
                                  std::size_t num_qubits) {
    ComplexMatrix total = ComplexMatrix::identity(std::size_t{1} << num_qubits);
    for (const auto &s : network) {
        if (s.a >= num_qubits || s.b >= num_qubits || s.a == s.b) {
            throw std::invalid_argument("swap_network_matrix: bad SWAP placement");
        }
        std::vector<std::size_t> v(num_qubits);
        for (std::size_t i = 0; i < num_qubits; ++i) {
            v[i] = i;
        }
        std::swap(v[s.a], v[s.b]);
        total = permutation_operator(Permutation(std::move(v))) * total;
    }
    return total;
}

ComplexMatrix permutation_operator(const Permutation &perm) {
    const std::size_t n = perm.size();
    if (n == 0) {
        throw std::invalid_argument("permutation_operator: empty permutation");
    }
    const auto map = index_map(perm);
    ComplexMatrix out(map.size(), map.size());
    for (std::size_t b = 0; b < map.size(); ++b) {
        out(map[b], b) = 1.0;
    }
    return out;
}

Representation Representation::from_unitaries(
    GroupPresentation group, const std::map<std::string, ComplexMatrix> &images) {
    Representation rep;
    rep.group_ = std::move(group);
    if (rep.group_.generators.empty()) {
        throw std::invalid_argument("Representation: no generators");
    }
    std::set<std::string> labels(rep.group_.generators.begin(),
                                 rep.group_.generators.end());
    if (labels.size() != rep.group_.generators.size()) {
        throw std::invalid_argument("Representation: duplicate generator labels");
    }
    for (const auto &label : rep.group_.generators) {
        auto it = images.find(label);
        if (it == images.end()) {
            throw std::invalid_argument("Representation: no image for generator '" +
                                        label + "'");
        }
        if (!unitarity_check(it->second, tol::kComposed)) {
            throw std::invalid_argument("Representation: image of '" + label +
                                        "' is not unitary");
        }
        if (rep.dim_ == 0) {
            rep.dim_ = it->second.rows();
        } else if (it->second.rows() != rep.dim_) {
            throw std::invalid_argument(
                "Representation: generator images differ in dimension");
        }
        rep.images_.push_back(it->second);
    }
    rep.validate_closure();
    return rep;
}

Representation Representation::from_qubit_permutations(
    GroupPresentation group, std::size_t num_qubits,
    const std::map<std::string, Permutation> &images) {
    std::map<std::string, ComplexMatrix> dense;
    for (const auto &[label, perm] : images) {
        if (perm.size() != num_qubits) {
            throw std::invalid_argument("Representation: permutation for '" +
                                        label + "' has wrong size");
        }
        dense.emplace(label, permutation_operator(perm));
    }
    // Closure on the dense images would be slow for S6; defer it.
    auto known = group.known_order;
    group.known_order.reset();
    Representation rep = from_unitaries(std::move(group), dense);
    rep.group_.known_order = known;
    for (const auto &label : rep.group_.generators) {
        rep.perms_.push_back(images.at(label));
    }
    rep.validate_closure();
    return rep;
}

std::size_t Representation::generator_index(const std::string &label) const {
    const auto &gens = group_.generators;
    auto it = std::find(gens.begin(), gens.end(), label);
    if (it == gens.end()) {
        throw std::invalid_argument("unknown generator label '" + label +
                                    "' for group " + group_.name);
    }
    return static_cast<std::size_t>(it - gens.begin());
}

void Representation::validate_closure() const {
    if (!group_.known_order) {
        return;
    }
    const auto members = enumerate_group(*this, *group_.known_order, false);
    if (members.size() != *group_.known_order) {
        throw std::invalid_argument(
            "Representation: closure of " + group_.name + " has " +
            std::to_string(members.size()) + " elements, expected " +
            std::to_string(*group_.known_order));
    }
}

ComplexMatrix rep_matrix(const Representation &rep, const GroupElement &element) {
    ComplexMatrix out = ComplexMatrix::identity(rep.dim());
    for (const auto &label : element.word) {
        out = out * rep.generator_image(label);
    }
    return out;
}

std::vector<GroupMember> enumerate_group(const Representation &rep,
                                         std::size_t max_order,
                                         bool materialize) {
    std::vector<GroupMember> members;
    auto too_many = [&] {
        throw std::runtime_error("enumerate_group: closure of " +
                                 rep.group().name + " exceeds " +
                                 std::to_string(max_order) + " elements");
    };
    if (max_order == 0) {
        too_many();
    }

    if (rep.is_permutation()) {
        const std::size_t n = rep.generator_permutation(0).size();
        std::set<Permutation> seen;
        std::vector<Permutation> perms;
        perms.push_back(Permutation::identity(n));
        seen.insert(perms.front());
        members.push_back({GroupElement{}, {}, perms.front()});
        for (std::size_t head = 0; head < perms.size(); ++head) {
            for (std::size_t g = 0; g < rep.num_generators(); ++g) {
                Permutation next = perms[head].then(rep.generator_permutation(g));
                if (!seen.insert(next).second) {
                    continue;
                }
                if (perms.size() == max_order) {
                    too_many();
                }
                GroupElement word = members[head].element;
                word.word.push_back(rep.group().generators[g]);
                perms.push_back(next);
                members.push_back({std::move(word), {}, std::move(next)});
            }
        }
        if (materialize) {
            for (auto &m : members) {
                m.matrix = permutation_operator(*m.qubit_permutation);
            }
        }
        return members;
    }

    members.push_back(
        {GroupElement{}, ComplexMatrix::identity(rep.dim()), std::nullopt});
    for (std::size_t head = 0; head < members.size(); ++head) {
        for (std::size_t g = 0; g < rep.num_generators(); ++g) {
            ComplexMatrix next = members[head].matrix * rep.generator_image(g);
            const bool known = std::any_of(
                members.begin(), members.end(), [&](const GroupMember &m) {
                    return max_abs_diff(m.matrix, next) < tol::kDedup;
                });
            if (known) {
                continue;
            }
            if (members.size() == max_order) {
                too_many();
            }
            GroupElement word = members[head].element;
            word.word.push_back(rep.group().generators[g]);
            members.push_back({std::move(word), std::move(next), std::nullopt});
        }
    }
    return members;
}

ComplexMatrix twirl(const Representation &rep, const ComplexMatrix &x,
                    std::size_t max_order) {
    check_square_dim(rep, x, "twirl");
    if (!is_hermitian(x, tol::kComposed)) {
        throw std::invalid_argument("twirl: operator is not Hermitian");
    }
    const std::size_t d = rep.dim();
    ComplexMatrix acc(d, d);
    const auto members = enumerate_group(rep, max_order, !rep.is_permutation());
    if (rep.is_permutation()) {
        for (const auto &m : members) {
            const auto map = index_map(*m.qubit_permutation);
            for (std::size_t a = 0; a < d; ++a) {
                for (std::size_t b = 0; b < d; ++b) {
                    acc(map[a], map[b]) += x(a, b);
                }
            }
        }
    } else {
        for (const auto &m : members) {
            acc += m.matrix * x * m.matrix.adjoint();
        }
    }
    acc *= Complex{1.0 / static_cast<double>(members.size()), 0.0};
    return acc;
}

InvarianceReport is_invariant(const Representation &rep, const ComplexMatrix &a,
                              double tol) {
    check_square_dim(rep, a, "is_invariant");
    InvarianceReport report;
    for (std::size_t g = 0; g < rep.num_generators(); ++g) {
        const double norm = commutator_norm(rep.generator_image(g), a);
        report.per_generator.push_back(norm);
        report.max_norm = std::max(report.max_norm, norm);
    }
    report.invariant = report.max_norm < tol;
    return report;
}

} // namespace equivar
