#include "meckit/hvm.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace meckit {
namespace {

void check_matrix_matches_lexicon(const ImplicationMatrix& matrix, const Lexicon& lexicon) {
    if (matrix.ids() != lexicon.ids()) {
        throw std::invalid_argument("matrix and lexicon cover different element sets");
    }
}

std::string edge_name(int from, int to) {
    return std::to_string(from) + "->" + std::to_string(to);
}

}  // namespace

std::vector<int> Hvm::layer(Category category) const {
    std::vector<int> out;
    for (const HvmNode& node : nodes_) {
        if (node.category == category) out.push_back(node.id);
    }
    return out;
}

const HvmNode* Hvm::find_node(int id) const noexcept {
    const auto it = node_index_.find(id);
    return it == node_index_.end() ? nullptr : &nodes_[it->second];
}

const HvmEdge* Hvm::find_edge(int from, int to) const noexcept {
    for (const HvmEdge& edge : out_edges(from)) {
        if (edge.to == to) return &edge;
    }
    return nullptr;
}

std::span<const HvmEdge> Hvm::out_edges(int id) const noexcept {
    const auto it = out_ranges_.find(id);
    if (it == out_ranges_.end()) return {};
    return {edges_.data() + it->second.first, it->second.second - it->second.first};
}

Hvm build_hvm(const ImplicationMatrix& matrix, const Lexicon& lexicon,
              const HvmConfig& config) {
    if (config.cutoff < 1) throw std::invalid_argument("cutoff must be at least 1");
    if (config.max_chain_length < 2) {
        throw std::invalid_argument("max chain length must be at least 2");
    }
    check_matrix_matches_lexicon(matrix, lexicon);

    Hvm hvm;
    hvm.config_ = config;

    std::set<int> node_ids;
    for (const int from : matrix.ids()) {
        for (const int to : matrix.ids()) {
            if (from == to) continue;
            const MatrixCell& cell = matrix.at(from, to);
            if (cell.direct >= config.cutoff) {
                hvm.edges_.push_back({from, to, cell.direct, cell.indirect});
                node_ids.insert(from);
                node_ids.insert(to);
            }
        }
    }
    // ids() iterates ascending, so edges are already sorted by (from, to).

    for (const int id : node_ids) {
        const Element* element = lexicon.find(id);
        hvm.node_index_.emplace(id, hvm.nodes_.size());
        hvm.nodes_.push_back({id, element->label, element->category});
    }
    for (std::size_t i = 0; i < hvm.edges_.size();) {
        std::size_t j = i;
        while (j < hvm.edges_.size() && hvm.edges_[j].from == hvm.edges_[i].from) ++j;
        hvm.out_ranges_.emplace(hvm.edges_[i].from, std::make_pair(i, j));
        i = j;
    }
    return hvm;
}

std::vector<Chain> enumerate_chains(const Hvm& hvm) {
    std::vector<Chain> chains;
    const std::size_t cap = static_cast<std::size_t>(hvm.config().max_chain_length);

    std::vector<int> path;
    std::unordered_set<int> on_path;
    int score = 0;

    auto walk = [&](auto&& self, int node) -> void {
        if (path.size() >= cap) return;
        for (const HvmEdge& edge : hvm.out_edges(node)) {
            if (on_path.count(edge.to) != 0) continue;
            path.push_back(edge.to);
            on_path.insert(edge.to);
            score += edge.direct;
            if (hvm.find_node(edge.to)->category == Category::Value) {
                chains.push_back({path, score});
            }
            self(self, edge.to);
            score -= edge.direct;
            on_path.erase(edge.to);
            path.pop_back();
        }
    };

    for (const HvmNode& node : hvm.nodes()) {
        if (node.category != Category::Attribute) continue;
        path.assign(1, node.id);
        on_path = {node.id};
        score = 0;
        walk(walk, node.id);
    }

    std::sort(chains.begin(), chains.end(), [](const Chain& a, const Chain& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.path < b.path;
    });
    return chains;
}

int path_score(const Hvm& hvm, std::span<const int> path) {
    int score = 0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const HvmEdge* edge = hvm.find_edge(path[i], path[i + 1]);
        if (edge == nullptr) {
            throw std::invalid_argument("no hvm edge " + edge_name(path[i], path[i + 1]));
        }
        score += edge->direct;
    }
    return score;
}

int subgraph_score(const Hvm& hvm, int attribute_id, int value_id) {
    const HvmNode* attribute = hvm.find_node(attribute_id);
    if (attribute == nullptr) {
        throw std::out_of_range("element id " + std::to_string(attribute_id) +
                                " is not an hvm node");
    }
    const HvmNode* value = hvm.find_node(value_id);
    if (value == nullptr) {
        throw std::out_of_range("element id " + std::to_string(value_id) +
                                " is not an hvm node");
    }
    if (attribute->category != Category::Attribute) {
        throw std::invalid_argument("element " + std::to_string(attribute_id) +
                                    " is not an attribute node");
    }
    if (value->category != Category::Value) {
        throw std::invalid_argument("element " + std::to_string(value_id) +
                                    " is not a value node");
    }

    // Restrict the walk to nodes that can still reach the value; without the
    // restriction the simple-path search would wander into dead branches.
    std::unordered_set<int> reaches_value{value_id};
    for (bool grew = true; grew;) {
        grew = false;
        for (const HvmEdge& edge : hvm.edges()) {
            if (reaches_value.count(edge.to) != 0 && reaches_value.insert(edge.from).second) {
                grew = true;
            }
        }
    }
    if (reaches_value.count(attribute_id) == 0) return 0;

    std::set<std::pair<int, int>> on_some_path;
    std::vector<std::pair<int, int>> path_edges;
    std::unordered_set<int> on_path{attribute_id};

    auto walk = [&](auto&& self, int node) -> void {
        if (node == value_id) {
            on_some_path.insert(path_edges.begin(), path_edges.end());
            return;
        }
        for (const HvmEdge& edge : hvm.out_edges(node)) {
            if (reaches_value.count(edge.to) == 0 || on_path.count(edge.to) != 0) continue;
            path_edges.emplace_back(edge.from, edge.to);
            on_path.insert(edge.to);
            self(self, edge.to);
            on_path.erase(edge.to);
            path_edges.pop_back();
        }
    };
    walk(walk, attribute_id);

    int total = 0;
    for (const auto& [from, to] : on_some_path) {
        total += hvm.find_edge(from, to)->direct;
    }
    return total;
}

std::vector<CutoffRow> cutoff_sensitivity(const ImplicationMatrix& matrix,
                                          const Lexicon& lexicon, int max_cutoff) {
    if (max_cutoff < 1) throw std::invalid_argument("max cutoff must be at least 1");
    check_matrix_matches_lexicon(matrix, lexicon);

    const long long total = matrix.total_direct();
    std::vector<CutoffRow> rows;
    rows.reserve(static_cast<std::size_t>(max_cutoff));
    for (int cutoff = 1; cutoff <= max_cutoff; ++cutoff) {
        CutoffRow row;
        row.cutoff = cutoff;
        long long retained = 0;
        for (const int from : matrix.ids()) {
            for (const int to : matrix.ids()) {
                if (from == to) continue;
                const int direct = matrix.at(from, to).direct;
                if (direct >= cutoff) {
                    ++row.edge_count;
                    retained += direct;
                }
            }
        }
        row.percent_retained = total > 0 ? 100.0 * static_cast<double>(retained) /
                                               static_cast<double>(total)
                                         : 0.0;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace meckit
