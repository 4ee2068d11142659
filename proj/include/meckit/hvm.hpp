#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "meckit/core.hpp"
#include "meckit/implication.hpp"

namespace meckit {

struct HvmConfig {
    // Minimum direct count a relation needs to become a map link. Four is
    // the customary threshold in laddering studies.
    int cutoff = 4;
    // Upper bound on chain length in nodes; only relevant when same-level
    // links form cycles, since category-monotone maps are acyclic across
    // levels.
    int max_chain_length = 12;
};

struct HvmNode {
    int id = 0;
    std::string label;
    Category category = Category::Attribute;

    bool operator==(const HvmNode&) const = default;
};

struct HvmEdge {
    int from = 0;
    int to = 0;
    int direct = 0;    // >= cutoff by construction
    int indirect = 0;  // carried through as metadata, never gates inclusion

    bool operator==(const HvmEdge&) const = default;
};

// Hierarchical value map: the directed graph of relations whose direct count
// meets the cutoff. Nodes are exactly the endpoints of retained edges and are
// layered by their lexicon category. Everything is stored sorted, so equal
// inputs give byte-identical serializations.
class Hvm {
  public:
    Hvm() = default;

    const HvmConfig& config() const noexcept { return config_; }
    const std::vector<HvmNode>& nodes() const noexcept { return nodes_; }   // ascending id
    const std::vector<HvmEdge>& edges() const noexcept { return edges_; }   // ascending (from, to)
    bool empty() const noexcept { return edges_.empty(); }

    // Node ids of one layer, ascending.
    std::vector<int> layer(Category category) const;

    const HvmNode* find_node(int id) const noexcept;
    const HvmEdge* find_edge(int from, int to) const noexcept;

    // Outgoing edges of a node, ascending by target id.
    std::span<const HvmEdge> out_edges(int id) const noexcept;

  private:
    friend Hvm build_hvm(const ImplicationMatrix&, const Lexicon&, const HvmConfig&);

    HvmConfig config_;
    std::vector<HvmNode> nodes_;
    std::vector<HvmEdge> edges_;
    std::unordered_map<int, std::size_t> node_index_;
    std::unordered_map<int, std::pair<std::size_t, std::size_t>> out_ranges_;
};

// Keeps exactly the matrix cells with direct >= config.cutoff. The matrix
// must cover the same element ids as the lexicon. An empty map is a valid
// result. Throws std::invalid_argument on a bad config or mismatched inputs.
Hvm build_hvm(const ImplicationMatrix& matrix, const Lexicon& lexicon,
              const HvmConfig& config = {});

// A simple path from an attribute node to a value node, scored by the sum of
// direct counts along its edges.
struct Chain {
    std::vector<int> path;
    int score = 0;

    bool operator==(const Chain&) const = default;
};

// All simple attribute-to-value paths of the map, capped at
// config.max_chain_length nodes. A path that touches several value nodes
// yields one chain per value reached. Sorted by descending score, ties by
// lexicographic path.
std::vector<Chain> enumerate_chains(const Hvm& hvm);

// Sum of direct counts along the given node sequence. Every consecutive pair
// must be a map edge; a missing edge raises std::invalid_argument naming it.
int path_score(const Hvm& hvm, std::span<const int> path);

// Cumulative frequency of the whole attribute-to-value pathway bundle: the
// sum of direct counts over every edge lying on at least one simple path
// from `attribute_id` to `value_id`. Equals the best path score when exactly
// one simple path exists; 0 when the value is unreachable. Throws when either
// id is not a map node of the expected category.
int subgraph_score(const Hvm& hvm, int attribute_id, int value_id);

struct CutoffRow {
    int cutoff = 0;
    std::size_t edge_count = 0;
    double percent_retained = 0.0;  // share of all direct relations kept

    bool operator==(const CutoffRow&) const = default;
};

// How the map shrinks as the cutoff grows: one row per cutoff 1..max_cutoff
// with the retained link count and the percentage of direct relations kept.
std::vector<CutoffRow> cutoff_sensitivity(const ImplicationMatrix& matrix,
                                          const Lexicon& lexicon, int max_cutoff);

}  // namespace meckit
