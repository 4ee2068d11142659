// Random-input generators and independent oracles shared by the unit and
// acceptance suites. Everything is seeded, so failures reproduce exactly.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "meckit/core.hpp"
#include "meckit/hvm.hpp"

namespace meckit::testsupport {

inline Lexicon random_lexicon(std::mt19937& rng, int max_elements = 8) {
    std::uniform_int_distribution<int> size_dist(2, max_elements);
    const int n = size_dist(rng);
    std::vector<int> ids(50);
    std::iota(ids.begin(), ids.end(), 1);
    std::shuffle(ids.begin(), ids.end(), rng);
    std::uniform_int_distribution<int> cat_dist(0, 2);
    std::vector<Element> elements;
    for (int i = 0; i < n; ++i) {
        const auto category = static_cast<Category>(cat_dist(rng));
        elements.push_back({ids[static_cast<std::size_t>(i)],
                            "element " + std::to_string(ids[static_cast<std::size_t>(i)]),
                            category});
    }
    return Lexicon(std::move(elements));
}

// Samples distinct elements and orders them by rising category rank, which
// is exactly the shape a valid ladder must have.
inline Ladder random_ladder(std::mt19937& rng, const Lexicon& lexicon, int max_len = 10) {
    const int upper = std::min<int>(max_len, static_cast<int>(lexicon.size()));
    std::uniform_int_distribution<int> len_dist(2, upper);
    const int k = len_dist(rng);
    std::vector<std::size_t> indices(lexicon.size());
    std::iota(indices.begin(), indices.end(), std::size_t{0});
    std::shuffle(indices.begin(), indices.end(), rng);
    indices.resize(static_cast<std::size_t>(k));
    std::stable_sort(indices.begin(), indices.end(), [&](std::size_t a, std::size_t b) {
        return category_rank(lexicon.elements()[a].category) <
               category_rank(lexicon.elements()[b].category);
    });
    Ladder ladder;
    ladder.respondent = "R" + std::to_string(rng() % 10);
    for (const std::size_t i : indices) ladder.steps.push_back(lexicon.elements()[i].id);
    return ladder;
}

inline Corpus random_corpus(std::mt19937& rng, int max_elements = 8, int max_ladders = 10,
                            int max_len = 8) {
    Corpus corpus;
    corpus.lexicon = random_lexicon(rng, max_elements);
    std::uniform_int_distribution<int> count_dist(1, max_ladders);
    const int n = count_dist(rng);
    for (int i = 0; i < n; ++i) {
        corpus.ladders.push_back(random_ladder(rng, corpus.lexicon, max_len));
    }
    return corpus;
}

// Independent relation-count oracle: walks every (i, j) index pair of every
// ladder directly, without touching the pair-extraction helpers.
inline std::map<std::pair<int, int>, std::pair<int, int>> brute_force_counts(
    const Corpus& corpus) {
    std::map<std::pair<int, int>, std::pair<int, int>> counts;
    for (const Ladder& ladder : corpus.ladders) {
        for (std::size_t i = 0; i < ladder.steps.size(); ++i) {
            for (std::size_t j = i + 1; j < ladder.steps.size(); ++j) {
                auto& cell = counts[{ladder.steps[i], ladder.steps[j]}];
                if (j == i + 1) ++cell.first;
                else ++cell.second;
            }
        }
    }
    return counts;
}

// Simple-path counter used as the oracle for score-rule comparisons.
inline int count_simple_paths(const Hvm& hvm, int from, int to) {
    std::vector<int> on_path{from};
    int count = 0;
    auto walk = [&](auto&& self, int node) -> void {
        if (node == to) {
            ++count;
            return;
        }
        for (const HvmEdge& edge : hvm.out_edges(node)) {
            if (std::find(on_path.begin(), on_path.end(), edge.to) != on_path.end()) continue;
            on_path.push_back(edge.to);
            self(self, edge.to);
            on_path.pop_back();
        }
    };
    walk(walk, from);
    return count;
}

}  // namespace meckit::testsupport
