#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "meckit/core.hpp"

namespace meckit {

enum class RelationKind { Direct, Indirect };

// One ordered relation taken from a ladder. Direct means the two steps were
// adjacent; indirect means the target came two or more steps later.
struct RelationPair {
    int from = 0;
    int to = 0;
    RelationKind kind = RelationKind::Direct;

    bool operator==(const RelationPair&) const = default;
};

struct MatrixCell {
    int direct = 0;
    int indirect = 0;

    bool empty() const noexcept { return direct == 0 && indirect == 0; }
    bool operator==(const MatrixCell&) const = default;
};

// Square grid of (direct, indirect) counts over the whole lexicon, rows are
// source elements and columns targets. The diagonal stays (0,0) because a
// ladder never repeats an element.
class ImplicationMatrix {
  public:
    ImplicationMatrix() = default;

    // Throws std::invalid_argument on duplicate or non-positive ids.
    explicit ImplicationMatrix(std::vector<int> element_ids);

    const std::vector<int>& ids() const noexcept { return ids_; }
    std::size_t dimension() const noexcept { return ids_.size(); }

    bool contains(int id) const noexcept { return index_.count(id) != 0; }

    // Throws std::out_of_range for ids outside the matrix.
    const MatrixCell& at(int from, int to) const;

    void add_direct(int from, int to, int count = 1);
    void add_indirect(int from, int to, int count = 1);

    long long total_direct() const noexcept;
    long long total_indirect() const noexcept;
    int max_direct() const noexcept;

    bool operator==(const ImplicationMatrix& other) const {
        return ids_ == other.ids_ && cells_ == other.cells_;
    }

    // Cell-wise sum; both operands must cover the same ids.
    friend ImplicationMatrix operator+(const ImplicationMatrix& a,
                                       const ImplicationMatrix& b);

  private:
    std::size_t index_of(int id) const;

    std::vector<int> ids_;                       // ascending
    std::unordered_map<int, std::size_t> index_;
    std::vector<MatrixCell> cells_;              // row-major, dimension^2
};

// Adjacent ordered pairs of a ladder, in step order: exactly length-1 pairs.
std::vector<RelationPair> direct_pairs(const Ladder& ladder);

// All forward pairs that skip at least one step, ordered lexicographically by
// (source index, target index): (k-1)(k-2)/2 pairs for a ladder of length k.
std::vector<RelationPair> indirect_pairs(const Ladder& ladder);

// Aggregates every ladder's direct and indirect pairs over the full lexicon.
// The result does not depend on ladder order.
ImplicationMatrix build_matrix(const Corpus& corpus);

// Table cell text: empty cell renders as "", otherwise "<direct>:<indirect>"
// with the indirect count zero-padded to two digits, e.g. "17:01", "11:00".
std::string render_cell(const MatrixCell& cell);

struct ElementTotals {
    int out_direct = 0;
    int out_indirect = 0;
    int in_direct = 0;
    int in_indirect = 0;

    bool operator==(const ElementTotals&) const = default;
};

// Row (outgoing) and column (incoming) sums per element, ascending id.
std::vector<std::pair<int, ElementTotals>> matrix_row_totals(
    const ImplicationMatrix& matrix);

}  // namespace meckit
