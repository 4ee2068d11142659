#include "meckit/implication.hpp"

#include <algorithm>
#include <stdexcept>

namespace meckit {

ImplicationMatrix::ImplicationMatrix(std::vector<int> element_ids)
    : ids_(std::move(element_ids)) {
    std::sort(ids_.begin(), ids_.end());
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        if (ids_[i] <= 0) {
            throw std::invalid_argument("element id must be positive, got " +
                                        std::to_string(ids_[i]));
        }
        if (!index_.emplace(ids_[i], i).second) {
            throw std::invalid_argument("duplicate element id " + std::to_string(ids_[i]));
        }
    }
    cells_.assign(ids_.size() * ids_.size(), MatrixCell{});
}

std::size_t ImplicationMatrix::index_of(int id) const {
    const auto it = index_.find(id);
    if (it == index_.end()) {
        throw std::out_of_range("element id " + std::to_string(id) +
                                " is not in the matrix");
    }
    return it->second;
}

const MatrixCell& ImplicationMatrix::at(int from, int to) const {
    return cells_[index_of(from) * dimension() + index_of(to)];
}

void ImplicationMatrix::add_direct(int from, int to, int count) {
    if (from == to) throw std::invalid_argument("self-relation on element " + std::to_string(from));
    cells_[index_of(from) * dimension() + index_of(to)].direct += count;
}

void ImplicationMatrix::add_indirect(int from, int to, int count) {
    if (from == to) throw std::invalid_argument("self-relation on element " + std::to_string(from));
    cells_[index_of(from) * dimension() + index_of(to)].indirect += count;
}

long long ImplicationMatrix::total_direct() const noexcept {
    long long total = 0;
    for (const MatrixCell& cell : cells_) total += cell.direct;
    return total;
}

long long ImplicationMatrix::total_indirect() const noexcept {
    long long total = 0;
    for (const MatrixCell& cell : cells_) total += cell.indirect;
    return total;
}

int ImplicationMatrix::max_direct() const noexcept {
    int best = 0;
    for (const MatrixCell& cell : cells_) best = std::max(best, cell.direct);
    return best;
}

ImplicationMatrix operator+(const ImplicationMatrix& a, const ImplicationMatrix& b) {
    if (a.ids_ != b.ids_) {
        throw std::invalid_argument("matrices cover different element sets");
    }
    ImplicationMatrix sum = a;
    for (std::size_t i = 0; i < sum.cells_.size(); ++i) {
        sum.cells_[i].direct += b.cells_[i].direct;
        sum.cells_[i].indirect += b.cells_[i].indirect;
    }
    return sum;
}

std::vector<RelationPair> direct_pairs(const Ladder& ladder) {
    std::vector<RelationPair> pairs;
    if (ladder.steps.size() < 2) return pairs;
    pairs.reserve(ladder.steps.size() - 1);
    for (std::size_t i = 0; i + 1 < ladder.steps.size(); ++i) {
        pairs.push_back({ladder.steps[i], ladder.steps[i + 1], RelationKind::Direct});
    }
    return pairs;
}

std::vector<RelationPair> indirect_pairs(const Ladder& ladder) {
    std::vector<RelationPair> pairs;
    const std::size_t k = ladder.steps.size();
    if (k < 3) return pairs;
    pairs.reserve((k - 1) * (k - 2) / 2);
    for (std::size_t i = 0; i + 2 < k; ++i) {
        for (std::size_t j = i + 2; j < k; ++j) {
            pairs.push_back({ladder.steps[i], ladder.steps[j], RelationKind::Indirect});
        }
    }
    return pairs;
}

ImplicationMatrix build_matrix(const Corpus& corpus) {
    ImplicationMatrix matrix(corpus.lexicon.ids());
    for (const Ladder& ladder : corpus.ladders) {
        for (const RelationPair& pair : direct_pairs(ladder)) {
            matrix.add_direct(pair.from, pair.to);
        }
        for (const RelationPair& pair : indirect_pairs(ladder)) {
            matrix.add_indirect(pair.from, pair.to);
        }
    }
    return matrix;
}

std::string render_cell(const MatrixCell& cell) {
    if (cell.empty()) return "";
    std::string out = std::to_string(cell.direct);
    out += ':';
    if (cell.indirect < 10) out += '0';
    out += std::to_string(cell.indirect);
    return out;
}

std::vector<std::pair<int, ElementTotals>> matrix_row_totals(
    const ImplicationMatrix& matrix) {
    std::vector<std::pair<int, ElementTotals>> totals;
    totals.reserve(matrix.dimension());
    for (const int id : matrix.ids()) totals.emplace_back(id, ElementTotals{});
    for (std::size_t r = 0; r < matrix.dimension(); ++r) {
        for (std::size_t c = 0; c < matrix.dimension(); ++c) {
            const MatrixCell& cell = matrix.at(matrix.ids()[r], matrix.ids()[c]);
            totals[r].second.out_direct += cell.direct;
            totals[r].second.out_indirect += cell.indirect;
            totals[c].second.in_direct += cell.direct;
            totals[c].second.in_indirect += cell.indirect;
        }
    }
    return totals;
}

}  // namespace meckit
