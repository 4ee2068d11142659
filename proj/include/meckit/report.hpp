#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "meckit/hvm.hpp"
#include "meckit/implication.hpp"
#include "meckit/ingest.hpp"

namespace meckit {

struct ElementSummaryRow {
    Element element;
    int count = 0;  // occurrences across all ladder steps

    bool operator==(const ElementSummaryRow&) const = default;
};

// Frequency summary of the whole lexicon, grouped Attribute / Consequence /
// Value; inside a group rows sort by descending count, then ascending id.
// Elements that never occur are still listed with count 0.
std::vector<ElementSummaryRow> element_summary(const Corpus& corpus);

// How an attribute-to-value cell is scored: best single chain, or the whole
// pathway bundle between the two nodes.
enum class ScoreRule { PathMax, Subgraph };

const char* score_rule_name(ScoreRule rule) noexcept;
std::optional<ScoreRule> score_rule_from_name(std::string_view name) noexcept;

struct AttributeValueTable {
    ScoreRule rule = ScoreRule::PathMax;
    std::vector<int> attribute_ids;        // row order: descending total, ties ascending id
    std::vector<int> value_ids;            // ascending id
    std::vector<std::vector<int>> cells;   // [row][column]
    std::vector<long long> row_totals;
    long long grand_total = 0;

    // Row share of the grand total, in percent; 0 when the table is empty.
    double row_percent(std::size_t row) const;
};

AttributeValueTable attribute_value_table(const Hvm& hvm, ScoreRule rule);

struct TopLink {
    int from = 0;
    int to = 0;
    int direct = 0;
    int indirect = 0;

    bool operator==(const TopLink&) const = default;
};

// The n strongest links by direct count, ties broken by ascending (from, to).
// Only pairs with at least one direct relation qualify; fewer than n rows
// come back when the matrix has fewer such pairs.
std::vector<TopLink> top_links(const ImplicationMatrix& matrix, std::size_t n);

// Optional grouping of value columns for the attribute/value table, e.g.
// personal-achievement vs social values. Groups keep first-seen order.
struct ValueGroups {
    std::vector<std::pair<std::string, std::vector<int>>> groups;
};

// Mapping file: CSV with header `id,group`; ids must be value elements.
Parsed<ValueGroups> parse_value_groups(std::istream& input, const Lexicon& lexicon,
                                       std::string file = "<input>");

// Fixed-width text renderers. Deterministic: equal inputs, identical bytes.
std::string render_element_summary(const std::vector<ElementSummaryRow>& rows);
std::string render_attribute_value_table(const AttributeValueTable& table,
                                         const Lexicon& lexicon,
                                         const std::optional<ValueGroups>& groups = {});
std::string render_top_links(const std::vector<TopLink>& links, const Lexicon& lexicon);
std::string render_sensitivity(const std::vector<CutoffRow>& rows);
std::string render_matrix_text(const ImplicationMatrix& matrix);

}  // namespace meckit
