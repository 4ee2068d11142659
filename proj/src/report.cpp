#include "meckit/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "meckit/textutil.hpp"

namespace meckit {
namespace {

std::string pad_left(std::string_view text, std::size_t width) {
    std::string out;
    if (text.size() < width) out.assign(width - text.size(), ' ');
    out += text;
    return out;
}

std::string pad_right(std::string_view text, std::size_t width) {
    std::string out(text);
    if (out.size() < width) out.append(width - out.size(), ' ');
    return out;
}

std::string label_of(const Lexicon& lexicon, int id) {
    const Element* element = lexicon.find(id);
    return element != nullptr ? element->label : "element " + std::to_string(id);
}

}  // namespace

std::vector<ElementSummaryRow> element_summary(const Corpus& corpus) {
    std::unordered_map<int, int> counts;
    for (const Ladder& ladder : corpus.ladders) {
        for (const int id : ladder.steps) ++counts[id];
    }
    std::vector<ElementSummaryRow> rows;
    rows.reserve(corpus.lexicon.size());
    for (const Element& element : corpus.lexicon.elements()) {
        const auto it = counts.find(element.id);
        rows.push_back({element, it == counts.end() ? 0 : it->second});
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const ElementSummaryRow& a, const ElementSummaryRow& b) {
                         const int ra = category_rank(a.element.category);
                         const int rb = category_rank(b.element.category);
                         if (ra != rb) return ra < rb;
                         if (a.count != b.count) return a.count > b.count;
                         return a.element.id < b.element.id;
                     });
    return rows;
}

const char* score_rule_name(ScoreRule rule) noexcept {
    return rule == ScoreRule::PathMax ? "path_max" : "subgraph";
}

std::optional<ScoreRule> score_rule_from_name(std::string_view name) noexcept {
    if (name == "path_max") return ScoreRule::PathMax;
    if (name == "subgraph") return ScoreRule::Subgraph;
    return std::nullopt;
}

double AttributeValueTable::row_percent(std::size_t row) const {
    if (grand_total == 0) return 0.0;
    return 100.0 * static_cast<double>(row_totals[row]) /
           static_cast<double>(grand_total);
}

AttributeValueTable attribute_value_table(const Hvm& hvm, ScoreRule rule) {
    AttributeValueTable table;
    table.rule = rule;
    table.attribute_ids = hvm.layer(Category::Attribute);
    table.value_ids = hvm.layer(Category::Value);

    std::map<std::pair<int, int>, int> scores;
    if (rule == ScoreRule::PathMax) {
        for (const Chain& chain : enumerate_chains(hvm)) {
            const std::pair<int, int> key{chain.path.front(), chain.path.back()};
            auto [it, inserted] = scores.emplace(key, chain.score);
            if (!inserted) it->second = std::max(it->second, chain.score);
        }
    } else {
        for (const int a : table.attribute_ids) {
            for (const int v : table.value_ids) {
                scores[{a, v}] = subgraph_score(hvm, a, v);
            }
        }
    }

    for (const int a : table.attribute_ids) {
        std::vector<int> row;
        long long total = 0;
        for (const int v : table.value_ids) {
            const auto it = scores.find({a, v});
            const int score = it == scores.end() ? 0 : it->second;
            row.push_back(score);
            total += score;
        }
        table.cells.push_back(std::move(row));
        table.row_totals.push_back(total);
        table.grand_total += total;
    }

    // Order rows by descending total, keeping ascending id on ties.
    std::vector<std::size_t> order(table.attribute_ids.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (table.row_totals[a] != table.row_totals[b]) {
            return table.row_totals[a] > table.row_totals[b];
        }
        return table.attribute_ids[a] < table.attribute_ids[b];
    });
    AttributeValueTable sorted;
    sorted.rule = table.rule;
    sorted.value_ids = table.value_ids;
    sorted.grand_total = table.grand_total;
    for (const std::size_t i : order) {
        sorted.attribute_ids.push_back(table.attribute_ids[i]);
        sorted.cells.push_back(std::move(table.cells[i]));
        sorted.row_totals.push_back(table.row_totals[i]);
    }
    return sorted;
}

std::vector<TopLink> top_links(const ImplicationMatrix& matrix, std::size_t n) {
    std::vector<TopLink> links;
    for (const int from : matrix.ids()) {
        for (const int to : matrix.ids()) {
            if (from == to) continue;
            const MatrixCell& cell = matrix.at(from, to);
            if (cell.direct > 0) links.push_back({from, to, cell.direct, cell.indirect});
        }
    }
    std::sort(links.begin(), links.end(), [](const TopLink& a, const TopLink& b) {
        if (a.direct != b.direct) return a.direct > b.direct;
        if (a.from != b.from) return a.from < b.from;
        return a.to < b.to;
    });
    if (links.size() > n) links.resize(n);
    return links;
}

Parsed<ValueGroups> parse_value_groups(std::istream& input, const Lexicon& lexicon,
                                       std::string file) {
    Parsed<ValueGroups> result;
    auto diagnose = [&](std::size_t line, std::string message) {
        result.diagnostics.push_back({file, line, std::move(message)});
    };

    ValueGroups groups;
    std::unordered_map<std::string, std::size_t> group_index;
    std::unordered_set<int> seen;
    std::string line;
    std::vector<std::string> fields;
    std::size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(input, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string_view t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        if (!header_seen) {
            header_seen = true;
            if (t != "id,group") diagnose(lineno, "expected header 'id,group'");
            continue;
        }
        if (!split_csv_line(line, fields) || fields.size() != 2) {
            diagnose(lineno, "expected 2 fields 'id,group'");
            continue;
        }
        int id = 0;
        try {
            id = std::stoi(std::string(trim(fields[0])));
        } catch (...) {
            diagnose(lineno, "invalid element id '" + std::string(trim(fields[0])) + "'");
            continue;
        }
        const Element* element = lexicon.find(id);
        if (element == nullptr) {
            diagnose(lineno, "unknown element id " + std::to_string(id));
            continue;
        }
        if (element->category != Category::Value) {
            diagnose(lineno, "element " + std::to_string(id) + " is not a value");
            continue;
        }
        if (!seen.insert(id).second) {
            diagnose(lineno, "element " + std::to_string(id) + " listed twice");
            continue;
        }
        const std::string group(trim(fields[1]));
        if (group.empty()) {
            diagnose(lineno, "empty group name");
            continue;
        }
        const auto [it, inserted] = group_index.emplace(group, groups.groups.size());
        if (inserted) groups.groups.push_back({group, {}});
        groups.groups[it->second].second.push_back(id);
    }
    if (!header_seen) diagnose(std::max<std::size_t>(lineno, 1), "missing header 'id,group'");
    if (result.diagnostics.empty()) result.value = std::move(groups);
    return result;
}

std::string render_element_summary(const std::vector<ElementSummaryRow>& rows) {
    std::size_t id_width = 2;
    std::size_t label_width = 5;
    std::size_t count_width = 5;
    for (const ElementSummaryRow& row : rows) {
        id_width = std::max(id_width, std::to_string(row.element.id).size());
        label_width = std::max(label_width, row.element.label.size());
        count_width = std::max(count_width, std::to_string(row.count).size());
    }

    std::string out;
    Category current = Category::Attribute;
    bool first_section = true;
    for (const ElementSummaryRow& row : rows) {
        if (first_section || row.element.category != current) {
            if (!first_section) out += '\n';
            current = row.element.category;
            first_section = false;
            out += category_name(current);
            out += "s\n";
            out += "  " + pad_left("id", id_width) + "  " + pad_right("label", label_width) +
                   "  " + pad_left("count", count_width) + "\n";
        }
        out += "  " + pad_left(std::to_string(row.element.id), id_width) + "  " +
               pad_right(row.element.label, label_width) + "  " +
               pad_left(std::to_string(row.count), count_width) + "\n";
    }
    return out;
}

std::string render_attribute_value_table(const AttributeValueTable& table,
                                         const Lexicon& lexicon,
                                         const std::optional<ValueGroups>& groups) {
    // Column plan: value columns possibly arranged in groups, each group
    // followed by its subtotal, then the row total and percent.
    struct Column {
        std::string header;      // value id or a total marker
        int value_index = -1;    // -1 for subtotal columns
        std::vector<int> subtotal_of;  // value indices summed by this column
    };
    std::vector<Column> columns;
    std::vector<std::pair<std::string, std::size_t>> group_spans;  // name, column count

    std::unordered_map<int, std::size_t> value_index;
    for (std::size_t i = 0; i < table.value_ids.size(); ++i) {
        value_index.emplace(table.value_ids[i], i);
    }

    if (groups.has_value() && !groups->groups.empty()) {
        std::unordered_set<int> covered;
        for (const auto& [name, ids] : groups->groups) {
            std::vector<int> members;
            for (const int id : ids) {
                const auto it = value_index.find(id);
                if (it == value_index.end()) continue;  // value not in this map
                members.push_back(static_cast<int>(it->second));
                covered.insert(id);
            }
            if (members.empty()) continue;
            for (const int m : members) {
                columns.push_back({std::to_string(table.value_ids[m]), m, {}});
            }
            columns.push_back({"total", -1, members});
            group_spans.push_back({name, members.size() + 1});
        }
        std::vector<int> rest;
        for (std::size_t i = 0; i < table.value_ids.size(); ++i) {
            if (covered.count(table.value_ids[i]) == 0) rest.push_back(static_cast<int>(i));
        }
        if (!rest.empty()) {
            for (const int m : rest) {
                columns.push_back({std::to_string(table.value_ids[m]), m, {}});
            }
            columns.push_back({"total", -1, rest});
            group_spans.push_back({"other", rest.size() + 1});
        }
    } else {
        for (std::size_t i = 0; i < table.value_ids.size(); ++i) {
            columns.push_back({std::to_string(table.value_ids[i]), static_cast<int>(i), {}});
        }
    }

    auto cell_value = [&](std::size_t row, const Column& column) -> long long {
        if (column.value_index >= 0) {
            return table.cells[row][static_cast<std::size_t>(column.value_index)];
        }
        long long sum = 0;
        for (const int m : column.subtotal_of) {
            sum += table.cells[row][static_cast<std::size_t>(m)];
        }
        return sum;
    };

    std::size_t attr_width = std::string("attribute").size();
    for (const int id : table.attribute_ids) {
        attr_width = std::max(attr_width,
                              std::to_string(id).size() + 1 + label_of(lexicon, id).size());
    }
    std::vector<std::size_t> widths;
    for (const Column& column : columns) {
        std::size_t w = std::max<std::size_t>(column.header.size(), 3);
        for (std::size_t row = 0; row < table.attribute_ids.size(); ++row) {
            w = std::max(w, std::to_string(cell_value(row, column)).size());
        }
        widths.push_back(w);
    }
    // A group heading must fit over its block; widen the block's last column
    // when the name is longer than the columns under it.
    {
        std::size_t column_at = 0;
        for (const auto& [name, span] : group_spans) {
            std::size_t span_width = 0;
            for (std::size_t i = 0; i < span; ++i) span_width += 2 + widths[column_at + i];
            const std::size_t need = name.size() + 2;
            if (span_width < need) widths[column_at + span - 1] += need - span_width;
            column_at += span;
        }
    }
    const std::size_t total_width =
        std::max<std::size_t>(5, std::to_string(table.grand_total).size());

    std::string out = "rule: ";
    out += score_rule_name(table.rule);
    out += '\n';

    if (!group_spans.empty()) {
        std::string line(2 + attr_width, ' ');
        std::size_t column_at = 0;
        for (const auto& [name, span] : group_spans) {
            std::size_t span_width = 0;
            for (std::size_t i = 0; i < span; ++i) span_width += 2 + widths[column_at + i];
            line += pad_right("  " + name, span_width);
            column_at += span;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }

    out += "  " + pad_right("attribute", attr_width);
    for (std::size_t c = 0; c < columns.size(); ++c) {
        out += "  " + pad_left(columns[c].header, widths[c]);
    }
    out += "  " + pad_left("total", total_width) + "  percent\n";

    for (std::size_t row = 0; row < table.attribute_ids.size(); ++row) {
        const int id = table.attribute_ids[row];
        out += "  " + pad_right(std::to_string(id) + " " + label_of(lexicon, id), attr_width);
        for (std::size_t c = 0; c < columns.size(); ++c) {
            out += "  " + pad_left(std::to_string(cell_value(row, columns[c])), widths[c]);
        }
        out += "  " + pad_left(std::to_string(table.row_totals[row]), total_width);
        out += "  " + pad_left(format_one_decimal(table.row_percent(row)), 7) + "\n";
    }

    // Column totals.
    out += "  " + pad_right("total", attr_width);
    for (std::size_t c = 0; c < columns.size(); ++c) {
        long long sum = 0;
        for (std::size_t row = 0; row < table.attribute_ids.size(); ++row) {
            sum += cell_value(row, columns[c]);
        }
        out += "  " + pad_left(std::to_string(sum), widths[c]);
    }
    out += "  " + pad_left(std::to_string(table.grand_total), total_width) + "\n";

    if (!table.value_ids.empty()) {
        out += "values:";
        for (std::size_t i = 0; i < table.value_ids.size(); ++i) {
            out += i == 0 ? " " : ", ";
            out += std::to_string(table.value_ids[i]) + " = " +
                   label_of(lexicon, table.value_ids[i]);
        }
        out += '\n';
    }
    return out;
}

std::string render_top_links(const std::vector<TopLink>& links, const Lexicon& lexicon) {
    std::size_t from_width = std::string("from").size();
    std::size_t to_width = std::string("to").size();
    for (const TopLink& link : links) {
        from_width = std::max(from_width, std::to_string(link.from).size() + 1 +
                                              label_of(lexicon, link.from).size());
        to_width = std::max(to_width, std::to_string(link.to).size() + 1 +
                                          label_of(lexicon, link.to).size());
    }
    std::string out = "  " + pad_left("rank", 4) + "  " + pad_right("from", from_width) +
                      "  " + pad_right("to", to_width) + "  " + pad_left("direct", 6) +
                      "  " + pad_left("indirect", 8) + "\n";
    for (std::size_t i = 0; i < links.size(); ++i) {
        const TopLink& link = links[i];
        out += "  " + pad_left(std::to_string(i + 1), 4) + "  " +
               pad_right(std::to_string(link.from) + " " + label_of(lexicon, link.from),
                         from_width) +
               "  " +
               pad_right(std::to_string(link.to) + " " + label_of(lexicon, link.to),
                         to_width) +
               "  " + pad_left(std::to_string(link.direct), 6) + "  " +
               pad_left(std::to_string(link.indirect), 8) + "\n";
    }
    return out;
}

std::string render_sensitivity(const std::vector<CutoffRow>& rows) {
    std::size_t links_width = std::string("links").size();
    for (const CutoffRow& row : rows) {
        links_width = std::max(links_width, std::to_string(row.edge_count).size());
    }
    std::string out = "  " + pad_left("cutoff", 6) + "  " + pad_left("links", links_width) +
                      "  " + pad_left("percent_direct_retained", 23) + "\n";
    for (const CutoffRow& row : rows) {
        out += "  " + pad_left(std::to_string(row.cutoff), 6) + "  " +
               pad_left(std::to_string(row.edge_count), links_width) + "  " +
               pad_left(format_one_decimal(row.percent_retained), 23) + "\n";
    }
    return out;
}

std::string render_matrix_text(const ImplicationMatrix& matrix) {
    std::size_t width = 2;
    for (const int id : matrix.ids()) {
        width = std::max(width, std::to_string(id).size());
        for (const int to : matrix.ids()) {
            if (id == to) continue;
            width = std::max(width, render_cell(matrix.at(id, to)).size());
        }
    }
    std::string out = pad_left("", width);
    for (const int id : matrix.ids()) {
        out += "  " + pad_left(std::to_string(id), width);
    }
    out += '\n';
    for (const int from : matrix.ids()) {
        out += pad_left(std::to_string(from), width);
        for (const int to : matrix.ids()) {
            out += "  " + pad_left(from == to ? "" : render_cell(matrix.at(from, to)), width);
        }
        out += '\n';
    }
    return out;
}

}  // namespace meckit
