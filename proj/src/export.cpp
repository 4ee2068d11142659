#include "meckit/export.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "meckit/textutil.hpp"

namespace meckit {
namespace {

std::string dot_quote(std::string_view text) {
    std::string out = "\"";
    for (const char c : text) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string to_dot(const Hvm& hvm, const DotOptions& options) {
    const bool label_indirect =
        options.show_indirect || options.edge_label == DotOptions::EdgeLabel::DirectAndIndirect;

    std::string out = "digraph hvm {\n";
    out += "  rankdir=BT;\n";
    out += "  node [shape=box];\n";
    if (options.rank_by_category && !hvm.nodes().empty()) {
        // rankdir=BT lays ranks bottom-up, keeping attributes at the bottom
        // and values at the top of the drawing.
        for (const Category category :
             {Category::Attribute, Category::Consequence, Category::Value}) {
            const std::vector<int> ids = hvm.layer(category);
            if (ids.empty()) continue;
            out += "  { rank=same;";
            for (const int id : ids) out += " n" + std::to_string(id) + ";";
            out += " }\n";
        }
    }
    for (const HvmNode& node : hvm.nodes()) {
        out += "  n" + std::to_string(node.id) + " [label=" +
               dot_quote(node.label + " (" + std::to_string(node.id) + ")") + "];\n";
    }
    for (const HvmEdge& edge : hvm.edges()) {
        std::string label = std::to_string(edge.direct);
        if (label_indirect) label += ":" + std::to_string(edge.indirect);
        out += "  n" + std::to_string(edge.from) + " -> n" + std::to_string(edge.to) +
               " [label=" + dot_quote(label) + "];\n";
    }
    out += "}\n";
    return out;
}

std::string matrix_to_csv(const ImplicationMatrix& matrix, const Lexicon& lexicon) {
    if (matrix.ids() != lexicon.ids()) {
        throw std::invalid_argument("matrix and lexicon cover different element sets");
    }
    std::string out;
    for (const int id : matrix.ids()) {
        out += ',' + std::to_string(id);
    }
    out += '\n';
    for (const int from : matrix.ids()) {
        out += std::to_string(from);
        for (const int to : matrix.ids()) {
            out += ',';
            if (from != to) out += csv_escape(render_cell(matrix.at(from, to)));
        }
        out += '\n';
    }
    return out;
}

std::string chains_to_json(const std::vector<Chain>& chains, const Lexicon& lexicon) {
    nlohmann::json root = nlohmann::json::array();
    for (const Chain& chain : chains) {
        nlohmann::json labels = nlohmann::json::array();
        for (const int id : chain.path) {
            const Element* element = lexicon.find(id);
            labels.push_back(element != nullptr ? element->label
                                                : "element " + std::to_string(id));
        }
        root.push_back({{"path", chain.path},
                        {"labels", std::move(labels)},
                        {"score", chain.score}});
    }
    return root.dump(2);
}

std::vector<Chain> parse_chains_json(std::string_view text) {
    const nlohmann::json root = nlohmann::json::parse(text, nullptr, false);
    if (root.is_discarded() || !root.is_array()) {
        throw std::runtime_error("chains JSON must be an array");
    }
    std::vector<Chain> chains;
    for (const nlohmann::json& entry : root) {
        if (!entry.is_object() || !entry.contains("path") || !entry.contains("score") ||
            !entry["path"].is_array() || !entry["score"].is_number_integer()) {
            throw std::runtime_error("chain entry must carry 'path' and integer 'score'");
        }
        Chain chain;
        for (const nlohmann::json& id : entry["path"]) {
            if (!id.is_number_integer()) {
                throw std::runtime_error("chain path must hold integers");
            }
            chain.path.push_back(id.get<int>());
        }
        chain.score = entry["score"].get<int>();
        chains.push_back(std::move(chain));
    }
    return chains;
}

std::string sensitivity_to_csv(const std::vector<CutoffRow>& rows) {
    std::string out = "cutoff,links,percent_direct_retained\n";
    for (const CutoffRow& row : rows) {
        out += std::to_string(row.cutoff) + ',' + std::to_string(row.edge_count) + ',' +
               format_one_decimal(row.percent_retained) + '\n';
    }
    return out;
}

}  // namespace meckit
