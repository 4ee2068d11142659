#pragma once

#include <string>
#include <vector>

#include "meckit/hvm.hpp"
#include "meckit/implication.hpp"

namespace meckit {

struct DotOptions {
    bool show_indirect = false;      // append ":indirect" to edge labels
    bool rank_by_category = true;    // pin attributes to the bottom, values to the top
    enum class EdgeLabel { Direct, DirectAndIndirect };
    EdgeLabel edge_label = EdgeLabel::Direct;
};

// Directed-graph DOT text for the map. Nodes are labelled "<label> (<id>)";
// emission order is ascending by id, so equal maps serialize to equal bytes.
std::string to_dot(const Hvm& hvm, const DotOptions& options = {});

// Implication matrix as CSV: header row of element ids, one row per element,
// cells in the "17:01" style with empty cells left blank.
std::string matrix_to_csv(const ImplicationMatrix& matrix, const Lexicon& lexicon);

// JSON array preserving chain order; entries carry "path", "labels", "score".
std::string chains_to_json(const std::vector<Chain>& chains, const Lexicon& lexicon);

// Parses chains_to_json output (or anything with the same schema) back into
// chains; throws std::runtime_error on malformed input.
std::vector<Chain> parse_chains_json(std::string_view text);

std::string sensitivity_to_csv(const std::vector<CutoffRow>& rows);

}  // namespace meckit
