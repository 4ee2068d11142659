#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <stdexcept>

#include "meckit/export.hpp"
#include "meckit/hvm.hpp"
#include "meckit/implication.hpp"
#include "meckit/ingest.hpp"
#include "meckit/report.hpp"

namespace py = pybind11;
using namespace meckit;

namespace {

// Parse failures surface as ValueError carrying every diagnostic line.
template <typename T>
T unwrap(Parsed<T> parsed) {
    if (parsed.ok()) return std::move(*parsed.value);
    std::string message;
    for (const ParseDiagnostic& d : parsed.diagnostics) {
        if (!message.empty()) message += '\n';
        message += format_diagnostic(d);
    }
    throw std::invalid_argument(message);
}

std::vector<std::pair<int, int>> pair_list(const std::vector<RelationPair>& pairs) {
    std::vector<std::pair<int, int>> out;
    out.reserve(pairs.size());
    for (const RelationPair& p : pairs) out.emplace_back(p.from, p.to);
    return out;
}

}  // namespace

PYBIND11_MODULE(meckit, m) {
    m.doc() = "Means-end chain analysis: implication matrices, hierarchical value "
              "maps and chain scoring for coded laddering interviews";

    py::enum_<Category>(m, "Category")
        .value("Attribute", Category::Attribute)
        .value("Consequence", Category::Consequence)
        .value("Value", Category::Value);

    m.def("category_rank", &category_rank, py::arg("category"),
          "Attribute -> 0, Consequence -> 1, Value -> 2");

    py::class_<Element>(m, "Element")
        .def(py::init([](int id, const std::string& label, Category category) {
                 return Element{id, label, category};
             }),
             py::arg("id"), py::arg("label"), py::arg("category"))
        .def_readonly("id", &Element::id)
        .def_readonly("label", &Element::label)
        .def_readonly("category", &Element::category)
        .def(py::self == py::self)
        .def("__repr__", [](const Element& e) {
            std::ostringstream os;
            os << "Element(" << e.id << ", '" << e.label << "', "
               << category_name(e.category) << ")";
            return os.str();
        });

    py::class_<Lexicon>(m, "Lexicon")
        .def(py::init<std::vector<Element>>(), py::arg("elements"))
        .def_property_readonly("elements", &Lexicon::elements)
        .def("ids", &Lexicon::ids)
        .def("find", &Lexicon::find, py::arg("id"), py::return_value_policy::reference_internal)
        .def("__len__", &Lexicon::size);

    py::class_<Ladder>(m, "Ladder")
        .def(py::init([](const std::string& respondent, std::vector<int> steps) {
                 return Ladder{respondent, std::move(steps)};
             }),
             py::arg("respondent"), py::arg("steps"))
        .def_readonly("respondent", &Ladder::respondent)
        .def_readonly("steps", &Ladder::steps)
        .def(py::self == py::self);

    py::class_<Corpus>(m, "Corpus")
        .def(py::init([](Lexicon lexicon, std::vector<Ladder> ladders) {
                 return Corpus{std::move(lexicon), std::move(ladders)};
             }),
             py::arg("lexicon"), py::arg("ladders"))
        .def_readonly("lexicon", &Corpus::lexicon)
        .def_readonly("ladders", &Corpus::ladders)
        .def(py::self == py::self);

    m.def(
        "validate_ladder",
        [](const Ladder& ladder, const Lexicon& lexicon, bool strict) {
            std::vector<std::pair<std::size_t, std::string>> out;
            const ValidationResult result =
                validate_ladder(ladder, lexicon, {.strict_progression = strict});
            for (const LadderViolation& v : result.violations) out.emplace_back(v.step, v.reason);
            return out;
        },
        py::arg("ladder"), py::arg("lexicon"), py::arg("strict") = false,
        "Returns (step, reason) pairs; an empty list means the ladder is valid");

    m.def(
        "parse_lexicon",
        [](const std::string& text) { return unwrap(parse_lexicon(text)); },
        py::arg("text"));
    m.def(
        "parse_ladders",
        [](const std::string& text, const Lexicon& lexicon) {
            return unwrap(parse_ladders(text, lexicon));
        },
        py::arg("text"), py::arg("lexicon"));
    m.def(
        "load_corpus",
        [](const std::string& lexicon_path, const std::string& ladders_path) {
            return unwrap(load_corpus(lexicon_path, ladders_path));
        },
        py::arg("lexicon_path"), py::arg("ladders_path"));
    m.def("write_corpus_json", &write_corpus_json, py::arg("corpus"));
    m.def(
        "parse_corpus_json",
        [](const std::string& text) { return unwrap(parse_corpus_json(text)); },
        py::arg("text"));

    m.def(
        "direct_pairs",
        [](const Ladder& ladder) { return pair_list(direct_pairs(ladder)); },
        py::arg("ladder"), "Adjacent (from, to) pairs in step order");
    m.def(
        "indirect_pairs",
        [](const Ladder& ladder) { return pair_list(indirect_pairs(ladder)); },
        py::arg("ladder"), "Forward (from, to) pairs that skip at least one step");

    py::class_<ImplicationMatrix>(m, "ImplicationMatrix")
        .def("ids", &ImplicationMatrix::ids)
        .def("dimension", &ImplicationMatrix::dimension)
        .def(
            "at",
            [](const ImplicationMatrix& matrix, int from, int to) {
                const MatrixCell& cell = matrix.at(from, to);
                return std::make_pair(cell.direct, cell.indirect);
            },
            py::arg("from_id"), py::arg("to_id"), "(direct, indirect) counts of one cell")
        .def("total_direct", &ImplicationMatrix::total_direct)
        .def("total_indirect", &ImplicationMatrix::total_indirect)
        .def("max_direct", &ImplicationMatrix::max_direct)
        .def(py::self == py::self);

    m.def("build_matrix", &build_matrix, py::arg("corpus"));
    m.def(
        "render_cell",
        [](int direct, int indirect) { return render_cell({direct, indirect}); },
        py::arg("direct"), py::arg("indirect"),
        "Table text for one cell, e.g. (17, 1) -> '17:01'; empty cells render as ''");
    m.def(
        "matrix_row_totals",
        [](const ImplicationMatrix& matrix) {
            std::vector<std::tuple<int, int, int, int, int>> out;
            for (const auto& [id, t] : matrix_row_totals(matrix)) {
                out.emplace_back(id, t.out_direct, t.out_indirect, t.in_direct, t.in_indirect);
            }
            return out;
        },
        py::arg("matrix"),
        "(id, out_direct, out_indirect, in_direct, in_indirect) per element");

    py::class_<HvmConfig>(m, "HvmConfig")
        .def(py::init([](int cutoff, int max_chain_length) {
                 return HvmConfig{cutoff, max_chain_length};
             }),
             py::arg("cutoff") = 4, py::arg("max_chain_length") = 12)
        .def_readonly("cutoff", &HvmConfig::cutoff)
        .def_readonly("max_chain_length", &HvmConfig::max_chain_length);

    py::class_<HvmNode>(m, "HvmNode")
        .def_readonly("id", &HvmNode::id)
        .def_readonly("label", &HvmNode::label)
        .def_readonly("category", &HvmNode::category);

    py::class_<HvmEdge>(m, "HvmEdge")
        .def_readonly("from_id", &HvmEdge::from)
        .def_readonly("to_id", &HvmEdge::to)
        .def_readonly("direct", &HvmEdge::direct)
        .def_readonly("indirect", &HvmEdge::indirect)
        .def(py::self == py::self);

    py::class_<Hvm>(m, "Hvm")
        .def_property_readonly("nodes", &Hvm::nodes)
        .def_property_readonly("edges", &Hvm::edges)
        .def("layer", &Hvm::layer, py::arg("category"))
        .def("empty", &Hvm::empty);

    m.def("build_hvm", &build_hvm, py::arg("matrix"), py::arg("lexicon"),
          py::arg("config") = HvmConfig{});

    py::class_<Chain>(m, "Chain")
        .def_readonly("path", &Chain::path)
        .def_readonly("score", &Chain::score)
        .def(py::self == py::self)
        .def("__repr__", [](const Chain& chain) {
            std::ostringstream os;
            os << "Chain(score=" << chain.score << ", path=[";
            for (std::size_t i = 0; i < chain.path.size(); ++i) {
                if (i != 0) os << ", ";
                os << chain.path[i];
            }
            os << "])";
            return os.str();
        });

    m.def("enumerate_chains", &enumerate_chains, py::arg("hvm"));
    m.def(
        "path_score",
        [](const Hvm& hvm, const std::vector<int>& path) { return path_score(hvm, path); },
        py::arg("hvm"), py::arg("path"));
    m.def("subgraph_score", &subgraph_score, py::arg("hvm"), py::arg("attribute_id"),
          py::arg("value_id"));
    m.def(
        "cutoff_sensitivity",
        [](const ImplicationMatrix& matrix, const Lexicon& lexicon, int max_cutoff) {
            std::vector<std::tuple<int, std::size_t, double>> out;
            for (const CutoffRow& row : cutoff_sensitivity(matrix, lexicon, max_cutoff)) {
                out.emplace_back(row.cutoff, row.edge_count, row.percent_retained);
            }
            return out;
        },
        py::arg("matrix"), py::arg("lexicon"), py::arg("max_cutoff"),
        "(cutoff, link_count, percent_direct_retained) rows for cutoffs 1..max");

    m.def(
        "element_summary",
        [](const Corpus& corpus) {
            std::vector<std::pair<Element, int>> out;
            for (const ElementSummaryRow& row : element_summary(corpus)) {
                out.emplace_back(row.element, row.count);
            }
            return out;
        },
        py::arg("corpus"), "(element, count) rows grouped by category");

    py::enum_<ScoreRule>(m, "ScoreRule")
        .value("PathMax", ScoreRule::PathMax)
        .value("Subgraph", ScoreRule::Subgraph);

    py::class_<AttributeValueTable>(m, "AttributeValueTable")
        .def_readonly("rule", &AttributeValueTable::rule)
        .def_readonly("attribute_ids", &AttributeValueTable::attribute_ids)
        .def_readonly("value_ids", &AttributeValueTable::value_ids)
        .def_readonly("cells", &AttributeValueTable::cells)
        .def_readonly("row_totals", &AttributeValueTable::row_totals)
        .def_readonly("grand_total", &AttributeValueTable::grand_total);

    m.def("attribute_value_table", &attribute_value_table, py::arg("hvm"), py::arg("rule"));

    m.def(
        "top_links",
        [](const ImplicationMatrix& matrix, std::size_t n) {
            std::vector<std::tuple<int, int, int, int>> out;
            for (const TopLink& link : top_links(matrix, n)) {
                out.emplace_back(link.from, link.to, link.direct, link.indirect);
            }
            return out;
        },
        py::arg("matrix"), py::arg("n"),
        "(from, to, direct, indirect) ranked by direct count");

    m.def(
        "to_dot",
        [](const Hvm& hvm, bool show_indirect, bool rank_by_category) {
            DotOptions options;
            options.show_indirect = show_indirect;
            options.rank_by_category = rank_by_category;
            return to_dot(hvm, options);
        },
        py::arg("hvm"), py::arg("show_indirect") = false, py::arg("rank_by_category") = true);
    m.def("matrix_to_csv", &matrix_to_csv, py::arg("matrix"), py::arg("lexicon"));
    m.def("chains_to_json", &chains_to_json, py::arg("chains"), py::arg("lexicon"));
    m.def(
        "parse_chains_json",
        [](const std::string& text) { return parse_chains_json(text); },
        py::arg("text"));
}
