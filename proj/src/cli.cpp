#include "meckit/cli.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "meckit/export.hpp"
#include "meckit/hvm.hpp"
#include "meckit/implication.hpp"
#include "meckit/ingest.hpp"
#include "meckit/report.hpp"

namespace meckit {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;
constexpr int kExitUsageError = 2;

struct CliOptions {
    std::string lexicon_path;
    std::string ladders_path;
    std::string out_path;       // empty means standard output
    std::string format = "text";
    std::string rule = "path_max";
    std::string value_groups_path;
    int cutoff = 4;
    bool strict = false;
};

void add_common_options(CLI::App& cmd, CliOptions& options) {
    cmd.add_option("--lexicon", options.lexicon_path,
                   "lexicon CSV file (header: id,label,category)")
        ->required();
    cmd.add_option("--ladders", options.ladders_path,
                   "ladders file (lines: respondent;id>id>...)")
        ->required();
    cmd.add_option("--out", options.out_path,
                   "write output to this file instead of standard output");
}

void add_cutoff_option(CLI::App& cmd, CliOptions& options, const std::string& help) {
    cmd.add_option("--cutoff", options.cutoff, help)
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

void print_diagnostics(const std::vector<ParseDiagnostic>& diagnostics, std::ostream& err) {
    for (const ParseDiagnostic& d : diagnostics) {
        err << format_diagnostic(d) << '\n';
    }
}

// Output goes to a string first so a failing run never leaves a partial file.
int emit(const std::string& text, const CliOptions& options, std::ostream& out,
         std::ostream& err) {
    if (options.out_path.empty()) {
        out << text;
        return kExitOk;
    }
    std::ofstream file(options.out_path, std::ios::binary);
    if (!file) {
        err << options.out_path << ": cannot open for writing\n";
        return kExitDataError;
    }
    file << text;
    file.close();
    if (!file) {
        std::remove(options.out_path.c_str());
        err << options.out_path << ": write failed\n";
        return kExitDataError;
    }
    return kExitOk;
}

std::string overview_line(const Corpus& corpus) {
    return std::to_string(corpus.lexicon.size()) + " elements, " +
           std::to_string(corpus.ladders.size()) + " ladders";
}

std::string render_hvm_text(const Hvm& hvm) {
    std::string out = "cutoff: " + std::to_string(hvm.config().cutoff) + "\n";
    out += "nodes: " + std::to_string(hvm.nodes().size()) +
           ", links: " + std::to_string(hvm.edges().size()) + "\n";
    for (const Category category :
         {Category::Attribute, Category::Consequence, Category::Value}) {
        out += category_name(category);
        out += "s:";
        const std::vector<int> ids = hvm.layer(category);
        for (std::size_t i = 0; i < ids.size(); ++i) {
            out += i == 0 ? " " : ", ";
            out += std::to_string(ids[i]);
        }
        out += '\n';
    }
    out += "links (from -> to  direct:indirect):\n";
    for (const HvmEdge& edge : hvm.edges()) {
        const HvmNode* from = hvm.find_node(edge.from);
        const HvmNode* to = hvm.find_node(edge.to);
        out += "  " + std::to_string(edge.from) + " -> " + std::to_string(edge.to) + "  " +
               render_cell({edge.direct, edge.indirect}) + "  " + from->label + " -> " +
               to->label + "\n";
    }
    return out;
}

std::string render_chains_text(const std::vector<Chain>& chains, const Hvm& hvm,
                               const Lexicon& lexicon) {
    std::string out = "cutoff: " + std::to_string(hvm.config().cutoff) + "\n";
    out += "score rule: path (sum of direct counts along the chain)\n";
    out += "chains: " + std::to_string(chains.size()) + "\n";
    for (const Chain& chain : chains) {
        std::string ids;
        std::string labels;
        for (std::size_t i = 0; i < chain.path.size(); ++i) {
            if (i != 0) {
                ids += " > ";
                labels += " > ";
            }
            ids += std::to_string(chain.path[i]);
            const Element* element = lexicon.find(chain.path[i]);
            labels += element != nullptr ? element->label : "?";
        }
        out += "  score " + std::to_string(chain.score) + ": " + ids + "  (" + labels + ")\n";
    }
    return out;
}

int run_parsed(const std::string& command, const CliOptions& options, std::ostream& out,
               std::ostream& err) {
    static const std::map<std::string, std::set<std::string>> kFormats = {
        {"validate", {"text", "json"}}, {"summarize", {"text"}},
        {"matrix", {"text", "csv"}},    {"hvm", {"text", "dot"}},
        {"chains", {"text", "json"}},   {"sensitivity", {"text", "csv"}},
    };
    const std::set<std::string>& allowed = kFormats.at(command);
    if (allowed.count(options.format) == 0) {
        err << "format '" << options.format << "' is not valid for '" << command << "'\n";
        return kExitUsageError;
    }

    Parsed<Corpus> loaded = load_corpus(options.lexicon_path, options.ladders_path);
    if (!loaded.ok()) {
        print_diagnostics(loaded.diagnostics, err);
        return kExitDataError;
    }
    const Corpus& corpus = *loaded.value;

    if (command == "validate") {
        if (options.strict) {
            bool failed = false;
            for (std::size_t i = 0; i < corpus.ladders.size(); ++i) {
                const Ladder& ladder = corpus.ladders[i];
                const ValidationResult result =
                    validate_ladder(ladder, corpus.lexicon, {.strict_progression = true});
                for (const LadderViolation& violation : result.violations) {
                    err << "ladder " << (i + 1) << " (" << ladder.respondent
                        << "): " << violation.reason << '\n';
                    failed = true;
                }
            }
            if (failed) return kExitDataError;
        }
        if (options.format == "json") {
            return emit(write_corpus_json(corpus) + "\n", options, out, err);
        }
        return emit("ok: " + overview_line(corpus) + "\n", options, out, err);
    }

    const ImplicationMatrix matrix = build_matrix(corpus);

    if (command == "matrix") {
        const std::string text = options.format == "csv"
                                     ? matrix_to_csv(matrix, corpus.lexicon)
                                     : render_matrix_text(matrix);
        return emit(text, options, out, err);
    }

    if (command == "sensitivity") {
        const std::vector<CutoffRow> rows =
            cutoff_sensitivity(matrix, corpus.lexicon, options.cutoff);
        if (options.format == "csv") {
            return emit(sensitivity_to_csv(rows), options, out, err);
        }
        std::string text =
            "total direct relations: " + std::to_string(matrix.total_direct()) + "\n";
        text += render_sensitivity(rows);
        return emit(text, options, out, err);
    }

    const Hvm hvm = build_hvm(matrix, corpus.lexicon, {.cutoff = options.cutoff});

    if (command == "hvm") {
        const std::string text =
            options.format == "dot" ? to_dot(hvm) : render_hvm_text(hvm);
        return emit(text, options, out, err);
    }

    if (command == "chains") {
        const std::vector<Chain> chains = enumerate_chains(hvm);
        const std::string text = options.format == "json"
                                     ? chains_to_json(chains, corpus.lexicon) + "\n"
                                     : render_chains_text(chains, hvm, corpus.lexicon);
        return emit(text, options, out, err);
    }

    // summarize
    std::optional<ValueGroups> groups;
    if (!options.value_groups_path.empty()) {
        std::ifstream file(options.value_groups_path);
        if (!file) {
            err << options.value_groups_path << ": cannot open file\n";
            return kExitDataError;
        }
        Parsed<ValueGroups> parsed =
            parse_value_groups(file, corpus.lexicon, options.value_groups_path);
        if (!parsed.ok()) {
            print_diagnostics(parsed.diagnostics, err);
            return kExitDataError;
        }
        groups = std::move(parsed.value);
    }
    const std::optional<ScoreRule> rule = score_rule_from_name(options.rule);
    if (!rule) {
        err << "unknown score rule '" << options.rule << "'\n";
        return kExitUsageError;
    }

    std::string text = "corpus: " + overview_line(corpus) + "\n\n";
    text += "Element frequencies\n";
    text += render_element_summary(element_summary(corpus));
    text += "\nTop links by direct count\n";
    text += render_top_links(top_links(matrix, 10), corpus.lexicon);
    text += "\nAttribute x value cumulative frequencies (cutoff: " +
            std::to_string(options.cutoff) + ")\n";
    text += render_attribute_value_table(attribute_value_table(hvm, *rule), corpus.lexicon,
                                         groups);
    return emit(text, options, out, err);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"meckit - means-end chain analysis of coded laddering interviews"};
    app.require_subcommand(1);

    CliOptions options;
    static const std::string kCutoffHelp =
        "minimum direct-relation count for a map link "
        "(the customary threshold in laddering studies is 4)";

    CLI::App* validate =
        app.add_subcommand("validate", "check the corpus files and report totals");
    add_common_options(*validate, options);
    validate->add_flag("--strict", options.strict,
                       "require strictly increasing abstraction at every step");
    validate->add_option("--format", options.format, "text | json (canonical corpus JSON)")
        ->capture_default_str();

    CLI::App* summarize = app.add_subcommand(
        "summarize", "element frequencies, top links and the attribute/value table");
    add_common_options(*summarize, options);
    add_cutoff_option(*summarize, options, kCutoffHelp);
    summarize->add_option("--rule", options.rule,
                          "attribute/value score rule: path_max | subgraph")
        ->capture_default_str();
    summarize->add_option("--value-groups", options.value_groups_path,
                          "CSV (id,group) grouping value columns in the table");

    CLI::App* matrix =
        app.add_subcommand("matrix", "implication matrix of direct:indirect counts");
    add_common_options(*matrix, options);
    matrix->add_option("--format", options.format, "text | csv")->capture_default_str();

    CLI::App* hvm = app.add_subcommand("hvm", "cutoff-pruned hierarchical value map");
    add_common_options(*hvm, options);
    add_cutoff_option(*hvm, options, kCutoffHelp);
    hvm->add_option("--format", options.format, "text | dot")->capture_default_str();

    CLI::App* chains =
        app.add_subcommand("chains", "scored attribute-to-value chains of the map");
    add_common_options(*chains, options);
    add_cutoff_option(*chains, options, kCutoffHelp);
    chains->add_option("--format", options.format, "text | json")->capture_default_str();

    CLI::App* sensitivity = app.add_subcommand(
        "sensitivity", "map size and retained direct relations per cutoff");
    add_common_options(*sensitivity, options);
    add_cutoff_option(*sensitivity, options,
                      "largest cutoff to tabulate; the table spans 1..N");
    sensitivity->add_option("--format", options.format, "text | csv")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        err << "run 'meckit --help' for usage\n";
        return kExitUsageError;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return run_parsed(command, options, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDataError;
    }
}

}  // namespace meckit
