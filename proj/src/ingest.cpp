#include "meckit/ingest.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "meckit/textutil.hpp"

namespace meckit {
namespace {

constexpr std::string_view kLexiconHeader = "id,label,category";
constexpr std::string_view kUtf8Bom = "\xEF\xBB\xBF";

// Strips one line ending; accepts both LF and CRLF input.
std::string_view strip_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
}

bool is_skippable(std::string_view line) {
    const std::string_view t = trim(line);
    return t.empty() || t.front() == '#';
}

std::optional<int> parse_int(std::string_view token) {
    const std::string_view t = trim(token);
    if (t.empty()) return std::nullopt;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size()) return std::nullopt;
    return value;
}

// Reads logical lines, tracking 1-based numbers and ignoring a leading BOM.
class LineReader {
  public:
    explicit LineReader(std::istream& input) : input_(input) {}

    bool next(std::string& line) {
        if (!std::getline(input_, line)) return false;
        ++number_;
        if (number_ == 1 && line.starts_with(kUtf8Bom)) line.erase(0, kUtf8Bom.size());
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return true;
    }

    std::size_t number() const noexcept { return number_; }

  private:
    std::istream& input_;
    std::size_t number_ = 0;
};

}  // namespace

std::string format_diagnostic(const ParseDiagnostic& diagnostic) {
    return diagnostic.file + ":" + std::to_string(diagnostic.line) + ": " +
           diagnostic.message;
}

Parsed<Lexicon> parse_lexicon(std::istream& input, std::string file) {
    Parsed<Lexicon> result;
    auto diagnose = [&](std::size_t line, std::string message) {
        result.diagnostics.push_back({file, line, std::move(message)});
    };

    LineReader reader(input);
    std::string line;
    bool header_seen = false;
    std::vector<Element> elements;
    std::unordered_map<int, std::size_t> id_lines;
    std::unordered_map<std::string, std::size_t> label_lines;
    std::vector<std::string> fields;

    while (reader.next(line)) {
        const std::size_t lineno = reader.number();
        if (!is_valid_utf8(line)) {
            diagnose(lineno, "invalid UTF-8 byte sequence");
            continue;
        }
        if (is_skippable(line)) continue;
        if (!header_seen) {
            header_seen = true;
            if (trim(line) != kLexiconHeader) {
                diagnose(lineno, "expected header 'id,label,category'");
            }
            continue;
        }
        if (!split_csv_line(line, fields)) {
            diagnose(lineno, "malformed CSV quoting");
            continue;
        }
        if (fields.size() != 3) {
            diagnose(lineno, "expected 3 fields, got " + std::to_string(fields.size()));
            continue;
        }
        const std::optional<int> id = parse_int(fields[0]);
        if (!id) {
            diagnose(lineno, "invalid element id '" + std::string(trim(fields[0])) + "'");
            continue;
        }
        if (*id <= 0) {
            diagnose(lineno, "element id must be positive, got " + std::to_string(*id));
            continue;
        }
        const std::string label(trim(fields[1]));
        if (label.empty()) {
            diagnose(lineno, "empty label");
            continue;
        }
        const std::string_view code = trim(fields[2]);
        const std::optional<Category> category =
            code.size() == 1 ? category_from_code(code.front()) : std::nullopt;
        if (!category) {
            diagnose(lineno, "unknown category '" + std::string(code) + "'");
            continue;
        }
        if (const auto it = id_lines.find(*id); it != id_lines.end()) {
            diagnose(lineno, "duplicate element id " + std::to_string(*id) +
                                 " (first on line " + std::to_string(it->second) + ")");
            continue;
        }
        const std::string norm = Lexicon::normalize_label(label);
        if (const auto it = label_lines.find(norm); it != label_lines.end()) {
            diagnose(lineno, "duplicate label '" + label + "' (first on line " +
                                 std::to_string(it->second) + ")");
            continue;
        }
        id_lines.emplace(*id, lineno);
        label_lines.emplace(norm, lineno);
        elements.push_back({*id, label, *category});
    }

    if (!header_seen) {
        diagnose(std::max<std::size_t>(reader.number(), 1), "missing header 'id,label,category'");
    }
    if (elements.empty() && result.diagnostics.empty()) {
        diagnose(std::max<std::size_t>(reader.number(), 1), "lexicon contains no elements");
    }
    if (result.diagnostics.empty()) {
        result.value = Lexicon(std::move(elements));
    }
    return result;
}

Parsed<Lexicon> parse_lexicon(std::string_view text, std::string file) {
    std::istringstream stream{std::string(text)};
    return parse_lexicon(stream, std::move(file));
}

Parsed<std::vector<Ladder>> parse_ladders(std::istream& input, const Lexicon& lexicon,
                                          std::string file) {
    Parsed<std::vector<Ladder>> result;
    auto diagnose = [&](std::size_t line, std::string message) {
        result.diagnostics.push_back({file, line, std::move(message)});
    };

    LineReader reader(input);
    std::string line;
    std::vector<Ladder> ladders;

    while (reader.next(line)) {
        const std::size_t lineno = reader.number();
        if (!is_valid_utf8(line)) {
            diagnose(lineno, "invalid UTF-8 byte sequence");
            continue;
        }
        if (is_skippable(line)) continue;

        const std::size_t sep = line.find(';');
        if (sep == std::string::npos) {
            diagnose(lineno, "missing ';' between respondent and steps");
            continue;
        }
        Ladder ladder;
        ladder.respondent = std::string(trim(std::string_view(line).substr(0, sep)));
        if (ladder.respondent.empty()) {
            diagnose(lineno, "empty respondent identifier");
            continue;
        }

        const std::string_view rest = std::string_view(line).substr(sep + 1);
        bool steps_ok = true;
        std::size_t start = 0;
        while (start <= rest.size()) {
            std::size_t end = rest.find('>', start);
            if (end == std::string_view::npos) end = rest.size();
            const std::string_view token = rest.substr(start, end - start);
            const std::optional<int> id = parse_int(token);
            if (!id) {
                diagnose(lineno, "invalid step '" + std::string(trim(token)) + "'");
                steps_ok = false;
                break;
            }
            ladder.steps.push_back(*id);
            if (end == rest.size()) break;
            start = end + 1;
        }
        if (!steps_ok) continue;

        if (ladder.steps.size() < 2) {
            diagnose(lineno, "ladder needs at least 2 steps");
            continue;
        }
        const ValidationResult validation = validate_ladder(ladder, lexicon);
        if (!validation.ok()) {
            diagnose(lineno, validation.violations.front().reason);
            continue;
        }
        ladders.push_back(std::move(ladder));
    }

    if (ladders.empty() && result.diagnostics.empty()) {
        diagnose(std::max<std::size_t>(reader.number(), 1), "no ladders found");
    }
    if (result.diagnostics.empty()) {
        result.value = std::move(ladders);
    }
    return result;
}

Parsed<std::vector<Ladder>> parse_ladders(std::string_view text, const Lexicon& lexicon,
                                          std::string file) {
    std::istringstream stream{std::string(text)};
    return parse_ladders(stream, lexicon, std::move(file));
}

Parsed<Corpus> load_corpus(const std::filesystem::path& lexicon_path,
                           const std::filesystem::path& ladders_path) {
    Parsed<Corpus> result;

    std::ifstream lexicon_file(lexicon_path);
    if (!lexicon_file) {
        result.diagnostics.push_back({lexicon_path.string(), 1, "cannot open file"});
        return result;
    }
    Parsed<Lexicon> lexicon = parse_lexicon(lexicon_file, lexicon_path.string());
    if (!lexicon.ok()) {
        result.diagnostics = std::move(lexicon.diagnostics);
        return result;
    }

    std::ifstream ladders_file(ladders_path);
    if (!ladders_file) {
        result.diagnostics.push_back({ladders_path.string(), 1, "cannot open file"});
        return result;
    }
    Parsed<std::vector<Ladder>> ladders =
        parse_ladders(ladders_file, *lexicon.value, ladders_path.string());
    if (!ladders.ok()) {
        result.diagnostics = std::move(ladders.diagnostics);
        return result;
    }

    result.value = Corpus{std::move(*lexicon.value), std::move(*ladders.value)};
    return result;
}

std::string write_corpus_json(const Corpus& corpus) {
    nlohmann::json elements = nlohmann::json::array();
    for (const Element& e : corpus.lexicon.elements()) {
        elements.push_back({{"id", e.id},
                            {"label", e.label},
                            {"category", std::string(1, category_code(e.category))}});
    }
    nlohmann::json ladders = nlohmann::json::array();
    for (const Ladder& ladder : corpus.ladders) {
        ladders.push_back({{"respondent", ladder.respondent}, {"steps", ladder.steps}});
    }
    nlohmann::json root{{"elements", std::move(elements)}, {"ladders", std::move(ladders)}};
    return root.dump(2);
}

Parsed<Corpus> parse_corpus_json(std::string_view text, std::string file) {
    Parsed<Corpus> result;
    auto diagnose = [&](std::string message) {
        result.diagnostics.push_back({file, 1, std::move(message)});
    };

    nlohmann::json root = nlohmann::json::parse(text, nullptr, false);
    if (root.is_discarded()) {
        diagnose("malformed JSON");
        return result;
    }
    if (!root.is_object() || !root.contains("elements") || !root.contains("ladders") ||
        !root["elements"].is_array() || !root["ladders"].is_array()) {
        diagnose("expected object with 'elements' and 'ladders' arrays");
        return result;
    }

    std::vector<Element> elements;
    for (std::size_t i = 0; i < root["elements"].size(); ++i) {
        const nlohmann::json& e = root["elements"][i];
        const std::string at = "elements[" + std::to_string(i) + "]";
        if (!e.is_object() || !e.contains("id") || !e.contains("label") ||
            !e.contains("category") || !e["id"].is_number_integer() ||
            !e["label"].is_string() || !e["category"].is_string()) {
            diagnose(at + ": expected {id, label, category}");
            continue;
        }
        const std::string code = e["category"].get<std::string>();
        const std::optional<Category> category =
            code.size() == 1 ? category_from_code(code.front()) : std::nullopt;
        if (!category) {
            diagnose(at + ": unknown category '" + code + "'");
            continue;
        }
        elements.push_back({e["id"].get<int>(), e["label"].get<std::string>(), *category});
    }
    if (!result.diagnostics.empty()) return result;

    Lexicon lexicon;
    try {
        lexicon = Lexicon(std::move(elements));
    } catch (const std::invalid_argument& error) {
        diagnose(error.what());
        return result;
    }

    std::vector<Ladder> ladders;
    for (std::size_t i = 0; i < root["ladders"].size(); ++i) {
        const nlohmann::json& l = root["ladders"][i];
        const std::string at = "ladders[" + std::to_string(i) + "]";
        if (!l.is_object() || !l.contains("respondent") || !l.contains("steps") ||
            !l["respondent"].is_string() || !l["steps"].is_array()) {
            diagnose(at + ": expected {respondent, steps}");
            continue;
        }
        Ladder ladder;
        ladder.respondent = l["respondent"].get<std::string>();
        bool steps_ok = true;
        for (const nlohmann::json& step : l["steps"]) {
            if (!step.is_number_integer()) {
                diagnose(at + ": steps must be integers");
                steps_ok = false;
                break;
            }
            ladder.steps.push_back(step.get<int>());
        }
        if (!steps_ok) continue;
        const ValidationResult validation = validate_ladder(ladder, lexicon);
        if (!validation.ok()) {
            diagnose(at + ": " + validation.violations.front().reason);
            continue;
        }
        ladders.push_back(std::move(ladder));
    }
    if (!result.diagnostics.empty()) return result;
    if (ladders.empty()) {
        diagnose("corpus has no ladders");
        return result;
    }

    result.value = Corpus{std::move(lexicon), std::move(ladders)};
    return result;
}

}  // namespace meckit
