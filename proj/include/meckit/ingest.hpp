#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "meckit/core.hpp"

namespace meckit {

// One problem found while reading an input file. Diagnostics are exhaustive:
// a file with k bad lines produces k of these, not just the first.
struct ParseDiagnostic {
    std::string file;
    std::size_t line = 0;  // 1-based line of the offending input
    std::string message;

    bool operator==(const ParseDiagnostic&) const = default;
};

std::string format_diagnostic(const ParseDiagnostic& diagnostic);

// Result of a parse: either a value or the list of reasons there is none.
template <typename T>
struct Parsed {
    std::optional<T> value;
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const noexcept { return value.has_value() && diagnostics.empty(); }
};

// Lexicon file: CSV with the exact header `id,label,category`, category in
// {A,C,V}. Blank lines and lines starting with '#' are skipped. Labels that
// contain commas must be double-quoted. Input must be UTF-8.
Parsed<Lexicon> parse_lexicon(std::istream& input, std::string file = "<input>");
Parsed<Lexicon> parse_lexicon(std::string_view text, std::string file = "<input>");

// Ladders file: one record per line, `respondent;id>id>...>id`, same comment
// and blank-line rules. Every ladder must validate against the lexicon.
// Ladder order is preserved as read.
Parsed<std::vector<Ladder>> parse_ladders(std::istream& input, const Lexicon& lexicon,
                                          std::string file = "<input>");
Parsed<std::vector<Ladder>> parse_ladders(std::string_view text, const Lexicon& lexicon,
                                          std::string file = "<input>");

// Reads both files and assembles the corpus; a corpus needs at least one ladder.
Parsed<Corpus> load_corpus(const std::filesystem::path& lexicon_path,
                           const std::filesystem::path& ladders_path);

// Canonical corpus JSON: object with "elements" (ascending id) and "ladders"
// (input order); keys sorted, two-space indent, byte-identical across runs.
std::string write_corpus_json(const Corpus& corpus);

// Inverse of write_corpus_json; accepts any JSON with the same schema.
Parsed<Corpus> parse_corpus_json(std::string_view text, std::string file = "<json>");

}  // namespace meckit
