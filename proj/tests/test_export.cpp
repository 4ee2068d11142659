#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "meckit/export.hpp"
#include "meckit/textutil.hpp"
#include "support/generators.hpp"

using namespace meckit;

namespace {

// Minimal DOT checker: tokenizes the directed-graph dialect and verifies the
// statement structure well enough to catch umbalanced braces, broken quoting
// and stray arrows. Not a full grammar, deliberately.
struct DotToken {
    enum Kind { Id, Quoted, Arrow, LBrace, RBrace, LBracket, RBracket, Equals, Semi } kind;
    std::string text;
};

bool tokenize_dot(const std::string& text, std::vector<DotToken>& tokens) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        const char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
        } else if (c == '"') {
            std::string value;
            ++i;
            bool closed = false;
            while (i < n) {
                if (text[i] == '\\' && i + 1 < n) {
                    value += text[i + 1];
                    i += 2;
                } else if (text[i] == '"') {
                    ++i;
                    closed = true;
                    break;
                } else {
                    value += text[i++];
                }
            }
            if (!closed) return false;
            tokens.push_back({DotToken::Quoted, value});
        } else if (c == '-' && i + 1 < n && text[i + 1] == '>') {
            tokens.push_back({DotToken::Arrow, "->"});
            i += 2;
        } else if (c == '{') {
            tokens.push_back({DotToken::LBrace, "{"});
            ++i;
        } else if (c == '}') {
            tokens.push_back({DotToken::RBrace, "}"});
            ++i;
        } else if (c == '[') {
            tokens.push_back({DotToken::LBracket, "["});
            ++i;
        } else if (c == ']') {
            tokens.push_back({DotToken::RBracket, "]"});
            ++i;
        } else if (c == '=') {
            tokens.push_back({DotToken::Equals, "="});
            ++i;
        } else if (c == ';') {
            tokens.push_back({DotToken::Semi, ";"});
            ++i;
        } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                             text[i] == '_')) {
                id += text[i++];
            }
            tokens.push_back({DotToken::Id, id});
        } else {
            return false;  // character outside the emitted dialect
        }
    }
    return true;
}

bool valid_dot(const std::string& text) {
    std::vector<DotToken> tokens;
    if (!tokenize_dot(text, tokens)) return false;
    if (tokens.size() < 3) return false;
    if (tokens[0].kind != DotToken::Id || tokens[0].text != "digraph") return false;
    int braces = 0;
    int brackets = 0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const DotToken& t = tokens[i];
        if (t.kind == DotToken::LBrace) ++braces;
        if (t.kind == DotToken::RBrace && --braces < 0) return false;
        if (t.kind == DotToken::LBracket) ++brackets;
        if (t.kind == DotToken::RBracket && --brackets < 0) return false;
        if (t.kind == DotToken::Arrow) {
            if (i == 0 || i + 1 >= tokens.size()) return false;
            if (tokens[i - 1].kind != DotToken::Id) return false;
            if (tokens[i + 1].kind != DotToken::Id) return false;
        }
        if (t.kind == DotToken::Equals) {
            if (i == 0 || i + 1 >= tokens.size()) return false;
            if (tokens[i - 1].kind != DotToken::Id) return false;
            if (tokens[i + 1].kind != DotToken::Id && tokens[i + 1].kind != DotToken::Quoted) {
                return false;
            }
        }
    }
    return braces == 0 && brackets == 0;
}

Hvm sample_hvm() {
    const Lexicon lexicon({{1, "Data is accessible and supports decisions", Category::Attribute},
                           {21, "Improve data analysis", Category::Consequence},
                           {29, "Add value to stake holders", Category::Value}});
    ImplicationMatrix matrix(lexicon.ids());
    matrix.add_direct(1, 21, 17);
    matrix.add_indirect(1, 21, 1);
    matrix.add_direct(21, 29, 18);
    matrix.add_indirect(21, 29, 4);
    return build_hvm(matrix, lexicon, {});
}

}  // namespace

TEST_SUITE("export") {

TEST_CASE("dot output carries the link weights") {
    const std::string dot = to_dot(sample_hvm());
    CHECK(dot.find("n21 -> n29 [label=\"18\"]") != std::string::npos);
    CHECK(dot.find("n1 -> n21 [label=\"17\"]") != std::string::npos);
    CHECK(dot.find("Improve data analysis (21)") != std::string::npos);
    CHECK(valid_dot(dot));
}

TEST_CASE("dot edge labels can include the indirect counts") {
    DotOptions options;
    options.show_indirect = true;
    const std::string dot = to_dot(sample_hvm(), options);
    CHECK(dot.find("[label=\"18:4\"]") != std::string::npos);
    CHECK(valid_dot(dot));
}

TEST_CASE("rank groups appear only when requested") {
    DotOptions flat;
    flat.rank_by_category = false;
    CHECK(to_dot(sample_hvm(), flat).find("rank=same") == std::string::npos);
    CHECK(to_dot(sample_hvm()).find("rank=same") != std::string::npos);
}

TEST_CASE("an empty map serializes to a valid empty digraph") {
    const Lexicon lexicon({{1, "a", Category::Attribute}, {2, "v", Category::Value}});
    const ImplicationMatrix matrix(lexicon.ids());
    const std::string dot = to_dot(build_hvm(matrix, lexicon, {}));
    CHECK(valid_dot(dot));
    CHECK(dot.find("->") == std::string::npos);
}

TEST_CASE("dot escapes quotes and backslashes in labels") {
    const Lexicon lexicon({{1, "say \"hi\" \\ there", Category::Attribute},
                           {2, "v", Category::Value}});
    ImplicationMatrix matrix(lexicon.ids());
    matrix.add_direct(1, 2, 5);
    const std::string dot = to_dot(build_hvm(matrix, lexicon, {}));
    CHECK(dot.find("\\\"hi\\\"") != std::string::npos);
    CHECK(valid_dot(dot));
}

TEST_CASE("dot output is byte-identical across calls") {
    std::mt19937 rng(7030);
    for (int round = 0; round < 20; ++round) {
        const Corpus corpus = testsupport::random_corpus(rng);
        const Hvm hvm = build_hvm(build_matrix(corpus), corpus.lexicon, {.cutoff = 1});
        const std::string dot = to_dot(hvm);
        CHECK(dot == to_dot(hvm));
        CHECK(valid_dot(dot));
    }
}

TEST_CASE("matrix CSV uses the cell text convention") {
    const Lexicon lexicon({{1, "a", Category::Attribute},
                           {21, "c", Category::Consequence}});
    ImplicationMatrix matrix(lexicon.ids());
    matrix.add_direct(1, 21, 17);
    matrix.add_indirect(1, 21, 1);
    CHECK(matrix_to_csv(matrix, lexicon) == ",1,21\n1,,17:01\n21,,\n");
}

TEST_CASE("matrix CSV round-trips through a CSV reader") {
    std::mt19937 rng(7031);
    for (int round = 0; round < 20; ++round) {
        const Corpus corpus = testsupport::random_corpus(rng);
        const ImplicationMatrix matrix = build_matrix(corpus);
        const std::string csv = matrix_to_csv(matrix, corpus.lexicon);

        std::vector<std::vector<std::string>> rows;
        std::size_t start = 0;
        while (start < csv.size()) {
            const std::size_t end = csv.find('\n', start);
            std::vector<std::string> fields;
            REQUIRE(split_csv_line(csv.substr(start, end - start), fields));
            rows.push_back(std::move(fields));
            start = end + 1;
        }
        REQUIRE(rows.size() == matrix.dimension() + 1);
        for (std::size_t r = 0; r < matrix.dimension(); ++r) {
            const int from = matrix.ids()[r];
            REQUIRE(rows[r + 1].size() == matrix.dimension() + 1);
            CHECK(rows[r + 1][0] == std::to_string(from));
            for (std::size_t c = 0; c < matrix.dimension(); ++c) {
                const int to = matrix.ids()[c];
                const std::string expected =
                    from == to ? "" : render_cell(matrix.at(from, to));
                CHECK(rows[r + 1][c + 1] == expected);
            }
        }
    }
}

TEST_CASE("no chains serialize to an empty JSON array") {
    const Lexicon lexicon({{1, "a", Category::Attribute}});
    CHECK(chains_to_json({}, lexicon) == "[]");
}

TEST_CASE("one chain serializes with path, labels and score") {
    const Lexicon lexicon({{3, "Goal setting", Category::Attribute},
                           {24, "Knowledge of data", Category::Consequence},
                           {29, "Add value to stake holders", Category::Value}});
    const std::string json = chains_to_json({Chain{{3, 24, 29}, 26}}, lexicon);
    const nlohmann::json parsed = nlohmann::json::parse(json);
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0]["score"] == 26);
    CHECK(parsed[0]["path"] == nlohmann::json({3, 24, 29}));
    CHECK(parsed[0]["labels"] ==
          nlohmann::json({"Goal setting", "Knowledge of data", "Add value to stake holders"}));
}

TEST_CASE("chains JSON parses back to the same paths and scores") {
    std::mt19937 rng(7032);
    for (int round = 0; round < 40; ++round) {
        const Corpus corpus = testsupport::random_corpus(rng);
        const Hvm hvm = build_hvm(build_matrix(corpus), corpus.lexicon, {.cutoff = 1});
        const std::vector<Chain> chains = enumerate_chains(hvm);
        const std::vector<Chain> back = parse_chains_json(chains_to_json(chains, corpus.lexicon));
        CHECK(back == chains);
    }
}

TEST_CASE("malformed chains JSON is rejected") {
    CHECK_THROWS_AS(parse_chains_json("{}"), std::runtime_error);
    CHECK_THROWS_AS(parse_chains_json("[{\"path\":[1,2]}]"), std::runtime_error);
    CHECK_THROWS_AS(parse_chains_json("[{\"path\":\"x\",\"score\":1}]"), std::runtime_error);
}

TEST_CASE("sensitivity CSV is plain rows") {
    const std::vector<CutoffRow> rows{{1, 3, 100.0}, {2, 1, 41.6666666}};
    CHECK(sensitivity_to_csv(rows) ==
          "cutoff,links,percent_direct_retained\n1,3,100.0\n2,1,41.7\n");
}

}  // TEST_SUITE
