#include <doctest.h>

#include <algorithm>
#include <random>

#include "meckit/implication.hpp"
#include "support/generators.hpp"

using namespace meckit;

namespace {

Lexicon acv_lexicon() {
    return Lexicon({{1, "a1", Category::Attribute},
                    {3, "a3", Category::Attribute},
                    {21, "c21", Category::Consequence},
                    {24, "c24", Category::Consequence},
                    {29, "v29", Category::Value}});
}

}  // namespace

TEST_SUITE("implication") {

TEST_CASE("direct pairs walk adjacent steps in order") {
    const Ladder ladder{"R", {10, 20, 30, 40, 50}};
    const std::vector<RelationPair> pairs = direct_pairs(ladder);
    REQUIRE(pairs.size() == 4);
    CHECK(pairs[0] == RelationPair{10, 20, RelationKind::Direct});
    CHECK(pairs[1] == RelationPair{20, 30, RelationKind::Direct});
    CHECK(pairs[2] == RelationPair{30, 40, RelationKind::Direct});
    CHECK(pairs[3] == RelationPair{40, 50, RelationKind::Direct});
}

TEST_CASE("indirect pairs are every forward pair with a gap") {
    // Hand enumeration for a five-step ladder: six pairs, (i, j) order.
    const Ladder ladder{"R", {10, 20, 30, 40, 50}};
    const std::vector<RelationPair> pairs = indirect_pairs(ladder);
    const std::vector<RelationPair> expected{
        {10, 30, RelationKind::Indirect}, {10, 40, RelationKind::Indirect},
        {10, 50, RelationKind::Indirect}, {20, 40, RelationKind::Indirect},
        {20, 50, RelationKind::Indirect}, {30, 50, RelationKind::Indirect},
    };
    CHECK(pairs == expected);
}

TEST_CASE("two-step ladders have no indirect pairs") {
    CHECK(indirect_pairs({"R", {1, 21}}).empty());
    CHECK(direct_pairs({"R", {1, 21}}) ==
          std::vector<RelationPair>{{1, 21, RelationKind::Direct}});
}

TEST_CASE("three-step ladder yields one indirect pair") {
    CHECK(indirect_pairs({"R", {3, 24, 29}}) ==
          std::vector<RelationPair>{{3, 29, RelationKind::Indirect}});
}

TEST_CASE("pair counts follow the ladder-length law") {
    std::mt19937 rng(7003);
    const Lexicon lexicon = testsupport::random_lexicon(rng, 12);
    for (int round = 0; round < 500; ++round) {
        const Ladder ladder = testsupport::random_ladder(rng, lexicon, 10);
        const std::size_t k = ladder.steps.size();
        CHECK(direct_pairs(ladder).size() == k - 1);
        CHECK(indirect_pairs(ladder).size() == (k - 1) * (k - 2) / 2);
    }
}

TEST_CASE("single ladder aggregates into the expected cells") {
    const Corpus corpus{acv_lexicon(), {{"R01", {3, 24, 29}}}};
    const ImplicationMatrix matrix = build_matrix(corpus);
    CHECK(matrix.dimension() == 5);
    CHECK(matrix.at(3, 24) == MatrixCell{1, 0});
    CHECK(matrix.at(24, 29) == MatrixCell{1, 0});
    CHECK(matrix.at(3, 29) == MatrixCell{0, 1});
    for (const int from : matrix.ids()) {
        for (const int to : matrix.ids()) {
            if (from == to) continue;
            const bool expected = (from == 3 && to == 24) || (from == 24 && to == 29) ||
                                  (from == 3 && to == 29);
            CHECK(matrix.at(from, to).empty() == !expected);
        }
    }
}

TEST_CASE("identical ladders add up, even from one respondent") {
    const Corpus corpus{acv_lexicon(), {{"R01", {1, 21}}, {"R01", {1, 21}}}};
    CHECK(build_matrix(corpus).at(1, 21) == MatrixCell{2, 0});
}

TEST_CASE("matrix equals the brute-force pair enumerator") {
    std::mt19937 rng(7004);
    for (int round = 0; round < 150; ++round) {
        const Corpus corpus = testsupport::random_corpus(rng);
        const ImplicationMatrix matrix = build_matrix(corpus);
        const auto oracle = testsupport::brute_force_counts(corpus);
        for (const int from : matrix.ids()) {
            for (const int to : matrix.ids()) {
                if (from == to) continue;
                const auto it = oracle.find({from, to});
                const MatrixCell expected = it == oracle.end()
                                                ? MatrixCell{}
                                                : MatrixCell{it->second.first, it->second.second};
                CHECK(matrix.at(from, to) == expected);
            }
        }
    }
}

TEST_CASE("matrix ignores ladder order and is additive") {
    std::mt19937 rng(7005);
    for (int round = 0; round < 50; ++round) {
        Corpus corpus = testsupport::random_corpus(rng, 8, 8);
        const ImplicationMatrix original = build_matrix(corpus);

        Corpus shuffled = corpus;
        std::shuffle(shuffled.ladders.begin(), shuffled.ladders.end(), rng);
        CHECK(build_matrix(shuffled) == original);

        const std::size_t half = corpus.ladders.size() / 2;
        Corpus a{corpus.lexicon, {corpus.ladders.begin(), corpus.ladders.begin() + half}};
        Corpus b{corpus.lexicon, {corpus.ladders.begin() + half, corpus.ladders.end()}};
        CHECK(build_matrix(a) + build_matrix(b) == original);
    }
}

TEST_CASE("matrix totals follow the per-ladder laws") {
    std::mt19937 rng(7006);
    for (int round = 0; round < 50; ++round) {
        const Corpus corpus = testsupport::random_corpus(rng);
        const ImplicationMatrix matrix = build_matrix(corpus);
        long long direct = 0;
        long long indirect = 0;
        for (const Ladder& ladder : corpus.ladders) {
            const long long k = static_cast<long long>(ladder.steps.size());
            direct += k - 1;
            indirect += (k - 1) * (k - 2) / 2;
        }
        CHECK(matrix.total_direct() == direct);
        CHECK(matrix.total_indirect() == indirect);
    }
}

TEST_CASE("direct relations never descend the category order") {
    std::mt19937 rng(7007);
    for (int round = 0; round < 50; ++round) {
        const Corpus corpus = testsupport::random_corpus(rng);
        const ImplicationMatrix matrix = build_matrix(corpus);
        for (const int from : matrix.ids()) {
            for (const int to : matrix.ids()) {
                if (from == to || matrix.at(from, to).direct == 0) continue;
                CHECK(category_rank(corpus.lexicon.find(from)->category) <=
                      category_rank(corpus.lexicon.find(to)->category));
            }
        }
    }
}

TEST_CASE("cell text matches the table convention") {
    CHECK(render_cell({17, 1}) == "17:01");
    CHECK(render_cell({11, 0}) == "11:00");
    CHECK(render_cell({0, 0}) == "");
    CHECK(render_cell({0, 5}) == "0:05");
    CHECK(render_cell({3, 120}) == "3:120");
}

TEST_CASE("row and column totals split by direction") {
    const Corpus corpus{acv_lexicon(), {{"R01", {3, 24, 29}}}};
    const auto totals = matrix_row_totals(build_matrix(corpus));
    REQUIRE(totals.size() == 5);
    const auto find = [&](int id) {
        return std::find_if(totals.begin(), totals.end(),
                            [&](const auto& entry) { return entry.first == id; })
            ->second;
    };
    CHECK(find(29) == ElementTotals{0, 0, 1, 1});
    CHECK(find(3) == ElementTotals{1, 1, 0, 0});
    CHECK(find(24) == ElementTotals{1, 0, 1, 0});
    CHECK(find(1) == ElementTotals{0, 0, 0, 0});  // never mentioned
}

TEST_CASE("self-relations are rejected") {
    ImplicationMatrix matrix(std::vector<int>{1, 2});
    CHECK_THROWS_AS(matrix.add_direct(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(matrix.at(1, 99), std::out_of_range);
}

}  // TEST_SUITE
