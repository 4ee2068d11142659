#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace meckit {

// Abstraction level of a coded element. The order is total: ladders move
// from concrete attributes through consequences up to personal values.
enum class Category { Attribute, Consequence, Value };

// Attribute -> 0, Consequence -> 1, Value -> 2.
int category_rank(Category category) noexcept;

// Single-letter code used by the file formats: 'A', 'C' or 'V'.
char category_code(Category category) noexcept;
std::optional<Category> category_from_code(char code) noexcept;

// Long name for reports: "Attribute", "Consequence", "Value".
const char* category_name(Category category) noexcept;

// One coded concept from the interview lexicon.
struct Element {
    int id = 0;               // positive, stable key
    std::string label;        // non-empty, unique after trim + case-fold
    Category category = Category::Attribute;

    bool operator==(const Element&) const = default;
};

// The element dictionary a corpus is coded against. Immutable once built;
// elements are kept in ascending id order.
class Lexicon {
  public:
    Lexicon() = default;

    // Throws std::invalid_argument on non-positive ids, empty labels, or
    // duplicate ids/labels (labels compared after trim and ASCII case-fold).
    explicit Lexicon(std::vector<Element> elements);

    const std::vector<Element>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }

    const Element* find(int id) const noexcept;
    bool contains(int id) const noexcept { return find(id) != nullptr; }

    // Ascending ids, same order as elements().
    std::vector<int> ids() const;

    static std::string normalize_label(std::string_view label);

    bool operator==(const Lexicon& other) const { return elements_ == other.elements_; }

  private:
    std::vector<Element> elements_;
    std::unordered_map<int, std::size_t> by_id_;
};

// One respondent's elicited chain, ordered from attributes toward values.
struct Ladder {
    std::string respondent;
    std::vector<int> steps;  // element ids, length >= 2, no repeats

    bool operator==(const Ladder&) const = default;
};

struct Corpus {
    Lexicon lexicon;
    std::vector<Ladder> ladders;

    bool operator==(const Corpus&) const = default;
};

struct LadderViolation {
    std::size_t step = 0;  // index of the offending step
    std::string reason;

    bool operator==(const LadderViolation&) const = default;
};

struct ValidationResult {
    std::vector<LadderViolation> violations;
    bool ok() const noexcept { return violations.empty(); }
};

struct ValidationOptions {
    // When set, the category rank must strictly increase at every step
    // (pure A -> C -> V ladders); by default same-level moves are fine.
    bool strict_progression = false;
};

// Checks a single ladder against the lexicon: length >= 2, every id known,
// no repeated element, category rank never decreasing along the steps.
// Violations are data, not failures; all of them are reported.
ValidationResult validate_ladder(const Ladder& ladder, const Lexicon& lexicon,
                                 const ValidationOptions& options = {});

}  // namespace meckit
