#include "meckit/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "meckit/textutil.hpp"

namespace meckit {

int category_rank(Category category) noexcept {
    switch (category) {
        case Category::Attribute: return 0;
        case Category::Consequence: return 1;
        case Category::Value: return 2;
    }
    return 0;
}

char category_code(Category category) noexcept {
    switch (category) {
        case Category::Attribute: return 'A';
        case Category::Consequence: return 'C';
        case Category::Value: return 'V';
    }
    return '?';
}

std::optional<Category> category_from_code(char code) noexcept {
    switch (code) {
        case 'A': return Category::Attribute;
        case 'C': return Category::Consequence;
        case 'V': return Category::Value;
        default: return std::nullopt;
    }
}

const char* category_name(Category category) noexcept {
    switch (category) {
        case Category::Attribute: return "Attribute";
        case Category::Consequence: return "Consequence";
        case Category::Value: return "Value";
    }
    return "?";
}

std::string Lexicon::normalize_label(std::string_view label) {
    return to_lower_ascii(trim(label));
}

Lexicon::Lexicon(std::vector<Element> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end(),
              [](const Element& a, const Element& b) { return a.id < b.id; });
    std::unordered_set<std::string> labels;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        const Element& e = elements_[i];
        if (e.id <= 0) {
            throw std::invalid_argument("element id must be positive, got " +
                                        std::to_string(e.id));
        }
        const std::string norm = normalize_label(e.label);
        if (norm.empty()) {
            throw std::invalid_argument("element " + std::to_string(e.id) +
                                        " has an empty label");
        }
        if (!by_id_.emplace(e.id, i).second) {
            throw std::invalid_argument("duplicate element id " + std::to_string(e.id));
        }
        if (!labels.insert(norm).second) {
            throw std::invalid_argument("duplicate label '" + norm + "'");
        }
    }
}

const Element* Lexicon::find(int id) const noexcept {
    const auto it = by_id_.find(id);
    return it == by_id_.end() ? nullptr : &elements_[it->second];
}

std::vector<int> Lexicon::ids() const {
    std::vector<int> out;
    out.reserve(elements_.size());
    for (const Element& e : elements_) out.push_back(e.id);
    return out;
}

ValidationResult validate_ladder(const Ladder& ladder, const Lexicon& lexicon,
                                 const ValidationOptions& options) {
    ValidationResult result;
    if (ladder.steps.size() < 2) {
        result.violations.push_back({0, "ladder needs at least 2 steps"});
    }
    std::unordered_set<int> seen;
    const Element* previous = nullptr;
    for (std::size_t i = 0; i < ladder.steps.size(); ++i) {
        const int id = ladder.steps[i];
        const Element* element = lexicon.find(id);
        if (element == nullptr) {
            result.violations.push_back({i, "unknown element id " + std::to_string(id)});
            previous = nullptr;
            continue;
        }
        if (!seen.insert(id).second) {
            result.violations.push_back({i, "duplicate element id " + std::to_string(id)});
        }
        if (previous != nullptr) {
            const int prev_rank = category_rank(previous->category);
            const int rank = category_rank(element->category);
            if (rank < prev_rank) {
                result.violations.push_back(
                    {i, "category rank decreases at step " + std::to_string(i)});
            } else if (options.strict_progression && rank == prev_rank) {
                result.violations.push_back(
                    {i, "category rank does not increase at step " + std::to_string(i)});
            }
        }
        previous = element;
    }
    return result;
}

}  // namespace meckit
