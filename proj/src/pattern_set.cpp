#include "patternlab/pattern_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace patternlab {

PatternSet::PatternSet(std::vector<Permutation> patterns) : patterns_(std::move(patterns)) {
    std::sort(patterns_.begin(), patterns_.end());
    patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
}

PatternSet PatternSet::parse(const std::string& text) {
    std::vector<Permutation> pats;
    size_t start = 0;
    bool any = false;
    for (size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            std::string piece = text.substr(start, i - start);
            start = i + 1;
            if (piece.find_first_not_of(" \t") == std::string::npos) {
                // A bare "" means no patterns; an explicit comma-separated
                // empty piece is rejected as malformed.
                if (i != text.size() || any)
                    throw std::invalid_argument("empty pattern in set \"" + text + "\"");
                continue;
            }
            any = true;
            pats.push_back(Permutation::parse(piece));
        }
    }
    return PatternSet(std::move(pats));
}

bool PatternSet::contains_empty_pattern() const {
    return !patterns_.empty() && patterns_.front().empty();
}

PatternSet PatternSet::canonicalize() const {
    std::vector<Permutation> keep;
    for (const auto& p : patterns_) {
        bool implied = false;
        for (const auto& q : patterns_) {
            if (q == p) continue;
            // Drop p if it contains q; ties in both directions cannot occur
            // since containment between distinct patterns is antisymmetric.
            if (contains(p, q)) {
                implied = true;
                break;
            }
        }
        if (!implied) keep.push_back(p);
    }
    return PatternSet(std::move(keep));
}

std::string PatternSet::canonical_key() const {
    // Each pattern gets its own parentheses so that the empty set {} and the
    // set {empty pattern} serialize differently.
    std::string key;
    for (const auto& p : patterns_) {
        if (!key.empty()) key.push_back(';');
        key.push_back('(');
        for (size_t i = 0; i < p.values().size(); ++i) {
            if (i) key.push_back('.');
            key += std::to_string(p.values()[i]);
        }
        key.push_back(')');
    }
    return "{" + key + "}";
}

PatternSet PatternSet::kT1() const {
    std::vector<Permutation> out;
    out.reserve(patterns_.size());
    for (const auto& p : patterns_) out.push_back(wrap_kpi1(p));
    return PatternSet(std::move(out));
}

PatternSet PatternSet::kT1_iter(int i) const {
    if (i < 1) throw std::invalid_argument("kT1_iter: i must be >= 1");
    PatternSet t = *this;
    for (int j = 0; j < i; ++j) t = t.kT1();
    return t;
}

}  // namespace patternlab
