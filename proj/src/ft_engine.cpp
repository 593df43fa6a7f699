#include "patternlab/ft_engine.hpp"

#include <stdexcept>

#include "patternlab/motzkin.hpp"

namespace patternlab {

FtEngine& FtEngine::global() {
    static FtEngine engine;
    return engine;
}

std::string FtEngine::register_set(const PatternSet& canonical) {
    std::string key = canonical.canonical_key();
    sets_.emplace(key, canonical);
    return key;
}

FtEngine::Kind FtEngine::kind_of(const PatternSet& canonical) const {
    if (canonical.contains_empty_pattern()) return Kind::Zero;
    if (canonical.empty()) return Kind::Motzkin;
    if (canonical.members().front().size() == 1) return Kind::One;
    return Kind::Recursive;
}

const FtEngine::Plan& FtEngine::plan_for(const std::string& key) {
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;

    const PatternSet& set = sets_.at(key);
    const auto& members = set.members();
    const int m = static_cast<int>(members.size());

    Plan plan;
    {
        std::vector<Permutation> bs;
        bs.reserve(members.size());
        for (const auto& p : members) bs.push_back(beta_map(p));
        plan.beta_key = register_set(PatternSet(std::move(bs)).canonicalize());
    }

    std::vector<std::vector<Permutation>> blocks;
    blocks.reserve(members.size());
    for (const auto& p : members) blocks.push_back(complete_decompose(p));

    // Prefix types overline(alpha_1|...|alpha_t) for t = 0..k_j, per member.
    std::vector<std::vector<Permutation>> prefixes(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
        const auto& bl = blocks[static_cast<size_t>(j)];
        for (size_t t = 0; t <= bl.size(); ++t)
            prefixes[static_cast<size_t>(j)].push_back(overline_map(
                assemble_blocks({bl.begin(), bl.begin() + static_cast<long>(t)})));
    }

    std::vector<int> tuple(static_cast<size_t>(m), 1);
    while (true) {
        Tuple t;
        {
            std::vector<Permutation> right;
            for (int j = 0; j < m; ++j) {
                const auto& bl = blocks[static_cast<size_t>(j)];
                right.push_back(assemble_blocks(
                    {bl.begin() + tuple[static_cast<size_t>(j)] - 1, bl.end()}));
            }
            t.right_key = register_set(PatternSet(std::move(right)).canonicalize());
        }
        for (unsigned subset = 0; subset < (1u << m); ++subset) {
            std::vector<Permutation> left;
            int bits = 0;
            for (int j = 0; j < m; ++j) {
                const bool in_y = (subset >> j) & 1u;
                if (in_y) ++bits;
                const int idx = tuple[static_cast<size_t>(j)] - (in_y ? 1 : 0);
                left.push_back(prefixes[static_cast<size_t>(j)][static_cast<size_t>(idx)]);
            }
            t.left.push_back({bits % 2 ? -1 : 1,
                              register_set(PatternSet(std::move(left)).canonicalize())});
        }
        plan.tuples.push_back(std::move(t));

        int j = 0;
        while (j < m) {
            if (++tuple[static_cast<size_t>(j)] <=
                static_cast<int>(blocks[static_cast<size_t>(j)].size()))
                break;
            tuple[static_cast<size_t>(j)] = 1;
            ++j;
        }
        if (j == m) break;
    }
    return plans_.emplace(key, std::move(plan)).first->second;
}

void FtEngine::ensure_coefficients(const std::string& key, int n) {
    std::vector<Int>& coeffs = coeffs_[key];
    if (static_cast<int>(coeffs.size()) > n) return;

    const PatternSet& set = sets_.at(key);
    const Kind kind = kind_of(set);
    while (static_cast<int>(coeffs.size()) <= n) {
        const int m = static_cast<int>(coeffs.size());
        Int c = 0;
        switch (kind) {
            case Kind::Zero:
                break;
            case Kind::One:
                c = m == 0 ? 1 : 0;
                break;
            case Kind::Motzkin:
                c = motzkin_number(m);
                break;
            case Kind::Recursive: {
                if (m == 0) {
                    c = 1;
                    break;
                }
                const Plan& plan = plan_for(key);
                ensure_coefficients(plan.beta_key, m - 1);
                c = coeffs_.at(plan.beta_key)[static_cast<size_t>(m - 1)];
                for (const auto& t : plan.tuples) {
                    if (m < 2) break;
                    ensure_coefficients(t.right_key, m - 2);
                    for (const auto& lt : t.left) ensure_coefficients(lt.key, m - 2);
                    const auto& right = coeffs_.at(t.right_key);
                    for (int a = 0; a <= m - 2; ++a) {
                        Int inner = 0;
                        for (const auto& lt : t.left) {
                            const Int& v = coeffs_.at(lt.key)[static_cast<size_t>(a)];
                            if (lt.sign > 0)
                                inner += v;
                            else
                                inner -= v;
                        }
                        if (inner != 0) c += inner * right[static_cast<size_t>(m - 2 - a)];
                    }
                }
                break;
            }
        }
        // Recursive calls above may have appended to our own vector through a
        // self-referential set; only push if still needed.
        std::vector<Int>& self = coeffs_[key];
        if (static_cast<int>(self.size()) == m) self.push_back(c);
    }
}

Int FtEngine::coefficient(const PatternSet& T, int n) {
    if (n < 0) throw std::invalid_argument("FtEngine: negative index");
    const std::string key = register_set(T.canonicalize());
    ensure_coefficients(key, n);
    return coeffs_.at(key)[static_cast<size_t>(n)];
}

PowerSeries FtEngine::series(const PatternSet& T, int order, int limit) {
    if (order > limit)
        throw std::length_error("FtEngine: order " + std::to_string(order) +
                                " exceeds limit " + std::to_string(limit));
    const std::string key = register_set(T.canonicalize());
    ensure_coefficients(key, order);
    const auto& coeffs = coeffs_.at(key);
    std::vector<Rat> out;
    out.reserve(static_cast<size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) out.emplace_back(coeffs[static_cast<size_t>(i)]);
    return PowerSeries(order, std::move(out));
}

}  // namespace patternlab
