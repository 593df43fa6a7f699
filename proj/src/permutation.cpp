#include "patternlab/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace patternlab {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    const int n = size();
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : values_) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("not a permutation of {1..n}: entry " +
                                        std::to_string(v));
        seen[static_cast<size_t>(v)] = 1;
    }
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> vals;
    std::istringstream in(text);
    std::string tok;
    std::vector<std::string> toks;
    while (in >> tok) toks.push_back(tok);
    if (toks.empty()) return Permutation{};
    const bool compact = toks.size() == 1 && toks[0].size() > 1 &&
                         std::all_of(toks[0].begin(), toks[0].end(),
                                     [](char c) { return c >= '1' && c <= '9'; });
    if (compact) {
        for (char c : toks[0]) vals.push_back(c - '0');
    } else {
        for (const auto& t : toks) {
            try {
                size_t pos = 0;
                int v = std::stoi(t, &pos);
                if (pos != t.size()) throw std::invalid_argument(t);
                vals.push_back(v);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad permutation token \"" + t + "\"");
            }
        }
    }
    try {
        return Permutation(std::move(vals));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("\"" + text + "\" is not a permutation");
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::decreasing(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = n - i;
    return Permutation(std::move(v));
}

bool Permutation::is_involution() const {
    const int n = size();
    for (int i = 1; i <= n; ++i)
        if ((*this)((*this)(i)) != i) return false;
    return true;
}

std::string Permutation::str() const {
    std::string out;
    if (size() <= 9) {
        for (int v : values_) out.push_back(static_cast<char>('0' + v));
    } else {
        for (size_t i = 0; i < values_.size(); ++i) {
            if (i) out.push_back(' ');
            out += std::to_string(values_[i]);
        }
    }
    return out;
}

namespace {

// Backtracking over host positions with a value window: the next chosen value
// must exceed the largest already-chosen value playing a smaller pattern role
// and stay below the smallest one playing a larger role.
std::uint64_t count_rec(const std::vector<int>& host, const std::vector<int>& pat,
                        std::vector<int>& chosen, size_t slot, size_t from,
                        bool stop_at_first) {
    const size_t k = pat.size();
    if (slot == k) return 1;
    int lo = 0, hi = static_cast<int>(host.size()) + 1;
    for (size_t t = 0; t < slot; ++t) {
        if (pat[t] < pat[slot])
            lo = std::max(lo, chosen[t]);
        else
            hi = std::min(hi, chosen[t]);
    }
    std::uint64_t total = 0;
    for (size_t i = from; i + (k - slot) <= host.size(); ++i) {
        const int v = host[i];
        if (v <= lo || v >= hi) continue;
        chosen[slot] = v;
        total += count_rec(host, pat, chosen, slot + 1, i + 1, stop_at_first);
        if (stop_at_first && total) return total;
    }
    return total;
}

}  // namespace

std::uint64_t occurrence_count(const Permutation& host, const Permutation& pattern) {
    if (pattern.empty()) return 1;
    if (pattern.size() > host.size()) return 0;
    std::vector<int> chosen(static_cast<size_t>(pattern.size()));
    return count_rec(host.values(), pattern.values(), chosen, 0, 0, false);
}

bool contains(const Permutation& host, const Permutation& pattern) {
    if (pattern.empty()) return true;
    if (pattern.size() > host.size()) return false;
    std::vector<int> chosen(static_cast<size_t>(pattern.size()));
    return count_rec(host.values(), pattern.values(), chosen, 0, 0, true) != 0;
}

std::uint64_t tau_k(const Permutation& p, int k) {
    if (k <= 0) return 0;
    const int n = p.size();
    if (k > n) return 0;
    // dp[j-1][i] = decreasing subsequences of length j ending at position i.
    std::vector<std::vector<std::uint64_t>> dp(
        static_cast<size_t>(k), std::vector<std::uint64_t>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) dp[0][static_cast<size_t>(i)] = 1;
    for (int j = 1; j < k; ++j)
        for (int i = 0; i < n; ++i)
            for (int t = 0; t < i; ++t)
                if (p.values()[static_cast<size_t>(t)] > p.values()[static_cast<size_t>(i)])
                    dp[static_cast<size_t>(j)][static_cast<size_t>(i)] +=
                        dp[static_cast<size_t>(j - 1)][static_cast<size_t>(t)];
    std::uint64_t total = 0;
    for (int i = 0; i < n; ++i) total += dp[static_cast<size_t>(k - 1)][static_cast<size_t>(i)];
    return total;
}

std::uint64_t decreasing_subseq_count(const Permutation& p) {
    std::uint64_t total = 0;
    for (int k = 1; k <= p.size(); ++k) total += tau_k(p, k);
    return total;
}

ClassicStats classic_stats(const Permutation& p) {
    ClassicStats s;
    const auto& v = p.values();
    const int n = p.size();
    s.inv = tau_k(p, 2);
    int best = 0;
    for (int i = 0; i < n; ++i)
        if (v[static_cast<size_t>(i)] > best) {
            best = v[static_cast<size_t>(i)];
            ++s.lrmax;
        }
    best = n + 1;
    for (int i = n - 1; i >= 0; --i)
        if (v[static_cast<size_t>(i)] < best) {
            best = v[static_cast<size_t>(i)];
            ++s.rlmin;
        }
    for (int i = 1; i <= n; ++i)
        if (p(i) == i) ++s.fix;
    return s;
}

Permutation star(const Permutation& p1, const Permutation& p2) {
    const int m = p1.size();
    std::vector<int> v;
    v.reserve(static_cast<size_t>(m + p2.size() + 2));
    v.push_back(m + 2);
    for (int e : p1.values()) v.push_back(e + 1);
    v.push_back(1);
    for (int e : p2.values()) v.push_back(e + m + 2);
    return Permutation(std::move(v));
}

Permutation prepend_one(const Permutation& p) {
    std::vector<int> v;
    v.reserve(static_cast<size_t>(p.size()) + 1);
    v.push_back(1);
    for (int e : p.values()) v.push_back(e + 1);
    return Permutation(std::move(v));
}

std::vector<Permutation> complete_decompose(const Permutation& p) {
    std::vector<Permutation> blocks;
    const auto& v = p.values();
    int start = 0, maxv = 0;
    for (int i = 0; i < p.size(); ++i) {
        maxv = std::max(maxv, v[static_cast<size_t>(i)]);
        if (maxv == i + 1) {
            std::vector<int> block(v.begin() + start, v.begin() + i + 1);
            for (int& e : block) e -= start;
            blocks.emplace_back(std::move(block));
            start = i + 1;
        }
    }
    return blocks;
}

Permutation assemble_blocks(const std::vector<Permutation>& blocks) {
    std::vector<int> v;
    int shift = 0;
    for (const auto& b : blocks) {
        for (int e : b.values()) v.push_back(e + shift);
        shift += b.size();
    }
    return Permutation(std::move(v));
}

Permutation overline_map(const Permutation& p) {
    const int n = p.size();
    if (n <= 1) return Permutation{};
    const auto& v = p.values();
    const bool leads_max = v.front() == n;
    const bool ends_one = v.back() == 1;
    if (leads_max && ends_one) {
        std::vector<int> s(v.begin() + 1, v.end() - 1);
        for (int& e : s) --e;
        return Permutation(std::move(s));
    }
    if (leads_max) {
        std::vector<int> s(v.begin() + 1, v.end());
        return Permutation(std::move(s));
    }
    if (ends_one) {
        std::vector<int> s(v.begin(), v.end() - 1);
        for (int& e : s) --e;
        return Permutation(std::move(s));
    }
    return p;
}

Permutation beta_map(const Permutation& p) {
    auto blocks = complete_decompose(p);
    if (blocks.empty() || blocks.front().size() != 1) return p;
    blocks.erase(blocks.begin());
    return assemble_blocks(blocks);
}

Permutation wrap_kpi1(const Permutation& p) {
    std::vector<int> v;
    v.reserve(static_cast<size_t>(p.size()) + 2);
    v.push_back(p.size() + 2);
    for (int e : p.values()) v.push_back(e + 1);
    v.push_back(1);
    return Permutation(std::move(v));
}

Permutation layered(const std::vector<int>& parts) {
    if (parts.empty()) throw std::invalid_argument("layered: need at least one part");
    std::vector<int> v;
    int base = 0;
    for (int l : parts) {
        if (l < 1) throw std::invalid_argument("layered: parts must be positive");
        for (int i = 0; i < l; ++i) v.push_back(base + l - i);
        base += l;
    }
    return Permutation(std::move(v));
}

Permutation reverse_complement(const Permutation& p) {
    const int n = p.size();
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<size_t>(i)] = n + 1 - p.values()[static_cast<size_t>(n - 1 - i)];
    return Permutation(std::move(v));
}

Permutation inverse_perm(const Permutation& p) {
    const int n = p.size();
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) v[static_cast<size_t>(p(i) - 1)] = i;
    return Permutation(std::move(v));
}

}  // namespace patternlab
