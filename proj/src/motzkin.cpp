#include "patternlab/motzkin.hpp"

#include <numeric>
#include <stdexcept>

namespace patternlab {

namespace {

bool valid_path(const std::vector<Step>& steps) {
    int h = 0;
    for (Step s : steps) {
        if (s == Step::Up) ++h;
        if (s == Step::Down) --h;
        if (h < 0) return false;
    }
    return h == 0;
}

}  // namespace

MotzkinPath::MotzkinPath(std::vector<Step> steps) : steps_(std::move(steps)) {
    if (!valid_path(steps_))
        throw std::invalid_argument("not a Motzkin path: " + str());
}

MotzkinPath MotzkinPath::parse(const std::string& text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case 'U': steps.push_back(Step::Up); break;
            case 'D': steps.push_back(Step::Down); break;
            case 'L': steps.push_back(Step::Level); break;
            default:
                throw std::invalid_argument(std::string("bad path step '") + c + "'");
        }
    }
    return MotzkinPath(std::move(steps));
}

std::vector<int> MotzkinPath::heights() const {
    std::vector<int> h;
    h.reserve(steps_.size());
    int cur = 0;
    for (Step s : steps_) {
        h.push_back(cur);
        if (s == Step::Up) ++cur;
        if (s == Step::Down) --cur;
    }
    return h;
}

std::string MotzkinPath::str() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out.push_back(static_cast<char>(s));
    return out;
}

namespace {

void gen_rec(int remaining, int height, std::vector<Step>& buf,
             const std::function<void(const MotzkinPath&)>& fn) {
    if (remaining == 0) {
        if (height == 0) fn(MotzkinPath(buf));
        return;
    }
    if (height > remaining) return;  // cannot come back down
    if (height + 1 <= remaining - 1) {
        buf.push_back(Step::Up);
        gen_rec(remaining - 1, height + 1, buf, fn);
        buf.pop_back();
    }
    buf.push_back(Step::Level);
    gen_rec(remaining - 1, height, buf, fn);
    buf.pop_back();
    if (height > 0) {
        buf.push_back(Step::Down);
        gen_rec(remaining - 1, height - 1, buf, fn);
        buf.pop_back();
    }
}

}  // namespace

void for_each_motzkin_path(int n, const std::function<void(const MotzkinPath&)>& fn,
                           int limit) {
    if (n < 0) throw std::invalid_argument("for_each_motzkin_path: n < 0");
    if (n > limit)
        throw std::length_error("path length " + std::to_string(n) +
                                " exceeds limit " + std::to_string(limit));
    std::vector<Step> buf;
    buf.reserve(static_cast<size_t>(n));
    gen_rec(n, 0, buf, fn);
}

Int motzkin_number(int n) {
    static std::vector<Int> cache{1};
    for (int m = static_cast<int>(cache.size()); m <= n; ++m) {
        Int v = cache[static_cast<size_t>(m - 1)];
        for (int i = 2; i <= m; ++i)
            v += cache[static_cast<size_t>(i - 2)] * cache[static_cast<size_t>(m - i)];
        cache.push_back(v);
    }
    return cache[static_cast<size_t>(n)];
}

std::uint64_t tau_k_path(const MotzkinPath& p, int k) {
    if (k <= 0) return 0;
    Int total = 0;
    const auto h = p.heights();
    const auto& steps = p.steps();
    for (size_t i = 0; i < steps.size(); ++i) {
        const long long ht = h[i];
        if (steps[i] == Step::Down)
            total += binomial(2 * ht - 1, k - 1);
        else
            total += binomial(2 * ht, k - 1);
    }
    return total.convert_to<std::uint64_t>();
}

Permutation phi(const MotzkinPath& p) {
    const int n = p.size();
    const auto h = p.heights();
    const auto& steps = p.steps();
    std::vector<int> labels(static_cast<size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    for (int i = 0; i < n; ++i) {
        if (steps[static_cast<size_t>(i)] != Step::Up) continue;
        const int target = h[static_cast<size_t>(i)] + 1;
        for (int j = i + 1; j < n; ++j) {
            if (steps[static_cast<size_t>(j)] == Step::Down &&
                h[static_cast<size_t>(j)] == target) {
                std::swap(labels[static_cast<size_t>(i)], labels[static_cast<size_t>(j)]);
                break;
            }
        }
    }
    return Permutation(std::move(labels));
}

MotzkinPath phi_inverse(const Permutation& q) {
    static const Permutation kPat3412 = Permutation::parse("3412");
    if (!q.is_involution() || contains(q, kPat3412))
        throw std::domain_error("phi_inverse: " + q.str() +
                                " is not a 3412-avoiding involution");
    std::vector<Step> steps;
    steps.reserve(static_cast<size_t>(q.size()));
    for (int i = 1; i <= q.size(); ++i) {
        if (q(i) == i)
            steps.push_back(Step::Level);
        else if (q(i) > i)
            steps.push_back(Step::Up);
        else
            steps.push_back(Step::Down);
    }
    return MotzkinPath(std::move(steps));
}

MotzkinPath rc_path(const MotzkinPath& p) {
    std::vector<Step> steps(p.steps().rbegin(), p.steps().rend());
    for (Step& s : steps) {
        if (s == Step::Up)
            s = Step::Down;
        else if (s == Step::Down)
            s = Step::Up;
    }
    return MotzkinPath(std::move(steps));
}

}  // namespace patternlab
