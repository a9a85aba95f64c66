#include "cayplane/word.hpp"

#include <algorithm>

namespace cayplane {

static bool cancels(const Letter& a, const Letter& b) {
    return a.gen == b.gen && a.sign == -b.sign;
}

Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (const Letter& l : w) {
        if (!out.empty() && cancels(out.back(), l))
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    std::size_t lo = 0, hi = r.size();
    while (hi - lo >= 2 && cancels(r[lo], r[hi - 1])) {
        ++lo;
        --hi;
    }
    return Word(r.begin() + lo, r.begin() + hi);
}

Word inverse_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back({it->gen, static_cast<std::int16_t>(-it->sign)});
    return out;
}

std::vector<Word> proper_cyclic_subwords(const Word& r) {
    std::vector<Word> out;
    const std::size_t n = r.size();
    if (n == 0) return out;
    for (std::size_t len = 1; len < n; ++len) {
        for (std::size_t start = 0; start < n; ++start) {
            Word sub;
            sub.reserve(len);
            for (std::size_t k = 0; k < len; ++k) sub.push_back(r[(start + k) % n]);
            if (std::find(out.begin(), out.end(), sub) == out.end())
                out.push_back(std::move(sub));
        }
    }
    return out;
}

bool is_freely_reduced(const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (cancels(w[i], w[i + 1])) return false;
    return true;
}

bool is_cyclically_reduced(const Word& w) {
    if (!is_freely_reduced(w)) return false;
    return w.size() < 2 || !cancels(w.front(), w.back());
}

}  // namespace cayplane
