#include "cayplane/wordproblem.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <queue>
#include <unordered_set>

namespace cayplane {

int FiniteModel::trace(int coset, const Word& w) const {
    int c = coset;
    for (const Letter& l : w) c = table[c][alpha.index(l)];
    return c;
}

namespace {

// ---------------------------------------------------------------- Todd-Coxeter

class Enumerator {
public:
    Enumerator(const Presentation& p, const Limits& limits)
        : p_(p), alpha_(AlphabetMap::build(p)), limits_(limits) {
        nl_ = alpha_.size();
        for (const Word& r : p.relators) relators_.push_back(encode_letters(r));
        new_coset();
    }

    bool run() {
        for (std::size_t idx = 0; idx < table_.size(); ++idx) {
            if (dead(idx)) continue;
            for (const auto& r : relators_) {
                if (!scan_and_fill(static_cast<int>(idx), r)) return false;
                if (dead(idx)) break;
            }
            if (dead(idx)) continue;
            for (int l = 0; l < nl_; ++l)
                if (table_[idx][l] < 0) {
                    if (!define(static_cast<int>(idx), l)) return false;
                }
        }
        return true;
    }

    std::uint64_t cosets_used() const { return table_.size(); }

    FiniteModel finish() {
        // Renumber live cosets by BFS from the identity in letter order so
        // row order matches shortlex order of the canonical words.
        const int root = find(0);
        std::vector<int> number(table_.size(), -1);
        std::vector<int> bfs_order;
        std::vector<Word> words;
        number[root] = 0;
        bfs_order.push_back(root);
        words.push_back({});
        for (std::size_t qi = 0; qi < bfs_order.size(); ++qi) {
            const int c = bfs_order[qi];
            for (int l = 0; l < nl_; ++l) {
                const int d = find(table_[c][l]);
                if (number[d] < 0) {
                    number[d] = static_cast<int>(bfs_order.size());
                    bfs_order.push_back(d);
                    Word w = words[qi];
                    w.push_back(alpha_.letters[l]);
                    words.push_back(std::move(w));
                }
            }
        }
        FiniteModel m;
        m.alpha = alpha_;
        m.table.assign(bfs_order.size(), std::vector<int>(nl_, -1));
        for (std::size_t i = 0; i < bfs_order.size(); ++i)
            for (int l = 0; l < nl_; ++l)
                m.table[i][l] = number[find(table_[bfs_order[i]][l])];
        m.coset_word = std::move(words);
        return m;
    }

private:
    std::vector<int> encode_letters(const Word& w) const {
        std::vector<int> out;
        out.reserve(w.size());
        for (const Letter& l : w) out.push_back(alpha_.index(l));
        return out;
    }

    bool dead(std::size_t c) const { return rep_[c] != static_cast<int>(c); }

    int find(int c) {
        while (rep_[c] != c) {
            rep_[c] = rep_[rep_[c]];
            c = rep_[c];
        }
        return c;
    }

    bool new_coset() {
        if (table_.size() >= limits_.max_cosets) return false;
        table_.emplace_back(nl_, -1);
        rep_.push_back(static_cast<int>(rep_.size()));
        return true;
    }

    bool define(int c, int l) {
        if (!new_coset()) return false;
        const int d = static_cast<int>(table_.size()) - 1;
        table_[c][l] = d;
        table_[d][alpha_.inverse[l]] = c;
        return true;
    }

    void coincide(int a, int b) {
        std::vector<std::pair<int, int>> queue{{a, b}};
        while (!queue.empty()) {
            auto [x, y] = queue.back();
            queue.pop_back();
            x = find(x);
            y = find(y);
            if (x == y) continue;
            if (x > y) std::swap(x, y);
            rep_[y] = x;
            for (int l = 0; l < nl_; ++l) {
                int d = table_[y][l];
                table_[y][l] = -1;
                if (d < 0) continue;
                d = find(d);
                const int li = alpha_.inverse[l];
                int e = table_[x][l];
                if (e >= 0) e = find(e);
                if (e < 0) {
                    table_[x][l] = d;
                    int back = table_[d][li];
                    if (back >= 0) back = find(back);
                    if (back < 0)
                        table_[d][li] = x;
                    else if (back != x)
                        queue.push_back({back, x});
                } else if (e != d) {
                    queue.push_back({e, d});
                }
            }
        }
    }

    // Returns false only when the coset cap is hit.
    bool scan_and_fill(int start, const std::vector<int>& w) {
        const int n = static_cast<int>(w.size());
        int f = find(start), b = find(start);
        int i = 0, j = n - 1;
        while (true) {
            while (i <= j && table_[f][w[i]] >= 0) {
                f = find(table_[f][w[i]]);
                ++i;
            }
            if (i > j) {
                if (f != b) coincide(f, b);
                return true;
            }
            while (j >= i && table_[b][alpha_.inverse[w[j]]] >= 0) {
                b = find(table_[b][alpha_.inverse[w[j]]]);
                --j;
            }
            if (j < i) {
                if (f != b) coincide(f, b);
                return true;
            }
            if (j == i) {
                table_[f][w[i]] = b;
                table_[b][alpha_.inverse[w[i]]] = f;
                return true;
            }
            if (!define(f, w[i])) return false;
        }
    }

    const Presentation& p_;
    AlphabetMap alpha_;
    Limits limits_;
    int nl_;
    std::vector<std::vector<int>> relators_;
    std::vector<std::vector<int>> table_;
    std::vector<int> rep_;
};

// ---------------------------------------------------------------- Knuth-Bendix

std::string rewrite_with(const std::vector<RewriteRule>& rules, std::string s) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t pos = 0; pos < s.size() && !changed; ++pos) {
            for (const RewriteRule& r : rules) {
                if (r.lhs.size() > s.size() - pos) continue;
                if (s.compare(pos, r.lhs.size(), r.lhs) == 0) {
                    s = s.substr(0, pos) + r.rhs + s.substr(pos + r.lhs.size());
                    changed = true;
                    break;
                }
            }
        }
    }
    return s;
}

class Completer {
public:
    Completer(const Presentation& p, const Limits& limits)
        : alpha_(AlphabetMap::build(p)), limits_(limits) {
        for (std::size_t g = 0; g < p.generators.size(); ++g) {
            if (p.generators[g].involution) continue;
            const char fwd = static_cast<char>(alpha_.gen_letter[g][0]);
            const char bwd = static_cast<char>(alpha_.gen_letter[g][1]);
            pending_.push_back({std::string{fwd, bwd}, ""});
            pending_.push_back({std::string{bwd, fwd}, ""});
        }
        for (const Word& r : p.relators) pending_.push_back({alpha_.encode(r), ""});
    }

    // true on confluent completion, false when limits are exceeded
    bool run() {
        while (!pending_.empty()) {
            auto [u, v] = pending_.front();
            pending_.pop_front();
            u = rewrite_with(rules_, u);
            v = rewrite_with(rules_, v);
            if (u == v) continue;
            if (shortlex_less(u, v)) std::swap(u, v);
            if (u.size() > limits_.max_lhs_length) return false;
            rules_.push_back({u, v});
            if (rules_.size() > limits_.max_rules) return false;
            const std::size_t added = rules_.size() - 1;

            // Drop rules whose lhs the new rule now reduces; requeue them.
            for (std::size_t i = 0; i + 1 < rules_.size();) {
                if (rewrite_with({rules_[added]}, rules_[i].lhs) != rules_[i].lhs) {
                    pending_.push_back({rules_[i].lhs, rules_[i].rhs});
                    rules_.erase(rules_.begin() + static_cast<std::ptrdiff_t>(i));
                } else {
                    rules_[i].rhs = rewrite_with(rules_, rules_[i].rhs);
                    ++i;
                }
            }
            const std::size_t last = rules_.size() - 1;
            for (std::size_t i = 0; i < rules_.size(); ++i) {
                overlap_pairs(rules_[i], rules_[last]);
                if (i != last) overlap_pairs(rules_[last], rules_[i]);
            }
        }
        std::sort(rules_.begin(), rules_.end(), [](const RewriteRule& a, const RewriteRule& b) {
            return shortlex_less(a.lhs, b.lhs) ||
                   (a.lhs == b.lhs && shortlex_less(a.rhs, b.rhs));
        });
        return true;
    }

    std::vector<RewriteRule> rules() && { return std::move(rules_); }
    std::uint64_t rules_used() const { return rules_.size(); }

private:
    // Proper overlaps: a nonempty suffix of r1.lhs equals a prefix of r2.lhs.
    void overlap_pairs(const RewriteRule& r1, const RewriteRule& r2) {
        const std::string& l1 = r1.lhs;
        const std::string& l2 = r2.lhs;
        const std::size_t kmax = std::min(l1.size(), l2.size());
        for (std::size_t k = 1; k <= kmax; ++k) {
            if (l1.compare(l1.size() - k, k, l2, 0, k) != 0) continue;
            if (k == l1.size() && k == l2.size()) continue;  // identical lhs
            // superposed word: l1 + tail of l2
            const std::string tail = l2.substr(k);
            const std::string head = l1.substr(0, l1.size() - k);
            pending_.push_back({r1.rhs + tail, head + r2.rhs});
        }
    }

    AlphabetMap alpha_;
    Limits limits_;
    std::vector<RewriteRule> rules_;
    std::deque<std::pair<std::string, std::string>> pending_;
};

std::string reduce_encoded(const AlphabetMap& alpha, std::string s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        const int l = static_cast<int>(c);
        if (!out.empty() && alpha.inverse[static_cast<int>(out.back())] == l &&
            static_cast<int>(out.back()) != l)
            out.pop_back();
        else
            out.push_back(c);
    }
    return out;
}

}  // namespace

std::string RewritingModel::rewrite(std::string s) const { return rewrite_with(rules, std::move(s)); }

EnumerationResult coset_enumerate(const Presentation& p, const Limits& limits) {
    Enumerator e(p, limits);
    if (!e.run()) return Incomplete{Incomplete::Backend::CosetEnumeration, e.cosets_used()};
    GroupModel m;
    m.presentation = p;
    FiniteModel fin = e.finish();
    m.order = fin.coset_word.size();
    m.backend = std::move(fin);
    return m;
}

EnumerationResult kb_complete(const Presentation& p, const Limits& limits) {
    Completer c(p, limits);
    if (!c.run()) return Incomplete{Incomplete::Backend::KnuthBendix, c.rules_used()};
    GroupModel m;
    m.presentation = p;
    RewritingModel rw;
    rw.alpha = AlphabetMap::build(p);
    rw.rules = std::move(c).rules();
    m.backend = std::move(rw);
    return m;
}

Word normal_form(const GroupModel& m, const Word& w) {
    const Word nw = m.presentation.normalize(w);
    if (m.finite()) {
        const FiniteModel& fm = m.coset_table();
        return fm.coset_word[fm.trace(0, nw)];
    }
    const RewritingModel& rm = m.rewriting();
    return rm.alpha.decode(rm.rewrite(rm.alpha.encode(nw)));
}

bool is_relation(const GroupModel& m, const Word& w) { return normal_form(m, w).empty(); }

Word mult(const GroupModel& m, const Word& a, const Word& b) {
    Word ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    return normal_form(m, ab);
}

Tri bfs_equality_oracle(const Presentation& p, const Word& u, const Word& v,
                        std::size_t length_cap, std::size_t state_budget) {
    const AlphabetMap alpha = AlphabetMap::build(p);

    // All cyclic rotations of every relator and of its inverse.
    std::vector<std::string> rotations;
    for (const Word& r : p.relators) {
        for (const Word& base : {r, p.normalize(inverse_word(r))}) {
            const std::string s = alpha.encode(base);
            for (std::size_t i = 0; i < s.size(); ++i) {
                std::string rot = s.substr(i) + s.substr(0, i);
                if (std::find(rotations.begin(), rotations.end(), rot) == rotations.end())
                    rotations.push_back(std::move(rot));
            }
        }
    }

    Word start = u;
    start.insert(start.end(), v.rbegin(), v.rend());
    for (std::size_t i = u.size(); i < start.size(); ++i) start[i].sign *= -1;
    const std::string w0 = reduce_encoded(alpha, alpha.encode(p.normalize(free_reduce(p.normalize(start)))));
    if (w0.empty()) return Tri::True;
    if (w0.size() > length_cap) return Tri::Unknown;

    std::unordered_set<std::string> seen{w0};
    std::deque<std::string> frontier{w0};
    while (!frontier.empty()) {
        const std::string w = frontier.front();
        frontier.pop_front();
        for (const std::string& rot : rotations) {
            for (std::size_t i = 0; i <= w.size(); ++i) {
                std::string ins = reduce_encoded(alpha, w.substr(0, i) + rot + w.substr(i));
                if (ins.empty()) return Tri::True;
                if (ins.size() <= length_cap && seen.insert(ins).second) {
                    if (seen.size() > state_budget) return Tri::Unknown;
                    frontier.push_back(std::move(ins));
                }
            }
            for (std::size_t i = 0; i + rot.size() <= w.size(); ++i) {
                if (w.compare(i, rot.size(), rot) != 0) continue;
                std::string del = reduce_encoded(alpha, w.substr(0, i) + w.substr(i + rot.size()));
                if (del.empty()) return Tri::True;
                if (seen.insert(del).second) {
                    if (seen.size() > state_budget) return Tri::Unknown;
                    frontier.push_back(std::move(del));
                }
            }
        }
    }
    return Tri::BoundedFalse;
}

EnumerationResult solve_word_problem(const Presentation& p, const Limits& limits) {
    EnumerationResult tc = coset_enumerate(p, limits);
    if (std::holds_alternative<GroupModel>(tc)) return tc;
    EnumerationResult kb = kb_complete(p, limits);
    if (std::holds_alternative<GroupModel>(kb)) return kb;
    return tc;  // report the coset-enumeration Incomplete
}

}  // namespace cayplane
