#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cayplane/presentation.hpp"

namespace cayplane {

struct Limits {
    std::uint64_t max_cosets = 200000;
    std::size_t max_rules = 2000;
    std::size_t max_lhs_length = 24;
};

struct Incomplete {
    enum class Backend { CosetEnumeration, KnuthBendix } backend;
    std::uint64_t used = 0;  // cosets or rules when the cap was hit
};

// Closed coset table over the trivial subgroup: row 0 is the identity,
// rows are renumbered in BFS (shortlex) order so row i carries the i-th
// normal form.
struct FiniteModel {
    AlphabetMap alpha;
    std::vector<std::vector<int>> table;  // table[coset][letter]
    std::vector<Word> coset_word;         // shortlex-minimal representative

    int act(int coset, int letter) const { return table[coset][letter]; }
    int trace(int coset, const Word& w) const;
};

struct RewriteRule {
    std::string lhs, rhs;  // AlphabetMap-encoded, shortlex lhs > rhs
};

// Finite confluent shortlex rewriting system.
struct RewritingModel {
    AlphabetMap alpha;
    std::vector<RewriteRule> rules;

    std::string rewrite(std::string s) const;
};

struct GroupModel {
    Presentation presentation;
    std::variant<FiniteModel, RewritingModel> backend;
    std::optional<std::uint64_t> order;  // set for the finite backend

    bool finite() const { return std::holds_alternative<FiniteModel>(backend); }
    const FiniteModel& coset_table() const { return std::get<FiniteModel>(backend); }
    const RewritingModel& rewriting() const { return std::get<RewritingModel>(backend); }
};

using EnumerationResult = std::variant<GroupModel, Incomplete>;

// HLT-style Todd-Coxeter over the trivial subgroup: relator scan with
// fill, sequential coset definition, standard coincidence processing.
EnumerationResult coset_enumerate(const Presentation& p, const Limits& limits);

// Shortlex Knuth-Bendix completion; generator order = declaration order
// with each inverse letter immediately after its generator.
EnumerationResult kb_complete(const Presentation& p, const Limits& limits);

// Canonical representative; u =_Gamma v iff normal forms are equal.
Word normal_form(const GroupModel& m, const Word& w);
bool is_relation(const GroupModel& m, const Word& w);

// normal_form(m, a . b)
Word mult(const GroupModel& m, const Word& a, const Word& b);

enum class Tri { True, BoundedFalse, Unknown };

// Sound bounded semi-decision of u =_Gamma v, independent of both
// backends: breadth-first search from free_reduce(u v^-1) over relator
// insertion/deletion (all cyclic rotations of each relator and of its
// inverse) followed by free reduction, keeping reduced words of length
// <= length_cap. True is always correct; BoundedFalse means the entire
// bounded component was explored and excludes the empty word.
Tri bfs_equality_oracle(const Presentation& p, const Word& u, const Word& v,
                        std::size_t length_cap, std::size_t state_budget = 200000);

// Backend selection policy: coset enumeration first, Knuth-Bendix on
// Incomplete; Incomplete from both rejects the presentation.
EnumerationResult solve_word_problem(const Presentation& p, const Limits& limits);

}  // namespace cayplane
