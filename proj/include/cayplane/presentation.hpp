#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cayplane/word.hpp"

namespace cayplane {

struct Generator {
    char symbol = '?';
    bool involution = false;  // true iff some relator is symbol^2
};

struct ParseError : std::runtime_error {
    enum class Kind { Syntax, UnknownGenerator, EmptyRelator };
    Kind kind;
    std::size_t position;   // byte offset into the source text
    std::string expected;   // for Syntax: what the parser wanted here
    int relator_index = -1;

    ParseError(Kind k, std::size_t pos, const std::string& msg,
               std::string exp = {}, int relator = -1)
        : std::runtime_error(msg), kind(k), position(pos),
          expected(std::move(exp)), relator_index(relator) {}
};

// A validated presentation: generators with involution flags, relators
// cyclically reduced and sign-normalized (involution letters positive).
struct Presentation {
    std::vector<Generator> generators;
    std::vector<Word> relators;
    std::vector<std::string> relator_source;  // original text, for reports

    int gen_index(char symbol) const;  // lowercase symbol, -1 if unknown
    bool is_involution(int gen) const { return generators.at(gen).involution; }

    // Storage normal form: involution letters get sign +1.
    Word normalize(Word w) const;

    std::string word_string(const Word& w) const;  // uppercase = inverse
    Word word_from_string(std::string_view s) const;

    std::size_t max_relator_length() const;
    std::string text() const;  // "<gens | relators>" round-trippable form
};

// Grammar: "<" gens "|" relators ">" with comma-separated single-letter
// generators and comma-separated words; uppercase letter = inverse,
// "^k" repeats the preceding letter k times. Whitespace is free.
Presentation parse_presentation(std::string_view text);

std::string presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const std::string& json_text);

// Word-problem letters in shortlex order: generator declaration order,
// each formal inverse immediately after its generator, involutions
// contributing a single letter.
struct AlphabetMap {
    std::vector<Letter> letters;                 // index -> letter
    std::vector<std::array<int, 2>> gen_letter;  // gen -> {fwd, bwd} letter index
    std::vector<int> inverse;                    // letter index -> inverse letter index

    static AlphabetMap build(const Presentation& p);

    int size() const { return static_cast<int>(letters.size()); }
    int index(const Letter& l) const { return gen_letter[l.gen][l.sign > 0 ? 0 : 1]; }
    std::string encode(const Word& w) const;
    Word decode(const std::string& s) const;
};

// Shortlex over encoded strings: by length, then by letter index.
bool shortlex_less(const std::string& a, const std::string& b);

}  // namespace cayplane
