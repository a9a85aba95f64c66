#include "cayplane/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

namespace cayplane {

int Presentation::gen_index(char symbol) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i].symbol == symbol) return static_cast<int>(i);
    return -1;
}

Word Presentation::normalize(Word w) const {
    for (Letter& l : w)
        if (is_involution(l.gen)) l.sign = 1;
    return w;
}

std::string Presentation::word_string(const Word& w) const {
    std::string s;
    s.reserve(w.size());
    for (const Letter& l : w) {
        char c = generators.at(l.gen).symbol;
        s.push_back(l.sign > 0 ? c : static_cast<char>(std::toupper(c)));
    }
    return s;
}

Word Presentation::word_from_string(std::string_view s) const {
    Word w;
    w.reserve(s.size());
    for (char c : s) {
        const bool upper = std::isupper(static_cast<unsigned char>(c)) != 0;
        const int g = gen_index(upper ? static_cast<char>(std::tolower(c)) : c);
        if (g < 0) throw std::invalid_argument(std::string("unknown generator letter: ") + c);
        w.push_back({static_cast<std::int16_t>(g), static_cast<std::int16_t>(upper ? -1 : 1)});
    }
    return normalize(w);
}

std::size_t Presentation::max_relator_length() const {
    std::size_t m = 0;
    for (const Word& r : relators) m = std::max(m, r.size());
    return m;
}

std::string Presentation::text() const {
    std::string s = "<";
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (i) s += ",";
        s.push_back(generators[i].symbol);
    }
    s += " | ";
    for (std::size_t i = 0; i < relators.size(); ++i) {
        if (i) s += ", ";
        s += word_string(relators[i]);
    }
    s += ">";
    return s;
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    char take() {
        skip_ws();
        return text[pos++];
    }
    void expect(char c, const char* what) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(ParseError::Kind::Syntax, pos,
                             std::string("expected ") + what, std::string(1, c));
        ++pos;
    }
};

// letters with raw signs, before involution normalization
struct RawRelator {
    Word word;
    std::string source;
};

Word parse_word_body(Cursor& cur, const std::vector<char>& symbols, int relator_index) {
    Word w;
    while (true) {
        char c = cur.peek();
        if (!std::isalpha(static_cast<unsigned char>(c))) break;
        cur.take();
        const bool upper = std::isupper(static_cast<unsigned char>(c)) != 0;
        const char low = upper ? static_cast<char>(std::tolower(c)) : c;
        auto it = std::find(symbols.begin(), symbols.end(), low);
        if (it == symbols.end())
            throw ParseError(ParseError::Kind::UnknownGenerator, cur.pos - 1,
                             std::string("relator references undeclared generator '") + c + "'",
                             {}, relator_index);
        Letter l{static_cast<std::int16_t>(it - symbols.begin()),
                 static_cast<std::int16_t>(upper ? -1 : 1)};
        long count = 1;
        if (cur.peek() == '^') {
            cur.take();
            cur.skip_ws();
            std::size_t start = cur.pos;
            while (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
                ++cur.pos;
            if (cur.pos == start)
                throw ParseError(ParseError::Kind::Syntax, start, "expected positive exponent after '^'",
                                 "digit", relator_index);
            count = std::stol(std::string(cur.text.substr(start, cur.pos - start)));
            if (count < 1)
                throw ParseError(ParseError::Kind::Syntax, start, "exponent must be >= 1", "positive integer",
                                 relator_index);
        }
        for (long k = 0; k < count; ++k) w.push_back(l);
    }
    return w;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
    Cursor cur{text};
    cur.expect('<', "'<'");

    std::vector<char> symbols;
    while (true) {
        char c = cur.peek();
        if (!std::isalpha(static_cast<unsigned char>(c)) ||
            std::isupper(static_cast<unsigned char>(c)))
            throw ParseError(ParseError::Kind::Syntax, cur.pos, "expected lowercase generator letter",
                             "generator");
        cur.take();
        if (std::find(symbols.begin(), symbols.end(), c) != symbols.end())
            throw ParseError(ParseError::Kind::Syntax, cur.pos - 1,
                             std::string("duplicate generator '") + c + "'", "distinct generator");
        symbols.push_back(c);
        if (cur.peek() == ',') {
            cur.take();
            continue;
        }
        break;
    }
    cur.expect('|', "'|'");

    std::vector<RawRelator> raw;
    if (cur.peek() != '>') {
        while (true) {
            std::size_t word_start = cur.pos;
            cur.skip_ws();
            word_start = cur.pos;
            Word w = parse_word_body(cur, symbols, static_cast<int>(raw.size()));
            if (w.empty())
                throw ParseError(ParseError::Kind::EmptyRelator, word_start, "empty relator", "word",
                                 static_cast<int>(raw.size()));
            raw.push_back({std::move(w),
                           std::string(text.substr(word_start, cur.pos - word_start))});
            if (cur.peek() == ',') {
                cur.take();
                continue;
            }
            break;
        }
    }
    cur.expect('>', "'>'");
    if (!cur.at_end())
        throw ParseError(ParseError::Kind::Syntax, cur.pos, "trailing characters after '>'", "end of input");

    Presentation p;
    for (char c : symbols) p.generators.push_back({c, false});

    // Reduce relators, then detect involutions from literal g^{+-2} relators.
    std::vector<Word> reduced;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        Word r = cyclic_reduce(free_reduce(raw[i].word));
        if (r.empty())
            throw ParseError(ParseError::Kind::EmptyRelator, 0,
                             "relator '" + raw[i].source + "' reduces to the empty word", "",
                             static_cast<int>(i));
        reduced.push_back(std::move(r));
    }
    for (const Word& r : reduced)
        if (r.size() == 2 && r[0].gen == r[1].gen && r[0].sign == r[1].sign)
            p.generators[r[0].gen].involution = true;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        p.relators.push_back(p.normalize(reduced[i]));
        p.relator_source.push_back(raw[i].source);
    }
    return p;
}

std::string presentation_to_json(const Presentation& p) {
    nlohmann::ordered_json j;
    j["generators"] = nlohmann::ordered_json::array();
    for (const Generator& g : p.generators)
        j["generators"].push_back({{"symbol", std::string(1, g.symbol)}, {"involution", g.involution}});
    j["relators"] = nlohmann::ordered_json::array();
    for (const Word& r : p.relators) j["relators"].push_back(p.word_string(r));
    return j.dump();
}

Presentation presentation_from_json(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    std::string text = "<";
    bool first = true;
    for (const auto& g : j.at("generators")) {
        if (!first) text += ",";
        first = false;
        text += g.at("symbol").get<std::string>();
    }
    text += "|";
    first = true;
    for (const auto& r : j.at("relators")) {
        if (!first) text += ",";
        first = false;
        text += r.get<std::string>();
    }
    text += ">";
    return parse_presentation(text);
}

AlphabetMap AlphabetMap::build(const Presentation& p) {
    AlphabetMap a;
    a.gen_letter.resize(p.generators.size());
    for (std::size_t g = 0; g < p.generators.size(); ++g) {
        const int fwd = static_cast<int>(a.letters.size());
        a.letters.push_back({static_cast<std::int16_t>(g), 1});
        if (p.generators[g].involution) {
            a.gen_letter[g] = {fwd, fwd};
        } else {
            a.letters.push_back({static_cast<std::int16_t>(g), -1});
            a.gen_letter[g] = {fwd, fwd + 1};
        }
    }
    a.inverse.resize(a.letters.size());
    for (std::size_t g = 0; g < p.generators.size(); ++g) {
        a.inverse[a.gen_letter[g][0]] = a.gen_letter[g][1];
        a.inverse[a.gen_letter[g][1]] = a.gen_letter[g][0];
    }
    return a;
}

std::string AlphabetMap::encode(const Word& w) const {
    std::string s;
    s.reserve(w.size());
    for (const Letter& l : w) s.push_back(static_cast<char>(index(l)));
    return s;
}

Word AlphabetMap::decode(const std::string& s) const {
    Word w;
    w.reserve(s.size());
    for (char c : s) w.push_back(letters.at(static_cast<std::size_t>(c)));
    return w;
}

bool shortlex_less(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace cayplane
