#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace cayplane {

// One letter of a group word: generator index plus sign (+1 generator,
// -1 formal inverse). Letters of involution generators are stored with
// sign +1 only.
struct Letter {
    std::int16_t gen = 0;
    std::int16_t sign = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

// Cancels adjacent g g^-1 / g^-1 g pairs until none remain. Involution
// letters are sign-normalized elsewhere and never form such a pair, so
// a stored relator like bb survives; the group relation b^2 = 1 is the
// word problem's business, not free reduction's.
Word free_reduce(const Word& w);

// Strips matching inverse pairs from the two ends of a freely reduced
// word, returning a cyclically reduced conjugate.
Word cyclic_reduce(const Word& w);

// Reverse with flipped signs. Callers that track involutions should
// re-normalize afterwards.
Word inverse_word(const Word& w);

// All distinct nonempty contiguous subwords of the cyclic word r with
// length < |r|, in (length, start-position) scan order.
std::vector<Word> proper_cyclic_subwords(const Word& r);

bool is_freely_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

}  // namespace cayplane
