#pragma once

#include <string>
#include <vector>

namespace concord {

// Free-group word; letter +i is generator x_i (1-based), -i its inverse.
using Word = std::vector<int>;

Word reduce_word(Word w);  // cancel adjacent inverse pairs
Word word_inverse(const Word& w);
Word word_concat(const Word& a, const Word& b);  // freely reduced product
Word word_power(const Word& w, long k);
long exponent_sum(const Word& w, int generator);

// Text form "x1 X2 x3": lowercase x is a generator, uppercase X its inverse.
// num_generators < 0 disables the range check.
Word parse_word(const std::string& text, int num_generators = -1);
std::string word_str(const Word& w);

}  // namespace concord
