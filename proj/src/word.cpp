#include "concord/word.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace concord {

Word reduce_word(Word w) {
    Word out;
    out.reserve(w.size());
    for (int letter : w) {
        if (letter == 0) throw std::invalid_argument("word contains a zero letter");
        if (!out.empty() && out.back() == -letter)
            out.pop_back();
        else
            out.push_back(letter);
    }
    return out;
}

Word word_inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

Word word_concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return reduce_word(std::move(out));
}

Word word_power(const Word& w, long k) {
    Word base = k < 0 ? word_inverse(w) : w;
    long reps = k < 0 ? -k : k;
    Word out;
    for (long i = 0; i < reps; ++i) out = word_concat(out, base);
    return out;
}

long exponent_sum(const Word& w, int generator) {
    long s = 0;
    for (int letter : w) {
        if (letter == generator) ++s;
        if (letter == -generator) --s;
    }
    return s;
}

Word parse_word(const std::string& text, int num_generators) {
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'X'))
            throw std::invalid_argument("bad word token '" + tok + "'");
        long idx = 0;
        for (std::size_t i = 1; i < tok.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(tok[i])))
                throw std::invalid_argument("bad word token '" + tok + "'");
            idx = idx * 10 + (tok[i] - '0');
            if (idx > 1000000) throw std::invalid_argument("generator index too large");
        }
        if (idx < 1 || (num_generators >= 0 && idx > num_generators))
            throw std::invalid_argument("generator index out of range in '" + tok + "'");
        w.push_back(tok[0] == 'x' ? static_cast<int>(idx) : -static_cast<int>(idx));
    }
    return reduce_word(std::move(w));
}

std::string word_str(const Word& w) {
    std::string out;
    for (int letter : w) {
        if (!out.empty()) out += ' ';
        out += letter > 0 ? 'x' : 'X';
        out += std::to_string(letter > 0 ? letter : -letter);
    }
    return out;
}

}  // namespace concord
