#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ascent {

// A word is a finite list of nonnegative integer digits.
using Word = std::vector<int>;

/// Number of ascents: positions i with w[i] < w[i+1].
inline int asc(const Word& w) {
    int a = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < w[i + 1]) ++a;
    return a;
}

inline int max_digit(const Word& w) {
    int m = -1;
    for (int d : w) m = std::max(m, d);
    return m;
}

/// True iff w starts at 0 and every later digit is at most one more than the
/// number of ascents of the preceding prefix.  The empty word qualifies.
inline bool is_ascent_sequence(const Word& w) {
    if (w.empty()) return true;
    if (w.front() != 0) return false;
    int ascents = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] < 0 || w[i] > ascents + 1) return false;
        if (w[i - 1] < w[i]) ++ascents;
    }
    return true;
}

/// Restricted growth function check: w[0] = 0 and each prefix maximum grows
/// by at most one (equivalently, the first k is preceded by a k-1).
inline bool is_rgf(const Word& w) {
    if (w.empty()) return true;
    if (w.front() != 0) return false;
    int seen_max = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] < 0 || w[i] > seen_max + 1) return false;
        seen_max = std::max(seen_max, w[i]);
    }
    return true;
}

/// Order-isomorphic representative: the i-th smallest distinct digit maps to i-1.
inline Word reduce_word(const Word& w) {
    std::map<int, int> rank;
    for (int d : w) rank[d] = 0;
    int next = 0;
    for (auto& [digit, r] : rank) r = next++;
    Word out;
    out.reserve(w.size());
    for (int d : w) out.push_back(rank[d]);
    return out;
}

/// Compact form "0120" when all digits are single characters, otherwise
/// comma-separated ("0,1,2,10").  Empty word serializes to "".
inline std::string word_to_string(const Word& w) {
    bool compact = std::all_of(w.begin(), w.end(), [](int d) { return d >= 0 && d <= 9; });
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!compact && i > 0) s += ',';
        s += std::to_string(w[i]);
    }
    return s;
}

/// Parses both serialized forms accepted by word_to_string.
inline Word parse_word(std::string_view s) {
    Word w;
    if (s.empty()) return w;
    if (s.find(',') != std::string_view::npos) {
        std::string tok;
        std::istringstream in{std::string(s)};
        while (std::getline(in, tok, ',')) {
            if (tok.empty()) throw std::invalid_argument("parse_word: empty digit field");
            std::size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size() || v < 0)
                throw std::invalid_argument("parse_word: bad digit '" + tok + "'");
            w.push_back(v);
        }
        return w;
    }
    for (char c : s) {
        if (c < '0' || c > '9')
            throw std::invalid_argument(std::string("parse_word: bad character '") + c + "'");
        w.push_back(c - '0');
    }
    return w;
}

} // namespace ascent
