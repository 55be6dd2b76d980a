#pragma once

#include "ascent/word.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ascent {

/// Balanced word over {U, D} whose every prefix has at least as many U's as
/// D's.  Parses from "UUDD" or "(())" forms; canonical output uses U/D.
class DyckWord {
public:
    DyckWord() = default;

    explicit DyckWord(std::string_view s) {
        steps_.reserve(s.size());
        int height = 0;
        for (char c : s) {
            char step;
            if (c == 'U' || c == '(') step = 'U';
            else if (c == 'D' || c == ')') step = 'D';
            else throw std::invalid_argument(std::string("DyckWord: bad step '") + c + "'");
            height += (step == 'U') ? 1 : -1;
            if (height < 0) throw std::invalid_argument("DyckWord: prefix dips below zero");
            steps_.push_back(step);
        }
        if (height != 0) throw std::invalid_argument("DyckWord: unbalanced word");
    }

    const std::string& str() const { return steps_; }
    int semilength() const { return static_cast<int>(steps_.size() / 2); }
    bool empty() const { return steps_.empty(); }

    friend bool operator==(const DyckWord&, const DyckWord&) = default;
    friend auto operator<=>(const DyckWord&, const DyckWord&) = default;

private:
    std::string steps_;
};

/// Factor check on a raw step string; no validity requirement.
inline bool avoids_dduu(std::string_view steps) {
    return steps.find("DDUU") == std::string_view::npos;
}

inline bool avoids_dduu(const DyckWord& d) { return avoids_dduu(d.str()); }

/// Starting height of each upstep, in order.
inline Word u_heights(const DyckWord& d) {
    Word w;
    w.reserve(static_cast<std::size_t>(d.semilength()));
    int height = 0;
    for (char c : d.str()) {
        if (c == 'U') {
            w.push_back(height);
            ++height;
        } else {
            --height;
        }
    }
    return w;
}

/// Unique Dyck word with the given upstep heights.  A descent of size k in w
/// emits k+1 downsteps; trailing downsteps close the path.  Throws on a
/// malformed height word (an ascent rising by two or more, or negative or
/// leading nonzero heights).
inline DyckWord from_u_heights(const Word& w) {
    if (w.empty()) return DyckWord();
    if (w.front() != 0) throw std::invalid_argument("from_u_heights: first height must be 0");
    std::string steps;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 0) throw std::invalid_argument("from_u_heights: negative height");
        steps += 'U';
        if (i + 1 < w.size()) {
            if (w[i + 1] > w[i] + 1)
                throw std::invalid_argument("from_u_heights: ascent rising by 2 or more");
            if (w[i + 1] <= w[i]) steps.append(static_cast<std::size_t>(w[i] - w[i + 1] + 1), 'D');
        } else {
            steps.append(static_cast<std::size_t>(w[i] + 1), 'D');
        }
    }
    return DyckWord(steps);
}

/// All Dyck words of the given semilength in lexicographic step order
/// ("D" < "U" per char comparison is irrelevant; generation tries D first
/// where legal, so output is deterministic).
inline std::vector<DyckWord> all_dyck_words(int semilength) {
    if (semilength < 0) throw std::invalid_argument("all_dyck_words: negative semilength");
    std::vector<DyckWord> out;
    std::string cur;
    const int total = 2 * semilength;
    auto rec = [&](auto&& self, int ups, int downs) -> void {
        if (static_cast<int>(cur.size()) == total) {
            out.push_back(DyckWord(cur));
            return;
        }
        if (downs < ups) {
            cur.push_back('D');
            self(self, ups, downs + 1);
            cur.pop_back();
        }
        if (ups < semilength) {
            cur.push_back('U');
            self(self, ups + 1, downs);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

} // namespace ascent
