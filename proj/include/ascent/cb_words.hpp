#pragma once

#include "ascent/pattern.hpp"
#include "ascent/word.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ascent {

/// A CB-word is a word over {A,B,C,D} whose B/C letters read C,B,C,B,...
/// with every C eventually closed by a B (so B's and C's pair up).
inline bool is_cb_alternating(std::string_view wd) {
    int open = 0; // 1 after an unmatched C
    for (char c : wd) {
        switch (c) {
            case 'A':
            case 'D': break;
            case 'C':
                if (open) return false;
                open = 1;
                break;
            case 'B':
                if (!open) return false;
                open = 0;
                break;
            default: return false;
        }
    }
    return open == 0;
}

/// Letterwise encoding of adjacent behavior in a {101,210}-avoiding ascent
/// sequence: A for a repeat, B for a descent, C for an ascent whose lower
/// value is later revisited by a descent (the position a later descent lands
/// back on), D for any other ascent.  Output length is |x|-1.
inline std::string cb_encode(const Word& x) {
    static const Pattern p101 = Pattern::parse("101");
    static const Pattern p210 = Pattern::parse("210");
    if (!is_ascent_sequence(x) || contains(x, p101) || contains(x, p210))
        throw std::domain_error("cb_encode: input is not a {101,210}-avoiding ascent sequence");
    const int n = static_cast<int>(x.size());
    std::vector<bool> c_role(static_cast<std::size_t>(std::max(n - 1, 0)), false);
    for (int p = 0; p + 1 < n; ++p) {
        if (x[p] > x[p + 1]) {
            // The landing value was last seen at some earlier ascent bottom.
            for (int t = p - 1; t >= 0; --t) {
                if (x[t] == x[p + 1]) {
                    c_role[static_cast<std::size_t>(t)] = true;
                    break;
                }
            }
        }
    }
    std::string wd;
    wd.reserve(static_cast<std::size_t>(std::max(n - 1, 0)));
    for (int i = 0; i + 1 < n; ++i) {
        if (x[i] == x[i + 1]) wd += 'A';
        else if (x[i] > x[i + 1]) wd += 'B';
        else wd += c_role[static_cast<std::size_t>(i)] ? 'C' : 'D';
    }
    return wd;
}

/// Inverse of cb_encode.  A repeats, C and D push a new maximum, B returns to
/// the value sitting at the most recent C.
inline Word cb_decode(std::string_view wd) {
    if (!is_cb_alternating(wd))
        throw std::invalid_argument("cb_decode: word is not CB-alternating");
    Word x{0};
    int max_val = 0;
    int last_c_value = -1;
    for (std::size_t i = 0; i < wd.size(); ++i) {
        switch (wd[i]) {
            case 'A': x.push_back(x.back()); break;
            case 'C':
                last_c_value = x.back();
                x.push_back(++max_val);
                break;
            case 'D': x.push_back(++max_val); break;
            case 'B': x.push_back(last_c_value); break;
        }
    }
    return x;
}

/// The parity-preserving relabeling A->0, B->2, C->2, D->1.  The image has an
/// even number of 2s; B and C are recoverable from the alternation order.
inline std::string cb_to_ternary(std::string_view wd) {
    if (!is_cb_alternating(wd))
        throw std::invalid_argument("cb_to_ternary: word is not CB-alternating");
    std::string t;
    t.reserve(wd.size());
    for (char c : wd) {
        switch (c) {
            case 'A': t += '0'; break;
            case 'B':
            case 'C': t += '2'; break;
            case 'D': t += '1'; break;
        }
    }
    return t;
}

/// Inverse of cb_to_ternary on its image: 2s alternate C,B,C,B,...
inline std::string ternary_to_cb(std::string_view t) {
    std::string wd;
    wd.reserve(t.size());
    int open = 0;
    for (char c : t) {
        switch (c) {
            case '0': wd += 'A'; break;
            case '1': wd += 'D'; break;
            case '2':
                wd += open ? 'B' : 'C';
                open ^= 1;
                break;
            default: throw std::invalid_argument("ternary_to_cb: bad digit");
        }
    }
    if (open) throw std::invalid_argument("ternary_to_cb: odd number of 2s");
    return wd;
}

/// Every CB-word of the given length, lexicographic in A<B<C<D order.
inline std::vector<std::string> all_cb_words(int len) {
    std::vector<std::string> out;
    std::string cur;
    auto rec = [&](auto&& self, int open) -> void {
        if (static_cast<int>(cur.size()) == len) {
            if (open == 0) out.push_back(cur);
            return;
        }
        for (char c : {'A', 'B', 'C', 'D'}) {
            if (c == 'C' && open) continue;
            if (c == 'B' && !open) continue;
            cur.push_back(c);
            self(self, open ^ (c == 'B' || c == 'C' ? 1 : 0));
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace ascent
