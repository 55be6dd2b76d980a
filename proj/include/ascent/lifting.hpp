#pragma once

#include "ascent/dyck.hpp"
#include "ascent/pattern.hpp"
#include "ascent/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace ascent {

namespace detail {

/// Smallest index at which an occurrence of 100 or 101 is completed, or -1.
/// In a U-height word of a DDUU-avoiding path the completed occurrence is
/// always a 100 (the 100 finishes before any 101 can).
inline int first_forbidden_completion(const Word& w) {
    const int n = static_cast<int>(w.size());
    for (int k = 2; k < n; ++k) {
        // 100 ending at k: some j < k with w[j] == w[k] preceded by a larger value.
        int prefix_max = w[0];
        bool found = false;
        for (int j = 1; j < k; ++j) {
            if (w[j] == w[k] && prefix_max > w[j]) {
                found = true;
                break;
            }
            prefix_max = std::max(prefix_max, w[j]);
        }
        if (found) return k;
        // 101 ending at k: some i < j < k with w[i] == w[k] > w[j].
        bool seen_equal = false;
        for (int t = 0; t < k; ++t) {
            if (seen_equal && w[t] < w[k]) {
                found = true;
                break;
            }
            if (w[t] == w[k]) seen_equal = true;
        }
        if (found) return k;
    }
    return -1;
}

/// True iff the occurrence completed at index k (as above) can be a 100.
inline bool completion_is_100(const Word& w, int k) {
    int prefix_max = w[0];
    for (int j = 1; j < k; ++j) {
        if (w[j] == w[k] && prefix_max > w[j]) return true;
        prefix_max = std::max(prefix_max, w[j]);
    }
    return false;
}

/// One lift step at completion index k: raise w[k..l-1] so that w[k] becomes
/// one more than everything before it, where l is the first later index whose
/// value drops below the old w[k] (end of word if none).
inline void lift_at(Word& w, int k) {
    const int n = static_cast<int>(w.size());
    int l = n;
    for (int t = k + 1; t < n; ++t) {
        if (w[k] > w[t]) {
            l = t;
            break;
        }
    }
    const int delta = *std::max_element(w.begin(), w.begin() + k) + 1 - w[k];
    for (int t = k; t < l; ++t) w[t] += delta;
}

} // namespace detail

/// The lifting bijection: sends a DDUU-avoiding Dyck word of semilength n to
/// the member of A_{100,101}(n) obtained by repeatedly lifting away the
/// leftmost-completed 100 of its U-height word.
inline Word phi(const DyckWord& d) {
    if (!avoids_dduu(d)) throw std::domain_error("phi: input contains a DDUU factor");
    Word w = u_heights(d);
    const int n = static_cast<int>(w.size());
    for (int guard = 0; ; ++guard) {
        if (guard > n * n + 8) throw std::logic_error("phi: lift loop failed to terminate");
        const int k = detail::first_forbidden_completion(w);
        if (k < 0) break;
        detail::lift_at(w, k);
    }
    return w;
}

/// Inverse of phi: repeatedly lowers lifted blocks, starting from the lift
/// applied last, then rebuilds the Dyck word from the heights.  The block
/// lowered with each jump is the contiguous run of values at or above the
/// jump value; what follows the run was never part of that lift and stays
/// put, even when numerically large enough to absorb the shift.
inline DyckWord phi_inverse(const Word& x) {
    static const Pattern p100 = Pattern::parse("100");
    static const Pattern p101 = Pattern::parse("101");
    if (!is_ascent_sequence(x) || contains(x, p100) || contains(x, p101))
        throw std::domain_error("phi_inverse: input is not a {100,101}-avoiding ascent sequence");
    Word w = x;
    const int n = static_cast<int>(w.size());
    for (int guard = 0; ; ++guard) {
        if (guard > n * n + 8) throw std::logic_error("phi_inverse: loop failed to terminate");
        int t = -1;
        for (int i = n - 1; i >= 1; --i) {
            if (w[i - 1] + 1 < w[i]) {
                t = i;
                break;
            }
        }
        if (t < 0) break;
        const int delta = w[t] - w[t - 1];
        const int jump_value = w[t];
        for (int i = t; i < n && w[i] >= jump_value; ++i) w[i] -= delta;
    }
    return from_u_heights(w);
}

} // namespace ascent
