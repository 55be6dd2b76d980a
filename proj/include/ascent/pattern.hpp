#pragma once

#include "ascent/word.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace ascent {

/// A pattern is a reduced word: its distinct digits are exactly {0..k-1}.
class Pattern {
public:
    Pattern() = default;

    explicit Pattern(Word digits) : digits_(std::move(digits)) {
        if (reduce_word(digits_) != digits_)
            throw std::invalid_argument("Pattern: word '" + word_to_string(digits_) +
                                        "' is not reduced");
    }

    /// Builds the pattern of an arbitrary word by reducing it first.
    static Pattern of(const Word& w) { return Pattern(reduce_word(w)); }

    static Pattern parse(std::string_view s) { return Pattern(parse_word(s)); }

    const Word& digits() const { return digits_; }
    std::size_t size() const { return digits_.size(); }
    bool empty() const { return digits_.empty(); }
    std::string str() const { return word_to_string(digits_); }

    friend bool operator==(const Pattern&, const Pattern&) = default;
    friend auto operator<=>(const Pattern& a, const Pattern& b) {
        if (auto c = a.digits_.size() <=> b.digits_.size(); c != 0) return c;
        return a.digits_ <=> b.digits_;
    }

private:
    Word digits_;
};

namespace detail {

// Backtracking over pattern positions.  `chosen` holds the word values matched
// so far; a candidate value must compare against each of them exactly as the
// pattern digits compare.  `forced_last`, when >= 0, pins the final pattern
// position to that word index.
inline bool match_pattern(const Word& w, const Word& p, std::size_t pi, std::size_t wi,
                          std::array<int, 16>& chosen, long forced_last) {
    if (pi == p.size()) return true;
    const bool last = (pi + 1 == p.size());
    std::size_t hi = w.size();
    std::size_t lo = wi;
    if (last && forced_last >= 0) {
        lo = static_cast<std::size_t>(forced_last);
        hi = lo + 1;
        if (lo < wi) return false;
    }
    for (std::size_t c = lo; c < hi; ++c) {
        if (w.size() - c < p.size() - pi) break;
        bool ok = true;
        for (std::size_t t = 0; t < pi; ++t) {
            const int pc = (p[t] < p[pi]) ? -1 : (p[t] > p[pi] ? 1 : 0);
            const int wc = (chosen[t] < w[c]) ? -1 : (chosen[t] > w[c] ? 1 : 0);
            if (pc != wc) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        chosen[pi] = w[c];
        if (match_pattern(w, p, pi + 1, c + 1, chosen, forced_last)) return true;
    }
    return false;
}

} // namespace detail

/// True iff some subsequence of w reduces to p.  Every word contains the
/// empty pattern.
inline bool contains(const Word& w, const Pattern& p) {
    if (p.empty()) return true;
    if (p.size() > w.size() || p.size() > 16) {
        if (p.size() > 16) throw std::invalid_argument("contains: pattern too long");
        return false;
    }
    std::array<int, 16> chosen{};
    return detail::match_pattern(w, p.digits(), 0, 0, chosen, -1);
}

/// Like contains, but the occurrence must use the last position of w.  Used
/// for incremental checks while a word grows one digit at a time.
inline bool contains_ending_at_last(const Word& w, const Pattern& p) {
    if (p.empty() || p.size() > w.size()) return false;
    if (p.size() > 16) throw std::invalid_argument("contains: pattern too long");
    std::array<int, 16> chosen{};
    return detail::match_pattern(w, p.digits(), 0, 0, chosen,
                                 static_cast<long>(w.size()) - 1);
}

/// Canonicalized finite set of forbidden patterns.  Duplicates are always
/// dropped.  Minimization (dropping a pattern that contains another member)
/// is opt-in, and anything dropped that way is recorded.
class PatternSet {
public:
    PatternSet() = default;

    explicit PatternSet(std::vector<Pattern> patterns, bool minimize = false) {
        std::sort(patterns.begin(), patterns.end());
        patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
        if (minimize) {
            minimized_ = true;
            for (const auto& q : patterns) {
                bool superfluous = std::any_of(
                    patterns.begin(), patterns.end(), [&](const Pattern& p) {
                        return p != q && contains(q.digits(), p);
                    });
                (superfluous ? removed_ : patterns_).push_back(q);
            }
        } else {
            patterns_ = std::move(patterns);
        }
    }

    /// Parses a comma-separated list of compact pattern strings ("000,012").
    /// The empty string is the empty set.
    static PatternSet parse(std::string_view csv, bool minimize = false) {
        std::vector<Pattern> ps;
        std::size_t start = 0;
        while (start < csv.size()) {
            std::size_t end = csv.find(',', start);
            if (end == std::string_view::npos) end = csv.size();
            std::string_view tok = csv.substr(start, end - start);
            if (tok.empty()) throw std::invalid_argument("PatternSet: empty pattern field");
            ps.push_back(Pattern::parse(tok));
            start = end + 1;
        }
        return PatternSet(std::move(ps), minimize);
    }

    const std::vector<Pattern>& patterns() const { return patterns_; }
    const std::vector<Pattern>& removed() const { return removed_; }
    bool minimized() const { return minimized_; }
    bool empty() const { return patterns_.empty(); }
    std::size_t size() const { return patterns_.size(); }

    /// Canonical key, e.g. "000,012".  Used for registry and cache lookups.
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < patterns_.size(); ++i) {
            if (i > 0) s += ',';
            s += patterns_[i].str();
        }
        return s;
    }

    friend bool operator==(const PatternSet&, const PatternSet&) = default;

private:
    std::vector<Pattern> patterns_;
    std::vector<Pattern> removed_;
    bool minimized_ = false;
};

inline bool avoids_all(const Word& w, const PatternSet& b) {
    for (const auto& p : b.patterns())
        if (contains(w, p)) return false;
    return true;
}

} // namespace ascent
