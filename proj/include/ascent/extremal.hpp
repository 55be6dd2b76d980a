#pragma once

#include "ascent/enumerate.hpp"
#include "ascent/pattern.hpp"
#include "ascent/word.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace ascent {

/// Parameters of the repeats-versus-rise emptiness question: forbid the
/// all-zeros pattern 0^a together with the strictly increasing pattern
/// 012...(b-1) of length b.
struct ExtremalParams {
    int a = 2; // copies bound: pattern 0^a
    int b = 3; // increasing-pattern length: pattern 012...(b-1)

    void validate() const {
        if (a < 2 || b < 2) throw std::invalid_argument("ExtremalParams: need a >= 2 and b >= 2");
    }
};

inline PatternSet extremal_patterns(const ExtremalParams& p) {
    p.validate();
    Word zeros(static_cast<std::size_t>(p.a), 0);
    Word rise;
    for (int d = 0; d < p.b; ++d) rise.push_back(d);
    return PatternSet({Pattern(zeros), Pattern(rise)});
}

/// Least length N with A_{0^a,012...(b-1)}(n) empty for all n >= N.  The
/// bound comes from the largest admissible letter (a-1)(b-3)+1 appearing,
/// like every other value, at most a-1 times; the b = 2 rise pattern "01"
/// pins the class to all-zero words, which die at length a.
inline int emptiness_threshold(const ExtremalParams& p) {
    p.validate();
    if (p.b == 2) return p.a;
    return (p.a - 1) * ((p.a - 1) * (p.b - 3) + 2) + 1;
}

/// The b = 3 case admits a direct two-letter argument giving 2a-1; it agrees
/// with the general bound there.
inline std::optional<int> specialized_threshold(const ExtremalParams& p) {
    p.validate();
    if (p.b != 3) return std::nullopt;
    return 2 * p.a - 1;
}

/// Maximal-length avoider witnessing tightness: the rising block 01..(b-3)
/// repeated a-1 times, then constant blocks of each value from
/// (a-1)(b-3)+1 down to b-2, each a-1 long.  Undefined for b = 2.
inline Word witness(const ExtremalParams& p) {
    p.validate();
    if (p.b == 2)
        throw std::domain_error("witness: construction undefined for the length-2 rise pattern");
    Word w;
    for (int rep = 0; rep < p.a - 1; ++rep)
        for (int d = 0; d <= p.b - 3; ++d) w.push_back(d);
    const int top = (p.a - 1) * (p.b - 3) + 1;
    for (int v = top; v >= p.b - 2; --v)
        for (int rep = 0; rep < p.a - 1; ++rep) w.push_back(v);
    return w;
}

struct ThresholdReport {
    int a = 0;
    int b = 0;
    int general_bound = 0;
    std::optional<int> specialized_bound;
    int observed_max_length = 0; // longest nonempty length found, up to the probe
    std::optional<int> first_empty_length;
    Word witness_word;
    bool witness_valid = false;
    std::optional<bool> empty_at_general_bound; // unset when the probe stops short
};

/// Brute-force confirmation up to n_probe: scans lengths until the class
/// first empties (emptiness persists upward, since prefixes of avoiders are
/// avoiders) and validates the witness construction.
inline ThresholdReport confirm_threshold(const ExtremalParams& p, int n_probe,
                                         const SearchOptions& opts = {}) {
    p.validate();
    if (n_probe < 1) throw std::invalid_argument("confirm_threshold: probe must be >= 1");
    ThresholdReport r;
    r.a = p.a;
    r.b = p.b;
    r.general_bound = emptiness_threshold(p);
    r.specialized_bound = specialized_threshold(p);

    const PatternSet patterns = extremal_patterns(p);
    const CountTable table = count_sequence(patterns, n_probe, opts);
    for (int n = 1; n <= n_probe; ++n) {
        if (table.counts[static_cast<std::size_t>(n - 1)] == 0) {
            r.first_empty_length = n;
            break;
        }
        r.observed_max_length = n;
    }
    if (n_probe >= r.general_bound)
        r.empty_at_general_bound =
            r.first_empty_length.has_value() && *r.first_empty_length <= r.general_bound;

    r.witness_word = (p.b == 2) ? Word(static_cast<std::size_t>(p.a - 1), 0) : witness(p);
    r.witness_valid = is_ascent_sequence(r.witness_word) && avoids_all(r.witness_word, patterns);
    return r;
}

inline nlohmann::json threshold_report_json(const ThresholdReport& r) {
    nlohmann::json j;
    j["a"] = r.a;
    j["b"] = r.b;
    j["general_bound"] = r.general_bound;
    j["specialized_bound"] =
        r.specialized_bound ? nlohmann::json(*r.specialized_bound) : nlohmann::json();
    j["observed_max_length"] = r.observed_max_length;
    j["first_empty_length"] =
        r.first_empty_length ? nlohmann::json(*r.first_empty_length) : nlohmann::json();
    j["witness"] = word_to_string(r.witness_word);
    j["witness_valid"] = r.witness_valid;
    j["empty_at_general_bound"] =
        r.empty_at_general_bound ? nlohmann::json(*r.empty_at_general_bound) : nlohmann::json();
    return j;
}

} // namespace ascent
