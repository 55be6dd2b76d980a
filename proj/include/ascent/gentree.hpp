#pragma once

#include "ascent/bigint.hpp"
#include "ascent/pattern.hpp"
#include "ascent/polynomial.hpp"
#include "ascent/word.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ascent {

/// Rooted labeled tree whose succession rules determine every child label.
/// Child order inside a rule is immaterial; rules are stored sorted so two
/// trees compare equal when their rule multisets do.
struct GeneratingTree {
    std::vector<std::string> labels; // declared order (fixes matrix layout)
    std::string root;
    std::map<std::string, std::vector<std::string>> rules;

    void validate() const {
        auto declared = [&](const std::string& l) {
            return std::find(labels.begin(), labels.end(), l) != labels.end();
        };
        if (!declared(root)) throw std::invalid_argument("GeneratingTree: undeclared root");
        for (const auto& [parent, children] : rules) {
            if (!declared(parent))
                throw std::invalid_argument("GeneratingTree: undeclared rule label " + parent);
            for (const auto& c : children)
                if (!declared(c))
                    throw std::invalid_argument("GeneratingTree: undeclared child label " + c);
        }
    }

    friend bool operator==(const GeneratingTree&, const GeneratingTree&) = default;
};

namespace detail {

inline GeneratingTree make_tree(std::vector<std::string> labels, std::string root,
                                std::vector<std::pair<std::string, std::vector<std::string>>> rules) {
    GeneratingTree t;
    t.labels = std::move(labels);
    t.root = std::move(root);
    for (auto& [parent, children] : rules) {
        std::sort(children.begin(), children.end());
        t.rules[parent] = std::move(children);
    }
    t.validate();
    return t;
}

} // namespace detail

/// The three finitely labeled trees for the pairs {021,102}, {102,120} and
/// {101,120}, exactly as their succession rules are established.
inline GeneratingTree builtin_tree(const std::string& name) {
    if (name == "021_102")
        return detail::make_tree(
            {"(0)", "(01)", "(010)", "(012)", "(0120)"}, "(0)",
            {{"(0)", {"(0)", "(01)"}},
             {"(01)", {"(01)", "(010)", "(012)"}},
             {"(010)", {"(010)", "(010)"}},
             {"(012)", {"(0120)", "(012)", "(012)"}},
             {"(0120)", {"(0120)"}}});
    if (name == "102_120")
        return detail::make_tree({"(0)", "(01)", "(010)"}, "(0)",
                                 {{"(0)", {"(0)", "(01)"}},
                                  {"(01)", {"(01)", "(01)", "(010)"}},
                                  {"(010)", {"(010)", "(010)"}}});
    if (name == "101_120")
        return detail::make_tree({"(0)", "(01)", "(010)", "(0102)"}, "(0)",
                                 {{"(0)", {"(0)", "(01)"}},
                                  {"(01)", {"(01)", "(01)", "(010)"}},
                                  {"(010)", {"(010)", "(0102)"}},
                                  {"(0102)", {"(01)", "(0102)"}}});
    throw std::invalid_argument("builtin_tree: unknown tree '" + name + "'");
}

/// The pattern pair a builtin tree enumerates.
inline PatternSet builtin_tree_patterns(const std::string& name) {
    if (name == "021_102") return PatternSet::parse("021,102");
    if (name == "102_120") return PatternSet::parse("102,120");
    if (name == "101_120") return PatternSet::parse("101,120");
    throw std::invalid_argument("builtin_tree_patterns: unknown tree '" + name + "'");
}

/// Number of nodes at each level 1..n_max (level 1 is the root).
inline std::vector<BigInt> level_counts(const GeneratingTree& t, int n_max) {
    if (n_max < 1) throw std::invalid_argument("level_counts: n_max must be >= 1");
    std::map<std::string, BigInt> cur;
    cur[t.root] = 1;
    std::vector<BigInt> out;
    for (int level = 1; level <= n_max; ++level) {
        BigInt total = 0;
        for (const auto& [label, cnt] : cur) total += cnt;
        out.push_back(total);
        if (level == n_max) break;
        std::map<std::string, BigInt> next;
        for (const auto& [label, cnt] : cur) {
            auto it = t.rules.find(label);
            if (it == t.rules.end()) continue;
            for (const auto& child : it->second) next[child] += cnt;
        }
        cur = std::move(next);
    }
    return out;
}

/// Augmented production matrix: rows/columns 2..L+1 follow the declared label
/// order, entry (i,j) counts children of label j produced by label i, and the
/// first row selects the root.
inline std::vector<std::vector<long long>> production_matrix(const GeneratingTree& t) {
    const std::size_t m = t.labels.size() + 1;
    std::vector<std::vector<long long>> p(m, std::vector<long long>(m, 0));
    auto col = [&](const std::string& label) {
        auto it = std::find(t.labels.begin(), t.labels.end(), label);
        return static_cast<std::size_t>(it - t.labels.begin()) + 1;
    };
    p[0][col(t.root)] = 1;
    for (std::size_t i = 0; i < t.labels.size(); ++i) {
        auto it = t.rules.find(t.labels[i]);
        if (it == t.rules.end()) continue;
        for (const auto& child : it->second) ++p[i + 1][col(child)];
    }
    return p;
}

/// True iff the tree's level counts match the series of the claimed
/// generating function for n = 1..n_max.
inline bool gf_check(const GeneratingTree& t, const RationalGF& claimed, int n_max) {
    const auto counts = level_counts(t, n_max);
    const auto series = series_of_rational(claimed, n_max);
    for (int n = 1; n <= n_max; ++n)
        if (counts[static_cast<std::size_t>(n - 1)] != series[static_cast<std::size_t>(n)])
            return false;
    return true;
}

/// Per-label node counts b(n,k) of the infinite tree with root (2) and rule
/// (k) ~> (2)^{k-1} (k+1); level n only ever uses labels 2..n+1.
struct LabelDistribution {
    int level = 0;
    std::map<int, BigInt> counts;

    BigInt total() const {
        BigInt s = 0;
        for (const auto& [k, v] : counts) s += v;
        return s;
    }
};

inline std::vector<LabelDistribution> fib_tree_distribution(int n_max) {
    if (n_max < 1) throw std::invalid_argument("fib_tree_distribution: n_max must be >= 1");
    std::vector<LabelDistribution> out;
    std::map<int, BigInt> cur;
    cur[2] = 1;
    for (int n = 1; n <= n_max; ++n) {
        out.push_back({n, cur});
        std::map<int, BigInt> next;
        for (const auto& [k, cnt] : cur) {
            next[2] += cnt * (k - 1);
            next[k + 1] += cnt;
        }
        cur = std::move(next);
    }
    return out;
}

namespace detail {

// The label automata below walk an avoider digit by digit, tracking the last
// digit, the running maximum, and the first letter of the most recent ascent.
// Each mirrors the case analysis that justifies the corresponding succession
// rules; an impossible transition means the word left the avoidance class.

struct LabelWalk {
    std::string state = "(0)";
    int last = 0;
    int max = 0;
    int ascent_bottom = 0; // first letter of the last ascent; 0 if none yet
    int low = -1, high = -1; // the two admissible values once locked in

    void step_021_102(int z) {
        if (state == "(0)") {
            if (z == 0) return;
            if (z == 1) { state = "(01)"; return; }
        } else if (state == "(01)") {
            if (z == 0) { state = "(010)"; return; }
            if (z == 1) return;
            if (z == 2) { state = "(012)"; return; }
        } else if (state == "(010)") {
            if (z == 0 || z == 1) return;
        } else if (state == "(012)") {
            if (z == 0) { state = "(0120)"; return; }
            if (z == last || z == last + 1) return;
        } else if (state == "(0120)") {
            if (z == 0) return;
        }
        throw std::domain_error("tree_labeler: word is outside the {021,102} class");
    }

    void step_102_120(int z) {
        if (state == "(0)") {
            if (z == 0) return;
            if (z == 1) { state = "(01)"; return; }
        } else if (state == "(01)") {
            if (z == last || z == last + 1) return;
            if (z == ascent_bottom) {
                state = "(010)";
                low = z;
                high = last;
                return;
            }
        } else if (state == "(010)") {
            if (z == low || z == high) return;
        }
        throw std::domain_error("tree_labeler: word is outside the {102,120} class");
    }

    void step_101_120(int z) {
        if (state == "(0)") {
            if (z == 0) return;
            if (z == 1) { state = "(01)"; return; }
        } else if (state == "(01)") {
            if (z == last || z == last + 1) return;
            if (z == ascent_bottom) { state = "(010)"; return; }
        } else if (state == "(010)") {
            if (z == last) return;
            if (z == max + 1) { state = "(0102)"; return; }
        } else if (state == "(0102)") {
            if (z == last) return;
            if (z == max + 1) { state = "(01)"; return; }
        }
        throw std::domain_error("tree_labeler: word is outside the {101,120} class");
    }
};

} // namespace detail

/// The label the succession-rule argument assigns to an avoider of one of the
/// three builtin pairs.  Throws if x is not in the class.
inline std::string tree_labeler(const std::string& pair_name, const Word& x) {
    if (pair_name != "021_102" && pair_name != "102_120" && pair_name != "101_120")
        throw std::invalid_argument("tree_labeler: unknown pair '" + pair_name + "'");
    if (!is_ascent_sequence(x) || x.empty())
        throw std::domain_error("tree_labeler: not a nonempty ascent sequence");
    if (!avoids_all(x, builtin_tree_patterns(pair_name)))
        throw std::domain_error("tree_labeler: word does not avoid the pair");
    detail::LabelWalk walk;
    for (std::size_t i = 1; i < x.size(); ++i) {
        const int z = x[i];
        if (pair_name == "021_102") walk.step_021_102(z);
        else if (pair_name == "102_120") walk.step_102_120(z);
        else walk.step_101_120(z);
        if (z > walk.last) walk.ascent_bottom = walk.last;
        walk.last = z;
        walk.max = std::max(walk.max, z);
    }
    return walk.state;
}

/// Plain-text form: "root: <label>" then one "rule: <label> -> <children>"
/// line per label, in declared order.
inline std::string to_text(const GeneratingTree& t) {
    std::ostringstream out;
    out << "root: " << t.root << "\n";
    for (const auto& label : t.labels) {
        auto it = t.rules.find(label);
        if (it == t.rules.end()) continue;
        out << "rule: " << label << " ->";
        for (const auto& c : it->second) out << ' ' << c;
        out << "\n";
    }
    return out.str();
}

inline GeneratingTree parse_tree(const std::string& text) {
    GeneratingTree t;
    std::istringstream in(text);
    std::string line;
    auto declare = [&](const std::string& l) {
        if (std::find(t.labels.begin(), t.labels.end(), l) == t.labels.end())
            t.labels.push_back(l);
    };
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "root:") {
            ls >> t.root;
            declare(t.root);
        } else if (tag == "rule:") {
            std::string parent, arrow, child;
            ls >> parent >> arrow;
            if (arrow != "->") throw std::invalid_argument("parse_tree: expected '->'");
            declare(parent);
            std::vector<std::string> children;
            while (ls >> child) {
                declare(child);
                children.push_back(child);
            }
            std::sort(children.begin(), children.end());
            t.rules[parent] = std::move(children);
        } else {
            throw std::invalid_argument("parse_tree: bad line '" + line + "'");
        }
    }
    t.validate();
    return t;
}

} // namespace ascent
