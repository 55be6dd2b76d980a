#pragma once

#include "ascent/enumerate.hpp"
#include "ascent/formulas.hpp"
#include "ascent/gentree.hpp"
#include "ascent/word.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace ascent {

/// OEIS b-file form: one "n a(n)" line per term, n starting at 1.
inline std::string bfile_format(const CountTable& t) {
    std::ostringstream out;
    for (std::size_t i = 0; i < t.counts.size(); ++i)
        out << (i + 1) << ' ' << t.counts[i].str() << "\n";
    return out.str();
}

inline std::string csv_format(const CountTable& t) {
    std::ostringstream out;
    out << "n,count\n";
    for (std::size_t i = 0; i < t.counts.size(); ++i)
        out << (i + 1) << ',' << t.counts[i].str() << "\n";
    return out.str();
}

inline nlohmann::json counts_json(const CountTable& t) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : t.counts) arr.push_back(c.str());
    return arr;
}

inline std::string members_text(const AvoidanceClass& cls) {
    std::string out;
    for (const auto& w : cls.members) {
        out += word_to_string(w);
        out += '\n';
    }
    return out;
}

inline nlohmann::json members_json(const AvoidanceClass& cls) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& w : cls.members) arr.push_back(word_to_string(w));
    return arr;
}

/// Registry report: every registered pair with its formula and leading terms.
inline std::string registry_report_text(int n_terms = 12) {
    std::ostringstream out;
    for (const auto& e : FormulaRegistry::instance().entries()) {
        out << e.key << "  [" << e.oeis << "]  " << e.description << "\n  ";
        for (int n = 1; n <= n_terms; ++n) {
            if (n > 1) out << ", ";
            out << e.value(n).str();
        }
        out << "\n";
        if (!e.note.empty()) out << "  note: " << e.note << "\n";
    }
    return out.str();
}

inline nlohmann::json registry_report_json(int n_terms = 12) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : FormulaRegistry::instance().entries()) {
        nlohmann::json item;
        item["patterns"] = e.key;
        item["formula"] = e.description;
        item["oeis"] = e.oeis;
        if (!e.note.empty()) item["note"] = e.note;
        nlohmann::json terms = nlohmann::json::array();
        for (int n = 1; n <= n_terms; ++n) terms.push_back(e.value(n).str());
        item["terms"] = terms;
        arr.push_back(item);
    }
    return arr;
}

/// CSV of the infinite-tree label triangle: one row per level, columns k,
/// then the row sum.
inline std::string fib_triangle_csv(int n_max) {
    const auto rows = fib_tree_distribution(n_max);
    std::ostringstream out;
    out << "n";
    for (int k = 2; k <= n_max + 1; ++k) out << ",k=" << k;
    out << ",row_sum\n";
    for (const auto& row : rows) {
        out << row.level;
        for (int k = 2; k <= n_max + 1; ++k) {
            auto it = row.counts.find(k);
            out << ',' << (it == row.counts.end() ? BigInt(0) : it->second).str();
        }
        out << ',' << row.total().str() << "\n";
    }
    return out.str();
}

} // namespace ascent
