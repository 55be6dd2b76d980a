// Batch command-line surface for the ascent-sequence toolkit.  Every command
// is deterministic for fixed inputs; listing order never depends on --jobs.
//
// Exit codes: 0 success / all pass, 1 verification mismatch, 2 usage error,
// 3 node budget exhausted.

#include "ascent/ascent.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace ascent;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Defaults {
    std::uint64_t budget = 100'000'000;
    int jobs = 1;
    std::string format;
};

// The config file is flat key=value; flags given on the command line win.
Defaults load_defaults(int argc, char** argv) {
    Defaults d;
    if (const char* env = std::getenv("ASCENTSEQ_BUDGET")) d.budget = std::stoull(env);
    std::string config_path;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
    if (config_path.empty()) return d;
    std::ifstream in(config_path);
    if (!in) throw std::invalid_argument("cannot open config file " + config_path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bad config line: " + line);
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 1);
        if (key == "budget") d.budget = std::stoull(value);
        else if (key == "jobs") d.jobs = std::stoi(value);
        else if (key == "format") d.format = value;
        else throw std::invalid_argument("unknown config key: " + key);
    }
    return d;
}

struct Output {
    std::string path;
    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (!out) throw std::invalid_argument("cannot open output file " + path);
        out << text;
    }
};

// JSON map from "patterns|n" to a decimal count, shared across invocations.
class CountCache {
public:
    explicit CountCache(std::string path) : path_(std::move(path)) {
        if (path_.empty()) return;
        std::ifstream in(path_);
        if (in) in >> data_;
        if (!data_.is_object()) data_ = json::object();
    }

    std::optional<BigInt> get(const std::string& patterns, int n) const {
        if (path_.empty()) return std::nullopt;
        const auto it = data_.find(key(patterns, n));
        if (it == data_.end()) return std::nullopt;
        return BigInt(it->get<std::string>());
    }

    void put(const std::string& patterns, int n, const BigInt& value) {
        if (path_.empty()) return;
        data_[key(patterns, n)] = value.str();
        dirty_ = true;
    }

    void save() const {
        if (path_.empty() || !dirty_) return;
        std::ofstream out(path_);
        out << data_.dump(1) << "\n";
    }

private:
    static std::string key(const std::string& patterns, int n) {
        return patterns + "|" + std::to_string(n);
    }
    std::string path_;
    json data_ = json::object();
    bool dirty_ = false;
};

CountTable cached_count_sequence(const PatternSet& b, int n_max, const SearchOptions& opts,
                                 CountCache& cache) {
    CountTable t;
    t.patterns = b;
    bool all_cached = true;
    for (int n = 1; n <= n_max && all_cached; ++n) {
        if (auto v = cache.get(b.str(), n)) t.counts.push_back(*v);
        else all_cached = false;
    }
    if (all_cached && static_cast<int>(t.counts.size()) == n_max) return t;
    t = count_sequence(b, n_max, opts);
    for (int n = 1; n <= n_max; ++n)
        cache.put(b.str(), n, t.counts[static_cast<std::size_t>(n - 1)]);
    return t;
}

std::string counts_line(const CountTable& t) {
    std::string s;
    for (std::size_t i = 0; i < t.counts.size(); ++i) {
        if (i) s += ',';
        s += t.counts[i].str();
    }
    s += '\n';
    return s;
}

std::string format_counts(const CountTable& t, const std::string& format) {
    if (format == "text" || format.empty()) return counts_line(t);
    if (format == "bfile") return bfile_format(t);
    if (format == "csv") return csv_format(t);
    if (format == "json") return counts_json(t).dump() + "\n";
    throw std::invalid_argument("unknown format: " + format);
}

struct VerifyRow {
    std::string patterns, formula, oeis, note;
    int n_max = 0;
    bool pass = false;
    std::string detail;
};

int run_verify(const std::vector<const FormulaEntry*>& entries, int n_max,
               const SearchOptions& opts, CountCache& cache, const std::string& format,
               const Output& out) {
    std::vector<VerifyRow> rows;
    bool all_pass = true;
    for (const auto* e : entries) {
        VerifyRow row{e->key, e->description, e->oeis, e->note, n_max, true, ""};
        const auto table = cached_count_sequence(PatternSet::parse(e->key), n_max, opts, cache);
        for (int n = 1; n <= n_max; ++n) {
            const BigInt expected = e->value(n);
            const BigInt& got = table.counts[static_cast<std::size_t>(n - 1)];
            if (expected != got) {
                row.pass = false;
                row.detail = "n=" + std::to_string(n) + ": formula " + expected.str() +
                             " vs search " + got.str();
                break;
            }
        }
        all_pass = all_pass && row.pass;
        rows.push_back(std::move(row));
    }

    std::ostringstream text;
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            json item{{"patterns", r.patterns}, {"formula", r.formula}, {"oeis", r.oeis},
                      {"n_max", r.n_max},       {"pass", r.pass}};
            if (!r.note.empty()) item["note"] = r.note;
            if (!r.detail.empty()) item["detail"] = r.detail;
            arr.push_back(item);
        }
        text << arr.dump(1) << "\n";
    } else {
        int passed = 0;
        for (const auto& r : rows) {
            text << r.patterns << ": " << (r.pass ? "pass" : "FAIL") << " (n <= " << r.n_max
                 << "; " << r.formula << ", " << r.oeis << ")";
            if (!r.detail.empty()) text << " " << r.detail;
            if (!r.note.empty()) text << "\n  note: " << r.note;
            text << "\n";
            passed += r.pass;
        }
        text << passed << "/" << rows.size() << " pass\n";
    }
    out.write(text.str());
    return all_pass ? kExitOk : kExitMismatch;
}

int run_roundtrip(int n_max, const Output& out) {
    std::ostringstream text;
    bool ok = true;
    long long dyck_checked = 0;
    for (int m = 0; m <= n_max; ++m)
        for (const auto& d : all_dyck_words(m)) {
            if (!avoids_dduu(d)) continue;
            ++dyck_checked;
            const Word x = phi(d);
            if (phi_inverse(x) != d || !is_ascent_sequence(x) ||
                !avoids_all(x, PatternSet::parse("100,101")))
                ok = false;
        }
    text << "phi round trip over " << dyck_checked << " DDUU-free Dyck words (semilength <= "
         << n_max << "): " << (ok ? "pass" : "FAIL") << "\n";

    bool ok2 = true;
    long long asc_checked = 0;
    for (int n = 1; n <= n_max; ++n)
        for (const auto& x : generate(n, PatternSet::parse("100,101")).members) {
            ++asc_checked;
            if (phi(phi_inverse(x)) != x) ok2 = false;
        }
    text << "phi-inv round trip over " << asc_checked << " avoiders (n <= " << n_max
         << "): " << (ok2 ? "pass" : "FAIL") << "\n";

    bool ok3 = true;
    long long cb_checked = 0;
    for (int n = 1; n <= n_max; ++n)
        for (const auto& x : generate(n, PatternSet::parse("101,210")).members) {
            ++cb_checked;
            const std::string wd = cb_encode(x);
            if (!is_cb_alternating(wd) || cb_decode(wd) != x) ok3 = false;
        }
    text << "cb round trip over " << cb_checked << " avoiders (n <= " << n_max
         << "): " << (ok3 ? "pass" : "FAIL") << "\n";

    out.write(text.str());
    return (ok && ok2 && ok3) ? kExitOk : kExitMismatch;
}

std::string matrix_text(const std::vector<std::vector<long long>>& m) {
    std::ostringstream out;
    for (const auto& row : m) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
        out << "\n";
    }
    return out.str();
}

std::string fib_triangle_text(int n_max) {
    std::ostringstream out;
    out << "n\\k";
    for (int k = 2; k <= n_max + 1; ++k) out << "\t" << k;
    out << "\trow sum\n";
    for (const auto& row : fib_tree_distribution(n_max)) {
        out << row.level;
        for (int k = 2; k <= n_max + 1; ++k) {
            auto it = row.counts.find(k);
            out << "\t" << (it == row.counts.end() ? BigInt(0) : it->second).str();
        }
        out << "\t" << row.total().str() << "\n";
    }
    return out.str();
}

} // namespace

int main(int argc, char** argv) {
    Defaults defaults;
    try {
        defaults = load_defaults(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    CLI::App app{"exact enumeration toolkit for pattern-avoiding ascent sequences"};
    app.require_subcommand(1);

    std::string patterns_arg;
    std::string format = defaults.format.empty() ? "text" : defaults.format;
    std::string output_path;
    std::string cache_path;
    std::string config_path;
    std::uint64_t budget = defaults.budget;
    int jobs = defaults.jobs;
    int n = 0;
    int n_max = 10;
    bool all_pairs = false;
    std::string positional;
    std::string tree_name;
    int ext_a = 0, ext_b = 0, probe = 0;

    app.add_option("--config", config_path, "key=value config file (budget, jobs, format)");

    auto add_common = [&](CLI::App* cmd, bool with_format = true) {
        cmd->add_option("--budget", budget, "search node budget");
        cmd->add_option("--jobs", jobs, "worker threads for subtree search");
        cmd->add_option("--output", output_path, "write result to a file instead of stdout");
        if (with_format) cmd->add_option("--format", format, "text|json|bfile|csv");
    };

    auto* cmd_enumerate = app.add_subcommand("enumerate", "list an avoidance class");
    cmd_enumerate->add_option("--patterns", patterns_arg,
                              "comma-separated patterns; empty for none");
    cmd_enumerate->add_option("--n", n, "sequence length")->required();
    add_common(cmd_enumerate);

    auto* cmd_count = app.add_subcommand("count", "count an avoidance class for n = 1..n_max");
    cmd_count->add_option("--patterns", patterns_arg, "comma-separated patterns");
    cmd_count->add_option("--nmax", n_max, "largest length")->required();
    cmd_count->add_option("--cache", cache_path, "JSON count cache");
    add_common(cmd_count);

    auto* cmd_verify =
        app.add_subcommand("verify", "compare registered formulas against brute force");
    cmd_verify->add_option("--patterns", patterns_arg, "one registered pair");
    cmd_verify->add_flag("--all", all_pairs, "verify all sixteen registered pairs");
    cmd_verify->add_option("--nmax", n_max, "largest length (default 10)");
    cmd_verify->add_option("--cache", cache_path, "JSON count cache");
    add_common(cmd_verify);

    auto* cmd_bijection = app.add_subcommand("bijection", "run a bijection or audit round trips");
    cmd_bijection->require_subcommand(1);
    auto* bij_phi = cmd_bijection->add_subcommand("phi", "DDUU-free Dyck word -> avoider");
    bij_phi->add_option("input", positional, "Dyck word over U/D or (/)")->required();
    auto* bij_phi_inv = cmd_bijection->add_subcommand("phi-inv", "avoider -> Dyck word");
    bij_phi_inv->add_option("input", positional, "{100,101}-avoiding ascent sequence")->required();
    auto* bij_enc = cmd_bijection->add_subcommand("cb-encode", "avoider -> CB word");
    bij_enc->add_option("input", positional, "{101,210}-avoiding ascent sequence")->required();
    auto* bij_dec = cmd_bijection->add_subcommand("cb-decode", "CB word -> avoider");
    bij_dec->add_option("input", positional, "word over A/B/C/D")->required();
    auto* bij_rt = cmd_bijection->add_subcommand("roundtrip", "exhaustive round-trip audit");
    bij_rt->add_option("--nmax", n_max, "bound on semilength and length")->required();
    for (auto* c : {bij_phi, bij_phi_inv, bij_enc, bij_dec, bij_rt})
        c->add_option("--output", output_path, "write result to a file instead of stdout");

    auto* cmd_tree = app.add_subcommand("tree", "generating-tree computations");
    cmd_tree->require_subcommand(1);
    auto* tree_levels = cmd_tree->add_subcommand("levels", "level counts of a builtin tree");
    tree_levels->add_option("name", tree_name, "021_102 | 102_120 | 101_120")->required();
    tree_levels->add_option("--nmax", n_max, "levels to expand")->required();
    auto* tree_matrix = cmd_tree->add_subcommand("matrix", "augmented production matrix");
    tree_matrix->add_option("name", tree_name, "builtin tree name")->required();
    auto* tree_gf = cmd_tree->add_subcommand("gfcheck", "series check of the registered GF");
    tree_gf->add_option("name", tree_name, "builtin tree name")->required();
    tree_gf->add_option("--nmax", n_max, "check order");
    auto* tree_fib = cmd_tree->add_subcommand("fib-triangle", "label counts of the (k) tree");
    tree_fib->add_option("--nmax", n_max, "levels to expand")->required();
    auto* tree_show = cmd_tree->add_subcommand("show", "print root and succession rules");
    tree_show->add_option("name", tree_name, "builtin tree name")->required();
    for (auto* c : {tree_levels, tree_matrix, tree_gf, tree_fib, tree_show}) {
        c->add_option("--output", output_path, "write result to a file instead of stdout");
        c->add_option("--format", format, "text|json|bfile|csv");
    }

    auto* cmd_extremal = app.add_subcommand("extremal", "repeats-versus-rise emptiness report");
    cmd_extremal->add_option("--a", ext_a, "all-zeros pattern length")->required();
    cmd_extremal->add_option("--b", ext_b, "increasing pattern length")->required();
    cmd_extremal->add_option("--probe", probe, "brute-force up to this length");
    add_common(cmd_extremal);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const Output out{output_path};
    SearchOptions opts;
    opts.node_budget = budget;
    opts.jobs = jobs;

    try {
        if (app.got_subcommand(cmd_enumerate)) {
            const auto cls = generate(n, PatternSet::parse(patterns_arg), opts);
            if (format == "json") out.write(members_json(cls).dump() + "\n");
            else out.write(members_text(cls));
            return kExitOk;
        }

        if (app.got_subcommand(cmd_count)) {
            CountCache cache(cache_path);
            const auto t =
                cached_count_sequence(PatternSet::parse(patterns_arg), n_max, opts, cache);
            cache.save();
            out.write(format_counts(t, format));
            return kExitOk;
        }

        if (app.got_subcommand(cmd_verify)) {
            const auto& reg = FormulaRegistry::instance();
            std::vector<const FormulaEntry*> entries;
            if (all_pairs) {
                for (const auto& e : reg.entries()) entries.push_back(&e);
            } else {
                const PatternSet pair = PatternSet::parse(patterns_arg);
                entries.push_back(&reg.at(pair)); // throws UnregisteredPair
            }
            CountCache cache(cache_path);
            const int rc = run_verify(entries, n_max, opts, cache, format, out);
            cache.save();
            return rc;
        }

        if (app.got_subcommand(cmd_bijection)) {
            if (bij_phi->parsed())
                out.write(word_to_string(phi(DyckWord(positional))) + "\n");
            else if (bij_phi_inv->parsed())
                out.write(phi_inverse(parse_word(positional)).str() + "\n");
            else if (bij_enc->parsed())
                out.write(cb_encode(parse_word(positional)) + "\n");
            else if (bij_dec->parsed())
                out.write(word_to_string(cb_decode(positional)) + "\n");
            else if (bij_rt->parsed())
                return run_roundtrip(n_max, out);
            return kExitOk;
        }

        if (app.got_subcommand(cmd_tree)) {
            if (tree_levels->parsed()) {
                CountTable t;
                t.counts = level_counts(builtin_tree(tree_name), n_max);
                out.write(format_counts(t, format));
            } else if (tree_matrix->parsed()) {
                const auto m = production_matrix(builtin_tree(tree_name));
                if (format == "json") out.write(json(m).dump() + "\n");
                else out.write(matrix_text(m));
            } else if (tree_gf->parsed()) {
                const std::string key = builtin_tree_patterns(tree_name).str();
                const bool ok = gf_check(builtin_tree(tree_name), registered_gf(key), n_max);
                out.write(std::string(ok ? "pass" : "FAIL") + " (order " +
                          std::to_string(n_max) + ")\n");
                return ok ? kExitOk : kExitMismatch;
            } else if (tree_fib->parsed()) {
                // distributions default to CSV; text gives the aligned table
                const bool fmt_given = tree_fib->get_option("--format")->count() > 0;
                if (fmt_given && format == "text") out.write(fib_triangle_text(n_max));
                else out.write(fib_triangle_csv(n_max));
            } else if (tree_show->parsed()) {
                out.write(to_text(builtin_tree(tree_name)));
            }
            return kExitOk;
        }

        if (app.got_subcommand(cmd_extremal)) {
            const ExtremalParams p{ext_a, ext_b};
            p.validate();
            if (probe <= 0) probe = emptiness_threshold(p);
            const auto report = confirm_threshold(p, probe, opts);
            // the report is JSON unless text is asked for explicitly
            const bool fmt_given = cmd_extremal->get_option("--format")->count() > 0;
            if (fmt_given && format == "text") {
                std::ostringstream text;
                text << "a=" << report.a << " b=" << report.b
                     << " general_bound=" << report.general_bound;
                if (report.specialized_bound)
                    text << " specialized_bound=" << *report.specialized_bound;
                text << " observed_max_length=" << report.observed_max_length;
                if (report.first_empty_length)
                    text << " first_empty_length=" << *report.first_empty_length;
                text << " witness=" << word_to_string(report.witness_word)
                     << " witness_valid=" << (report.witness_valid ? "true" : "false") << "\n";
                out.write(text.str());
            } else {
                out.write(threshold_report_json(report).dump(1) + "\n");
            }
            return kExitOk;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
