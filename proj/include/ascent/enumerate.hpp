#pragma once

#include "ascent/bigint.hpp"
#include "ascent/pattern.hpp"
#include "ascent/word.hpp"

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace ascent {

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::uint64_t budget)
        : std::runtime_error("search node budget exceeded (" + std::to_string(budget) + ")") {}
};

struct SearchOptions {
    std::uint64_t node_budget = 100'000'000;
    int jobs = 1;
};

/// All ascent sequences of one length avoiding a pattern set, in
/// lexicographic order.
struct AvoidanceClass {
    int length = 0;
    PatternSet patterns;
    std::vector<Word> members;
};

/// Counts indexed by n = 1..n_max (counts[0] is n = 1).
struct CountTable {
    PatternSet patterns;
    std::vector<BigInt> counts;
};

namespace detail {

// Depth-first extension: a word of length i extends by any digit z with
// 0 <= z <= asc + 1, children tried in increasing digit order.  A branch is
// pruned as soon as a forbidden pattern appears, which is sound because
// containment is monotone under extension; only occurrences using the
// appended digit need to be searched.  `sink(w)` fires for every surviving
// node in DFS preorder.
template <typename Sink>
void extend_all(Word& w, int ascents, int n_max, const PatternSet& b,
                std::atomic<std::uint64_t>& visited, std::uint64_t budget, Sink&& sink) {
    if (static_cast<int>(w.size()) >= n_max) return;
    const int hi = ascents + 1;
    const int last = w.back();
    for (int z = 0; z <= hi; ++z) {
        w.push_back(z);
        bool pruned = false;
        for (const auto& p : b.patterns()) {
            if (contains_ending_at_last(w, p)) {
                pruned = true;
                break;
            }
        }
        if (!pruned) {
            if (visited.fetch_add(1, std::memory_order_relaxed) + 1 > budget)
                throw BudgetExceeded(budget);
            sink(static_cast<const Word&>(w));
            extend_all(w, ascents + (z > last ? 1 : 0), n_max, b, visited, budget, sink);
        }
        w.pop_back();
    }
}

// A collector provides: node(const Word&), a fresh `local()` state of the
// same type, and absorb(state&&) to merge worker results.  Workers each own a
// local collector; locals are absorbed in frontier (lexicographic) order, so
// results never depend on scheduling.
template <typename Collector>
void run_search(int n_max, const PatternSet& b, const SearchOptions& opts,
                Collector& collector) {
    std::atomic<std::uint64_t> visited{0};
    const Word empty;
    if (!avoids_all(empty, b)) return; // the empty pattern forbids everything
    collector.node(empty);
    if (n_max < 1) return;
    Word root{0};
    if (!avoids_all(root, b)) return;
    visited.fetch_add(1, std::memory_order_relaxed);
    collector.node(static_cast<const Word&>(root));

    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        extend_all(root, 0, n_max, b, visited, opts.node_budget,
                   [&](const Word& node) { collector.node(node); });
        return;
    }

    struct Prefix {
        Word w;
        int ascents;
    };
    std::vector<Prefix> frontier{{root, 0}};
    int depth = 1;
    const std::size_t want = static_cast<std::size_t>(jobs) * 8;
    while (depth < n_max && frontier.size() < want) {
        std::vector<Prefix> next;
        for (auto& pre : frontier) {
            Word w = pre.w;
            extend_all(w, pre.ascents, depth + 1, b, visited, opts.node_budget,
                       [&](const Word& node) {
                           collector.node(node);
                           next.push_back({node, asc(node)});
                       });
        }
        frontier = std::move(next);
        ++depth;
        if (frontier.empty()) return;
    }
    if (depth >= n_max) return;

    std::vector<Collector> locals(frontier.size(), collector.local());
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&]() {
        try {
            for (;;) {
                const std::size_t i = cursor.fetch_add(1);
                if (i >= frontier.size()) return;
                Word w = frontier[i].w;
                extend_all(w, frontier[i].ascents, n_max, b, visited, opts.node_budget,
                           [&](const Word& node) { locals[i].node(node); });
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    for (auto& loc : locals) collector.absorb(std::move(loc));
}

struct MemberCollector {
    int length = 0;
    std::vector<Word> members;
    void node(const Word& w) {
        if (static_cast<int>(w.size()) == length) members.push_back(w);
    }
    MemberCollector local() const { return MemberCollector{length, {}}; }
    void absorb(MemberCollector&& other) {
        members.insert(members.end(), std::make_move_iterator(other.members.begin()),
                       std::make_move_iterator(other.members.end()));
    }
};

struct LevelCountCollector {
    std::vector<std::uint64_t> tally; // index = length
    void node(const Word& w) { ++tally[w.size()]; }
    LevelCountCollector local() const {
        return LevelCountCollector{std::vector<std::uint64_t>(tally.size(), 0)};
    }
    void absorb(LevelCountCollector&& other) {
        for (std::size_t i = 0; i < tally.size(); ++i) tally[i] += other.tally[i];
    }
};

} // namespace detail

/// Exactly the avoidance class A_B(n), members in lexicographic order.
inline AvoidanceClass generate(int n, const PatternSet& b, const SearchOptions& opts = {}) {
    if (n < 0) throw std::invalid_argument("generate: negative length");
    detail::MemberCollector c{n, {}};
    detail::run_search(n, b, opts, c);
    return AvoidanceClass{n, b, std::move(c.members)};
}

/// |A_B(n)| without materializing members.
inline BigInt count(int n, const PatternSet& b, const SearchOptions& opts = {}) {
    if (n < 0) throw std::invalid_argument("count: negative length");
    detail::LevelCountCollector c{std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0)};
    detail::run_search(n, b, opts, c);
    return BigInt(c.tally[static_cast<std::size_t>(n)]);
}

/// Counts for every n = 1..n_max from a single search: each node of the
/// pruned tree is an avoider of its own length, so per-level tallies give the
/// whole table.
inline CountTable count_sequence(const PatternSet& b, int n_max,
                                 const SearchOptions& opts = {}) {
    if (n_max < 1) throw std::invalid_argument("count_sequence: n_max must be >= 1");
    detail::LevelCountCollector c{
        std::vector<std::uint64_t>(static_cast<std::size_t>(n_max) + 1, 0)};
    detail::run_search(n_max, b, opts, c);
    CountTable t;
    t.patterns = b;
    for (int n = 1; n <= n_max; ++n) t.counts.emplace_back(c.tally[static_cast<std::size_t>(n)]);
    return t;
}

/// True iff the two classes coincide as sets (not merely in size) at length n.
inline bool classes_equal(int n, const PatternSet& b1, const PatternSet& b2,
                          const SearchOptions& opts = {}) {
    return generate(n, b1, opts).members == generate(n, b2, opts).members;
}

} // namespace ascent
