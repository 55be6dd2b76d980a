#include "ascent/cb_words.hpp"
#include "ascent/dyck.hpp"
#include "ascent/lifting.hpp"

#include "ascent/enumerate.hpp"
#include "ascent/formulas.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <set>
#include <vector>

using namespace ascent;

namespace {

// Index triples of 100 occurrences; used to watch what a lift does.
std::vector<std::array<int, 3>> occurrences_100(const Word& w) {
    std::vector<std::array<int, 3>> out;
    const int n = static_cast<int>(w.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (w[i] > w[j] && w[j] == w[k]) out.push_back({i, j, k});
    return out;
}

} // namespace

TEST_CASE("Dyck word validation and parsing") {
    CHECK(DyckWord("UUDD").semilength() == 2);
    CHECK(DyckWord("(())").str() == "UUDD");
    CHECK(DyckWord("").empty());
    CHECK_THROWS_AS(DyckWord("UD D"), std::invalid_argument);
    CHECK_THROWS_AS(DyckWord("UDD"), std::invalid_argument);
    CHECK_THROWS_AS(DyckWord("DU"), std::invalid_argument);
    CHECK_THROWS_AS(DyckWord("UUD"), std::invalid_argument);
}

TEST_CASE("DDUU factor detection") {
    CHECK(avoids_dduu(DyckWord("UDUDUD")));
    CHECK(avoids_dduu(DyckWord("UUDDUD")));
    CHECK_FALSE(avoids_dduu(DyckWord("UUDDUUDD"))); // factor at steps 3..6
    CHECK_FALSE(avoids_dduu("UUDDDUUD"));           // raw factor check, not a Dyck word
    CHECK(avoids_dduu(DyckWord("UUUDDUDUUDDUDUUDDDUDUUDD")));
}

TEST_CASE("upstep heights") {
    CHECK(u_heights(DyckWord("UUUDDUDUUDDDUD")) == parse_word("0121120"));
    CHECK(u_heights(DyckWord("UUUDDUDUUDDUDUUDDDUDUUDD")) == parse_word("012112112001"));
    CHECK(u_heights(DyckWord("UD")) == parse_word("0"));
    CHECK(u_heights(DyckWord("")) == Word{});
}

TEST_CASE("height words rebuild their Dyck word") {
    CHECK(from_u_heights(parse_word("012112112001")) ==
          DyckWord("UUUDDUDUUDDUDUUDDDUDUUDD"));
    CHECK(from_u_heights(parse_word("0")) == DyckWord("UD"));
    CHECK(from_u_heights(parse_word("000")) == DyckWord("UDUDUD"));
    CHECK(from_u_heights(Word{}) == DyckWord(""));
    CHECK_THROWS_AS(from_u_heights(parse_word("02")), std::invalid_argument);
    CHECK_THROWS_AS(from_u_heights(parse_word("1")), std::invalid_argument);

    for (int n = 0; n <= 7; ++n)
        for (const auto& d : all_dyck_words(n)) REQUIRE(from_u_heights(u_heights(d)) == d);
}

TEST_CASE("height-word structure (all Dyck words)") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& d : all_dyck_words(n)) {
            const Word w = u_heights(d);
            REQUIRE(w.front() == 0);
            REQUIRE(is_rgf(w));
            for (std::size_t i = 0; i + 1 < w.size(); ++i)
                if (w[i] < w[i + 1]) REQUIRE(w[i + 1] == w[i] + 1);
        }
    }
}

TEST_CASE("height-word structure under DDUU avoidance") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& d : all_dyck_words(n)) {
            if (!avoids_dduu(d)) continue;
            const Word w = u_heights(d);
            // ascents look back at most one level
            for (std::size_t i = 2; i < w.size(); ++i)
                if (w[i - 1] < w[i])
                    REQUIRE((w[i - 2] == w[i - 1] || w[i - 2] == w[i - 1] - 1));
            // the first completed forbidden occurrence is always a 100
            const int k = detail::first_forbidden_completion(w);
            if (k >= 0) REQUIRE(detail::completion_is_100(w, k));
        }
    }
}

TEST_CASE("minimal-j occurrences complete as 100 first") {
    // With j chosen minimally over all 100/101 occurrences, the smallest
    // completing k for that j forms a 100.
    for (int n = 1; n <= 7; ++n) {
        for (const auto& d : all_dyck_words(n)) {
            if (!avoids_dduu(d)) continue;
            const Word w = u_heights(d);
            const int len = static_cast<int>(w.size());
            int best_j = -1, best_k = -1;
            for (int j = 1; j < len && best_j < 0; ++j) {
                for (int k = j + 1; k < len; ++k) {
                    bool is100 = false, is101 = false;
                    for (int i = 0; i < j; ++i) {
                        if (w[i] > w[j] && w[j] == w[k]) is100 = true;
                        if (w[i] == w[k] && w[j] < w[k]) is101 = true;
                    }
                    if (is100 || is101) {
                        best_j = j;
                        best_k = k;
                        REQUIRE(is100);
                        break;
                    }
                }
            }
            (void)best_k;
        }
    }
}

TEST_CASE("phi on the worked example") {
    CHECK(phi(DyckWord("UUUDDUDUUDDUDUUDDDUDUUDD")) == parse_word("012134356078"));
    CHECK(phi(DyckWord("UDUDUD")) == parse_word("000"));
    CHECK(phi(DyckWord("UUUUDDDD")) == parse_word("0123"));
    CHECK(phi(DyckWord("")) == Word{});
    CHECK_THROWS_AS(phi(DyckWord("UUDDUUDD")), std::domain_error);
}

TEST_CASE("phi_inverse on the worked example") {
    CHECK(phi_inverse(parse_word("012134356078")) ==
          DyckWord("UUUDDUDUUDDUDUUDDDUDUUDD"));
    CHECK(phi_inverse(parse_word("0")) == DyckWord("UD"));
    CHECK(phi_inverse(parse_word("012")) == DyckWord("UUUDDD"));
    CHECK_THROWS_AS(phi_inverse(parse_word("0100")), std::domain_error);
    CHECK_THROWS_AS(phi_inverse(parse_word("0101")), std::domain_error);
    CHECK_THROWS_AS(phi_inverse(parse_word("02")), std::domain_error);
}

TEST_CASE("phi round trips and image membership") {
    const PatternSet forbidden = PatternSet::parse("100,101");
    for (int n = 0; n <= 7; ++n) {
        std::set<Word> images;
        for (const auto& d : all_dyck_words(n)) {
            if (!avoids_dduu(d)) continue;
            const Word x = phi(d);
            REQUIRE(static_cast<int>(x.size()) == n);
            REQUIRE(is_ascent_sequence(x));
            REQUIRE(avoids_all(x, forbidden));
            REQUIRE(phi_inverse(x) == d);
            images.insert(x);
        }
        const auto cls = generate(n, forbidden);
        REQUIRE(images == std::set<Word>(cls.members.begin(), cls.members.end()));
    }
    for (int n = 1; n <= 9; ++n)
        for (const auto& x : generate(n, forbidden).members) REQUIRE(phi(phi_inverse(x)) == x);
}

TEST_CASE("each lift removes 100 occurrences and never mints new ones") {
    for (int n = 2; n <= 7; ++n) {
        for (const auto& d : all_dyck_words(n)) {
            if (!avoids_dduu(d)) continue;
            Word w = u_heights(d);
            for (;;) {
                const int k = detail::first_forbidden_completion(w);
                if (k < 0) break;
                const auto before = occurrences_100(w);
                detail::lift_at(w, k);
                const auto after = occurrences_100(w);
                REQUIRE(after.size() < before.size());
                const std::set<std::array<int, 3>> old(before.begin(), before.end());
                for (const auto& occ : after) REQUIRE(old.count(occ) == 1);
            }
        }
    }
}

TEST_CASE("CB alternation predicate") {
    CHECK(is_cb_alternating("DCBCBAAD"));
    CHECK(is_cb_alternating("CAABDDCDB"));
    CHECK(is_cb_alternating(""));
    CHECK(is_cb_alternating("AADD"));
    CHECK_FALSE(is_cb_alternating("B"));     // B before any C
    CHECK_FALSE(is_cb_alternating("CC"));    // two opens
    CHECK_FALSE(is_cb_alternating("C"));     // unclosed C
    CHECK_FALSE(is_cb_alternating("CBBC"));  // B without open C
    CHECK_FALSE(is_cb_alternating("XY"));
}

TEST_CASE("CB encoding on the worked examples") {
    CHECK(cb_encode(parse_word("012131114")) == "DCBCBAAD");
    CHECK(cb_encode(parse_word("000")) == "AA");
    CHECK(cb_encode(parse_word("0111023453")) == "CAABDDCDB");
    CHECK(cb_encode(parse_word("0")) == "");
    CHECK_THROWS_AS(cb_encode(parse_word("0101")), std::domain_error);  // contains 101
    CHECK_THROWS_AS(cb_encode(parse_word("01210")), std::domain_error); // contains 210
}

TEST_CASE("CB decoding on the worked examples") {
    CHECK(cb_decode("CAABDDCDB") == parse_word("0111023453"));
    CHECK(cb_decode("DCBCBAAD") == parse_word("012131114"));
    CHECK(cb_decode("AAA") == parse_word("0000"));
    CHECK(cb_decode("") == parse_word("0"));
    CHECK_THROWS_AS(cb_decode("BC"), std::invalid_argument);
}

TEST_CASE("CB round trips and image membership") {
    const PatternSet forbidden = PatternSet::parse("101,210");
    for (int n = 1; n <= 9; ++n)
        for (const auto& x : generate(n, forbidden).members) {
            const std::string wd = cb_encode(x);
            REQUIRE(is_cb_alternating(wd));
            REQUIRE(cb_decode(wd) == x);
        }
    for (int len = 0; len <= 9; ++len)
        for (const auto& wd : all_cb_words(len)) {
            const Word x = cb_decode(wd);
            REQUIRE(static_cast<int>(x.size()) == len + 1);
            REQUIRE(is_ascent_sequence(x));
            REQUIRE(avoids_all(x, forbidden));
            REQUIRE(cb_encode(x) == wd);
        }
}

TEST_CASE("ternary relabeling") {
    CHECK(cb_to_ternary("DCBCBAAD") == "12222001");
    CHECK(cb_to_ternary("AA") == "00");
    CHECK(cb_to_ternary("CB") == "22");
    CHECK(ternary_to_cb("12222001") == "DCBCBAAD");
    CHECK_THROWS_AS(ternary_to_cb("2"), std::invalid_argument);

    for (int len = 0; len <= 7; ++len)
        for (const auto& wd : all_cb_words(len)) {
            const std::string t = cb_to_ternary(wd);
            CHECK(std::count(t.begin(), t.end(), '2') % 2 == 0);
            CHECK(ternary_to_cb(t) == wd);
        }
}

TEST_CASE("bijections carry the counting identities") {
    for (int n = 1; n <= 8; ++n) {
        long long dduu_free = 0;
        for (const auto& d : all_dyck_words(n))
            if (avoids_dduu(d)) ++dduu_free;
        CHECK(dduu_avoiding_dyck_count(n) == dduu_free);
        CHECK(count(n, PatternSet::parse("100,101")) == dduu_free);
    }
    for (int n = 1; n <= 10; ++n)
        CHECK(BigInt(all_cb_words(n - 1).size()) ==
              formula_value(PatternSet::parse("101,210"), n));
}
