#include "ascent/extremal.hpp"

#include "ascent/enumerate.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace ascent;

TEST_CASE("extremal pattern construction") {
    CHECK(extremal_patterns({3, 3}).str() == "000,012");
    CHECK(extremal_patterns({2, 4}).str() == "00,0123");
    CHECK_THROWS_AS(extremal_patterns({1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(extremal_patterns({2, 1}), std::invalid_argument);
}

TEST_CASE("emptiness thresholds") {
    CHECK(emptiness_threshold({3, 3}) == 5);
    CHECK(emptiness_threshold({2, 3}) == 3);
    CHECK(emptiness_threshold({4, 3}) == 7);
    CHECK(emptiness_threshold({2, 4}) == 4);
    CHECK(emptiness_threshold({3, 4}) == 9);
    CHECK(emptiness_threshold({4, 4}) == 16);
    CHECK(emptiness_threshold({2, 2}) == 2); // rise pattern 01: all-zero words only
    CHECK(emptiness_threshold({3, 2}) == 3);

    CHECK(specialized_threshold({3, 3}) == 5);
    CHECK(specialized_threshold({5, 3}) == 9);
    CHECK_FALSE(specialized_threshold({3, 4}).has_value());
    // at b = 3 the two printed bounds coincide
    for (int a = 2; a <= 6; ++a) CHECK(emptiness_threshold({a, 3}) == *specialized_threshold({a, 3}));
}

TEST_CASE("witness construction") {
    CHECK(word_to_string(witness({2, 3})) == "01");
    CHECK(word_to_string(witness({3, 3})) == "0011");
    CHECK(word_to_string(witness({2, 4})) == "012");
    CHECK(word_to_string(witness({3, 4})) == "01013322");
    CHECK_THROWS_AS(witness({2, 2}), std::domain_error);

    for (int a = 2; a <= 4; ++a)
        for (int b = 3; b <= 5; ++b) {
            const ExtremalParams p{a, b};
            const Word w = witness(p);
            REQUIRE(static_cast<int>(w.size()) == emptiness_threshold(p) - 1);
            REQUIRE(is_ascent_sequence(w));
            REQUIRE(avoids_all(w, extremal_patterns(p)));
        }
}

TEST_CASE("brute-force confirmation") {
    SECTION("a=3, b=3 matches the finite count row") {
        const auto r = confirm_threshold({3, 3}, 9);
        CHECK(r.general_bound == 5);
        CHECK(r.specialized_bound == 5);
        CHECK(r.observed_max_length == 4);
        CHECK(r.first_empty_length == 5);
        CHECK(r.witness_valid);
        CHECK(word_to_string(r.witness_word) == "0011");
        REQUIRE(r.empty_at_general_bound.has_value());
        CHECK(*r.empty_at_general_bound);
    }
    SECTION("a=2, b=3 empties at three") {
        const auto r = confirm_threshold({2, 3}, 4);
        CHECK(r.first_empty_length == 3);
        CHECK(r.observed_max_length == 2);
        CHECK(r.witness_valid);
    }
    SECTION("a=2, b=4: the witness is the longest avoider") {
        const auto r = confirm_threshold({2, 4}, 5);
        CHECK(r.general_bound == 4);
        CHECK(r.first_empty_length == 4);
        CHECK(r.observed_max_length == 3);
        CHECK(r.witness_valid);
        CHECK(static_cast<int>(r.witness_word.size()) == 3);
    }
    SECTION("b=2 reduces to all-zero words, which die at length a") {
        const auto r = confirm_threshold({2, 2}, 4);
        CHECK(r.general_bound == 2);
        CHECK(r.first_empty_length == 2);
        CHECK(r.observed_max_length == 1);
        CHECK(r.witness_valid); // the all-zero word of length a-1
        CHECK(word_to_string(r.witness_word) == "0");

        const auto r3 = confirm_threshold({3, 2}, 5);
        CHECK(r3.first_empty_length == 3);
        CHECK(word_to_string(r3.witness_word) == "00");
        CHECK(r3.witness_valid);
    }
    SECTION("a short probe leaves the bound check open") {
        const auto r = confirm_threshold({3, 4}, 5);
        CHECK_FALSE(r.empty_at_general_bound.has_value());
        CHECK(r.observed_max_length == 5);
    }
}

TEST_CASE("emptiness persists upward once reached") {
    for (int a = 2; a <= 3; ++a)
        for (int b = 3; b <= 4; ++b) {
            const ExtremalParams p{a, b};
            const int probe = emptiness_threshold(p) + 2;
            const auto table = count_sequence(extremal_patterns(p), probe);
            bool seen_empty = false;
            for (const auto& c : table.counts) {
                if (seen_empty) CHECK(c == 0);
                if (c == 0) seen_empty = true;
            }
            CHECK(seen_empty);
        }
}

TEST_CASE("b=3 specialized bound holds for a up to five") {
    for (int a = 2; a <= 5; ++a) {
        const int n0 = 2 * a - 1;
        const auto table = count_sequence(extremal_patterns({a, 3}), n0);
        CHECK(table.counts.back() == 0);
        CHECK(table.counts[static_cast<std::size_t>(n0 - 2)] > 0); // tight
    }
}

TEST_CASE("report serialization") {
    const auto j = threshold_report_json(confirm_threshold({3, 3}, 9));
    CHECK(j["a"] == 3);
    CHECK(j["b"] == 3);
    CHECK(j["general_bound"] == 5);
    CHECK(j["specialized_bound"] == 5);
    CHECK(j["observed_max_length"] == 4);
    CHECK(j["witness"] == "0011");
    CHECK(j["witness_valid"] == true);

    const auto j2 = threshold_report_json(confirm_threshold({2, 4}, 5));
    CHECK(j2["specialized_bound"].is_null());
}
