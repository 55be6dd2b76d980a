#include "ascent/word.hpp"

#include "oracle_util.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace ascent;

TEST_CASE("asc counts adjacent rises") {
    CHECK(asc(parse_word("0102")) == 2);
    CHECK(asc(Word{}) == 0);
    CHECK(asc(parse_word("01234")) == 4);
    CHECK(asc(parse_word("0120102")) == 4);
    CHECK(asc(parse_word("000")) == 0);
}

TEST_CASE("ascent sequence recognition") {
    CHECK(is_ascent_sequence(parse_word("01013")));
    CHECK(is_ascent_sequence(parse_word("01234")));
    CHECK(is_ascent_sequence(parse_word("0120102")));
    CHECK_FALSE(is_ascent_sequence(parse_word("01024")));
    CHECK_FALSE(is_ascent_sequence(parse_word("1")));
    CHECK(is_ascent_sequence(Word{}));
    CHECK(is_ascent_sequence(parse_word("0")));
    CHECK_FALSE(is_ascent_sequence(parse_word("02")));
}

TEST_CASE("max digit of a valid ascent sequence stays below its length") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 500; ++trial) {
        const Word w = testutil::random_ascent_sequence(rng, 1 + trial % 12);
        REQUIRE(is_ascent_sequence(w));
        CHECK(max_digit(w) <= static_cast<int>(w.size()) - 1);
    }
}

TEST_CASE("reduction") {
    CHECK(reduce_word(parse_word("273772")) == parse_word("021220"));
    CHECK(reduce_word(parse_word("000")) == parse_word("000"));
    CHECK(reduce_word(parse_word("975")) == parse_word("210"));
    CHECK(reduce_word(Word{}) == Word{});
}

TEST_CASE("reduction is idempotent") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const Word w = testutil::random_word(rng, 10, 12);
        CHECK(reduce_word(reduce_word(w)) == reduce_word(w));
    }
}

TEST_CASE("restricted growth functions") {
    CHECK(is_rgf(parse_word("0120102")));
    CHECK(is_rgf(parse_word("0102")));
    CHECK_FALSE(is_rgf(parse_word("0013")));
    CHECK(is_rgf(Word{}));
    CHECK(is_rgf(parse_word("0")));
    CHECK_FALSE(is_rgf(parse_word("1")));
    CHECK_FALSE(is_rgf(parse_word("0021")));
}

TEST_CASE("word serialization round trip") {
    CHECK(word_to_string(parse_word("0120102")) == "0120102");
    CHECK(word_to_string(Word{}) == "");
    CHECK(parse_word("") == Word{});

    const Word big{0, 1, 2, 10};
    CHECK(word_to_string(big) == "0,1,2,10");
    CHECK(parse_word("0,1,2,10") == big);
    CHECK(parse_word("0,1,2") == parse_word("012"));

    CHECK_THROWS_AS(parse_word("01a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("0,,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("0,-1"), std::invalid_argument);
}
