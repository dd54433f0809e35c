#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "updown/error.hpp"
#include "updown/word.hpp"

using namespace updown;

namespace {

Word W(const char* s) { return Word::parse(s); }

// w ≈ v by comparing every ordered pair of positions.
bool same_relative_order(const Word& w, const Word& v) {
    if (w.size() != v.size()) return false;
    for (std::size_t i = 1; i <= w.size(); ++i) {
        for (std::size_t j = 1; j <= w.size(); ++j) {
            if ((w.at(i) < w.at(j)) != (v.at(i) < v.at(j))) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("word construction validates digits") {
    CHECK_THROWS_AS(Word({1, 2, 1}), PreconditionError);
    CHECK_THROWS_AS(Word({0, 2}), PreconditionError);
    CHECK(Word{}.empty());
    CHECK(Word({12, 3, 40}).max() == 40);
}

TEST_CASE("word text forms") {
    CHECK(W("254631") == Word({2, 5, 4, 6, 3, 1}));
    CHECK(W("2,5,4,6,3,1") == Word({2, 5, 4, 6, 3, 1}));
    CHECK(W(" 10, 8 ,9 ") == Word({10, 8, 9}));
    CHECK(W("") == Word{});
    CHECK(W("12,") == Word({12}));

    CHECK(Word({2, 5, 4, 6, 3, 1}).to_string() == "254631");
    CHECK(Word({10, 8, 9}).to_string() == "10,8,9");
    CHECK(Word({12}).to_string() == "12,");
    CHECK(Word{}.to_string().empty());

    CHECK_THROWS_AS(W("1203"), ParseError);
    CHECK_THROWS_AS(W("1,,2"), ParseError);
    CHECK_THROWS_AS(W("1,0"), ParseError);
    CHECK_THROWS_AS(W("3,1,3"), ParseError);
    CHECK_THROWS_AS(W("121"), ParseError);
    try {
        W("12a4");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
}

TEST_CASE("reverse") {
    CHECK(reverse(W("4213")) == W("3124"));
    CHECK(reverse(W("5")) == W("5"));
    CHECK(reverse(W("52314")) == W("41325"));
    CHECK(reverse(reverse(W("52314"))) == W("52314"));
    CHECK(reverse(Word{}) == Word{});
}

TEST_CASE("subword") {
    CHECK(subword(W("53124"), 2, 5) == W("3124"));
    CHECK(subword(W("312"), 1, 3) == W("312"));
    CHECK(subword(W("52314"), 3, 5) == W("314"));
    CHECK_THROWS_AS(subword(W("312"), 0, 2), std::out_of_range);
    CHECK_THROWS_AS(subword(W("312"), 2, 4), std::out_of_range);
    CHECK_THROWS_AS(subword(W("312"), 3, 2), std::out_of_range);
}

TEST_CASE("flatten and pattern_equal") {
    CHECK(flatten(W("58462")) == W("35241"));
    CHECK(flatten(W("312")) == W("312"));
    CHECK(flatten(W("523")) == W("312"));
    CHECK(flatten(Word({40, 7, 12})) == W("312"));
    CHECK(pattern_equal(W("58462"), W("35241")));
    CHECK(pattern_equal(W("21"), W("21")));
    CHECK(pattern_equal(W("53"), W("21")));
    CHECK_FALSE(pattern_equal(W("35"), W("21")));
    CHECK_FALSE(pattern_equal(W("312"), W("21")));
}

TEST_CASE("position_of") {
    CHECK(position_of(W("4213"), 2) == 2);
    CHECK(position_of(W("52314"), 3) == 3);
    CHECK(position_of(W("254631"), 6) == 4);
    CHECK_THROWS_AS(position_of(W("4213"), 7), std::out_of_range);
}

TEST_CASE("word invariants over all permutations up to n = 6") {
    std::mt19937 rng(7);
    for (unsigned n = 1; n <= 6; ++n) {
        std::vector<Digit> base(n);
        std::iota(base.begin(), base.end(), Digit{1});
        std::vector<Word> perms;
        auto p = base;
        do perms.emplace_back(p);
        while (std::next_permutation(p.begin(), p.end()));

        for (const auto& w : perms) {
            CHECK(reverse(reverse(w)) == w);
            for (Digit d : w) CHECK(w.at(position_of(w, d)) == d);

            // A random ground set with the same relative order.
            std::set<Digit> pool;
            std::uniform_int_distribution<Digit> pick(1, 500);
            while (pool.size() < n) pool.insert(pick(rng));
            const std::vector<Digit> labels(pool.begin(), pool.end());
            std::vector<Digit> relabeled;
            for (Digit d : w) relabeled.push_back(labels[d - 1]);
            const Word u(relabeled);

            const Word f = flatten(u);
            CHECK(flatten(f) == f);
            CHECK(f == w);
            for (const auto& v : perms) CHECK(pattern_equal(u, v) == same_relative_order(u, v));
        }
    }
}
