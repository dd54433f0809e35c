#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "updown/bijection.hpp"
#include "updown/enumeration.hpp"

using namespace updown;

namespace {

Word W(const char* s) { return Word::parse(s); }

const char* kPaperTree = "[6,[5,[4],[2]],[3,[1]]]";

std::vector<Digit> iota_digits(unsigned n) {
    std::vector<Digit> d(n);
    std::iota(d.begin(), d.end(), Digit{1});
    return d;
}

constexpr Variant kBoth[] = {Variant::G, Variant::R};

}  // namespace

TEST_CASE("wrap and strip") {
    CHECK(wrap(W("254631")) == W("82546317"));
    CHECK(wrap(W("316254")) == W("83162547"));
    CHECK(wrap(Word{}) == W("21"));
    CHECK(strip(W("82546317")) == W("254631"));
    CHECK(strip(W("21")) == Word{});
    CHECK(strip(W("4213")) == W("21"));
    CHECK(strip(wrap(W("4213"))) == W("4213"));
    CHECK_THROWS_AS(strip(W("1")), PreconditionError);
    CHECK_THROWS_AS(strip(W("4231")), PreconditionError);
    CHECK_THROWS_AS(strip(W("12")), PreconditionError);
}

TEST_CASE("phi examples") {
    CHECK(to_bracket(phi(Variant::G, W("254631"))) == kPaperTree);
    CHECK(to_bracket(phi(Variant::R, W("316254"))) == kPaperTree);
    CHECK(to_bracket(phi(Variant::G, W("7"))) == "[7]");
    CHECK(phi(Variant::G, Word{}).empty());
    CHECK_THROWS_AS(phi(Variant::G, W("316254")), PreconditionError);
    CHECK_THROWS_AS(phi(Variant::R, W("254631")), PreconditionError);
}

TEST_CASE("psi examples") {
    const auto t = parse_bracket(kPaperTree);
    CHECK(psi(Variant::G, t) == W("254631"));
    CHECK(psi(Variant::R, t) == W("316254"));
    CHECK(psi(Variant::G, parse_bracket("[5,[4],[2]]")) == W("452"));
    CHECK(psi(Variant::R, parse_bracket("[5,[2],[4]]")) == W("254"));
    CHECK(psi(Variant::G, parse_bracket("[2,[1]]")) == W("21"));
    CHECK(wrap(psi(Variant::G, parse_bracket("[2,[1]]"))) == W("4213"));
    CHECK(psi(Variant::R, DecreasingTree{}) == Word{});
}

TEST_CASE("round trips and image law for every tree on up to 9 vertices") {
    for (unsigned n = 0; n <= 9; ++n) {
        const auto trees = enumerate_trees(iota_digits(n));
        for (Variant v : kBoth) {
            std::set<Word> images;
            for (const auto& t : trees) {
                const Word w = psi(v, t);
                REQUIRE(is_trimmed_member(v, w));
                REQUIRE(phi(v, w) == t);
                images.insert(w);
            }
            CHECK(images.size() == trees.size());
        }
    }
}

TEST_CASE("psi(phi(w)) = w for every trimmed member on [n], n <= 8") {
    for (unsigned n = 0; n <= 8; ++n) {
        auto digits = iota_digits(n);
        for (Variant v : kBoth) {
            std::size_t members = 0;
            do {
                const Word w(digits);
                if (!is_trimmed_member(v, w)) continue;
                ++members;
                REQUIRE(psi(v, phi(v, w)) == w);
            } while (std::next_permutation(digits.begin(), digits.end()));
            CHECK(BigCount(members) == euler_number(n));
        }
    }
}

TEST_CASE("wrapped images are exactly the primitive words") {
    for (unsigned n = 2; n <= 10; ++n) {
        for (Variant v : kBoth) {
            std::set<Word> from_trees;
            for (const auto& t : enumerate_trees(iota_digits(n - 2))) from_trees.insert(wrap(psi(v, t)));
            const auto brute = brute_force_words(v, n, 1);
            CHECK(from_trees == std::set<Word>(brute.begin(), brute.end()));
        }
    }
}

TEST_CASE("bijections on arbitrary ground sets") {
    const Word w({20, 50, 40, 60, 30, 10});  // relabeled 254631
    REQUIRE(is_trimmed_member(Variant::G, w));
    CHECK(to_bracket(phi(Variant::G, w)) == "[60,[50,[40],[20]],[30,[10]]]");
    CHECK(psi(Variant::G, phi(Variant::G, w)) == w);
}

TEST_CASE("deep trees do not exhaust the stack") {
    for (Variant v : kBoth) {
        for (unsigned n : {64u, 300u}) {
            DecreasingTree chain = make_tree(1);
            for (Digit d = 2; d <= n; ++d) chain = make_tree(d, {chain});
            const Word w = psi(v, chain);
            CHECK(w.size() == n);
            CHECK(phi(v, w) == chain);
            CHECK(parse_bracket(to_bracket(chain)) == chain);
        }
    }
}
