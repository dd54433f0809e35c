#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "updown/slope_ideal.hpp"

using namespace updown;

namespace {

Word W(const char* s) { return Word::parse(s); }

// Every primitive word on every subset of size >= 4, found by testing all
// permutations of the subset directly.
std::set<Monomial> brute_force_generators(unsigned n, Variant v) {
    std::set<Monomial> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Digit> subset;
        for (unsigned b = 0; b < n; ++b) {
            if ((mask >> b) & 1) subset.push_back(b + 1);
        }
        if (subset.size() < 4) continue;
        do {
            const Word w(subset);
            if (is_primitive(v, w)) out.insert(word_to_monomial(w));
        } while (std::next_permutation(subset.begin(), subset.end()));
    }
    return out;
}

}  // namespace

TEST_CASE("word_to_monomial") {
    CHECK(word_to_monomial(W("4213")).to_string() == "m[1,2]*m[1,3]*m[2,4]");
    CHECK(word_to_monomial(W("4213")).degree() == 3);
    CHECK(word_to_monomial(W("21")).to_string() == "m[1,2]");
    CHECK(word_to_monomial(W("52314")) ==
          Monomial({{2, 5}, {2, 3}, {1, 3}, {1, 4}}));
    CHECK(word_to_monomial(W("52314")).to_string() == "m[1,3]*m[1,4]*m[2,3]*m[2,5]");
    CHECK(word_to_monomial(Word({12, 3, 10})).to_string() == "m[3,10]*m[3,12]");
    CHECK_THROWS_AS(word_to_monomial(W("5")), PreconditionError);
}

TEST_CASE("Monomial validation") {
    CHECK_THROWS_AS(Monomial({{1, 2}, {1, 2}}), PreconditionError);
    CHECK_THROWS_AS(Monomial({{3, 2}}), PreconditionError);
    CHECK_THROWS_AS(Monomial({{0, 2}}), PreconditionError);
    CHECK(Monomial({{2, 3}, {1, 4}}).factors().front() == SlopeVariable{1, 4});
}

TEST_CASE("generators examples") {
    CHECK(generators(3, TermOrder::Grlex).monomials.empty());
    CHECK(generators(1, TermOrder::Revlex).monomials.empty());

    const auto four = generators(4, TermOrder::Grlex);
    REQUIRE(four.monomials.size() == 1);
    CHECK(four.monomials[0] == word_to_monomial(W("4213")));
    CHECK(generators(4, TermOrder::Revlex).monomials[0] == word_to_monomial(W("4123")));

    const auto six = generators(6, TermOrder::Grlex);
    CHECK(six.monomials.size() == 32);
    std::map<std::size_t, int> by_degree;
    for (const auto& m : six.monomials) ++by_degree[m.degree()];
    CHECK(by_degree == std::map<std::size_t, int>{{3, 15}, {4, 12}, {5, 5}});

    const auto quartics = generators(6, TermOrder::Grlex, 4u);
    CHECK(quartics.monomials.size() == 12);
    CHECK(generators(6, TermOrder::Grlex, 9u).monomials.empty());
    CHECK_THROWS_AS(generators(64, TermOrder::Grlex), PreconditionError);
}

TEST_CASE("generator listing order: degree, then colex subsets") {
    const auto gens = generators(5, TermOrder::Grlex).monomials;
    REQUIRE(gens.size() == 7);
    // Cubics on {1,2,3,4}, {1,2,3,5}, {1,2,4,5}, {1,3,4,5}, {2,3,4,5}.
    CHECK(gens[0] == word_to_monomial(W("4213")));
    CHECK(gens[1] == word_to_monomial(W("5213")));
    CHECK(gens[2] == word_to_monomial(W("5214")));
    CHECK(gens[3] == word_to_monomial(W("5314")));
    CHECK(gens[4] == word_to_monomial(W("5324")));
    CHECK(gens[5] == word_to_monomial(W("52314")));
    CHECK(gens[6] == word_to_monomial(W("53214")));
}

TEST_CASE("generators match the subset brute force up to n = 7") {
    for (unsigned n = 1; n <= 7; ++n) {
        for (TermOrder order : {TermOrder::Grlex, TermOrder::Revlex}) {
            const auto gens = generators(n, order);
            CHECK(gens.duplicates == 0);
            const std::set<Monomial> listed(gens.monomials.begin(), gens.monomials.end());
            CHECK(listed.size() == gens.monomials.size());
            CHECK(listed == brute_force_generators(n, variant_for(order)));
        }
    }
}

TEST_CASE("degree_count_table") {
    const auto six = degree_count_table(6, TermOrder::Grlex);
    CHECK(six.n == 6);
    CHECK(six.entries == std::map<unsigned, BigCount>{{3, 15}, {4, 12}, {5, 5}});
    CHECK(degree_count_table(5, TermOrder::Grlex).entries ==
          std::map<unsigned, BigCount>{{3, 5}, {4, 2}});
    CHECK(degree_count_table(3, TermOrder::Grlex).entries.empty());
    CHECK(degree_count_table(1, TermOrder::Revlex).entries.empty());
}

TEST_CASE("tables agree with enumeration and across orders for n <= 8") {
    for (unsigned n = 1; n <= 8; ++n) {
        const auto grlex = degree_count_table(n, TermOrder::Grlex);
        CHECK(grlex.entries == degree_count_table(n, TermOrder::Revlex).entries);
        for (TermOrder order : {TermOrder::Grlex, TermOrder::Revlex}) {
            const auto gens = generators(n, order);
            CHECK(gens.duplicates == 0);
            std::map<unsigned, BigCount> slices;
            for (const auto& m : gens.monomials) {
                slices[static_cast<unsigned>(m.degree())] += 1;
                for (const auto& f : m.factors()) {
                    REQUIRE(f.i >= 1);
                    REQUIRE(f.i < f.j);
                    REQUIRE(f.j <= n);
                }
            }
            CHECK(slices == grlex.entries);
        }
    }
}
