#include "updown/selftest.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "updown/bijection.hpp"
#include "updown/enumeration.hpp"
#include "updown/patterns.hpp"
#include "updown/slope_ideal.hpp"
#include "updown/tree.hpp"

namespace updown {

namespace {

// Primitive words on [n] for n <= 6, as published.
const std::map<unsigned, std::vector<std::string>> kGolden[2] = {
    {{2, {"21"}},
     {3, {"312"}},
     {4, {"4213"}},
     {5, {"52314", "53214"}},
     {6, {"623415", "624315", "642315", "634215", "643215"}}},
    {{2, {"21"}},
     {3, {"312"}},
     {4, {"4123"}},
     {5, {"51324", "52134"}},
     {6, {"614235", "624135", "623145", "621435", "631245"}}},
};

constexpr Variant kVariants[] = {Variant::G, Variant::R};

std::vector<Digit> iota_digits(unsigned n) {
    std::vector<Digit> d(n);
    std::iota(d.begin(), d.end(), Digit{1});
    return d;
}

std::string golden(unsigned max_n, unsigned threads) {
    for (Variant v : kVariants) {
        for (const auto& [n, listed] : kGolden[v == Variant::G ? 0 : 1]) {
            if (n > max_n) continue;
            std::set<Word> expected;
            for (const auto& s : listed) expected.insert(Word::parse(s));
            const auto found = brute_force_words(v, n, threads);
            if (std::set<Word>(found.begin(), found.end()) != expected) {
                return std::string(to_string(v)) + "_" + std::to_string(n) + " differs";
            }
        }
    }
    return {};
}

std::string equinumeracy(unsigned max_n, unsigned threads) {
    for (unsigned n = 2; n <= max_n; ++n) {
        const BigCount expected = euler_number(n - 2);
        for (Variant v : kVariants) {
            const auto found = brute_force_words(v, n, threads).size();
            if (BigCount(found) != expected) {
                return std::string(to_string(v)) + "_" + std::to_string(n) + " has " +
                       std::to_string(found) + " words, expected " + expected.str();
            }
        }
    }
    return {};
}

std::string round_trips(unsigned max_n) {
    for (unsigned k = 0; k <= max_n; ++k) {
        const auto labels = iota_digits(k);
        for (Variant v : kVariants) {
            for (const auto& t : enumerate_trees(labels)) {
                if (phi(v, psi(v, t)) != t) return "phi(psi(" + to_bracket(t) + ")) differs";
            }
            auto digits = labels;
            do {
                const Word w(digits);
                if (is_trimmed_member(v, w) && psi(v, phi(v, w)) != w) {
                    return "psi(phi(" + w.to_string() + ")) differs";
                }
            } while (std::next_permutation(digits.begin(), digits.end()));
        }
    }
    return {};
}

std::string euler_oracle(unsigned max_n) {
    for (unsigned n = 1; n <= std::min(max_n, 11u); ++n) {
        if (euler_number(n) != BigCount(alternating_count_oracle(n))) {
            return "mismatch at n=" + std::to_string(n);
        }
    }
    return {};
}

std::string ideal_counts(unsigned max_n) {
    if (max_n >= 6) {
        const auto table = degree_count_table(6, TermOrder::Grlex);
        const std::map<unsigned, BigCount> expected{{3, 15}, {4, 12}, {5, 5}};
        if (table.entries != expected) return "degree table for n=6 differs";
        if (generators(6, TermOrder::Grlex).monomials.size() != 32) return "n=6 generator count";
    }
    for (unsigned n = 1; n <= std::min(max_n, 8u); ++n) {
        const auto grlex = degree_count_table(n, TermOrder::Grlex);
        const auto revlex = degree_count_table(n, TermOrder::Revlex);
        if (grlex.entries != revlex.entries) return "tables differ at n=" + std::to_string(n);
        for (TermOrder order : {TermOrder::Grlex, TermOrder::Revlex}) {
            const auto gens = generators(n, order);
            if (gens.duplicates != 0) return "duplicate generators at n=" + std::to_string(n);
            std::map<unsigned, BigCount> by_degree;
            for (const auto& m : gens.monomials) by_degree[m.degree()] += 1;
            if (by_degree != grlex.entries) {
                return std::string(to_string(order)) + " slices differ at n=" + std::to_string(n);
            }
        }
    }
    return {};
}

std::string lemmas(unsigned max_n, unsigned threads) {
    for (Variant v : kVariants) {
        for (unsigned n = 2; n <= max_n; ++n) {
            for (const auto& w : brute_force_words(v, n, threads)) {
                if (n + 1 <= max_n && !is_primitive(v, extend_type_one(v, w))) {
                    return "extend_type_one(" + w.to_string() + ") not primitive";
                }
                if (n < 3) continue;
                const auto [left, right] = split(v, w);
                if (!is_primitive(v, left) || !is_primitive(v, right)) {
                    return "split(" + w.to_string() + ") not primitive";
                }
                const std::size_t k = position_of(w, n - 2);
                if (k >= 3 && k + 2 <= n) {
                    const Word merged =
                        v == Variant::G ? merge_type_two(v, left, right) : merge_type_two(v, right, left);
                    if (merged != w) return "merge(split(" + w.to_string() + ")) differs";
                    if (!is_primitive(v, merged)) return "merge output not primitive";
                }
            }
        }
    }
    return {};
}

// Every (x, y) satisfying the merge preconditions with |P ∪ Q| <= max_n.
std::string merge_closure(unsigned max_n, unsigned threads) {
    for (Variant v : kVariants) {
        std::map<unsigned, std::vector<Word>> patterns;
        for (unsigned r = 3; r + 2 <= max_n; ++r) patterns[r] = brute_force_words(v, r, threads);
        for (unsigned n = 4; n <= max_n; ++n) {
            for (unsigned p = 3; p + 2 <= n; ++p) {
                const unsigned q = n + 1 - p;
                // Low digits 1..n-3 are split p-2 / q-2; n-2 is shared; the
                // tops n-1 and n go one to each side.
                const unsigned low = n - 3;
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << low); ++mask) {
                    if (static_cast<unsigned>(std::popcount(mask)) != p - 2) continue;
                    for (Digit x_top : {Digit{n}, Digit{n - 1}}) {
                        std::vector<Digit> left, right;
                        for (unsigned b = 0; b < low; ++b) ((mask >> b) & 1 ? left : right).push_back(b + 1);
                        left.push_back(n - 2);
                        right.push_back(n - 2);
                        left.push_back(x_top);
                        right.push_back(x_top == n ? n - 1 : n);
                        for (const auto& x0 : patterns[p]) {
                            for (const auto& y0 : patterns[q]) {
                                std::vector<Digit> xd, yd;
                                for (Digit d : x0) xd.push_back(left[d - 1]);
                                for (Digit d : y0) yd.push_back(right[d - 1]);
                                if (xd[p - 2] <= yd[q - 2]) continue;
                                const Word merged = merge_type_two(v, Word(xd), Word(yd));
                                if (!is_primitive(v, merged)) {
                                    return "merge_type_two output " + merged.to_string() + " not primitive";
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return {};
}

std::string penultimate(unsigned max_n, unsigned threads) {
    std::string failures;
    for (unsigned n = 2; n <= max_n; ++n) {
        for (const auto& w : brute_force_words(Variant::G, n, threads)) {
            if (w.at(n - 1) != 1) {
                if (!failures.empty()) failures += ", ";
                failures += w.to_string() + " (n=" + std::to_string(n) + ")";
            }
        }
    }
    return failures.empty() ? failures : "penultimate digit is not 1 for " + failures;
}

std::string pattern_closure(unsigned max_n, unsigned threads) {
    std::mt19937_64 rng(20090528);
    for (Variant v : kVariants) {
        for (unsigned n = 2; n <= std::min(max_n, 6u); ++n) {
            for (const auto& w : brute_force_words(v, n, threads)) {
                for (int trial = 0; trial < 100; ++trial) {
                    std::set<Digit> pool;
                    std::uniform_int_distribution<Digit> pick(1, 1000);
                    while (pool.size() < n) pool.insert(pick(rng));
                    const std::vector<Digit> sorted(pool.begin(), pool.end());
                    std::vector<Digit> relabeled;
                    for (Digit d : w) relabeled.push_back(sorted[d - 1]);
                    const Word u(relabeled);
                    for (Variant u_v : kVariants) {
                        if (is_word(u_v, u) != is_word(u_v, w) ||
                            is_primitive(u_v, u) != is_primitive(u_v, w)) {
                            return "verdict changed for " + u.to_string();
                        }
                    }
                }
            }
        }
    }
    return {};
}

}  // namespace

std::vector<SuiteResult> run_selftest(unsigned max_n, unsigned threads) {
    const std::vector<std::pair<std::string, std::function<std::string()>>> suites = {
        {"golden", [&] { return golden(max_n, threads); }},
        {"equinumeracy", [&] { return equinumeracy(max_n, threads); }},
        {"round-trips", [&] { return round_trips(max_n); }},
        {"euler-oracle", [&] { return euler_oracle(max_n); }},
        {"ideal-counts", [&] { return ideal_counts(max_n); }},
        {"lemmas", [&] {
             auto detail = lemmas(max_n, threads);
             return detail.empty() ? merge_closure(max_n, threads) : detail;
         }},
        {"penultimate", [&] { return penultimate(max_n, threads); }},
        {"pattern-closure", [&] { return pattern_closure(max_n, threads); }},
    };
    std::vector<SuiteResult> results;
    for (const auto& [name, body] : suites) {
        const auto start = std::chrono::steady_clock::now();
        SuiteResult r{name, false, {}, 0.0};
        try {
            r.detail = body();
            r.passed = r.detail.empty();
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace updown
