#include "updown/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "updown/bijection.hpp"
#include "updown/enumeration.hpp"
#include "updown/patterns.hpp"
#include "updown/selftest.hpp"
#include "updown/slope_ideal.hpp"
#include "updown/tree.hpp"

namespace updown::cli {

namespace {

using nlohmann::json;

// Input error whose message already names the offending token.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Variant parse_variant(const std::string& s) { return (s == "g" || s == "G") ? Variant::G : Variant::R; }

Word read_word(const std::string& token) {
    try {
        return Word::parse(token);
    } catch (const std::exception& e) {
        throw UsageError("invalid word '" + token + "': " + e.what());
    }
}

DecreasingTree read_tree(const std::string& token) {
    try {
        return parse_bracket(token);
    } catch (const std::exception& e) {
        throw UsageError("invalid tree '" + token + "': " + e.what());
    }
}

json count_value(const BigCount& c) {
    if (c <= std::numeric_limits<std::uint64_t>::max()) return c.convert_to<std::uint64_t>();
    return c.str();
}

struct Options {
    std::string format = "plain";
    unsigned threads = 0;

    std::string variant = "g";
    bool primitive = false;
    std::string word;

    unsigned n = 0;
    std::string method = "brute";

    std::string word_to_tree;
    std::string tree_to_word;
    bool to_tree = false;
    bool wrapped = false;

    std::string what;

    std::string order = "grlex";
    std::optional<unsigned> degree;
    bool table = false;

    unsigned max_n = 9;
};

int do_check(const Options& o, std::ostream& out) {
    const Variant v = parse_variant(o.variant);
    const Word w = read_word(o.word);
    if (w.size() < 2) throw UsageError("word '" + o.word + "' needs at least two digits");
    const bool verdict = o.primitive ? is_primitive(v, w) : is_word(v, w);
    if (o.format == "json") {
        out << json{{"word", w.to_string()},
                    {"variant", to_string(v)},
                    {"primitive", o.primitive},
                    {"result", verdict}}
                   .dump()
            << '\n';
    } else {
        out << (verdict ? "true" : "false") << '\n';
    }
    return verdict ? 0 : 1;
}

int do_enumerate(const Options& o, std::ostream& out) {
    const Variant v = parse_variant(o.variant);
    const Method method = o.method == "tree" ? Method::Tree : Method::Brute;
    const auto words = method == Method::Tree ? tree_words(v, o.n) : brute_force_words(v, o.n, o.threads);
    if (o.format == "json") {
        json list = json::array();
        for (const auto& w : words) list.push_back(w.to_string());
        out << json{{"variant", to_string(v)}, {"n", o.n}, {"method", to_string(method)}, {"words", list}}
                   .dump()
            << '\n';
    } else {
        for (const auto& w : words) out << w.to_string() << '\n';
    }
    return 0;
}

int do_map(const Options& o, std::ostream& out) {
    const Variant v = parse_variant(o.variant);
    std::string tree_text;
    std::string word_text;
    if (o.to_tree) {
        Word w = read_word(o.word_to_tree);
        if (o.wrapped) {
            if (w.size() < 2 || !is_primitive(v, w)) {
                throw UsageError("'" + o.word_to_tree + "' is not a primitive " +
                                 std::string(to_string(v)) + "-word");
            }
            w = strip(w);
        }
        if (!is_trimmed_member(v, w)) {
            throw UsageError("'" + o.word_to_tree + "' is not a trimmed primitive " +
                             std::string(to_string(v)) + "-word");
        }
        word_text = o.word_to_tree;
        tree_text = to_bracket(phi(v, w));
        if (o.format != "json") out << tree_text << '\n';
    } else {
        const DecreasingTree t = read_tree(o.tree_to_word);
        Word w = psi(v, t);
        if (o.wrapped) w = wrap(w);
        tree_text = to_bracket(t);
        word_text = w.to_string();
        if (o.format != "json") out << word_text << '\n';
    }
    if (o.format == "json") {
        out << json{{"variant", to_string(v)}, {"word", word_text}, {"tree", tree_text}}.dump() << '\n';
    }
    return 0;
}

int do_count(const Options& o, std::ostream& out) {
    BigCount count;
    if (o.what == "words") {
        const Method method = o.method == "tree" ? Method::Tree : Method::Brute;
        count = count_words(parse_variant(o.variant), o.n, method, o.threads).count;
    } else if (o.what == "trees") {
        std::vector<Digit> labels(o.n);
        for (unsigned k = 0; k < o.n; ++k) labels[k] = k + 1;
        count = enumerate_trees(labels).size();
    } else {
        count = euler_number(o.n);
    }
    if (o.format == "json") {
        out << json{{"what", o.what}, {"n", o.n}, {"count", count_value(count)}}.dump() << '\n';
    } else {
        out << count.str() << '\n';
    }
    return 0;
}

int do_ideal(const Options& o, std::ostream& out) {
    const TermOrder order = o.order == "revlex" ? TermOrder::Revlex : TermOrder::Grlex;
    if (o.table) {
        auto table = degree_count_table(o.n, order);
        if (o.degree) std::erase_if(table.entries, [&](const auto& e) { return e.first != *o.degree; });
        if (o.format == "json") {
            json entries = json::object();
            for (const auto& [d, c] : table.entries) entries[std::to_string(d)] = count_value(c);
            out << json{{"n", o.n}, {"order", to_string(order)}, {"table", entries}}.dump() << '\n';
        } else {
            for (const auto& [d, c] : table.entries) out << d << ' ' << c.str() << '\n';
        }
        return 0;
    }
    const auto gens = generators(o.n, order, o.degree);
    if (o.format == "json") {
        json list = json::array();
        for (const auto& m : gens.monomials) list.push_back(m.to_string());
        out << json{{"n", o.n}, {"order", to_string(order)}, {"monomials", list}}.dump() << '\n';
    } else {
        for (const auto& m : gens.monomials) out << m.to_string() << '\n';
    }
    return 0;
}

int do_selftest(const Options& o, std::ostream& out) {
    const auto results = run_selftest(o.max_n, o.threads);
    const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    if (o.format == "json") {
        json list = json::array();
        for (const auto& r : results) {
            list.push_back({{"suite", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
        }
        out << json{{"max_n", o.max_n}, {"passed", ok}, {"suites", list}}.dump() << '\n';
    } else {
        for (const auto& r : results) {
            out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << std::fixed << std::setprecision(3)
                << r.seconds << "s)";
            if (!r.passed) out << ": " << r.detail;
            out << '\n';
        }
    }
    return ok ? 0 : 1;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Primitive G/R-words, decreasing 012-trees and slope-ideal generators", "updown"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;

    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"plain", "json"}));
    app.add_option("--threads", o.threads, "Cap on worker threads (0 = hardware)");

    const auto variant_check = CLI::IsMember({"g", "r", "G", "R"});

    auto* check = app.add_subcommand("check", "Test a word for the G/R condition or primitivity");
    check->add_option("--variant", o.variant)->required()->check(variant_check);
    check->add_flag("--primitive", o.primitive, "Test primitivity rather than the word condition");
    check->add_option("word", o.word, "Word, e.g. 4213 or 10,8,9")->required();

    auto* enumerate = app.add_subcommand("enumerate", "List primitive words on [n]");
    enumerate->add_option("--variant", o.variant)->required()->check(variant_check);
    enumerate->add_option("--n", o.n)->required()->check(CLI::Range(2u, 14u));
    enumerate->add_option("--method", o.method)->check(CLI::IsMember({"brute", "tree"}));

    auto* map = app.add_subcommand("map", "Apply phi (word to tree) or psi (tree to word)");
    map->add_option("--variant", o.variant)->required()->check(variant_check);
    auto* w2t = map->add_option("--word-to-tree", o.word_to_tree, "Trimmed word");
    auto* t2w = map->add_option("--tree-to-word", o.tree_to_word, "Tree in bracket notation");
    w2t->excludes(t2w);
    map->add_flag("--wrapped", o.wrapped, "Words are full primitive words, not trimmed ones");

    auto* count = app.add_subcommand("count", "Print a single count");
    count->add_option("--what", o.what)->required()->check(CLI::IsMember({"words", "trees", "euler"}));
    count->add_option("--n", o.n)->required();
    count->add_option("--variant", o.variant)->check(variant_check);
    count->add_option("--method", o.method)->check(CLI::IsMember({"brute", "tree"}));

    auto* ideal = app.add_subcommand("ideal", "List initial-ideal generators or their degree table");
    ideal->add_option("--n", o.n)->required()->check(CLI::Range(1u, 63u));
    ideal->add_option("--order", o.order)->required()->check(CLI::IsMember({"grlex", "revlex"}));
    ideal->add_option("--degree", o.degree);
    ideal->add_flag("--table", o.table);

    auto* selftest = app.add_subcommand("selftest", "Run the built-in consistency suites");
    selftest->add_option("--max-n", o.max_n)->check(CLI::Range(2u, 11u));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*check) return do_check(o, out);
        if (*enumerate) return do_enumerate(o, out);
        if (*map) {
            if (w2t->count() + t2w->count() != 1) {
                throw UsageError("map needs exactly one of --word-to-tree or --tree-to-word");
            }
            o.to_tree = w2t->count() == 1;
            return do_map(o, out);
        }
        if (*count) {
            if (o.what == "words" && o.n < 2) throw UsageError("--n must be at least 2 for words");
            if (o.what == "trees" && o.n > 12) throw UsageError("--n above 12 is too many trees");
            return do_count(o, out);
        }
        if (*ideal) return do_ideal(o, out);
        if (*selftest) return do_selftest(o, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace updown::cli
