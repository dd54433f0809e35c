#include "updown/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "updown/bijection.hpp"
#include "updown/tree.hpp"

namespace updown {

std::string_view to_string(Method m) noexcept { return m == Method::Brute ? "brute" : "tree"; }

namespace {

void require_word_length(unsigned n, std::string_view op) {
    if (n < 2) throw PreconditionError(std::string(op) + ": n must be at least 2");
}

// Primitive words on [n] whose second digit is `second` (n >= 3), in
// lexicographic order.
std::vector<Word> scan_block(Variant v, unsigned n, Digit second) {
    std::vector<Digit> middle;
    for (Digit d = 1; d <= n - 2; ++d) {
        if (d != second) middle.push_back(d);
    }
    std::vector<Digit> w(n);
    w[0] = n;
    w[1] = second;
    w[n - 1] = n - 1;
    std::vector<Word> found;
    do {
        std::copy(middle.begin(), middle.end(), w.begin() + 2);
        if (detail::is_primitive(v, w)) found.push_back(make_word_unchecked(w));
    } while (std::next_permutation(middle.begin(), middle.end()));
    return found;
}

}  // namespace

std::vector<Word> brute_force_words(Variant v, unsigned n, unsigned threads) {
    require_word_length(n, "brute_force_words");
    if (n > 14) throw PreconditionError("brute_force_words: n above 14 is impractical");
    if (n == 2) return {Word{2, 1}};

    // Partition by the second digit; blocks are already in lexicographic
    // order relative to each other.
    const unsigned blocks = n - 2;
    std::vector<std::vector<Word>> results(blocks);
    unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    workers = std::min(workers, blocks);

    if (workers <= 1) {
        for (unsigned b = 0; b < blocks; ++b) results[b] = scan_block(v, n, b + 1);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                for (unsigned b = t; b < blocks; b += workers) results[b] = scan_block(v, n, b + 1);
            });
        }
    }

    std::vector<Word> out;
    for (auto& block : results) {
        out.insert(out.end(), std::make_move_iterator(block.begin()),
                   std::make_move_iterator(block.end()));
    }
    return out;
}

std::vector<Word> tree_words(Variant v, unsigned n) {
    require_word_length(n, "tree_words");
    std::vector<Digit> labels(n - 2);
    std::iota(labels.begin(), labels.end(), Digit{1});
    std::vector<Word> out;
    for (const auto& t : enumerate_trees(labels)) out.push_back(wrap(psi(v, t)));
    std::sort(out.begin(), out.end());
    return out;
}

CountRecord count_words(Variant v, unsigned n, Method method, unsigned threads) {
    const auto words = method == Method::Brute ? brute_force_words(v, n, threads) : tree_words(v, n);
    return CountRecord{n, v, words.size(), method};
}

BigCount euler_number(unsigned n) {
    // Entringer triangle: T(i,0) = [i == 0], T(i,k) = T(i,k-1) + T(i-1,i-k).
    std::vector<BigCount> row{1};
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<BigCount> next(i + 1);
        next[0] = 0;
        for (unsigned k = 1; k <= i; ++k) next[k] = next[k - 1] + row[i - k];
        row = std::move(next);
    }
    return row[n];
}

std::uint64_t alternating_count_oracle(unsigned n) {
    if (n > 11) throw PreconditionError("alternating_count_oracle: n above 11 is impractical");
    std::vector<unsigned> w(n);
    std::iota(w.begin(), w.end(), 1u);
    std::uint64_t count = 0;
    do {
        bool updown = true;
        for (unsigned i = 0; i + 1 < n && updown; ++i) {
            updown = (i % 2 == 0) ? w[i] < w[i + 1] : w[i] > w[i + 1];
        }
        if (updown) ++count;
    } while (std::next_permutation(w.begin(), w.end()));
    return count;
}

}  // namespace updown
