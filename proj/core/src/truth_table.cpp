#include "nlq/truth_table.hpp"

#include <random>

#include "nlq/errors.hpp"
#include "table_words.hpp"

namespace nlq {

namespace {

void check_table_size(int n) {
    if (n < 1 || n > 30) {
        throw DomainError("TruthTable: n must be in [1, 30]");
    }
}

} // namespace

TruthTable::TruthTable(int n) : n_(n) {
    check_table_size(n);
    words_.assign(detail::table_words(n), 0);
}

TruthTable TruthTable::constant(int n, bool value) {
    TruthTable t(n);
    if (value) {
        for (auto& w : t.words_) w = ~std::uint64_t{0};
        t.words_.back() &= detail::tail_mask(n);
    }
    return t;
}

TruthTable TruthTable::from_hex(int n, std::string_view hex) {
    TruthTable t(n);
    t.words_ = detail::words_from_hex(n, hex, "TruthTable::from_hex");
    return t;
}

TruthTable TruthTable::random(int n, std::uint64_t s, std::uint64_t seed) {
    TruthTable t(n);
    const std::uint64_t size = t.size();
    if (s > size) {
        throw DomainError("TruthTable::random: s exceeds 2^n");
    }
    // Floyd's algorithm: s distinct indices, uniform over all s-subsets.
    std::mt19937_64 rng(seed);
    for (std::uint64_t j = size - s; j < size; ++j) {
        std::uniform_int_distribution<std::uint64_t> pick(0, j);
        const std::uint64_t r = pick(rng);
        if (t.value(r)) {
            t.set(j, true);
        } else {
            t.set(r, true);
        }
    }
    return t;
}

bool TruthTable::value(std::size_t idx) const {
    return detail::get_bit(words_, idx);
}

void TruthTable::set(std::size_t idx, bool v) {
    detail::set_bit(words_, idx, v);
}

std::uint64_t TruthTable::count_ones() const {
    return detail::popcount(words_);
}

std::string TruthTable::to_hex() const {
    return detail::words_to_hex(n_, words_);
}

} // namespace nlq
