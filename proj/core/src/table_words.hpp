// table_words.hpp
// Internal helpers shared by the packed bit-table types (TruthTable,
// FlagTable): 2^n bits stored LSB-first in 64-bit words, plus the hex
// serialization used by the CLI (digit 0 at the string's right end holds
// bits 0..3).

#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nlq/errors.hpp"

namespace nlq::detail {

inline std::size_t table_bits(int n) { return std::size_t{1} << n; }

inline std::size_t table_words(int n) {
    return (table_bits(n) + 63) / 64;
}

// Mask of valid bits in the last word (all-ones when 2^n >= 64).
inline std::uint64_t tail_mask(int n) {
    const std::size_t bits = table_bits(n);
    if (bits % 64 == 0) return ~std::uint64_t{0};
    return (std::uint64_t{1} << (bits % 64)) - 1;
}

inline bool get_bit(const std::vector<std::uint64_t>& words, std::size_t idx) {
    return (words[idx >> 6] >> (idx & 63)) & 1u;
}

inline void set_bit(std::vector<std::uint64_t>& words, std::size_t idx, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (idx & 63);
    if (v) {
        words[idx >> 6] |= mask;
    } else {
        words[idx >> 6] &= ~mask;
    }
}

inline std::uint64_t popcount(const std::vector<std::uint64_t>& words) {
    std::uint64_t total = 0;
    for (std::uint64_t w : words) total += static_cast<std::uint64_t>(std::popcount(w));
    return total;
}

inline int hex_digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

// ceil(2^n / 4) digits, most significant first, bit idx 0 at the least
// significant end.
inline std::string words_to_hex(int n, const std::vector<std::uint64_t>& words) {
    const std::size_t digits = (table_bits(n) + 3) / 4;
    std::string out(digits, '0');
    static constexpr char kHex[] = "0123456789abcdef";
    for (std::size_t d = 0; d < digits; ++d) {
        const std::size_t bit = 4 * d;
        const unsigned nibble = (words[bit >> 6] >> (bit & 63)) & 0xFu;
        out[digits - 1 - d] = kHex[nibble];
    }
    return out;
}

inline std::vector<std::uint64_t> words_from_hex(int n, std::string_view hex, const char* what) {
    const std::size_t digits = (table_bits(n) + 3) / 4;
    if (hex.size() != digits) {
        throw DomainError(std::string(what) + ": hex string must have ceil(2^n/4) digits");
    }
    std::vector<std::uint64_t> words(table_words(n), 0);
    for (std::size_t d = 0; d < digits; ++d) {
        const int v = hex_digit_value(hex[digits - 1 - d]);
        if (v < 0) {
            throw DomainError(std::string(what) + ": invalid hex digit");
        }
        const std::size_t bit = 4 * d;
        words[bit >> 6] |= static_cast<std::uint64_t>(v) << (bit & 63);
    }
    if ((words.back() & ~tail_mask(n)) != 0) {
        throw DomainError(std::string(what) + ": hex string sets bits beyond 2^n");
    }
    return words;
}

} // namespace nlq::detail
