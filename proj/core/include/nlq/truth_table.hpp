// truth_table.hpp
// Boolean search predicate f on {0,1}^n stored as a packed 2^n-bit table.
// The analysis of both algorithms depends only on s (the number of marked
// inputs) and on the marked indices being distinct, which a table gives for
// free; there is no symbolic oracle representation.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nlq {

class TruthTable {
public:
    // All-zero table on n input qubits.
    explicit TruthTable(int n);

    static TruthTable constant(int n, bool value);

    // Parses the external hex format: ceil(2^n/4) digits, bit idx = f(idx),
    // idx 0 at the least significant end.
    static TruthTable from_hex(int n, std::string_view hex);

    // Uniformly random table with exactly s marked indices.
    static TruthTable random(int n, std::uint64_t s, std::uint64_t seed);

    int n() const { return n_; }
    std::size_t size() const { return std::size_t{1} << n_; }

    bool value(std::size_t idx) const;
    void set(std::size_t idx, bool v);

    // s = number of marked inputs.
    std::uint64_t count_ones() const;

    std::string to_hex() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

    bool operator==(const TruthTable&) const = default;

private:
    int n_;
    std::vector<std::uint64_t> words_;
};

} // namespace nlq
