#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ctxkit::gf2 {

// Dense bit-packed matrix over the two-element field.
struct Matrix {
    std::size_t cols = 0;
    std::vector<std::vector<std::uint64_t>> rows;

    explicit Matrix(std::size_t columns) : cols(columns) {}

    std::size_t words() const { return (cols + 63) / 64; }

    void add_row() { rows.emplace_back(words(), 0u); }

    void set(std::size_t r, std::size_t c) { rows[r][c / 64] |= (std::uint64_t{1} << (c % 64)); }

    bool get(std::size_t r, std::size_t c) const {
        return (rows[r][c / 64] >> (c % 64)) & 1u;
    }
};

// Row-reduction rank; takes a copy on purpose.
std::size_t rank(Matrix m);

}  // namespace ctxkit::gf2
