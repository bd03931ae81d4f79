#include "ctxkit/gf2.hpp"

namespace ctxkit::gf2 {

std::size_t rank(Matrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows.size() && !m.get(pivot, c)) ++pivot;
        if (pivot == m.rows.size()) continue;
        std::swap(m.rows[r], m.rows[pivot]);
        for (std::size_t i = 0; i < m.rows.size(); ++i) {
            if (i != r && m.get(i, c)) {
                for (std::size_t w = 0; w < m.words(); ++w) m.rows[i][w] ^= m.rows[r][w];
            }
        }
        ++r;
    }
    return r;
}

}  // namespace ctxkit::gf2
