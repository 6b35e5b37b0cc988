#include "hilb3/rational_matrix.hpp"

#include <utility>

namespace hilb3 {

std::size_t RationalMatrix::rank() const
{
    std::vector<mpq_class> m = data_;
    auto at = [&](std::size_t r, std::size_t c) -> mpq_class& { return m[r * cols_ + c]; };

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
        std::size_t found = pivot_row;
        while (found < rows_ && sgn(at(found, col)) == 0)
            ++found;
        if (found == rows_)
            continue;
        if (found != pivot_row)
            for (std::size_t c = col; c < cols_; ++c)
                std::swap(at(found, c), at(pivot_row, c));

        mpq_class inv = 1 / at(pivot_row, col);
        for (std::size_t r = pivot_row + 1; r < rows_; ++r) {
            if (sgn(at(r, col)) == 0)
                continue;
            mpq_class factor = at(r, col) * inv;
            for (std::size_t c = col; c < cols_; ++c)
                if (sgn(at(pivot_row, c)) != 0)
                    at(r, c) -= factor * at(pivot_row, c);
        }
        ++pivot_row;
    }
    return pivot_row;
}

} // namespace hilb3
