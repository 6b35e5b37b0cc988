#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace hilb3 {

/// Dense row-major matrix over Q.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    mpq_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpq_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Rank by Gaussian elimination on a copy.
    std::size_t rank() const;

    std::size_t nullity() const { return cols_ - rank(); }

private:
    std::size_t rows_, cols_;
    std::vector<mpq_class> data_;
};

} // namespace hilb3
