#pragma once

#include <cstdint>
#include <vector>

namespace sdw {

// Dense GF(2) matrix, rows packed into 64-bit words. Enough for the
// nullspace and rank computations the Ledrappier system needs.
class Gf2Matrix {
public:
    Gf2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64),
          data_(rows * words_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void set(std::size_t r, std::size_t c, bool v = true) {
        auto& w = data_[r * words_ + c / 64];
        if (v) w |= std::uint64_t(1) << (c % 64);
        else   w &= ~(std::uint64_t(1) << (c % 64));
    }
    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * words_ + c / 64] >> (c % 64)) & 1;
    }

    // Rank by in-place elimination on a copy.
    std::size_t rank() const {
        Gf2Matrix m = *this;
        return m.eliminate();
    }

    // Basis of the right nullspace {x : Mx = 0}, each vector packed in words.
    std::vector<std::vector<std::uint64_t>> nullspace_basis() const;

    std::size_t nullity() const { return cols_ - rank(); }

private:
    std::size_t eliminate();  // row-reduce in place, returns rank

    std::size_t rows_, cols_, words_;
    std::vector<std::uint64_t> data_;
};

inline std::size_t Gf2Matrix::eliminate() {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows_ && !get(pivot, c)) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != rank)
            for (std::size_t w = 0; w < words_; ++w)
                std::swap(data_[pivot * words_ + w], data_[rank * words_ + w]);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r != rank && get(r, c))
                for (std::size_t w = 0; w < words_; ++w)
                    data_[r * words_ + w] ^= data_[rank * words_ + w];
        }
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<std::uint64_t>> Gf2Matrix::nullspace_basis() const {
    Gf2Matrix m = *this;
    m.eliminate();
    // locate pivot column of each nonzero row
    std::vector<std::size_t> pivot_of_col(cols_, static_cast<std::size_t>(-1));
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            if (m.get(r, c)) {
                pivot_of_col[c] = r;
                is_pivot[c] = true;
                break;
            }
    }
    std::vector<std::vector<std::uint64_t>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint64_t> v(words_, 0);
        v[free / 64] |= std::uint64_t(1) << (free % 64);
        for (std::size_t c = 0; c < cols_; ++c) {
            if (is_pivot[c] && m.get(pivot_of_col[c], free))
                v[c / 64] |= std::uint64_t(1) << (c % 64);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace sdw
