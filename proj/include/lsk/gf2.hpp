#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lsk {

// GF(2) matrix as packed bit rows; rank by Gaussian elimination with
// column-major pivot search. Matrices here are a few hundred square at most.
class Gf2Matrix {
public:
    Gf2Matrix(std::size_t rows, std::size_t cols)
        : cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

    std::size_t rows() const { return words_ ? bits_.size() / words_ : 0; }

    void set(std::size_t r, std::size_t c) {
        bits_[r * words_ + c / 64] |= (std::uint64_t{1} << (c % 64));
    }

    std::size_t rank() const {
        if (cols_ == 0 || bits_.empty()) return 0;
        std::vector<std::uint64_t> m = bits_;
        std::size_t nr = rows();
        std::size_t rk = 0;
        for (std::size_t c = 0; c < cols_ && rk < nr; ++c) {
            std::size_t w = c / 64;
            std::uint64_t mask = std::uint64_t{1} << (c % 64);
            std::size_t pivot = nr;
            for (std::size_t r = rk; r < nr; ++r)
                if (m[r * words_ + w] & mask) { pivot = r; break; }
            if (pivot == nr) continue;
            if (pivot != rk)
                for (std::size_t k = 0; k < words_; ++k)
                    std::swap(m[pivot * words_ + k], m[rk * words_ + k]);
            for (std::size_t r = 0; r < nr; ++r) {
                if (r == rk) continue;
                if (m[r * words_ + w] & mask)
                    for (std::size_t k = w; k < words_; ++k)
                        m[r * words_ + k] ^= m[rk * words_ + k];
            }
            ++rk;
        }
        return rk;
    }

private:
    std::size_t cols_, words_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace lsk
