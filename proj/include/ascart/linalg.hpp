#ifndef ASCART_LINALG_HPP
#define ASCART_LINALG_HPP

#include <cstdint>
#include <vector>

#include "ascart/fp.hpp"

namespace ascart {

/// Dense matrix over F_p with entries reduced into [0, p), row-major.
class FpMatrix {
  public:
    FpMatrix(PrimeModulus p, std::size_t rows, std::size_t cols)
        : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static FpMatrix identity(PrimeModulus p, std::size_t n);

    PrimeModulus modulus() const noexcept { return p_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::uint32_t at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::int64_t v) noexcept {
        data_[r * cols_ + c] = static_cast<std::uint32_t>(p_.reduce(v));
    }

    const std::vector<std::uint32_t>& data() const noexcept { return data_; }

    FpMatrix multiply(const FpMatrix& rhs) const;
    FpMatrix transpose() const;

    bool operator==(const FpMatrix& rhs) const noexcept {
        return p_ == rhs.p_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
    }

  private:
    PrimeModulus p_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> data_;
};

/// Rank over F_p by Gaussian elimination, exact. Deterministic
/// first-nonzero pivoting; reduction is deferred within rows when the
/// growth bound fits 64 bits (it always does for the primes used here).
std::size_t rank(const FpMatrix& m);

/// A matrix whose columns are the original columns of m at the pivot
/// positions of its row-echelon form: a basis of the column space.
FpMatrix column_basis(const FpMatrix& m);

/// rank(m^g) for square m of dimension g, by iterated images with early
/// stop once the image dimension stabilizes (it is monotone
/// non-increasing, so stabilization is reached within g steps). Over F_p
/// the semilinear twist of the Cartier operator is the identity, so plain
/// matrix powers are the right notion. Throws on non-square input.
std::size_t p_rank_via_power(const FpMatrix& m, std::size_t g);

}  // namespace ascart

#endif
