#include "ascart/linalg.hpp"

#include <stdexcept>

namespace ascart {

namespace {

// Forward elimination on a uint64 working copy. Pivot rows are reduced
// and rescaled to a unit pivot when selected; the other rows accumulate
// unreduced values when the growth bound fits in 64 bits, and reduce on
// every update otherwise. Returns the pivot column indices.
std::vector<std::size_t> eliminate(std::vector<std::uint64_t>& work, std::size_t rows,
                                   std::size_t cols, PrimeModulus pm) {
    const std::uint64_t p = static_cast<std::uint64_t>(pm.value());
    const std::uint64_t steps = std::min(rows, cols) + 1;
    const bool lazy = p * p < (std::uint64_t{1} << 62) / steps;

    std::vector<std::size_t> pivot_cols;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows && work[sel * cols + col] % p == 0) ++sel;
        if (sel == rows) continue;
        if (sel != pivot_row) {
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(work[sel * cols + j], work[pivot_row * cols + j]);
        }

        std::uint64_t* piv = &work[pivot_row * cols];
        const std::uint64_t lead_inv =
            static_cast<std::uint64_t>(pm.inv(static_cast<Residue>(piv[col] % p)));
        for (std::size_t j = col; j < cols; ++j) piv[j] = (piv[j] % p) * lead_inv % p;

        for (std::size_t r = pivot_row + 1; r < rows; ++r) {
            std::uint64_t* row = &work[r * cols];
            const std::uint64_t c = row[col] % p;
            if (c == 0) continue;
            const std::uint64_t mult = p - c;
            if (lazy) {
                for (std::size_t j = col; j < cols; ++j) row[j] += mult * piv[j];
            } else {
                for (std::size_t j = col; j < cols; ++j) row[j] = (row[j] + mult * piv[j]) % p;
            }
        }

        pivot_cols.push_back(col);
        ++pivot_row;
    }
    return pivot_cols;
}

std::vector<std::uint64_t> widen(const FpMatrix& m) {
    return {m.data().begin(), m.data().end()};
}

}  // namespace

FpMatrix FpMatrix::identity(PrimeModulus p, std::size_t n) {
    FpMatrix out(p, n, n);
    for (std::size_t i = 0; i < n; ++i) out.set(i, i, 1);
    return out;
}

FpMatrix FpMatrix::multiply(const FpMatrix& rhs) const {
    if (p_ != rhs.p_) throw ModulusMismatch();
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix dimension mismatch");
    const std::uint64_t p = static_cast<std::uint64_t>(p_.value());
    const std::uint64_t chunk = std::max<std::uint64_t>(1, ~std::uint64_t{0} / (p * p) - 1);
    FpMatrix out(p_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < cols_; ++k) {
                acc += static_cast<std::uint64_t>(at(i, k)) * rhs.at(k, j);
                if ((k + 1) % chunk == 0) acc %= p;
            }
            out.data_[i * out.cols_ + j] = static_cast<std::uint32_t>(acc % p);
        }
    }
    return out;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix out(p_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.data_[j * rows_ + i] = at(i, j);
    return out;
}

std::size_t rank(const FpMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    std::vector<std::uint64_t> work = widen(m);
    return eliminate(work, m.rows(), m.cols(), m.modulus()).size();
}

FpMatrix column_basis(const FpMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.rows() != 0 && m.cols() != 0) {
        std::vector<std::uint64_t> work = widen(m);
        pivots = eliminate(work, m.rows(), m.cols(), m.modulus());
    }
    FpMatrix out(m.modulus(), m.rows(), pivots.size());
    for (std::size_t j = 0; j < pivots.size(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) out.set(i, j, m.at(i, pivots[j]));
    return out;
}

std::size_t p_rank_via_power(const FpMatrix& m, std::size_t g) {
    if (m.rows() != m.cols()) throw std::invalid_argument("p-rank needs a square matrix");
    if (m.rows() != g) throw std::invalid_argument("power must equal the matrix dimension");
    if (g == 0) return 0;

    FpMatrix image = column_basis(m);  // spans im(m)
    std::size_t dim = image.cols();
    std::size_t prev = g;
    for (std::size_t k = 1; k <= g && dim != prev && dim > 0; ++k) {
        prev = dim;
        image = column_basis(m.multiply(image));
        dim = image.cols();
    }
    return dim;
}

}  // namespace ascart
