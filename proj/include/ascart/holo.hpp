#ifndef ASCART_HOLO_HPP
#define ASCART_HOLO_HPP

#include <cstdint>
#include <vector>

#include "ascart/fp.hpp"

namespace ascart {

/// Names the differential y^i x^j dx.
struct BasisIndex {
    std::int64_t i;  // y-exponent, 0 <= i <= p-2
    std::int64_t j;  // x-exponent, 0 <= j <= ceil((p-i-1)d/p) - 2

    friend bool operator==(BasisIndex a, BasisIndex b) noexcept {
        return a.i == b.i && a.j == b.j;
    }
    /// Lexicographic with y > x: compare i first, then j.
    friend bool operator<(BasisIndex a, BasisIndex b) noexcept {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    }
};

/// g = (p-1)(d-1)/2 for the cover y^p - y = f with deg(f) = d coprime
/// to p. Throws if gcd(d, p) != 1.
std::int64_t genus(PrimeModulus p, std::int64_t d);

/// The ordered basis of H^0(X, Omega^1): all y^i x^j dx within the stripe
/// bounds, ascending in the lexicographic order with y > x. Its length
/// equals the genus.
class OrderedBasis {
  public:
    OrderedBasis(PrimeModulus p, std::int64_t d);

    PrimeModulus p() const noexcept { return p_; }
    std::int64_t d() const noexcept { return d_; }
    std::size_t size() const noexcept { return elements_.size(); }
    const std::vector<BasisIndex>& elements() const noexcept { return elements_; }
    BasisIndex operator[](std::size_t pos) const noexcept { return elements_[pos]; }

    /// Largest admissible x-exponent for the stripe y^i; -1 when the
    /// stripe is empty.
    std::int64_t max_j(std::int64_t i) const noexcept { return max_j_[static_cast<std::size_t>(i)]; }

    bool contains(BasisIndex b) const noexcept {
        return b.i >= 0 && b.i <= p_.value() - 2 && b.j >= 0 && b.j <= max_j(b.i);
    }

    /// Position of y^i x^j dx in the ordering; the element must be in range.
    std::size_t position(BasisIndex b) const noexcept {
        return stripe_offset_[static_cast<std::size_t>(b.i)] + static_cast<std::size_t>(b.j);
    }

  private:
    PrimeModulus p_;
    std::int64_t d_;
    std::vector<BasisIndex> elements_;
    std::vector<std::int64_t> max_j_;
    std::vector<std::size_t> stripe_offset_;
};

}  // namespace ascart

#endif
