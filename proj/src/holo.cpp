#include "ascart/holo.hpp"

#include <stdexcept>

namespace ascart {

std::int64_t genus(PrimeModulus p, std::int64_t d) {
    if (d <= 0) throw std::invalid_argument("ramification break must be positive");
    if (d % p.value() == 0) throw std::invalid_argument("ramification break divisible by p");
    return (p.value() - 1) * (d - 1) / 2;
}

OrderedBasis::OrderedBasis(PrimeModulus p, std::int64_t d) : p_(p), d_(d) {
    const std::int64_t g = genus(p, d);
    elements_.reserve(static_cast<std::size_t>(g));
    max_j_.reserve(static_cast<std::size_t>(p.value() - 1));
    stripe_offset_.reserve(static_cast<std::size_t>(p.value() - 1));
    for (std::int64_t i = 0; i <= p.value() - 2; ++i) {
        stripe_offset_.push_back(elements_.size());
        const std::int64_t jmax = ceil_div((p.value() - i - 1) * d, p.value()) - 2;
        max_j_.push_back(jmax);
        for (std::int64_t j = 0; j <= jmax; ++j) elements_.push_back({i, j});
    }
    if (static_cast<std::int64_t>(elements_.size()) != g) {
        throw std::logic_error("basis size does not match the genus");
    }
}

}  // namespace ascart
