#include "ascart/bounds.hpp"

#include <stdexcept>

namespace ascart {

namespace {

using Wide = __int128;

// floor(a/b) for b > 0 with a possibly negative.
std::int64_t floor_div_wide(Wide a, Wide b) {
    Wide q = a / b;
    if (a % b != 0 && a < 0) --q;
    return static_cast<std::int64_t>(q);
}

void require_positive(std::int64_t d) {
    if (d <= 0) throw std::invalid_argument("ramification break must be positive");
}

}  // namespace

std::int64_t lower_bound_single(PrimeModulus pm, std::int64_t d) {
    require_positive(d);
    const Wide p = pm.value();
    std::int64_t total = 0;
    for (Wide i = (p + 1) / 2; i <= p - 1; ++i) {
        const std::int64_t hi = floor_div_wide(i * d, p);
        const std::int64_t lo = floor_div_wide(Wide(d) * (2 * i * p - p * p + 1), 2 * p * p);
        total += hi - lo;
    }
    return total;
}

std::int64_t lower_bound_multi(PrimeModulus pm, const std::vector<std::int64_t>& breaks) {
    for (std::int64_t d : breaks) require_positive(d);
    const Wide p = pm.value();
    std::int64_t best = 0;
    for (Wide j = 1; j <= p - 1; ++j) {
        std::int64_t sum = 0;
        for (std::int64_t d : breaks) {
            for (Wide i = j; i <= p - 1; ++i) {
                const std::int64_t hi = floor_div_wide(i * d, p);
                const std::int64_t lo = floor_div_wide(Wide(d) * (i * p - (p - 1) * j), p * p);
                sum += hi - lo;
            }
        }
        if (sum > best) best = sum;
    }
    return best;
}

std::int64_t upper_bound(PrimeModulus pm, std::int64_t d, std::int64_t a_base) {
    require_positive(d);
    if (a_base < 0) throw std::invalid_argument("base a-number must be nonnegative");
    const Wide p = pm.value();
    std::int64_t total = pm.value() * a_base;
    for (Wide i = 1; i <= p - 1; ++i) {
        total += floor_div_wide(i * d, p) -
                 static_cast<std::int64_t>(p - i) * floor_div_wide(i * d, p * p);
    }
    return total;
}

}  // namespace ascart
