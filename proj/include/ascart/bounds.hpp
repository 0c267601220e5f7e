#ifndef ASCART_BOUNDS_HPP
#define ASCART_BOUNDS_HPP

#include <cstdint>
#include <vector>

#include "ascart/fp.hpp"

namespace ascart {

/// Lower bound L(d) on the a-number of a cover branched at one point with
/// ramification break d:
///   L(d) = sum_{i=(p+1)/2}^{p-1} floor(i d / p) - floor(d (2ip - p^2 + 1) / (2 p^2)).
/// Exact integer arithmetic throughout. d divisible by p is accepted here
/// (the additivity identity L(d + p^2) = L(d) + L(p^2 + 1) ranges over all
/// positive d); curve construction still rejects such breaks.
std::int64_t lower_bound_single(PrimeModulus p, std::int64_t d);

/// Lower bound for a multiset D of ramification breaks:
///   max_{1<=j<=p-1} sum_{d in D} sum_{i=j}^{p-1}
///       floor(i d / p) - floor(d (i p - (p-1) j) / p^2),
/// scanning every j. Empty D gives 0. For a singleton the maximum is
/// attained at j = (p+1)/2 and agrees with lower_bound_single.
std::int64_t lower_bound_multi(PrimeModulus p, const std::vector<std::int64_t>& breaks);

/// Upper bound p*a_base + sum_{i=1}^{p-1} floor(i d / p) - (p-i) floor(i d / p^2);
/// a_base = 0 for covers of the projective line.
std::int64_t upper_bound(PrimeModulus p, std::int64_t d, std::int64_t a_base);

}  // namespace ascart

#endif
