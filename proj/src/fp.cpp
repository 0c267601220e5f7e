#include "ascart/fp.hpp"

namespace ascart {

namespace {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t q = 3; q * q <= n; q += 2) {
        if (n % q == 0) return false;
    }
    return true;
}

}  // namespace

PrimeModulus::PrimeModulus(std::int64_t p) : p_(p) {
    if (p < 3 || p >= (std::int64_t{1} << 31) || p % 2 == 0 || !is_prime(p)) {
        throw std::invalid_argument("modulus must be an odd prime in [3, 2^31): got " +
                                    std::to_string(p));
    }
}

Residue PrimeModulus::pow(Residue base, std::uint64_t e) const noexcept {
    Residue r = 1;
    Residue b = base % p_;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

Residue PrimeModulus::inv(Residue a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero mod p");
    // extended Euclid
    std::int64_t t = 0, t1 = 1, r = p_, r1 = a % p_;
    while (r1 != 0) {
        std::int64_t q = r / r1;
        std::int64_t tmp = t - q * t1;
        t = t1;
        t1 = tmp;
        tmp = r - q * r1;
        r = r1;
        r1 = tmp;
    }
    return reduce(t);
}

std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

}  // namespace ascart
