#ifndef ASCART_FP_HPP
#define ASCART_FP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ascart {

/// Residues are plain machine integers in [0, p). The modulus is small
/// (odd primes, practically p <= 23), so there is no Montgomery or Barrett
/// machinery; everything reduces eagerly through int64 intermediates.
using Residue = std::int64_t;

struct ModulusMismatch : std::runtime_error {
    ModulusMismatch() : std::runtime_error("operands have different moduli") {}
};

/// An odd prime p with 3 <= p < 2^31, validated at construction.
class PrimeModulus {
  public:
    explicit PrimeModulus(std::int64_t p);

    std::int64_t value() const noexcept { return p_; }

    Residue add(Residue a, Residue b) const noexcept {
        Residue s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Residue sub(Residue a, Residue b) const noexcept {
        Residue s = a - b;
        return s < 0 ? s + p_ : s;
    }
    Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Residue mul(Residue a, Residue b) const noexcept { return (a * b) % p_; }

    /// Reduce an arbitrary signed integer into [0, p).
    Residue reduce(std::int64_t v) const noexcept {
        Residue r = v % p_;
        return r < 0 ? r + p_ : r;
    }

    Residue pow(Residue base, std::uint64_t e) const noexcept;
    Residue inv(Residue a) const;

    friend bool operator==(PrimeModulus a, PrimeModulus b) noexcept { return a.p_ == b.p_; }
    friend bool operator!=(PrimeModulus a, PrimeModulus b) noexcept { return a.p_ != b.p_; }

  private:
    std::int64_t p_;
};

/// Floor division with a positive divisor; exact on negative numerators.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

/// Ceiling division of nonnegative a by positive b.
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

std::int64_t gcd_i64(std::int64_t a, std::int64_t b);

}  // namespace ascart

#endif
