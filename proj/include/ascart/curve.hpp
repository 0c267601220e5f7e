#ifndef ASCART_CURVE_HPP
#define ASCART_CURVE_HPP

#include <stdexcept>

#include "ascart/poly.hpp"

namespace ascart {

struct ConstantRhs : std::runtime_error {
    ConstantRhs() : std::runtime_error("right-hand side is constant: the cover is reducible") {}
};

struct DegreeDivisibleByP : std::runtime_error {
    DegreeDivisibleByP()
        : std::runtime_error("deg(f) is divisible by p: the ramification break is undefined") {}
};

struct BreakChanged : std::runtime_error {
    BreakChanged()
        : std::runtime_error("substitution would change the ramification break: deg(g^p) >= d") {}
};

/// The Artin-Schreier cover y^p - y = f(x), branched exactly over
/// infinity, with ramification break d = deg(f).
///
/// f is nonconstant with gcd(deg f, p) = 1; interior exponents divisible
/// by p are permitted (they occur after an equivalence substitution) but
/// are removed by the default normalization in make_curve.
class Curve {
  public:
    PrimeModulus p() const noexcept { return f_.modulus(); }
    const FpPoly& f() const noexcept { return f_; }
    std::int64_t d() const noexcept { return f_.degree(); }

  private:
    explicit Curve(FpPoly f) : f_(std::move(f)) {}
    friend Curve make_curve(const FpPoly&, bool);

    FpPoly f_;
};

/// Builds the cover y^p - y = f. With normalize (the default), monomials
/// c*x^(pm) with m >= 1 are folded down via f <- f - c*x^(pm) + c*x^m
/// (the substitution y <- y + c*x^m, using c^p = c over F_p) until no
/// positive exponent is divisible by p. Throws ConstantRhs if f ends up
/// constant and DegreeDivisibleByP if gcd(deg f, p) != 1.
Curve make_curve(const FpPoly& f, bool normalize = true);

/// The unique break in the ramification filtration at infinity: deg(f).
std::int64_t ramification_break(const Curve& c);

/// The isomorphic cover with f' = f + g^p - g (substitution y -> y + g).
/// Requires deg(g^p) < d so the break is preserved; the result is kept
/// un-normalized so downstream invariance can be exercised on it.
Curve as_equivalent(const Curve& c, const FpPoly& g);

}  // namespace ascart

#endif
