#ifndef ASCART_POLY_HPP
#define ASCART_POLY_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ascart/fp.hpp"

namespace ascart {

struct PolyParseError : std::runtime_error {
    explicit PolyParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Dense univariate polynomial over F_p. Coefficients are residues in
/// [0, p), indexed by exponent, with no trailing zeros above the degree
/// (canonical form). The zero polynomial has an empty coefficient vector
/// and degree -1.
class FpPoly {
  public:
    explicit FpPoly(PrimeModulus p) : p_(p) {}
    FpPoly(PrimeModulus p, std::vector<Residue> coeffs);

    static FpPoly zero(PrimeModulus p) { return FpPoly(p); }
    static FpPoly constant(PrimeModulus p, std::int64_t c);
    static FpPoly monomial(PrimeModulus p, std::int64_t c, std::size_t e);

    PrimeModulus modulus() const noexcept { return p_; }
    const std::vector<Residue>& coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    /// Degree of the zero polynomial is -1.
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(c_.size()) - 1; }

    Residue coeff(std::size_t e) const noexcept { return e < c_.size() ? c_[e] : 0; }
    Residue leading_coeff() const noexcept { return c_.empty() ? 0 : c_.back(); }

    FpPoly operator+(const FpPoly& rhs) const;
    FpPoly operator-(const FpPoly& rhs) const;
    FpPoly operator-() const;
    FpPoly operator*(const FpPoly& rhs) const;

    FpPoly scaled(Residue u) const;            // u * f
    FpPoly shifted(std::size_t n) const;       // x^n * f
    FpPoly with_coeff(std::size_t e, std::int64_t c) const;

    /// f(c*x): multiplies the coefficient of x^e by c^e.
    FpPoly scale_arg(Residue c) const;

    /// f^p, expanded coefficientwise: (sum a_e x^e)^p = sum a_e x^(pe)
    /// because Frobenius fixes F_p.
    FpPoly frobenius() const;

    FpPoly derivative() const;

    Residue eval(Residue x0) const noexcept;

    bool operator==(const FpPoly& rhs) const noexcept {
        return p_ == rhs.p_ && c_ == rhs.c_;
    }
    bool operator!=(const FpPoly& rhs) const noexcept { return !(*this == rhs); }

    /// Text form: terms in descending exponent joined by " + ", residues
    /// in [0, p). Examples: "2*x^8 + 2*x^4", "x^7 + x^5", "x", "0".
    std::string to_string() const;

    /// Accepts the term format ("c*x^e", "x^e", "c" joined by '+'/'-',
    /// ASCII '-' or U+2212, optional '*' and whitespace) or a raw
    /// coefficient list "[c0, c1, ...]" with index = exponent.
    /// Coefficients are arbitrary decimal integers, reduced mod p.
    static FpPoly parse(PrimeModulus p, const std::string& text);

  private:
    void trim();
    void check_modulus(const FpPoly& rhs) const {
        if (p_ != rhs.p_) throw ModulusMismatch();
    }

    PrimeModulus p_;
    std::vector<Residue> c_;
};

/// Powers f^0 .. f^m; entry 0 is the constant 1.
std::vector<FpPoly> poly_pow_table(const FpPoly& f, std::size_t m);

}  // namespace ascart

#endif
