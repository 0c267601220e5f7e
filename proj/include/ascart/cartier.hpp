#ifndef ASCART_CARTIER_HPP
#define ASCART_CARTIER_HPP

#include <stdexcept>
#include <vector>

#include "ascart/curve.hpp"
#include "ascart/holo.hpp"
#include "ascart/linalg.hpp"

namespace ascart {

/// A resulting monomial fell outside the basis stripe bounds. Holomorphy
/// guarantees closure, so this signals an internal defect rather than bad
/// input; coordinates are never silently truncated.
struct InternalRangeError : std::logic_error {
    explicit InternalRangeError(const std::string& what) : std::logic_error(what) {}
};

/// Classical Cartier operator on polynomial differentials h(x)dx: keeps
/// the monomials c x^s with s = p-1 (mod p), sending each to
/// c^(1/p) x^((s-p+1)/p); the p-th root is the identity on F_p.
FpPoly cartier_classical(const FpPoly& h);

/// Matrix of the Cartier operator in the ordered basis: column c holds
/// the coordinates of C(basis[c]), so entry (r, c) is the coefficient of
/// basis[r] in C(basis[c]).
struct CartierMatrix {
    FpMatrix mat;
    OrderedBasis basis;
};

/// Coordinates of C(y^i x^j dx) for a basis element of the given curve,
/// as a length-g vector in basis order. Uses the substitution
/// y^m = (y^p - f)^m and expands binomially:
///   C(y^m x^n dx) = sum_i binom(m,i) (-1)^(m-i) y^i C0(f^(m-i) x^n dx).
/// The power table must hold f^0 .. f^(p-2) (see cartier_power_table).
std::vector<Residue> cartier_of_basis_elem(const Curve& c, const std::vector<FpPoly>& f_powers,
                                           const OrderedBasis& basis, BasisIndex b);

/// f^0 .. f^(p-2), shared across all columns of one curve.
std::vector<FpPoly> cartier_power_table(const Curve& c);

CartierMatrix cartier_matrix(const Curve& c);

}  // namespace ascart

#endif
