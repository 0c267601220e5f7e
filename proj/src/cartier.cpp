#include "ascart/cartier.hpp"

#include <string>

namespace ascart {

FpPoly cartier_classical(const FpPoly& h) {
    const PrimeModulus p = h.modulus();
    const std::size_t pv = static_cast<std::size_t>(p.value());
    if (h.is_zero()) return FpPoly::zero(p);
    std::vector<Residue> out((h.coeffs().size() + pv - 1) / pv, 0);
    for (std::size_t s = pv - 1; s < h.coeffs().size(); s += pv) {
        out[(s - (pv - 1)) / pv] = h.coeff(s);
    }
    return FpPoly(p, std::move(out));
}

std::vector<FpPoly> cartier_power_table(const Curve& c) {
    return poly_pow_table(c.f(), static_cast<std::size_t>(c.p().value() - 2));
}

namespace {

// binom(m, k) mod p for 0 <= k <= m <= p-2; never zero mod p since m < p.
std::vector<Residue> binomial_row(PrimeModulus p, std::int64_t m) {
    std::vector<Residue> row(static_cast<std::size_t>(m) + 1, 1);
    for (std::size_t k = 1; k < row.size(); ++k) {
        row[k] = p.mul(row[k - 1], p.reduce(m - static_cast<std::int64_t>(k) + 1));
        row[k] = p.mul(row[k], p.inv(p.reduce(static_cast<std::int64_t>(k))));
    }
    return row;
}

}  // namespace

std::vector<Residue> cartier_of_basis_elem(const Curve& c, const std::vector<FpPoly>& f_powers,
                                           const OrderedBasis& basis, BasisIndex b) {
    const PrimeModulus p = c.p();
    std::vector<Residue> coords(basis.size(), 0);
    const std::vector<Residue> binom = binomial_row(p, b.i);

    for (std::int64_t i = 0; i <= b.i; ++i) {
        // scalar binom(m,i) * (-1)^(m-i); its p-th root is itself in F_p
        Residue scalar = binom[static_cast<std::size_t>(i)];
        if ((b.i - i) % 2 != 0) scalar = p.neg(scalar);

        const FpPoly& power = f_powers[static_cast<std::size_t>(b.i - i)];
        const FpPoly image = cartier_classical(power.shifted(static_cast<std::size_t>(b.j)));
        for (std::size_t j = 0; j < image.coeffs().size(); ++j) {
            const Residue v = image.coeff(j);
            if (v == 0) continue;
            const BasisIndex target{i, static_cast<std::int64_t>(j)};
            if (!basis.contains(target)) {
                throw InternalRangeError("Cartier image of y^" + std::to_string(b.i) + " x^" +
                                         std::to_string(b.j) + " dx left the basis at y^" +
                                         std::to_string(target.i) + " x^" + std::to_string(target.j));
            }
            const std::size_t pos = basis.position(target);
            coords[pos] = p.add(coords[pos], p.mul(scalar, v));
        }
    }
    return coords;
}

CartierMatrix cartier_matrix(const Curve& c) {
    OrderedBasis basis(c.p(), c.d());
    const std::vector<FpPoly> f_powers = cartier_power_table(c);
    FpMatrix mat(c.p(), basis.size(), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const std::vector<Residue> coords = cartier_of_basis_elem(c, f_powers, basis, basis[col]);
        for (std::size_t row = 0; row < coords.size(); ++row) {
            if (coords[row] != 0) mat.set(row, col, coords[row]);
        }
    }
    return CartierMatrix{std::move(mat), std::move(basis)};
}

}  // namespace ascart
