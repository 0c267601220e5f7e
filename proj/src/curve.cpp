#include "ascart/curve.hpp"

namespace ascart {

Curve make_curve(const FpPoly& f, bool normalize) {
    FpPoly g = f;
    const PrimeModulus p = f.modulus();
    const std::size_t pv = static_cast<std::size_t>(p.value());

    if (normalize) {
        // Fold the highest removable monomial first; the replacement lands
        // at exponent e/p and may itself be removable, so rescan from it.
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t e = static_cast<std::size_t>(std::max<std::int64_t>(g.degree(), 0));
                 e >= pv; --e) {
                if (e % pv != 0 || g.coeff(e) == 0) continue;
                const Residue c = g.coeff(e);
                g = g.with_coeff(e, 0) + FpPoly::monomial(p, c, e / pv);
                changed = true;
                break;
            }
        }
    }

    if (g.is_constant()) throw ConstantRhs();
    if (g.degree() % p.value() == 0) throw DegreeDivisibleByP();
    return Curve(std::move(g));
}

std::int64_t ramification_break(const Curve& c) { return c.d(); }

Curve as_equivalent(const Curve& c, const FpPoly& g) {
    if (g.modulus() != c.p()) throw ModulusMismatch();
    if (!g.is_constant() && g.degree() * c.p().value() >= c.d()) throw BreakChanged();
    return make_curve(c.f() + g.frobenius() - g, /*normalize=*/false);
}

}  // namespace ascart
