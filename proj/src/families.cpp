#include "ascart/families.hpp"

#include <stdexcept>

#include "ascart/search.hpp"

namespace ascart {

Family family_from_name(const std::string& name) {
    if (name == "bc-minus") return Family::BcMinus;
    if (name == "bc-plus") return Family::BcPlus;
    if (name == "farnell") return Family::Farnell;
    if (name == "experiment") return Family::Experiment;
    throw std::invalid_argument(
        "unknown family \"" + name +
        "\": expected bc-minus, bc-plus, farnell, or experiment");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::BcMinus: return "bc-minus";
        case Family::BcPlus: return "bc-plus";
        case Family::Farnell: return "farnell";
        case Family::Experiment: return "experiment";
    }
    throw std::logic_error("unreachable family tag");
}

namespace {

// -x^e1 - x^e2 with reduced residues.
FpPoly two_term(const PrimeModulus& pm, std::int64_t e1, std::int64_t e2) {
    const Residue neg1 = pm.value() - 1;
    return FpPoly::monomial(pm, neg1, static_cast<std::size_t>(e1)) +
           FpPoly::monomial(pm, neg1, static_cast<std::size_t>(e2));
}

}  // namespace

Curve family_poly(const FamilyId& id) {
    PrimeModulus pm(id.p);
    const std::int64_t p = pm.value();
    if (p > 100'000)
        throw std::invalid_argument("family degree p^2 would be impractically large");

    switch (id.name) {
        case Family::BcMinus: {
            const std::int64_t d = p * p - 1;
            return make_curve(two_term(pm, d, d / 2));
        }
        case Family::BcPlus: {
            const std::int64_t d = p * p + 1;
            return make_curve(two_term(pm, d, d / 2 + p));
        }
        case Family::Experiment: {
            if (id.n < 1) throw std::invalid_argument("experiment family needs n >= 1");
            const std::int64_t d = id.n * p * p - 1;
            const std::int64_t num = id.n * p * p + (id.n - 1) * p - 1;
            if (num % 2 != 0)
                throw std::logic_error("experiment exponent is not an integer");
            return make_curve(two_term(pm, d, num / 2));
        }
        case Family::Farnell: {
            const std::int64_t deg = id.deg == 0 ? p - 1 : id.deg;
            if (deg < 1 || deg % p == 0)
                throw std::invalid_argument(
                    "farnell degree must be positive and coprime to p");
            if (id.poly) {
                if (id.poly->modulus() != pm) throw ModulusMismatch();
                if (id.poly->degree() != deg)
                    throw std::invalid_argument(
                        "supplied polynomial has degree " +
                        std::to_string(id.poly->degree()) + ", expected " +
                        std::to_string(deg));
                return make_curve(*id.poly);
            }
            std::mt19937_64 rng = trial_rng(id.seed, 0);
            return make_curve(random_poly(pm, deg, rng));
        }
    }
    throw std::logic_error("unreachable family tag");
}

InvariantReport family_verify(const FamilyId& id) { return invariants(family_poly(id)); }

}  // namespace ascart
