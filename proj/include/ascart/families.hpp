#ifndef ASCART_FAMILIES_HPP
#define ASCART_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "ascart/curve.hpp"
#include "ascart/report.hpp"

namespace ascart {

/// The four explicit families with a-number equal to the lower bound.
///   bc-minus    f = -x^d - x^(d/2),          d = p^2 - 1
///   bc-plus     f = -x^d - x^(d/2 + p),      d = p^2 + 1
///   farnell     any f of degree p - 1
///   experiment  f = -x^d - x^((np^2+(n-1)p-1)/2), d = n*p^2 - 1
enum class Family { BcMinus, BcPlus, Farnell, Experiment };

Family family_from_name(const std::string& name);
std::string family_name(Family f);

struct FamilyId {
    FamilyId() = default;
    FamilyId(Family name_, std::int64_t p_, std::int64_t n_ = 1) : name(name_), p(p_), n(n_) {}

    Family name = Family::BcMinus;
    std::int64_t p = 3;
    std::int64_t n = 1;    // experiment only
    std::int64_t deg = 0;  // farnell only; 0 means the default p - 1
    std::uint64_t seed = 0;  // farnell only, for the generated polynomial
    std::optional<FpPoly> poly;  // farnell only, overrides generation
};

/// The exact defining polynomial of the family member, signs included
/// (negative coefficients appear as the reduced residue p - 1).
Curve family_poly(const FamilyId& id);

/// Runs the full invariant pipeline on family_poly(id); attainment is
/// the report's attains_lower flag.
InvariantReport family_verify(const FamilyId& id);

}  // namespace ascart

#endif
