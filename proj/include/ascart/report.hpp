#ifndef ASCART_REPORT_HPP
#define ASCART_REPORT_HPP

#include <cstdint>
#include <string>

#include "ascart/curve.hpp"

namespace ascart {

/// All numeric invariants of one cover, plus both bounds. Field names
/// match the JSON schema one-to-one and are stable.
struct InvariantReport {
    std::int64_t p = 0;
    std::int64_t d = 0;
    std::string f;  // reduced text form of the defining polynomial
    std::int64_t genus = 0;
    std::int64_t a_number = 0;
    std::int64_t p_rank = 0;
    std::int64_t lower_bound = 0;
    std::int64_t upper_bound = 0;
    bool attains_lower = false;

    std::string to_json() const;
    std::string to_csv_row() const;
    static std::string csv_header();
};

/// Computes genus, a-number, p-rank, and the bounds for one curve.
/// The a-number is g - rank(C) by rank-nullity; the p-rank is computed
/// from the matrix (not assumed zero) so nilpotency doubles as a
/// whole-pipeline integrity check. Throws if the report invariants
/// (sandwich, p_rank = 0, a + p_rank <= g) fail to hold.
InvariantReport invariants(const Curve& c);

}  // namespace ascart

#endif
