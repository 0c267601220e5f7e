#include "ascart/report.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "ascart/bounds.hpp"
#include "ascart/cartier.hpp"
#include "ascart/holo.hpp"
#include "ascart/linalg.hpp"

namespace ascart {

std::string InvariantReport::to_json() const {
    nlohmann::ordered_json j;
    j["p"] = p;
    j["d"] = d;
    j["f"] = f;
    j["genus"] = genus;
    j["a_number"] = a_number;
    j["p_rank"] = p_rank;
    j["lower_bound"] = lower_bound;
    j["upper_bound"] = upper_bound;
    j["attains_lower"] = attains_lower;
    return j.dump(2);
}

std::string InvariantReport::csv_header() {
    return "p,d,f,genus,a_number,p_rank,lower_bound,upper_bound,attains_lower";
}

std::string InvariantReport::to_csv_row() const {
    std::ostringstream out;
    out << p << ',' << d << ",\"" << f << "\"," << genus << ',' << a_number
        << ',' << p_rank << ',' << lower_bound << ',' << upper_bound << ','
        << (attains_lower ? "true" : "false");
    return out.str();
}

InvariantReport invariants(const Curve& c) {
    InvariantReport rep;
    rep.p = c.p().value();
    rep.d = c.d();
    rep.f = c.f().to_string();

    const std::int64_t g = genus(c.p(), c.d());
    rep.genus = g;

    CartierMatrix cm = cartier_matrix(c);
    const std::int64_t r = rank(cm.mat);
    rep.a_number = g - r;
    rep.p_rank = p_rank_via_power(cm.mat, g);

    rep.lower_bound = lower_bound_single(c.p(), c.d());
    rep.upper_bound = upper_bound(c.p(), c.d(), 0);
    rep.attains_lower = rep.a_number == rep.lower_bound;

    if (rep.p_rank != 0)
        throw std::logic_error(
            "cover branched at one point must have p-rank 0, got " +
            std::to_string(rep.p_rank));
    if (rep.a_number < rep.lower_bound || rep.a_number > rep.upper_bound)
        throw std::logic_error(
            "a-number " + std::to_string(rep.a_number) + " escapes bounds [" +
            std::to_string(rep.lower_bound) + ", " +
            std::to_string(rep.upper_bound) + "]");
    if (rep.a_number + rep.p_rank > g)
        throw std::logic_error("a-number plus p-rank exceeds genus");
    return rep;
}

}  // namespace ascart
