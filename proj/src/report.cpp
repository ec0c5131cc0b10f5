#include "concavlab/report.hpp"

#include <cmath>

namespace concavlab {

DeficitReport make_report(std::string inequality, std::string functional, std::vector<std::string> bodies,
                          double exponent, double lhs, double rhs) {
    DeficitReport r;
    r.inequality = std::move(inequality);
    r.functional = std::move(functional);
    r.bodies = std::move(bodies);
    r.exponent = exponent;
    r.lhs = lhs;
    r.rhs = rhs;
    r.deficit = lhs - rhs;
    r.normalized_deficit = rhs != 0.0 ? r.deficit / std::abs(rhs) : r.deficit;
    return r;
}

nlohmann::json to_json(const DeficitReport& r, bool with_time) {
    nlohmann::json j = {{"inequality", r.inequality},
                        {"functional", r.functional},
                        {"bodies", r.bodies},
                        {"exponent", r.exponent},
                        {"lhs", r.lhs},
                        {"rhs", r.rhs},
                        {"deficit", r.deficit},
                        {"normalized_deficit", r.normalized_deficit},
                        {"witness", r.witness}};
    for (const auto& [k, v] : r.extra.items()) j[k] = v;
    if (with_time) j["wall_time_s"] = r.wall_time_s;
    return j;
}

} // namespace concavlab
