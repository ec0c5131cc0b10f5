#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace concavlab {

/// Outcome of one inequality evaluation. `witness` holds whatever is needed
/// to recompute lhs and rhs; `extra` carries check-specific fields.
struct DeficitReport {
    std::string inequality;
    std::string functional;
    std::vector<std::string> bodies;
    double exponent = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double deficit = 0.0;
    double normalized_deficit = 0.0;
    nlohmann::json witness = nlohmann::json::object();
    nlohmann::json extra = nlohmann::json::object();
    double wall_time_s = 0.0;
};

/// Fills deficit = lhs - rhs and deficit / rhs.
DeficitReport make_report(std::string inequality, std::string functional, std::vector<std::string> bodies,
                          double exponent, double lhs, double rhs);

/// Wall time is left out when `with_time` is false so that reports compare
/// byte for byte across runs.
nlohmann::json to_json(const DeficitReport& r, bool with_time = true);

} // namespace concavlab
