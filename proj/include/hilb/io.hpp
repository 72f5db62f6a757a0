#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hilb/betti.hpp"
#include "hilb/certificate.hpp"
#include "hilb/cones.hpp"
#include "hilb/modules.hpp"
#include "hilb/realize.hpp"
#include "hilb/series.hpp"

namespace hilb {

// All rationals serialize as strings "p/q" (plain "p" when q = 1), so JSON
// artifacts are exact and re-parse to equal values.

nlohmann::json series_to_json(const Series& g);
Series series_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json betti_to_json(const BettiTable& b);
BettiTable betti_from_json(const nlohmann::json& j);

nlohmann::json ideal_to_json(const MonomialIdeal& I);
MonomialIdeal ideal_from_json(const nlohmann::json& j);

nlohmann::json realization_to_json(const Realization& r);

// "(1 + 2*t)/(1-t)^2"; bare numerator when there is no denominator.
std::string series_to_text(const Series& g);

// Matrix layout with "." for absent entries, columns = homological degree.
std::string betti_to_text(const BettiTable& b);

// Comma-separated rationals like "1,4,7" -> vector.
std::vector<Rat> rats_from_csv(const std::string& s);

}  // namespace hilb
