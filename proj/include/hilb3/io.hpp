#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hilb3/critical_locus.hpp"
#include "hilb3/localization.hpp"
#include "hilb3/partitions.hpp"
#include "hilb3/series.hpp"
#include "hilb3/tangent.hpp"

namespace hilb3::io {

using json = nlohmann::ordered_json;

/// Parses "2,0,0;0,1,0;0,0,1" or "x^2;y;z" (also "x*y^2", "xy^2", "1").
/// Throws hilb3::error naming the offending token.
MonomialIdeal parse_ideal(std::string_view text);

/// "1,-2,3" -> {1,-2,3}.
std::vector<int> parse_int_list(std::string_view text);

/// Polynomial text such as "2*x^2*y - x*z^3 + 1/2*x1^4". Variables are
/// x1..xn, with x, y, z accepted for x1, x2, x3 when n <= 3.
QuasiHomogPoly parse_polynomial(std::string_view text, const std::vector<int>& weights);

std::string format_ideal(const MonomialIdeal& ideal);   // "2,0,0;0,1,0;0,0,1"
std::string format_polynomial(const QuasiHomogPoly& f); // "2*x^2*y - x*z^3"

json generators_json(const MonomialIdeal& ideal);
json partition_json(const PlanePartition& pp);
json tangent_json(const TangentReport& report);
json localization_json(const LocalizationResult& result, bool per_point);

enum class SeriesFormat { json, csv, text };

/// json: {"kind":..,"chi":..,"order":..,"coefficients":[..]} with exact
/// integers; csv: "n,coefficient" rows; text: coefficients joined by commas.
std::string format_series(const IntSeries& s, std::string_view kind, long chi, SeriesFormat format);

} // namespace hilb3::io
