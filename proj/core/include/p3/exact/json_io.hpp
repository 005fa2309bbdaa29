#pragma once

#include <nlohmann/json_fwd.hpp>

#include "p3/exact/series.hpp"

namespace p3::exact {

// Interchange schema: arbitrary-precision integers as decimal strings,
// polynomials as term lists with a fixed variable legend, series as
// {variable, step, truncation, terms}.
nlohmann::json toJson(const Scalar& s);
nlohmann::json toJson(const Poly& p);
nlohmann::json toJson(const RatFunc& f);
nlohmann::json toJson(const Series& s);

Scalar scalarFromJson(const nlohmann::json& j);
Poly polyFromJson(const nlohmann::json& j);
RatFunc ratFuncFromJson(const nlohmann::json& j);
Series seriesFromJson(const nlohmann::json& j);

}  // namespace p3::exact
