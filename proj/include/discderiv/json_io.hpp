#pragma once

#include <json.hpp>

#include "discderiv/measure.hpp"
#include "discderiv/pietsch.hpp"

namespace discderiv {

using json = nlohmann::ordered_json;

json poly_to_json(const AnalyticPoly& p);         // [[re, im], ...] from n = 0
AnalyticPoly poly_from_json(const json& j);

json symbol_to_json(const SymbolH1& h);           // coefficients ĥ(1)..ĥ(N)

/// Symbol spec: {"coeffs": [[re,im],...]} listing ĥ(1).., or
/// {"kind":"monomial","n":..} or {"kind":"random","degree":..,"seed":..}.
SymbolH1 symbol_from_spec(const json& j);

/// Polynomial spec: {"coeffs": [[re,im],...]} from c_0, or the same named
/// generators as symbol specs.
AnalyticPoly poly_from_spec(const json& j);

json measure_to_json(const DiscMeasure& mu);
DiscMeasure measure_from_json(const json& j);

json certificate_to_json(const PietschCertificate& cert);

}  // namespace discderiv
