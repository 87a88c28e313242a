#pragma once

#include "qmf/identities.hpp"
#include "qmf/lambert.hpp"
#include "qmf/numeric.hpp"
#include "qmf/positivity.hpp"
#include "qmf/qseries.hpp"

#include <json.hpp>

#include <string>

namespace qmf::io {

using Json = nlohmann::json;

// "c q^r" terms joined by " + " / " - ": "q + 2q^2 - q^{3/2}". Zero terms are
// skipped; the zero series prints as "0".
std::string to_text(const FourierSeries& f);

// Canonical form: keys sorted, two-space indent, big numbers as decimal
// strings. Parsing and re-dumping reproduces the same bytes.
std::string dump(const Json& j);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json to_json(const FourierSeries& f);
FourierSeries series_from_json(const Json& j);
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const identities::IdentityResult& r);
Json to_json(const lambert::MonotonicityCertificate& c);
lambert::MonotonicityCertificate certificate_from_json(const Json& j);
Json to_json(const positivity::PositivityReport& r);
Json to_json(const positivity::DensityReport& r);
Json to_json(const positivity::RatioReport& r);
Json to_json(const positivity::DoublingReport& r);
Json to_json(const numeric::ScanReport& r, int digits = 25);
Json to_json(const numeric::TangentReport& r, int digits = 25);
Json to_json(const numeric::LimitReport& r, int digits = 25);
Json to_json(const numeric::SmallTReport& r);

}  // namespace qmf::io
