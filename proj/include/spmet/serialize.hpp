// JSON and text serialization at the tool boundary.
#ifndef SPMET_SERIALIZE_HPP
#define SPMET_SERIALIZE_HPP

#include <json.hpp>
#include <string>
#include <vector>

#include "spmet/envelope.hpp"
#include "spmet/modaction.hpp"
#include "spmet/report.hpp"

namespace spmet {

using Json = nlohmann::ordered_json;

// {"num": "...", "den": "..."} with base-10 digit strings
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// PBW element as text over the basis symbol names, e.g. "9/2*c(1,1)^2".
std::string format_pbw(const PBWElement& u, const PrimeContext& ctx);

// {"generators": [...lie expressions...],
//  "terms": [{"alpha": [ints], "coeff": "num/den"}]}
Json iwasawa_to_json(const IwasawaElement& zeta);
IwasawaElement iwasawa_from_json(const Json& j, const PrimeContext& ctx);

Json report_to_json(const std::vector<CheckReport>& checks, bool with_timing);

}  // namespace spmet

#endif
