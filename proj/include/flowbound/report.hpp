#ifndef FLOWBOUND_REPORT_HPP_
#define FLOWBOUND_REPORT_HPP_

#include <string>

#include <json.hpp>

#include "flowbound/forces.hpp"
#include "flowbound/wellposedness.hpp"

namespace flowbound::report {

using json = nlohmann::ordered_json;

// 17 significant digits: enough to reproduce any IEEE double exactly on
// re-parse, which is what makes certificates round-trip bit-identically.
std::string format_double(double v);
double parse_double(const std::string& s);

json certificate_json(const wellposedness::CertifyResult& r);
json force_json(const forces::ForceCertificate& fc);

// Rebuilds the inputs recorded in a certificate JSON (reading the grid file
// again for sampled inflow) and reruns certify.  Serializing the result
// reproduces the original document byte for byte.
wellposedness::CertifyResult recertify_from_json(const json& j);

std::string to_string(wellposedness::Status s);

}  // namespace flowbound::report

#endif  // FLOWBOUND_REPORT_HPP_
