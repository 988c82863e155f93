#ifndef SETCALC_JSON_IO_HPP
#define SETCALC_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "setcalc/covering.hpp"
#include "setcalc/harness.hpp"
#include "setcalc/magnification.hpp"
#include "setcalc/verify.hpp"

namespace setcalc {

using Json = nlohmann::ordered_json;

// Numerator and denominator render as decimal strings: bound
// coefficients grow far past 64 bits and JSON numbers must stay exact.
Json rational_json(const Rational& r);
Json set_json(const GSet& s);
Json certificate_json(const MagnificationCertificate& cert, bool verified);
Json cover_json(const CoverCertificate& cert);
Json report_json(const TheoremReport& report);

}  // namespace setcalc

#endif
