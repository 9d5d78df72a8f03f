#pragma once

#include <string>
#include <vector>

#include "qpt/cones.hpp"
#include "qpt/hkt.hpp"
#include "qpt/ma.hpp"
#include "qpt/verify.hpp"

namespace qpt {

// canonical float formatting for artifacts; round trips doubles exactly
std::string format_double17(double v);

// report serializers; exact values travel as rational strings, floats as
// plain JSON numbers, and insertion order is fixed so identical inputs give
// identical bytes
std::string json_mass_report(const MassReport& r);
std::string json_weak_limit(const WeakLimitReport& r);
std::string csv_weak_limit(const WeakLimitReport& r);
std::string json_psh_verdict(const PshVerdict& v);
std::string json_cone_certificate(const ConeCertificate& c);
std::string json_identity_report(const IdentitySuiteReport& r, bool timings);
std::string json_hermitian_report(const HermitianReport& r);
std::string json_hkt_check(const HktCheck& c);

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows);

// element syntax for exact inputs on the command line: a quaternionic matrix
// is a JSON array of rows of [t, x, y, z] rational strings (integers also
// accepted); a constant form is {"m": chart size, "terms": [{"word": [...],
// "re": "...", "im": "..."}]}
HyperhermitianMatrix parse_hherm_json(const std::string& text);
Form parse_form_json(const std::string& text);
std::vector<Rational> parse_rational_list(const std::string& text);  // comma separated
std::vector<double> parse_double_list(const std::string& text);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace qpt
