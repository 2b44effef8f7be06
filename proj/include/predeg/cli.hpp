#pragma once

// Command-line front end. Exit codes: 0 success, 1 a verification check
// failed, 2 usage error, 3 internal integrality failure.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "predeg/chow.hpp"

namespace predeg::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kIntegrality = 3,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "p/q" or an integer "p".
Rational parse_rational(std::string_view text);

/// Always "p/q", with q = 1 for integers.
std::string rational_string(const Rational& r);

/// A JSON number when the value fits in 64 bits, otherwise a decimal string.
nlohmann::json integer_json(const Integer& n);

/// [{"coeff": "p/q", "exponents": [e_1, ..., e_r]}, ...] in exponent order.
nlohmann::json to_json(const ChowClass& c);

}  // namespace predeg::cli
