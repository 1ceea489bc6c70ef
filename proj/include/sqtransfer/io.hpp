#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "sqtransfer/counting.hpp"

namespace sqt::io {

// ordered so that identical inputs serialize to identical bytes
using json = nlohmann::ordered_json;

// {"c": [c_1, ..., c_s]}
Equation equation_from_json(const json& j);
json equation_to_json(const Equation& eq);

// {"c": [...], "forms": [...]} where each form is either a single vector (a
// one-form subspace) or a list of vectors cutting out one subspace jointly.
SubspaceFamily family_from_json(const json& j);
json family_to_json(const SubspaceFamily& fam);

// sorted list of positive integers
std::vector<long long> set_from_json(const json& j);

// parses "1,1,-2" or "1 1 -2" into coefficients
Equation equation_from_string(const std::string& text);

void write_majorant_csv(std::ostream& os, const Majorant& m);
json majorant_to_json(const Majorant& m);

}  // namespace sqt::io
