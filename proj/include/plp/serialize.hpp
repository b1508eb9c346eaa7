#pragma once

#include <string>

#include "json.hpp"
#include "plp/experiments.hpp"
#include "plp/iwasawa.hpp"

namespace plp {

using Json = nlohmann::json;

// Rationals travel as "num/den" strings; polynomials as arrays of those, low
// degree first; matrices as arrays of rows. Readers throw std::invalid_argument
// on malformed input.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json to_json(const Poly& f);
Poly poly_from_json(const Json& j);
Json to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const Json& j);
Json to_json(const PolyMatrix& m);
PolyMatrix polymatrix_from_json(const Json& j);
Json to_json(const Interval& J);  // "lo..hi" or "{}"

// {p, dim, phi, weights, basis}; basis may be omitted on input (identity).
Json to_json(const FilteredPhiModule& d);
FilteredPhiModule module_from_json(const Json& j);
FilteredPhiModule load_module(const std::string& path);

Json to_json(const Refinement& r);
Refinement refinement_from_json(const Json& j);

// {p, u, J, N, n, mode, module, Z[, refinement]}
Json to_json(const ZState& s);
ZState zstate_from_json(const Json& j);

Json to_json(const DivisorReport& r);
Json to_json(const SlopeTrace& t);

Json to_json(const Report& r);
std::string to_csv(const Report& r);

}  // namespace plp
