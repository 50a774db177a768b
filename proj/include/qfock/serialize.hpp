#pragma once

// Text and JSON forms. JSON coefficients are written as decimal strings
// (exact, any size) and read back from strings or plain JSON integers.

#include <json.hpp>
#include <string>

#include "qfock/schur.hpp"
#include "qfock/vectors.hpp"

namespace qfock {

using Json = nlohmann::ordered_json;

// text
std::string render(const SchurPoly& f);
std::string render(const PowerPoly& g);
std::string render(const FockVector& v);
std::string render(const StraightenResult& r);
/// "s[2,1] e^{-1a}", "e^{0a+a/2}"
std::string render_basis(int sector, int charge, const Partition& lambda);

// JSON
Json to_json(const HalfLaurent& f);
Json to_json(const RatHalfLaurent& f);
Json to_json(const Partition& p);
Json to_json(const StraightenResult& r);
Json to_json(const SchurPoly& f);
Json to_json(const PowerPoly& g);
Json to_json(const FockVector& v);

// Throw std::invalid_argument on malformed input.
HalfLaurent laurent_from_json(const Json& j);
RatHalfLaurent rat_laurent_from_json(const Json& j);
Partition partition_from_json(const Json& j);
StraightenResult straighten_from_json(const Json& j);
SchurPoly schur_from_json(const Json& j);
PowerPoly power_from_json(const Json& j);
FockVector fock_from_json(const Json& j);

}  // namespace qfock
