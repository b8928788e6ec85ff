#pragma once

#include "electra/algebra.hpp"
#include "electra/network.hpp"
#include "electra/polynomial.hpp"
#include "electra/wiring.hpp"

#include <json.hpp>

#include <string>

namespace electra {

using Json = nlohmann::ordered_json;

/// Thrown for malformed documents; carries the offending field.
struct FormatError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A JSON number when it fits in 64 bits, else a decimal string.
Json integer_json(const Integer& z);
Json rational_json(const Rational& r);
Json polynomial_json(const IntPolynomial& p);

/// {"n": int, "partner": [int; 2n]}
Json matching_json(const Matching& m);
Matching matching_from_json(const Json& j);

/// {"n", "interior", "edges": [{"u", "v", "c"}], "rotation": {"w": [edge indices]}}.
/// A self-loop appears twice in its vertex's list; the first occurrence is
/// taken as the u end when reading.
Json network_json(const Network& net);
/// "c" defaults to "1" when absent.
Network network_from_json(const Json& j);

/// Row-major array of rational strings.
Json matrix_json(const RationalMatrix& m);

Json pair_json(const CircularPair& c);

/// Undirected DOT drawing with boundary vertices pinned on a circle (neato).
std::string graph_dot(const CircularPlanarGraph& g, const std::string& name = "G");

}  // namespace electra
