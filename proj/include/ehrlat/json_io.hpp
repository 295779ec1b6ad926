#pragma once

#include <json.hpp>
#include <string>

#include "ehrlat/genfunc.hpp"
#include "ehrlat/models.hpp"

namespace ehrlat {

using Json = nlohmann::json;

// Scalars: rationals always as strings "p" / "p/q"; integers as JSON numbers
// when safely below 2^53, as strings otherwise. Parsers accept both forms.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);
Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j);

Json to_json(const Polyhedron& p);
Polyhedron polyhedron_from_json(const Json& j);

Json to_json(const Formula& f);
Formula formula_from_json(const Json& j);

Json to_json(const GenFunc& g);
GenFunc genfunc_from_json(const Json& j);

Json to_json(const QuasiPolynomial& qp);
QuasiPolynomial quasipoly_from_json(const Json& j);

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json to_json(const SchedulingProblem& s);
SchedulingProblem scheduling_from_json(const Json& j);

/// Parses a JSON file; IoError if unreadable, DomainError on malformed JSON.
Json load_json(const std::string& path);

}  // namespace ehrlat
