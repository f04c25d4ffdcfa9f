#pragma once

#include <kacrep/algebra.hpp>
#include <kacrep/kacmod.hpp>
#include <kacrep/matryoshka.hpp>
#include <kacrep/representation.hpp>

#include <json.hpp>

#include <string>

namespace kacrep {

using Json = nlohmann::json;

/// {"1": "-1/4", "b^1": "3/2", "b^1.c^1": "2"}; keys list the nonzero exponents in
/// declaration order.
Json to_json(const ParamPoly& p);
ParamPoly poly_from_json(const Json& j, const ParamNames& params);

/// {"rows": R, "cols": C, "entries": [[r, c, poly], ...]} in row-major order.
Json to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const Json& j, const ParamNames& params);

Json to_json(const Representation& rep);
Representation representation_from_json(const Json& j);

Json to_json(const VerificationReport& report);
VerificationReport report_from_json(const Json& j);

Json to_json(const RootDatum& datum);
Json to_json(const StructureConstants& sc);
Json to_json(const TypicalityResult& t);
Json to_json(const SingularVectorReport& s);
Json profile_to_json(const std::map<IntWeight, int>& profile);

/// Two-space indented text with a trailing newline; key order is sorted, so output is stable.
std::string dump(const Json& j);

}  // namespace kacrep
