#pragma once

#include <string>

#include <json.hpp>

#include "schurzeta/identities.hpp"
#include "schurzeta/qsym.hpp"
#include "schurzeta/tableau.hpp"
#include "schurzeta/zeta.hpp"

namespace schurzeta {

using Json = nlohmann::json;

// Scalars: exact values as "num/den" strings (plain integers stay integral),
// floating values as [re, im].
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

// Partitions are arrays of parts; diagrams are {"rows":[{"start":s,"end":e},..]}.
Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);
Json diagram_to_json(const SkewDiagram& d);
// Accepts either encoding.
SkewDiagram diagram_from_json(const Json& j);

// Entries: {"const": "3/2"} / {"const": [re,im]} / {"z": k} / {"sym": "alpha_1"}.
Json expr_to_json(const ExponentExpr& e);
ExponentExpr expr_from_json(const Json& j);

// {"rows"|"partition": shape, "entries": [[...row cells...], ...]}; entries
// optional, defaulting to the content filling.
Json tableau_to_json(const ExponentTableau& t);
ExponentTableau tableau_from_json(const Json& j);

// {"z": {"-1": v, ...}, "sym": {"alpha_1": v, ...}}; values accept integers,
// "num/den" strings, doubles, or [re, im].
Json binding_to_json(const Binding& b);
Binding binding_from_json(const Json& j);

Json filling_to_json(const Filling& f);
// Reports carry the command line they came from when one is supplied.
Json report_to_json(const VerificationReport& r, const std::string& invocation = "");
// One row per determinant entry plus a trailing summary row.
std::string report_to_csv(const VerificationReport& r, const std::string& invocation = "");
Json qsym_to_json(const QSymElement& q);

Json load_json_file(const std::string& path);

}  // namespace schurzeta
