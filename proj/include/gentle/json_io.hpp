#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gentle/embed.hpp"
#include "gentle/silting.hpp"

namespace gentle {

using Json = nlohmann::ordered_json;

// Input that fails a schema; carries the JSON pointer of the offending value.
class SchemaError : public InputError {
public:
    SchemaError(const std::string& pointer, const std::string& message);
    const std::string& pointer() const { return pointer_; }

private:
    std::string pointer_;
};

// Subset of JSON Schema: type, required, properties, additionalProperties, items, enum,
// minimum, const. Returns "pointer: message" lines, empty when valid.
std::vector<std::string> validate_schema(const Json& schema, const Json& doc);

const Json& algebra_schema();
const Json& curve_schema();
const Json& complex_schema();
const Json& report_schema();

Json read_json_file(const std::string& path);
// Writes to a temporary file next to path, then renames it.
void write_file_atomic(const std::string& path, const std::string& content);
std::string dump(const Json& j);

Json algebra_to_json(const Presentation& p, const std::string& name = "");
Presentation algebra_from_json(const Json& j);

Json surface_to_json(const Surface& s);
Json surfaces_to_json(const std::vector<Surface>& comps);

Json string_to_json(const Presentation& p, const StringWalk& w);
Json curve_to_json(const GentleModel& m, const Chord& c);
// Permissible curve from its crossing sequence; "arrows" resolves parallel arrows.
Chord curve_from_json(const GentleModel& m, const Json& j);

Json complex_to_json(const PathAlgebra& A, const TwoTermComplex& c);
TwoTermComplex complex_from_json(const PathAlgebra& A, const Json& j);
Json homotopy_string_to_json(const PathAlgebra& A, const HomotopyString& h);

Json pair_to_json(Catalogue& cat, const Pair& pair);
Json enumeration_to_json(Catalogue& cat, const EnumerationMode& mode, const Enumeration& en, const std::string& name);

}  // namespace gentle
