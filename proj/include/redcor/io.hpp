#pragma once

#include <json.hpp>

#include <map>
#include <string>
#include <variant>

#include "redcor/homological.hpp"
#include "redcor/module.hpp"

namespace redcor::io {

/// Insertion-ordered so emitted JSON follows construction order.
using Json = nlohmann::ordered_json;

Json ring_to_json(const Ring& ring);
/// Throws ParseError for unknown kinds or malformed descriptors.
Ring ring_from_json(const Json& j);
/// Short text form: "Z", "Z/6", "Q[x,y]", "F5[x,y]", with ";lex" etc. for a non-default order.
std::string ring_to_text(const Ring& ring);
Ring ring_from_text(const std::string& text);

Json matrix_to_json(const Ring& ring, const Matrix& m);
Matrix matrix_from_json(const Ring& ring, std::size_t cols, const Json& j);
Json vector_to_json(const Ring& ring, std::span<const Elem> v);

Json presentation_to_json(const Presentation& m);
Presentation presentation_from_json(const Ring& ring, const Json& j);

Json ideal_to_json(const Ideal& ideal);
Ideal ideal_from_json(const Ring& ring, const Json& j);

/// {degree -> {rank, differential}} with the differential leaving that degree.
Json complex_to_json(const ChainComplex& c);

/// Elements in a comma-separated list, e.g. "x^2,y".
std::vector<Elem> parse_element_list(const Ring& ring, const std::string& text);

struct MapRecord {
  std::string source, target;
  Matrix matrix;
};

using Object = std::variant<Ideal, Presentation, MapRecord>;
std::string kind_name(const Object& o);

inline constexpr int kSchemaMajor = 1;
inline constexpr int kSchemaMinor = 0;
inline constexpr const char* kToolVersion = "0.1.0";

/// Named ideals, modules and maps over one ring.
struct Workspace {
  std::optional<Ring> ring;
  std::string tool_version = kToolVersion;
  std::string created;
  std::map<std::string, Object> objects;

  const Ring& require_ring() const;
  const Ideal& ideal(const std::string& name) const;
  const Presentation& module(const std::string& name) const;
  ModuleMap map(const std::string& name) const;

  Json to_json() const;
  /// Throws ParseError or SchemaVersionMismatch.
  static Workspace from_json(const Json& j);
};

/// Throws ParseError (with line and column) or SchemaVersionMismatch.
Workspace load_workspace(const std::string& path);
Workspace parse_workspace(const std::string& text);
void save_workspace(const Workspace& ws, const std::string& path);

}  // namespace redcor::io
