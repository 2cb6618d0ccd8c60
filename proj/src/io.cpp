#include "redcor/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace redcor::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) parse_fail(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Elem parse_elem(const Ring& ring, const Json& j) {
  if (j.is_number_integer()) return ring.from_integer(Integer(j.get<long>()));
  std::string s = as_string(j, "matrix entry");
  try {
    return ring.parse(s);
  } catch (const Error& e) {
    parse_fail("bad element \"" + s + "\": " + e.what());
  }
}

std::string split_vars(const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) out += (i ? "," : "") + vars[i];
  return out;
}

}  // namespace

Json ring_to_json(const Ring& ring) {
  const auto& d = ring.descriptor();
  switch (d.kind) {
    case RingKind::Integers:
      return Json{{"kind", "Z"}};
    case RingKind::ModularIntegers:
      return Json{{"kind", "Zmod"}, {"n", d.modulus.get_si()}};
    case RingKind::Polynomial: {
      Json coeff = d.coefficients == CoefficientField::Rationals ? Json("Q")
                                                                 : Json{{"Fp", d.prime.get_si()}};
      return Json{{"kind", "poly"}, {"coeff", coeff}, {"vars", d.variables}, {"order", to_string(d.order)}};
    }
  }
  return {};
}

Ring ring_from_json(const Json& j) {
  const std::string kind = as_string(field(j, "kind"), "ring kind");
  try {
    if (kind == "Z") return Ring::integers();
    if (kind == "Zmod") {
      const Json& n = field(j, "n");
      if (!n.is_number_integer()) parse_fail("Zmod modulus must be an integer");
      return Ring::modular(Integer(n.get<long>()));
    }
    if (kind == "poly") {
      std::vector<std::string> vars;
      const Json& v = field(j, "vars");
      if (!v.is_array()) parse_fail("vars must be an array");
      for (const auto& name : v) vars.push_back(as_string(name, "variable"));
      MonomialOrder order = MonomialOrder::Grevlex;
      if (j.contains("order")) order = parse_monomial_order(as_string(j.at("order"), "order"));
      const Json& c = field(j, "coeff");
      if (c.is_string() && c.get<std::string>() == "Q") return Ring::rationals_poly(vars, order);
      if (c.is_object() && c.contains("Fp") && c.at("Fp").is_number_integer())
        return Ring::prime_field_poly(c.at("Fp").get<long>(), vars, order);
      parse_fail("coeff must be \"Q\" or {\"Fp\": p}");
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    parse_fail(std::string("bad ring descriptor: ") + e.what());
  }
  parse_fail("unknown ring kind \"" + kind + "\"");
}

std::string ring_to_text(const Ring& ring) {
  const auto& d = ring.descriptor();
  switch (d.kind) {
    case RingKind::Integers: return "Z";
    case RingKind::ModularIntegers: return "Z/" + d.modulus.get_str();
    case RingKind::Polynomial: {
      std::string out = d.coefficients == CoefficientField::Rationals ? "Q" : "F" + d.prime.get_str();
      out += "[" + split_vars(d.variables) + "]";
      if (d.order != MonomialOrder::Grevlex) out += ";" + to_string(d.order);
      return out;
    }
  }
  return {};
}

Ring ring_from_text(const std::string& text) {
  static const std::regex modular(R"((?:Z|ZZ)/(\d+))");
  static const std::regex poly(R"((Q|QQ|F(\d+)|GF\((\d+)\))\[([^\]]+)\](?:;(\w+))?)");
  std::smatch m;
  try {
    if (text == "Z" || text == "ZZ") return Ring::integers();
    if (std::regex_match(text, m, modular)) return Ring::modular(Integer(m[1].str()));
    if (std::regex_match(text, m, poly)) {
      std::vector<std::string> vars;
      std::stringstream ss(m[4].str());
      for (std::string v; std::getline(ss, v, ',');) {
        v.erase(0, v.find_first_not_of(' '));
        v.erase(v.find_last_not_of(' ') + 1);
        vars.push_back(v);
      }
      MonomialOrder order = m[5].matched ? parse_monomial_order(m[5].str()) : MonomialOrder::Grevlex;
      const std::string p = m[2].matched ? m[2].str() : m[3].str();
      if (p.empty()) return Ring::rationals_poly(vars, order);
      return Ring::prime_field_poly(std::stol(p), vars, order);
    }
  } catch (const Error& e) {
    parse_fail("bad ring \"" + text + "\": " + e.what());
  }
  parse_fail("unrecognised ring \"" + text + "\" (expected Z, Z/n, Q[x,..] or Fp[x,..])");
}

Json vector_to_json(const Ring& ring, std::span<const Elem> v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(ring.format(e));
  return out;
}

Json matrix_to_json(const Ring& ring, const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(ring, m.row(i)));
  return out;
}

Matrix matrix_from_json(const Ring& ring, std::size_t cols, const Json& j) {
  if (!j.is_array()) parse_fail("matrix must be an array of rows");
  Matrix out = Matrix::from_rows(cols, {});
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols)
      parse_fail("matrix row must have " + std::to_string(cols) + " entries");
    Vector v;
    for (const auto& e : row) v.push_back(parse_elem(ring, e));
    out.append_row(v);
  }
  return out;
}

Json presentation_to_json(const Presentation& m) {
  return Json{{"gens", m.gens()}, {"relations", matrix_to_json(m.ring(), m.relations())}};
}

Presentation presentation_from_json(const Ring& ring, const Json& j) {
  const Json& g = field(j, "gens");
  if (!g.is_number_unsigned()) parse_fail("gens must be a nonnegative integer");
  const auto gens = g.get<std::size_t>();
  return Presentation(ring, gens, matrix_from_json(ring, gens, field(j, "relations")));
}

Json ideal_to_json(const Ideal& ideal) {
  return Json{{"generators", vector_to_json(ideal.ring(), ideal.generators())}};
}

Ideal ideal_from_json(const Ring& ring, const Json& j) {
  const Json& g = field(j, "generators");
  if (!g.is_array()) parse_fail("generators must be an array");
  std::vector<Elem> gens;
  for (const auto& e : g) gens.push_back(parse_elem(ring, e));
  return Ideal(ring, gens);
}

Json complex_to_json(const ChainComplex& c) {
  Json out = Json::object();
  for (int p = c.lo(); p <= c.hi(); ++p) {
    Json entry{{"rank", c.term(p).gens()}};
    if (p < c.hi()) entry["differential"] = matrix_to_json(c.ring(), c.differential(p).matrix());
    out[std::to_string(p)] = entry;
  }
  return out;
}

std::vector<Elem> parse_element_list(const Ring& ring, const std::string& text) {
  std::vector<Elem> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.find_first_not_of(' ') == std::string::npos) continue;
    out.push_back(ring.parse(item));
  }
  return out;
}

std::string kind_name(const Object& o) {
  switch (o.index()) {
    case 0: return "ideal";
    case 1: return "module";
    default: return "map";
  }
}

const Ring& Workspace::require_ring() const {
  if (!ring) throw Error(ErrorCode::IllFormed, "workspace has no ring; run `redcor ring set` first");
  return *ring;
}

namespace {

template <typename T>
const T& lookup(const std::map<std::string, Object>& objects, const std::string& name,
                const char* kind) {
  auto it = objects.find(name);
  if (it == objects.end()) throw Error(ErrorCode::OutOfRange, std::string("no ") + kind + " named \"" + name + "\"");
  if (const T* v = std::get_if<T>(&it->second)) return *v;
  throw Error(ErrorCode::OutOfRange, "\"" + name + "\" is a " + kind_name(it->second) + ", not a " + kind);
}

}  // namespace

const Ideal& Workspace::ideal(const std::string& name) const {
  return lookup<Ideal>(objects, name, "ideal");
}

const Presentation& Workspace::module(const std::string& name) const {
  return lookup<Presentation>(objects, name, "module");
}

ModuleMap Workspace::map(const std::string& name) const {
  const auto& rec = lookup<MapRecord>(objects, name, "map");
  return ModuleMap(module(rec.source), module(rec.target), rec.matrix);
}

Json Workspace::to_json() const {
  Json objs = Json::object();
  for (const auto& [name, obj] : objects) {
    Json entry{{"kind", kind_name(obj)}};
    if (const auto* i = std::get_if<Ideal>(&obj)) entry.update(ideal_to_json(*i));
    if (const auto* m = std::get_if<Presentation>(&obj)) entry.update(presentation_to_json(*m));
    if (const auto* f = std::get_if<MapRecord>(&obj)) {
      entry["source"] = f->source;
      entry["target"] = f->target;
      entry["matrix"] = matrix_to_json(*ring, f->matrix);
    }
    objs[name] = entry;
  }
  return Json{{"schema_version", std::to_string(kSchemaMajor) + "." + std::to_string(kSchemaMinor)},
              {"tool_version", tool_version},
              {"created", created},
              {"ring", ring ? ring_to_json(*ring) : Json(nullptr)},
              {"objects", objs}};
}

Workspace Workspace::from_json(const Json& j) {
  const std::string version = as_string(field(j, "schema_version"), "schema_version");
  int major = -1;
  try {
    major = std::stoi(version);
  } catch (const std::exception&) {
    parse_fail("bad schema_version \"" + version + "\"");
  }
  if (major != kSchemaMajor)
    throw Error(ErrorCode::SchemaVersionMismatch,
                "workspace schema " + version + ", tool reads " + std::to_string(kSchemaMajor) + ".x");
  Workspace ws;
  if (j.contains("tool_version")) ws.tool_version = as_string(j.at("tool_version"), "tool_version");
  if (j.contains("created")) ws.created = as_string(j.at("created"), "created");
  const Json& r = field(j, "ring");
  if (!r.is_null()) ws.ring = ring_from_json(r);
  const Json& objs = field(j, "objects");
  if (!objs.is_object()) parse_fail("objects must be an object");
  if (!objs.empty() && !ws.ring) parse_fail("objects present without a ring");
  for (const auto& [name, entry] : objs.items()) {
    const std::string kind = as_string(field(entry, "kind"), "object kind");
    try {
      if (kind == "ideal") {
        ws.objects.emplace(name, ideal_from_json(*ws.ring, entry));
      } else if (kind == "module") {
        ws.objects.emplace(name, presentation_from_json(*ws.ring, entry));
      } else if (kind == "map") {
        MapRecord rec{as_string(field(entry, "source"), "source"),
                      as_string(field(entry, "target"), "target"), Matrix::from_rows(0, {})};
        ws.objects.emplace(name, rec);
      } else {
        parse_fail("unknown object kind \"" + kind + "\" for \"" + name + "\"");
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParseError) throw;
      parse_fail("object \"" + name + "\": " + e.what());
    }
  }
  // Maps need their modules for the column count.
  for (auto& [name, obj] : ws.objects) {
    auto* rec = std::get_if<MapRecord>(&obj);
    if (!rec) continue;
    try {
      const Presentation& tgt = ws.module(rec->target);
      ws.module(rec->source);
      rec->matrix = matrix_from_json(*ws.ring, tgt.gens(), objs.at(name).at("matrix"));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParseError) throw;
      parse_fail("map \"" + name + "\": " + e.what());
    }
  }
  return ws;
}

Workspace parse_workspace(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    parse_fail("line " + std::to_string(line) + ", column " + std::to_string(col) +
               ": malformed JSON");
  }
  return Workspace::from_json(j);
}

Workspace load_workspace(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot read workspace \"" + path + "\"");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_workspace(buf.str());
}

void save_workspace(const Workspace& ws, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IllFormed, "cannot write workspace \"" + path + "\"");
  out << ws.to_json().dump(2) << "\n";
}

}  // namespace redcor::io
