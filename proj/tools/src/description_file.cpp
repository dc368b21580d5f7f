#include "edgecert/cli/description_file.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace edgecert::cli {

namespace {

using nlohmann::json;

constexpr std::string_view kMode = "maximal_simplices";

struct Location {
  std::size_t line = 1;
  std::size_t column = 1;
};

Location location_of(std::string_view text, std::size_t offset) {
  Location loc;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++loc.line;
      loc.column = 1;
    } else {
      ++loc.column;
    }
  }
  return loc;
}

// Semantic errors point at the first occurrence of the offending token, or
// just name the JSON path when the token cannot be found.
class Context {
 public:
  explicit Context(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& path, const std::string& message, const json* value = nullptr) const {
    std::string where;
    if (value != nullptr) {
      const std::string token = value->dump();
      if (const auto pos = text_.find(token); pos != std::string_view::npos) {
        const Location loc = location_of(text_, pos);
        where = "line " + std::to_string(loc.line) + ", column " + std::to_string(loc.column) + ": ";
      }
    }
    throw FormatError(where + path + ": " + message);
  }

  Rational rational(const json& v, const std::string& path) const {
    if (v.is_number_integer()) {
      return Rational::parse(v.dump());
    }
    if (v.is_string()) {
      try {
        return Rational::parse(v.get<std::string>());
      } catch (const std::exception& e) {
        fail(path, e.what(), &v);
      }
    }
    if (v.is_number_float()) fail(path, "write non-integer values as strings, e.g. \"0.625\" or \"5/8\"", &v);
    fail(path, "expected an integer or a rational string", &v);
  }

  std::string label(const json& v, const std::string& path) const {
    if (!v.is_string()) fail(path, "vertex labels must be strings", &v);
    std::string s = v.get<std::string>();
    if (s.empty()) fail(path, "empty vertex label", &v);
    return s;
  }

 private:
  std::string_view text_;
};

void check_keys(const Context& ctx, const json& obj, const std::string& path, std::set<std::string> allowed) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) ctx.fail(path, "unknown key '" + key + "'", &value);
  }
}

template <typename T>
T number_field(const Context& ctx, const json& obj, const std::string& key, const std::string& path, T fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if constexpr (std::is_floating_point_v<T>) {
    if (!v.is_number()) ctx.fail(path + "." + key, "expected a number", &v);
  } else {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      ctx.fail(path + "." + key, "expected a non-negative integer", &v);
    }
  }
  return v.get<T>();
}

EmbedConfig parse_embed(const Context& ctx, const json& obj) {
  if (!obj.is_object()) ctx.fail("embed", "expected an object", &obj);
  check_keys(ctx, obj, "embed",
             {"repulsion_strength", "spring_strength", "time_step", "phase1_iterations", "phase2_iterations",
              "rng_seed", "final_round_digits", "max_restarts"});
  EmbedConfig cfg;
  cfg.repulsion_strength = number_field(ctx, obj, "repulsion_strength", "embed", cfg.repulsion_strength);
  cfg.spring_strength = number_field(ctx, obj, "spring_strength", "embed", cfg.spring_strength);
  cfg.time_step = number_field(ctx, obj, "time_step", "embed", cfg.time_step);
  cfg.phase1_iterations = number_field(ctx, obj, "phase1_iterations", "embed", cfg.phase1_iterations);
  cfg.phase2_iterations = number_field(ctx, obj, "phase2_iterations", "embed", cfg.phase2_iterations);
  cfg.rng_seed = number_field(ctx, obj, "rng_seed", "embed", cfg.rng_seed);
  cfg.final_round_digits = number_field(ctx, obj, "final_round_digits", "embed", cfg.final_round_digits);
  cfg.max_restarts = number_field(ctx, obj, "max_restarts", "embed", cfg.max_restarts);
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    ctx.fail("embed", e.what());
  }
  return cfg;
}

std::string quoted(const std::string& s) { return json(s).dump(); }

std::string label_list(const std::vector<std::string>& labels) {
  std::string out = "[";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += ", ";
    out += quoted(labels[i]);
  }
  return out + "]";
}

std::string rational_json(const Rational& r) { return quoted(r.to_string()); }

}  // namespace

SimplicialComplex ComplexDescription::complex() const { return SimplicialComplex::from_maximal_simplices(data); }

Realization ComplexDescription::realization() const {
  if (!coordinates) throw FormatError("description has no coordinates");
  return Realization::from_labels(complex(), dim, *coordinates);
}

ComplexDescription parse_description(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const Location loc = location_of(text, e.byte == 0 ? 0 : e.byte - 1);
    throw FormatError("line " + std::to_string(loc.line) + ", column " + std::to_string(loc.column) +
                      ": syntax error: " + e.what());
  }
  const Context ctx(text);
  if (!doc.is_object()) ctx.fail("(root)", "expected a JSON object");
  check_keys(ctx, doc, "(root)", {"mode", "data", "dim", "desired_sq_lengths", "coordinates", "embed"});

  ComplexDescription d;
  if (!doc.contains("mode")) ctx.fail("mode", "missing");
  if (doc["mode"] != kMode) ctx.fail("mode", "only \"maximal_simplices\" is supported", &doc["mode"]);

  if (!doc.contains("data") || !doc["data"].is_array() || doc["data"].empty()) {
    ctx.fail("data", "expected a non-empty list of vertex-label lists");
  }
  for (std::size_t i = 0; i < doc["data"].size(); ++i) {
    const json& s = doc["data"][i];
    const std::string path = "data[" + std::to_string(i) + "]";
    if (!s.is_array() || s.empty()) ctx.fail(path, "expected a non-empty list of labels", &s);
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < s.size(); ++j) labels.push_back(ctx.label(s[j], path + "[" + std::to_string(j) + "]"));
    d.data.push_back(std::move(labels));
  }
  SimplicialComplex complex = [&] {
    try {
      return SimplicialComplex::from_maximal_simplices(d.data);
    } catch (const std::invalid_argument& e) {
      ctx.fail("data", e.what());
    }
  }();

  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1) {
    ctx.fail("dim", "expected a positive integer", doc.contains("dim") ? &doc["dim"] : nullptr);
  }
  d.dim = doc["dim"].get<std::size_t>();

  if (!doc.contains("desired_sq_lengths") || !doc["desired_sq_lengths"].is_object()) {
    ctx.fail("desired_sq_lengths", "expected an object");
  }
  const json& sq = doc["desired_sq_lengths"];
  check_keys(ctx, sq, "desired_sq_lengths", {"default", "edges"});
  try {
    if (sq.contains("default")) d.desired.set_default(ctx.rational(sq["default"], "desired_sq_lengths.default"));
    if (sq.contains("edges")) {
      if (!sq["edges"].is_array()) ctx.fail("desired_sq_lengths.edges", "expected a list", &sq["edges"]);
      for (std::size_t i = 0; i < sq["edges"].size(); ++i) {
        const json& e = sq["edges"][i];
        const std::string path = "desired_sq_lengths.edges[" + std::to_string(i) + "]";
        if (!e.is_array() || e.size() != 3) ctx.fail(path, "expected [label, label, value]", &e);
        d.desired.set(ctx.label(e[0], path), ctx.label(e[1], path), ctx.rational(e[2], path));
      }
    }
    d.desired.resolve(complex);
  } catch (const std::invalid_argument& e) {
    ctx.fail("desired_sq_lengths", e.what());
  }

  if (doc.contains("coordinates")) {
    const json& coords = doc["coordinates"];
    if (!coords.is_object()) ctx.fail("coordinates", "expected an object", &coords);
    std::map<std::string, Point> points;
    for (const auto& [label, values] : coords.items()) {
      const std::string path = "coordinates." + label;
      if (!values.is_array()) ctx.fail(path, "expected a list of coordinates", &values);
      Point p;
      for (std::size_t k = 0; k < values.size(); ++k) {
        p.push_back(ctx.rational(values[k], path + "[" + std::to_string(k) + "]"));
      }
      points.emplace(label, std::move(p));
    }
    try {
      Realization::from_labels(complex, d.dim, points);
    } catch (const std::invalid_argument& e) {
      ctx.fail("coordinates", e.what());
    }
    d.coordinates = std::move(points);
  }

  if (doc.contains("embed")) d.embed = parse_embed(ctx, doc["embed"]);
  return d;
}

ComplexDescription load_description(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_description(buf.str());
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

std::string serialize_description(const ComplexDescription& d) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"mode\": " << quoted(std::string(kMode)) << ",\n";
  os << "  \"data\": [";
  for (std::size_t i = 0; i < d.data.size(); ++i) os << (i > 0 ? ", " : "") << label_list(d.data[i]);
  os << "],\n";
  os << "  \"dim\": " << d.dim << ",\n";

  os << "  \"desired_sq_lengths\": {";
  bool first = true;
  if (d.desired.default_value()) {
    os << "\n    \"default\": " << rational_json(*d.desired.default_value());
    first = false;
  }
  if (!d.desired.entries().empty()) {
    os << (first ? "" : ",") << "\n    \"edges\": [";
    const auto& entries = d.desired.entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto& [key, value] = entries[i];
      os << (i > 0 ? ", " : "") << "[" << quoted(key.first) << ", " << quoted(key.second) << ", "
         << rational_json(value) << "]";
    }
    os << "]";
  }
  os << "\n  }";

  if (d.coordinates) {
    os << ",\n  \"coordinates\": {";
    std::size_t i = 0;
    for (const auto& [label, p] : *d.coordinates) {
      os << (i++ > 0 ? "," : "") << "\n    " << quoted(label) << ": [";
      for (std::size_t k = 0; k < p.size(); ++k) os << (k > 0 ? ", " : "") << rational_json(p[k]);
      os << "]";
    }
    os << "\n  }";
  }

  if (d.embed) {
    const EmbedConfig& c = *d.embed;
    os << ",\n  \"embed\": {\n";
    os << "    \"repulsion_strength\": " << json(c.repulsion_strength).dump() << ",\n";
    os << "    \"spring_strength\": " << json(c.spring_strength).dump() << ",\n";
    os << "    \"time_step\": " << json(c.time_step).dump() << ",\n";
    os << "    \"phase1_iterations\": " << c.phase1_iterations << ",\n";
    os << "    \"phase2_iterations\": " << c.phase2_iterations << ",\n";
    os << "    \"rng_seed\": " << c.rng_seed << ",\n";
    os << "    \"final_round_digits\": " << c.final_round_digits << ",\n";
    os << "    \"max_restarts\": " << c.max_restarts << "\n";
    os << "  }";
  }
  os << "\n}\n";
  return os.str();
}

ComplexDescription with_realization(ComplexDescription d, const Realization& r) {
  std::map<std::string, Point> points;
  for (std::size_t v = 0; v < r.complex().num_vertices(); ++v) points.emplace(r.complex().label(v), r.coord(v));
  d.coordinates = std::move(points);
  d.dim = r.dim();
  return d;
}

std::vector<Point> parse_point_list(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      throw FormatError("column " + std::to_string(pos + 1) + ": expected '" + std::string(1, c) + "'");
    }
    ++pos;
  };
  auto peek = [&] {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  };
  auto value = [&] {
    skip_ws();
    const std::size_t start = pos;
    const bool is_quoted = pos < text.size() && text[pos] == '"';
    if (is_quoted) {
      const auto close = text.find('"', pos + 1);
      if (close == std::string_view::npos) throw FormatError("column " + std::to_string(pos + 1) + ": unterminated string");
      pos = close + 1;
    } else {
      while (pos < text.size() && text[pos] != ',' && text[pos] != ']') ++pos;
    }
    std::string_view token = text.substr(start, pos - start);
    if (is_quoted) token = token.substr(1, token.size() - 2);
    try {
      return Rational::parse(token);
    } catch (const std::exception& e) {
      throw FormatError("column " + std::to_string(start + 1) + ": " + e.what());
    }
  };

  std::vector<Point> points;
  expect('[');
  if (peek() == ']') throw FormatError("point list is empty");
  while (true) {
    expect('[');
    Point p;
    if (peek() != ']') {
      while (true) {
        p.push_back(value());
        if (peek() == ',') {
          ++pos;
          continue;
        }
        break;
      }
    }
    expect(']');
    if (p.empty()) throw FormatError("point with no coordinates");
    points.push_back(std::move(p));
    if (peek() == ',') {
      ++pos;
      continue;
    }
    break;
  }
  expect(']');
  skip_ws();
  if (pos != text.size()) throw FormatError("column " + std::to_string(pos + 1) + ": trailing characters");
  return points;
}

}  // namespace edgecert::cli
