#include <cilef/cli/instance.hpp>
#include <cilef/error.hpp>
#include <cilef/lefschetz.hpp>
#include <cilef/parser.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace cilef::cli {

namespace {

Polynomial parse_field(const std::string& text, const AlphabetPtr& alphabet,
                       const std::string& label) {
  try {
    return parse_polynomial(text, alphabet);
  } catch (const Error& e) {
    throw Error(e.kind(), label + ": " + e.detail());
  }
}

const nlohmann::json& string_array(const nlohmann::json& doc, const char* key) {
  const auto& v = doc.at(key);
  if (!v.is_array()) throw Error(ErrorKind::InvalidArgument, std::string(key) + " must be a list");
  for (const auto& s : v) {
    if (!s.is_string()) {
      throw Error(ErrorKind::InvalidArgument, std::string(key) + " must contain strings");
    }
  }
  return v;
}

}  // namespace

Instance parse_instance(const std::string& text, std::string source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, source + ": invalid JSON (" + e.what() + ")");
  }
  if (!doc.is_object()) throw Error(ErrorKind::InvalidArgument, source + ": expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "variables" && key != "generators" && key != "f" && key != "order" &&
        key != "seed") {
      throw Error(ErrorKind::InvalidArgument, source + ": unknown field '" + key + "'");
    }
  }
  if (!doc.contains("variables")) {
    throw Error(ErrorKind::InvalidArgument, source + ": missing 'variables'");
  }
  const bool has_generators = doc.contains("generators");
  const bool has_f = doc.contains("f");
  if (has_generators == has_f) {
    throw Error(ErrorKind::InvalidArgument,
                source + ": exactly one of 'generators' and 'f' must be given");
  }

  Instance out;
  out.source = std::move(source);
  std::vector<std::string> names;
  for (const auto& s : string_array(doc, "variables")) names.push_back(s.get<std::string>());
  if (names.size() < 2) throw Error(ErrorKind::InvalidArgument, "need at least 2 variables");
  out.variables = VariableAlphabet::make(std::move(names), Side::S);

  if (has_generators) {
    const auto& gens = string_array(doc, "generators");
    std::size_t j = 0;
    for (const auto& g : gens) {
      ++j;
      out.generators.push_back(
          parse_field(g.get<std::string>(), out.variables, "generator " + std::to_string(j)));
    }
  } else {
    if (!doc["f"].is_string()) throw Error(ErrorKind::InvalidArgument, "f must be a string");
    out.f = parse_field(doc["f"].get<std::string>(), out.variables, "f");
  }
  if (doc.contains("order")) {
    if (!doc["order"].is_string()) throw Error(ErrorKind::InvalidArgument, "order must be a string");
    out.order = parse_order_kind(doc["order"].get<std::string>());
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) {
      throw Error(ErrorKind::InvalidArgument, "seed must be a non-negative integer");
    }
    out.seed = doc["seed"].get<std::uint64_t>();
  }
  return out;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str(), path);
}

ArtinianCI build(const Instance& instance, OrderKind order) {
  const MonomialOrder mo(order, instance.variables);
  if (instance.f) return milnor_pipeline(*instance.f, mo);
  return build_algebra(instance.generators, mo);
}

}  // namespace cilef::cli
