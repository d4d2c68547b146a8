#include <algorithm>
#include <set>

#include "logcsm/scenario.hpp"

namespace logcsm {
namespace {

[[noreturn]] void violation(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::SchemaViolation, path + ": " + what);
}

void require_object(const Json& node, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!node.is_object()) violation(path, "expected an object");
  for (const auto& item : node.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return item.key() == k; })) {
      violation(path, "unknown key '" + item.key() + "'");
    }
  }
}

const Json& member(const Json& node, const char* key, const std::string& path) {
  auto it = node.find(key);
  if (it == node.end()) violation(path, std::string("missing '") + key + "'");
  return *it;
}

std::int64_t as_int(const Json& node, const std::string& path) {
  if (!node.is_number_integer()) violation(path, "expected an integer");
  if (node.is_number_unsigned() && node.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    violation(path, "integer out of range");
  }
  return node.get<std::int64_t>();
}

int as_small_int(const Json& node, const std::string& path) {
  const std::int64_t v = as_int(node, path);
  if (v < -1000000 || v > 1000000) violation(path, "integer out of range");
  return static_cast<int>(v);
}

std::string as_string(const Json& node, const std::string& path) {
  if (!node.is_string()) violation(path, "expected a string");
  return node.get<std::string>();
}

const Json& as_array(const Json& node, const std::string& path) {
  if (!node.is_array()) violation(path, "expected an array");
  return node;
}

std::vector<std::int64_t> int_vector(const Json& node, const std::string& path) {
  std::vector<std::int64_t> out;
  std::size_t i = 0;
  for (const auto& v : as_array(node, path)) out.push_back(as_int(v, path + "[" + std::to_string(i++) + "]"));
  return out;
}

std::vector<std::string> string_vector(const Json& node, const std::string& path) {
  std::vector<std::string> out;
  std::size_t i = 0;
  for (const auto& v : as_array(node, path)) out.push_back(as_string(v, path + "[" + std::to_string(i++) + "]"));
  return out;
}

// Errors raised while building domain objects from input are schema problems.
template <class F>
auto building(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SchemaViolation || e.code() == ErrorCode::ParseError) throw;
    violation(path, e.what());
  }
}

struct AmbientChain {
  Ambient ambient;
  std::vector<BlowDownMap> maps;
};

AmbientChain parse_ambient_chain(const Json& node, const std::string& path) {
  require_object(node, path, {"product", "surface", "blowup"});
  if (node.size() != 1) violation(path, "exactly one of 'product', 'surface', 'blowup' is required");

  if (node.contains("product")) {
    std::vector<int> factors;
    std::size_t i = 0;
    for (const auto& v : as_array(node["product"], path + ".product")) {
      factors.push_back(as_small_int(v, path + ".product[" + std::to_string(i++) + "]"));
    }
    return {building(path, [&] { return make_product_ambient(factors); }), {}};
  }

  if (node.contains("surface")) {
    const std::string p = path + ".surface";
    const Json& s = node["surface"];
    require_object(s, p, {"labels", "matrix", "canonical", "c2"});
    AmbientSpace::SurfaceData data;
    data.basis_labels = string_vector(member(s, "labels", p), p + ".labels");
    std::size_t i = 0;
    for (const auto& row : as_array(member(s, "matrix", p), p + ".matrix")) {
      data.intersection_matrix.push_back(int_vector(row, p + ".matrix[" + std::to_string(i++) + "]"));
    }
    data.canonical_class = int_vector(member(s, "canonical", p), p + ".canonical");
    data.c2_degree = as_int(member(s, "c2", p), p + ".c2");
    return {building(p, [&] { return AmbientSpace::surface(std::move(data)); }), {}};
  }

  const std::string p = path + ".blowup";
  const Json& b = node["blowup"];
  require_object(b, p, {"base", "exceptional"});
  AmbientChain chain = parse_ambient_chain(member(b, "base", p), p + ".base");
  const auto labels = string_vector(member(b, "exceptional", p), p + ".exceptional");
  if (labels.empty()) violation(p + ".exceptional", "at least one exceptional label is required");
  building(p, [&] {
    chain.ambient = as_surface(chain.ambient);
    for (const auto& label : labels) {
      auto [up, map] = blow_up_surface(chain.ambient, label);
      chain.maps.push_back(std::move(map));
      chain.ambient = up;
    }
    return 0;
  });
  return chain;
}

DivisorArrangement parse_arrangement(const Json& node, const Ambient& ambient, const std::string& path) {
  require_object(node, path, {"snc", "components"});
  bool snc = true;
  if (node.contains("snc")) {
    if (!node["snc"].is_boolean()) violation(path + ".snc", "expected a boolean");
    snc = node["snc"].get<bool>();
  }
  std::vector<DivisorComponent> components;
  std::size_t i = 0;
  for (const auto& c : as_array(member(node, "components", path), path + ".components")) {
    const std::string p = path + ".components[" + std::to_string(i++) + "]";
    require_object(c, p, {"name", "class"});
    const std::string name = as_string(member(c, "name", p), p + ".name");
    const auto coords = int_vector(member(c, "class", p), p + ".class");
    const std::size_t expected = ambient->is_surface() ? ambient->lattice_rank() : ambient->factors().size();
    if (coords.size() != expected) {
      violation(p + ".class", "expected " + std::to_string(expected) + " entries for " + ambient->describe());
    }
    components.push_back({name, ChowClass::divisor(ambient, coords)});
  }
  return building(path, [&] { return DivisorArrangement(ambient, std::move(components), snc); });
}

DiagramSpec parse_diagram(const Json& node, const std::string& path) {
  require_object(node, path, {"base", "exceptional", "upstairs", "downstairs", "claim", "expect_compatible"});
  AmbientChain chain = parse_ambient_chain(member(node, "base", path), path + ".base");
  if (!chain.maps.empty()) violation(path + ".base", "the base of a diagram must not itself be a blow-up");
  std::vector<std::string> labels;
  if (node.contains("exceptional")) labels = string_vector(node["exceptional"], path + ".exceptional");

  Ambient down = chain.ambient;
  Ambient up = down;
  std::vector<BlowDownMap> maps;
  if (!labels.empty()) {
    building(path, [&] {
      down = as_surface(down);
      up = down;
      for (const auto& label : labels) {
        auto [source, map] = blow_up_surface(up, label);
        maps.push_back(std::move(map));
        up = source;
      }
      return 0;
    });
  }

  DiagramSpec spec{CompactificationDiagram{parse_arrangement(member(node, "upstairs", path), up, path + ".upstairs"),
                                           parse_arrangement(member(node, "downstairs", path), down, path + ".downstairs"),
                                           std::move(maps), ""},
                   true};
  if (node.contains("claim")) spec.diagram.claim = as_string(node["claim"], path + ".claim");
  if (node.contains("expect_compatible")) {
    if (!node["expect_compatible"].is_boolean()) violation(path + ".expect_compatible", "expected a boolean");
    spec.expect_compatible = node["expect_compatible"].get<bool>();
  }
  return spec;
}

SpaceExpression parse_expression_at(const Json& node, const std::string& path) {
  require_object(node, path, {"kind", "n", "of", "whole", "closed", "smooth_dim"});
  const std::string kind = as_string(member(node, "kind", path), path + ".kind");
  SpaceExpression e;
  if (kind == "point") {
    e = SpaceExpression::point();
  } else if (kind == "gm") {
    e = SpaceExpression::gm();
  } else if (kind == "affine" || kind == "proj") {
    const int n = as_small_int(member(node, "n", path), path + ".n");
    e = kind == "affine" ? SpaceExpression::affine(n) : SpaceExpression::proj(n);
  } else if (kind == "product" || kind == "union") {
    std::vector<SpaceExpression> children;
    std::size_t i = 0;
    for (const auto& c : as_array(member(node, "of", path), path + ".of")) {
      children.push_back(parse_expression_at(c, path + ".of[" + std::to_string(i++) + "]"));
    }
    e = kind == "product" ? SpaceExpression::product(std::move(children))
                          : SpaceExpression::disjoint_union(std::move(children));
  } else if (kind == "complement") {
    e = SpaceExpression::complement(parse_expression_at(member(node, "whole", path), path + ".whole"),
                                    parse_expression_at(member(node, "closed", path), path + ".closed"));
  } else {
    violation(path + ".kind", "unknown expression kind '" + kind + "'");
  }
  if (node.contains("smooth_dim")) e.smooth_dim = as_small_int(node["smooth_dim"], path + ".smooth_dim");
  building(path, [&] {
    validate(e);
    return 0;
  });
  return e;
}

std::pair<std::size_t, std::size_t> line_and_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

Ambient parse_ambient(const Json& node) { return parse_ambient_chain(node, "ambient").ambient; }

SpaceExpression parse_expression(const Json& node) { return parse_expression_at(node, "scissor"); }

Scenario parse_scenario(const Json& document) {
  require_object(document, "scenario", {"name", "description", "ambient", "arrangement", "outputs", "scissor", "diagram"});
  Scenario s;
  s.source = document;
  s.name = document.contains("name") ? as_string(document["name"], "name") : "unnamed";
  if (document.contains("description")) s.description = as_string(document["description"], "description");

  if (document.contains("arrangement") && !document.contains("ambient")) {
    violation("arrangement", "an arrangement needs an 'ambient'");
  }
  if (document.contains("ambient")) {
    const Ambient ambient = parse_ambient(document["ambient"]);
    s.arrangement = document.contains("arrangement")
                        ? parse_arrangement(document["arrangement"], ambient, "arrangement")
                        : DivisorArrangement(ambient, {});
  }
  if (document.contains("scissor")) s.scissor = parse_expression(document["scissor"]);
  if (document.contains("diagram")) s.diagram = parse_diagram(document["diagram"], "diagram");

  s.outputs = string_vector(member(document, "outputs", "scenario"), "outputs");
  if (s.outputs.empty()) violation("outputs", "at least one output is required");
  std::set<std::string> seen;
  for (const auto& o : s.outputs) {
    const auto& known = known_outputs();
    if (std::find(known.begin(), known.end(), o) == known.end()) violation("outputs", "unknown output '" + o + "'");
    if (!seen.insert(o).second) violation("outputs", "duplicate output '" + o + "'");
    const bool needs_arrangement = o != "chi" && o != "chi_quadratic" && o != "compat";
    if (needs_arrangement && !s.arrangement) violation("outputs", "'" + o + "' needs an ambient");
    if ((o == "chi" || o == "chi_quadratic") && !s.scissor) violation("outputs", "'" + o + "' needs a 'scissor' expression");
    if (o == "compat" && !s.diagram) violation("outputs", "'compat' needs a 'diagram'");
    if (o == "verify_induction" && s.arrangement && s.arrangement->size() == 0) {
      violation("outputs", "'verify_induction' needs at least one component");
    }
  }
  return s;
}

Scenario parse_scenario(const std::string& text) {
  Json document;
  try {
    document = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const auto [line, column] = line_and_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + e.what());
  }
  return parse_scenario(document);
}

}  // namespace logcsm
