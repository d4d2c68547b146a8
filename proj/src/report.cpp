#include <chrono>
#include <iomanip>
#include <sstream>

#include "logcsm/scenario.hpp"

namespace logcsm {
namespace {

Json gw_json(const GWElement& x) {
  const GWInvariants inv = gw_invariants(x);
  Json j;
  j["one"] = x.a;
  j["minus_one"] = x.b;
  j["display"] = x.to_string();
  j["rank"] = inv.rank;
  j["signature"] = inv.signature;
  return j;
}

Json subset_names(const DivisorArrangement& arr, const std::vector<std::size_t>& subset) {
  Json names = Json::array();
  for (std::size_t i : subset) names.push_back(arr.components()[i].name);
  return names;
}

Json setup_json(const DivisorArrangement& arr) {
  Json j;
  j["ambient"] = arr.ambient()->describe();
  j["dimension"] = arr.ambient()->dimension();
  j["snc_asserted"] = arr.snc_asserted();
  Json components = Json::array();
  for (const auto& c : arr.components()) {
    Json item;
    item["name"] = c.name;
    item["class"] = c.divisor.to_string();
    components.push_back(std::move(item));
  }
  j["components"] = std::move(components);
  return j;
}

Json run_output(const Scenario& s, const std::string& output, bool& pass) {
  Json r;
  r["output"] = output;
  if (output == "csm_open") {
    r["class"] = class_table(csm_open(*s.arrangement));
  } else if (output == "csm_zero") {
    const ChowClass c = csm_zero(*s.arrangement);
    r["class"] = class_table(c);
    r["degree"] = degree(c);
  } else if (output == "silred_rhs") {
    const ChowClass c = silred_rhs(*s.arrangement);
    r["class"] = class_table(c);
    r["degree"] = degree(c);
  } else if (output == "char_class") {
    const ChowClass c = char_class_localization(*s.arrangement);
    r["class"] = class_table(c);
    r["degree"] = degree(c);
  } else if (output == "verify_main") {
    const MainIdentityReport v = verify_main_identity(*s.arrangement);
    r["pass"] = v.pass;
    r["csm_zero"] = class_table(v.csm_zero);
    r["silred_rhs"] = class_table(v.silred_rhs);
    r["char_class"] = class_table(v.char_class);
    pass = pass && v.pass;
  } else if (output == "verify_induction") {
    const InductionReport v = verify_silclaim_induction(*s.arrangement);
    r["pass"] = v.pass;
    Json levels = Json::array();
    for (const auto& level : v.levels) {
      Json l;
      l["level"] = level.level;
      l["pass"] = level.pass;
      l["literal_sum"] = class_table(level.literal_sum);
      l["recursive"] = class_table(level.recursive);
      l["closed_form"] = class_table(level.closed_form);
      l["localization"] = class_table(level.localization);
      if (level.mayer_vietoris_lhs) {
        l["mayer_vietoris_lhs"] = class_table(*level.mayer_vietoris_lhs);
        l["mayer_vietoris_rhs"] = class_table(*level.mayer_vietoris_rhs);
      }
      levels.push_back(std::move(l));
    }
    r["levels"] = std::move(levels);
    pass = pass && v.pass;
  } else if (output == "additivity") {
    const AdditivityReport v = additivity_check(*s.arrangement);
    r["pass"] = v.pass;
    Json strata = Json::array();
    for (const auto& term : v.strata) {
      Json t;
      t["subset"] = subset_names(*s.arrangement, term.subset);
      t["class"] = class_table(term.value);
      strata.push_back(std::move(t));
    }
    r["strata"] = std::move(strata);
    r["sum"] = class_table(v.sum);
    r["expected"] = class_table(v.expected);
    pass = pass && v.pass;
  } else if (output == "chi") {
    const std::int64_t chi = chi_compact(*s.scissor);
    r["expression"] = s.scissor->to_string();
    r["value"] = chi;
    if (s.arrangement) {
      const std::int64_t deg = degree(csm_zero(*s.arrangement));
      r["degree_csm_zero"] = deg;
      r["pass"] = deg == chi;
      pass = pass && deg == chi;
    }
  } else if (output == "chi_quadratic") {
    r["expression"] = s.scissor->to_string();
    r["compact"] = gw_json(chi_compact_quadratic(*s.scissor));
    if (s.scissor->smooth_dim) {
      r["homological"] = gw_json(chi_homological_quadratic(*s.scissor));
      r["note"] = "homological value = <-1>^dim * compact value (duality scaling for smooth varieties; modeling assumption)";
    } else {
      r["homological"] = nullptr;
    }
  } else if (output == "compat") {
    const CompatReport v = compactification_compat(s.diagram->diagram);
    const bool compatible = v.pass;
    r["claim"] = s.diagram->diagram.claim;
    r["blowdowns"] = s.diagram->diagram.maps.size();
    r["upstairs"] = setup_json(s.diagram->diagram.upstairs);
    r["downstairs"] = setup_json(s.diagram->diagram.downstairs);
    r["upstairs_csm_open"] = class_table(v.upstairs_csm_open);
    r["pushed_csm_open"] = class_table(v.pushed_csm_open);
    r["downstairs_csm_open"] = class_table(v.downstairs_csm_open);
    r["upstairs_char_class"] = class_table(v.upstairs_char_class);
    r["pushed_char_class"] = class_table(v.pushed_char_class);
    r["downstairs_char_class"] = class_table(v.downstairs_char_class);
    r["compatible"] = compatible;
    r["expect_compatible"] = s.diagram->expect_compatible;
    r["pass"] = compatible == s.diagram->expect_compatible;
    pass = pass && compatible == s.diagram->expect_compatible;
  }
  return r;
}

void render_class(std::ostream& out, const Json& table, const std::string& indent) {
  std::size_t width = std::string("monomial").size();
  for (const auto& t : table["terms"]) width = std::max(width, t["monomial"].get<std::string>().size());
  out << indent << std::left << std::setw(static_cast<int>(width)) << "monomial" << "  coefficient\n";
  for (const auto& t : table["terms"]) {
    out << indent << std::left << std::setw(static_cast<int>(width)) << t["monomial"].get<std::string>() << "  "
        << std::right << std::setw(11) << t["coefficient"].get<std::int64_t>() << "\n";
  }
  out << indent << "= " << table["display"].get<std::string>() << "\n";
}

const char* verdict(const Json& flag) { return flag.get<bool>() ? "PASS" : "FAIL"; }

void render_named_classes(std::ostream& out, const Json& node, std::initializer_list<const char*> keys,
                          const std::string& indent) {
  for (const char* key : keys) {
    if (!node.contains(key)) continue;
    out << indent << key << ":\n";
    render_class(out, node[key], indent + "  ");
  }
}

void render_gw(std::ostream& out, const char* label, const Json& g) {
  out << "  " << label << ": " << g["display"].get<std::string>() << "  (rank " << g["rank"].get<std::int64_t>()
      << ", signature " << g["signature"].get<std::int64_t>() << ")\n";
}

void render_scenario(std::ostream& out, const Json& report) {
  out << "scenario: " << report["scenario"].value("name", std::string("unnamed")) << "\n";
  if (report["scenario"].contains("description")) {
    out << "description: " << report["scenario"]["description"].get<std::string>() << "\n";
  }
  if (report.contains("setup")) {
    const Json& setup = report["setup"];
    out << "ambient: " << setup["ambient"].get<std::string>() << " (dimension " << setup["dimension"].get<int>()
        << ")\n";
    out << "arrangement:" << (setup["components"].empty() ? " empty" : "")
        << (setup["snc_asserted"].get<bool>() ? "" : " (SNC not asserted)") << "\n";
    for (const auto& c : setup["components"]) {
      out << "  " << c["name"].get<std::string>() << " = " << c["class"].get<std::string>() << "\n";
    }
  }

  for (const auto& r : report["results"]) {
    const std::string output = r["output"].get<std::string>();
    out << "\n[" << output << "]";
    if (r.contains("pass") && r["pass"].is_boolean()) out << " " << verdict(r["pass"]);
    out << "\n";
    if (r.contains("class")) {
      render_class(out, r["class"], "  ");
      if (r.contains("degree")) out << "  degree: " << r["degree"].get<std::int64_t>() << "\n";
    } else if (output == "verify_main") {
      render_named_classes(out, r, {"csm_zero", "silred_rhs", "char_class"}, "  ");
    } else if (output == "verify_induction") {
      for (const auto& l : r["levels"]) {
        out << "  level " << l["level"].get<std::size_t>() << ": " << verdict(l["pass"]) << "\n";
        render_named_classes(out, l,
                             {"literal_sum", "recursive", "closed_form", "localization", "mayer_vietoris_lhs",
                              "mayer_vietoris_rhs"},
                             "    ");
      }
    } else if (output == "additivity") {
      for (const auto& t : r["strata"]) {
        std::string name = "{";
        for (std::size_t i = 0; i < t["subset"].size(); ++i) {
          if (i) name += ",";
          name += t["subset"][i].get<std::string>();
        }
        name += "}";
        out << "  stratum " << name << ": " << t["class"]["display"].get<std::string>() << "\n";
      }
      out << "  sum:      " << r["sum"]["display"].get<std::string>() << "\n";
      out << "  expected: " << r["expected"]["display"].get<std::string>() << "\n";
    } else if (output == "chi") {
      out << "  expression: " << r["expression"].get<std::string>() << "\n";
      out << "  chi_c: " << r["value"].get<std::int64_t>() << "\n";
      if (r.contains("degree_csm_zero")) {
        out << "  degree(csm_zero): " << r["degree_csm_zero"].get<std::int64_t>() << "\n";
      }
    } else if (output == "chi_quadratic") {
      out << "  expression: " << r["expression"].get<std::string>() << "\n";
      render_gw(out, "compact", r["compact"]);
      if (!r["homological"].is_null()) {
        render_gw(out, "homological", r["homological"]);
        out << "  note: " << r["note"].get<std::string>() << "\n";
      }
    } else if (output == "compat") {
      out << "  claim: " << r["claim"].get<std::string>() << "\n";
      out << "  upstairs: " << r["upstairs"]["ambient"].get<std::string>() << ", downstairs: "
          << r["downstairs"]["ambient"].get<std::string>() << ", blow-downs: " << r["blowdowns"].get<std::size_t>()
          << "\n";
      for (const char* key : {"upstairs_csm_open", "pushed_csm_open", "downstairs_csm_open", "upstairs_char_class",
                              "pushed_char_class", "downstairs_char_class"}) {
        out << "  " << std::left << std::setw(22) << key << r[key]["display"].get<std::string>() << "\n";
      }
      out << "  compatible: " << (r["compatible"].get<bool>() ? "yes" : "no") << " (expected "
          << (r["expect_compatible"].get<bool>() ? "yes" : "no") << ")\n";
    }
  }
}

void render_suite(std::ostream& out, const Json& report) {
  const Json& b = report["suite"];
  out << "suite: seed " << b["seed"].get<std::uint64_t>() << ", max_dim " << b["max_dim"].get<int>()
      << ", max_components " << b["max_components"].get<int>() << ", max_multidegree "
      << b["max_multidegree"].get<int>() << ", count " << b["count"].get<int>() << "\n";
  out << std::left << std::setw(6) << "index" << std::setw(22) << "ambient" << std::setw(6) << "main" << std::setw(11)
      << "induction" << std::setw(11) << "additivity" << "components\n";
  for (const auto& c : report["cases"]) {
    std::string comps;
    for (const auto& comp : c["components"]) {
      if (!comps.empty()) comps += "; ";
      comps += comp.get<std::string>();
    }
    out << std::left << std::setw(6) << c["index"].get<int>() << std::setw(22) << c["ambient"].get<std::string>()
        << std::setw(6) << verdict(c["verify_main"]) << std::setw(11) << verdict(c["verify_induction"])
        << std::setw(11) << verdict(c["additivity"]) << comps << "\n";
  }
  const Json& s = report["summary"];
  const int count = s["count"].get<int>();
  out << "\nverify_main:      " << s["verify_main"].get<int>() << "/" << count << "\n";
  out << "verify_induction: " << s["verify_induction"].get<int>() << "/" << count << "\n";
  out << "additivity:       " << s["additivity"].get<int>() << "/" << count << "\n";
}

}  // namespace

Json class_table(const ChowClass& c) {
  Json j;
  j["ambient"] = c.ambient()->describe();
  j["display"] = c.to_string();
  Json terms = Json::array();
  for (std::size_t i = 0; i < c.coefficients().size(); ++i) {
    Json t;
    t["monomial"] = c.ambient()->monomial_name(i);
    t["coefficient"] = c.coefficient(i);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

Report run_scenario(const Scenario& scenario, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Report report;
  Json& doc = report.document;
  doc["engine"] = kEngineName;
  doc["version"] = kEngineVersion;
  doc["scenario"] = scenario.source;
  if (scenario.arrangement) doc["setup"] = setup_json(*scenario.arrangement);

  Json results = Json::array();
  for (const auto& output : scenario.outputs) {
    try {
      results.push_back(run_output(scenario, output, report.pass));
    } catch (const Error& e) {
      throw Error(e.code(), "while computing '" + output + "': " + e.what());
    }
  }
  doc["results"] = std::move(results);
  doc["pass"] = report.pass;
  if (options.timing) {
    doc["duration_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return report;
}

std::string render_json(const Json& report) { return report.dump(2) + "\n"; }

std::string render_text(const Json& report) {
  std::ostringstream out;
  if (report.contains("suite")) {
    render_suite(out, report);
  } else {
    render_scenario(out, report);
  }
  out << "\noverall: " << (report["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
  out << report["engine"].get<std::string>() << " " << report["version"].get<std::string>() << "\n";
  if (report.contains("duration_ms")) {
    out << "duration: " << std::fixed << std::setprecision(3) << report["duration_ms"].get<double>() << " ms\n";
  }
  return out.str();
}

}  // namespace logcsm
