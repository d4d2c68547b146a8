#include "logcsm/scenario.hpp"

namespace logcsm {

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"p1-minus-two-points", "Gm as P^1 minus two points: log tangent bundle trivial, degree 0",
       R"json({
  "name": "p1-minus-two-points",
  "description": "Gm compactified by P^1 with boundary {0, infinity}",
  "ambient": {"product": [1]},
  "arrangement": {"snc": true, "components": [{"name": "zero", "class": [1]}, {"name": "infinity", "class": [1]}]},
  "outputs": ["csm_open", "csm_zero", "silred_rhs", "char_class", "verify_main", "verify_induction", "additivity", "chi", "chi_quadratic"],
  "scissor": {"kind": "complement", "whole": {"kind": "proj", "n": 1},
              "closed": {"kind": "union", "of": [{"kind": "point"}, {"kind": "point"}]}, "smooth_dim": 1}
})json"},
      {"p2-minus-line", "A^2 as P^2 minus a line",
       R"json({
  "name": "p2-minus-line",
  "description": "A^2 compactified by P^2 with boundary a line",
  "ambient": {"product": [2]},
  "arrangement": {"snc": true, "components": [{"name": "L", "class": [1]}]},
  "outputs": ["csm_open", "csm_zero", "silred_rhs", "char_class", "verify_main", "verify_induction", "additivity", "chi", "chi_quadratic"],
  "scissor": {"kind": "affine", "n": 2, "smooth_dim": 2}
})json"},
      {"p2-minus-two-lines", "A^1 x Gm as P^2 minus two lines",
       R"json({
  "name": "p2-minus-two-lines",
  "description": "A^1 x Gm compactified by P^2 with boundary two lines",
  "ambient": {"product": [2]},
  "arrangement": {"snc": true, "components": [{"name": "L1", "class": [1]}, {"name": "L2", "class": [1]}]},
  "outputs": ["csm_open", "csm_zero", "silred_rhs", "char_class", "verify_main", "verify_induction", "additivity", "chi", "chi_quadratic"],
  "scissor": {"kind": "product", "of": [{"kind": "affine", "n": 1}, {"kind": "gm"}], "smooth_dim": 2}
})json"},
      {"p1xp1-minus-diagonal-class", "P^1 x P^1 minus a smooth curve of class (1,1)",
       R"json({
  "name": "p1xp1-minus-diagonal-class",
  "description": "P^1 x P^1 minus a smooth (1,1) curve, itself a P^1",
  "ambient": {"product": [1, 1]},
  "arrangement": {"snc": true, "components": [{"name": "C", "class": [1, 1]}]},
  "outputs": ["csm_open", "csm_zero", "silred_rhs", "char_class", "verify_main", "verify_induction", "additivity", "chi", "chi_quadratic"],
  "scissor": {"kind": "complement", "whole": {"kind": "product", "of": [{"kind": "proj", "n": 1}, {"kind": "proj", "n": 1}]},
              "closed": {"kind": "proj", "n": 1}, "smooth_dim": 2}
})json"},
      {"p1xp1-three-curves", "P^1 x P^1 minus two rulings and a (1,1) curve",
       R"json({
  "name": "p1xp1-three-curves",
  "description": "A^2 minus the affine part of a (1,1) curve meeting both rulings at distinct points",
  "ambient": {"product": [1, 1]},
  "arrangement": {"snc": true, "components": [{"name": "F1", "class": [1, 0]}, {"name": "F2", "class": [0, 1]}, {"name": "C", "class": [1, 1]}]},
  "outputs": ["csm_open", "csm_zero", "verify_main", "verify_induction", "additivity", "chi"],
  "scissor": {"kind": "complement", "whole": {"kind": "affine", "n": 2}, "closed": {"kind": "gm"}}
})json"},
      {"p2-minus-conic", "P^2 minus a smooth conic",
       R"json({
  "name": "p2-minus-conic",
  "description": "P^2 minus a smooth conic",
  "ambient": {"product": [2]},
  "arrangement": {"snc": true, "components": [{"name": "Q", "class": [2]}]},
  "outputs": ["csm_open", "csm_zero", "verify_main", "verify_induction", "additivity", "chi"],
  "scissor": {"kind": "complement", "whole": {"kind": "proj", "n": 2}, "closed": {"kind": "proj", "n": 1}}
})json"},
      {"p3-minus-three-planes", "A^1 x Gm x Gm as P^3 minus three planes",
       R"json({
  "name": "p3-minus-three-planes",
  "description": "P^3 minus three coordinate planes",
  "ambient": {"product": [3]},
  "arrangement": {"snc": true, "components": [{"name": "P1", "class": [1]}, {"name": "P2", "class": [1]}, {"name": "P3", "class": [1]}]},
  "outputs": ["csm_open", "csm_zero", "verify_main", "verify_induction", "additivity", "chi", "chi_quadratic"],
  "scissor": {"kind": "product", "of": [{"kind": "affine", "n": 1}, {"kind": "gm"}, {"kind": "gm"}], "smooth_dim": 3}
})json"},
      {"blowup-compat-a2", "A^2 compactified by P^2 and by Bl_p P^2; classes agree after blow-down",
       R"json({
  "name": "blowup-compat-a2",
  "description": "Blow up a point p on the line at infinity; boundary becomes the strict transform H-E plus E",
  "ambient": {"blowup": {"base": {"product": [2]}, "exceptional": ["E"]}},
  "arrangement": {"snc": true, "components": [{"name": "L", "class": [1, -1]}, {"name": "E", "class": [0, 1]}]},
  "outputs": ["csm_open", "csm_zero", "verify_main", "verify_induction", "additivity", "chi", "compat"],
  "scissor": {"kind": "affine", "n": 2, "smooth_dim": 2},
  "diagram": {
    "base": {"product": [2]},
    "exceptional": ["E"],
    "upstairs": {"components": [{"name": "L", "class": [1, -1]}, {"name": "E", "class": [0, 1]}]},
    "downstairs": {"components": [{"name": "L", "class": [1]}]},
    "claim": "both boundaries cut out U = A^2",
    "expect_compatible": true
  }
})json"},
      {"blowup-compat-mismatch", "negative control: diagram whose two sides present different open sets",
       R"json({
  "name": "blowup-compat-mismatch",
  "description": "Upstairs presents A^2, downstairs presents A^1 x Gm; the checker must report incompatibility",
  "outputs": ["compat"],
  "diagram": {
    "base": {"product": [2]},
    "exceptional": ["E"],
    "upstairs": {"components": [{"name": "L", "class": [1, -1]}, {"name": "E", "class": [0, 1]}]},
    "downstairs": {"components": [{"name": "L1", "class": [1]}, {"name": "L2", "class": [1]}]},
    "claim": "deliberately mismatched (A^2 vs A^1 x Gm)",
    "expect_compatible": false
  }
})json"},
      {"gm-quadratic", "quadratic Euler characteristics of Gm",
       R"json({
  "name": "gm-quadratic",
  "description": "compactly supported and homological quadratic Euler characteristics of Gm",
  "outputs": ["chi", "chi_quadratic"],
  "scissor": {"kind": "gm", "smooth_dim": 1}
})json"},
  };
  return entries;
}

const CatalogEntry* find_catalog_entry(const std::string& name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace logcsm
