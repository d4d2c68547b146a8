#include "logcsm/motivic_measure.hpp"

#include <sstream>

namespace logcsm {

std::string GWElement::to_string() const {
  std::ostringstream out;
  if (b == 0) {
    out << a;
  } else if (a == 0) {
    out << (b == 1 ? "" : b == -1 ? "-" : std::to_string(b)) << "<-1>";
  } else {
    out << a << (b < 0 ? " - " : " + ");
    const std::int64_t mag = b < 0 ? checked::neg(b) : b;
    if (mag != 1) out << mag;
    out << "<-1>";
  }
  return out.str();
}

GWElement gw_add(const GWElement& x, const GWElement& y) { return {checked::add(x.a, y.a), checked::add(x.b, y.b)}; }

GWElement gw_sub(const GWElement& x, const GWElement& y) { return {checked::sub(x.a, y.a), checked::sub(x.b, y.b)}; }

GWElement gw_mul(const GWElement& x, const GWElement& y) {
  // (a + b e)(c + d e) = (ac + bd) + (ad + bc) e
  return {checked::add(checked::mul(x.a, y.a), checked::mul(x.b, y.b)),
          checked::add(checked::mul(x.a, y.b), checked::mul(x.b, y.a))};
}

GWElement gw_pow(const GWElement& x, int exponent) {
  GWElement out = GWElement::one();
  for (int i = 0; i < exponent; ++i) out = gw_mul(out, x);
  return out;
}

GWInvariants gw_invariants(const GWElement& x) { return {checked::add(x.a, x.b), checked::sub(x.a, x.b)}; }

std::string SpaceExpression::to_string() const {
  std::string out;
  switch (kind) {
    case Kind::Point: out = "pt"; break;
    case Kind::Affine: out = "A^" + std::to_string(n); break;
    case Kind::Proj: out = "P^" + std::to_string(n); break;
    case Kind::Gm: out = "Gm"; break;
    case Kind::Product:
    case Kind::DisjointUnion: {
      const char* sep = kind == Kind::Product ? " x " : " + ";
      out = "(";
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) out += sep;
        out += children[i].to_string();
      }
      out += ")";
      break;
    }
    case Kind::Complement:
      out = children.size() == 2 ? "(" + children[0].to_string() + " \\ " + children[1].to_string() + ")" : "(complement?)";
      break;
  }
  return out;
}

void validate(const SpaceExpression& e) {
  using Kind = SpaceExpression::Kind;
  if (e.smooth_dim && *e.smooth_dim < 0) {
    throw Error(ErrorCode::MalformedExpression, "negative smooth_dim on " + e.to_string());
  }
  switch (e.kind) {
    case Kind::Point:
    case Kind::Gm:
      if (!e.children.empty()) throw Error(ErrorCode::MalformedExpression, "leaf with children");
      return;
    case Kind::Affine:
    case Kind::Proj:
      if (e.n < 1) throw Error(ErrorCode::MalformedExpression, "dimension must be >= 1 in " + e.to_string());
      if (!e.children.empty()) throw Error(ErrorCode::MalformedExpression, "leaf with children");
      return;
    case Kind::Product:
    case Kind::DisjointUnion:
      if (e.children.empty()) throw Error(ErrorCode::MalformedExpression, "empty product or union");
      break;
    case Kind::Complement:
      if (e.children.size() != 2) throw Error(ErrorCode::MalformedExpression, "complement needs exactly two operands");
      break;
  }
  for (const auto& child : e.children) validate(child);
}

namespace {

// Generic evaluation of an additive, multiplicative measure.
template <class Value, class Leaf, class Add, class Sub, class Mul>
Value evaluate(const SpaceExpression& e, const Leaf& leaf, const Add& add, const Sub& sub, const Mul& mul) {
  using Kind = SpaceExpression::Kind;
  switch (e.kind) {
    case Kind::Product: {
      Value v = evaluate<Value>(e.children.front(), leaf, add, sub, mul);
      for (std::size_t i = 1; i < e.children.size(); ++i) v = mul(v, evaluate<Value>(e.children[i], leaf, add, sub, mul));
      return v;
    }
    case Kind::DisjointUnion: {
      Value v = evaluate<Value>(e.children.front(), leaf, add, sub, mul);
      for (std::size_t i = 1; i < e.children.size(); ++i) v = add(v, evaluate<Value>(e.children[i], leaf, add, sub, mul));
      return v;
    }
    case Kind::Complement:
      return sub(evaluate<Value>(e.children[0], leaf, add, sub, mul), evaluate<Value>(e.children[1], leaf, add, sub, mul));
    default:
      return leaf(e);
  }
}

}  // namespace

std::int64_t chi_compact(const SpaceExpression& e) {
  validate(e);
  using Kind = SpaceExpression::Kind;
  return evaluate<std::int64_t>(
      e,
      [](const SpaceExpression& leaf) -> std::int64_t {
        switch (leaf.kind) {
          case Kind::Point: return 1;
          case Kind::Affine: return 1;
          case Kind::Proj: return leaf.n + 1;
          default: return 0;  // Gm
        }
      },
      checked::add, checked::sub, checked::mul);
}

GWElement chi_compact_quadratic(const SpaceExpression& e) {
  validate(e);
  using Kind = SpaceExpression::Kind;
  const GWElement eps = GWElement::epsilon();
  return evaluate<GWElement>(
      e,
      [&](const SpaceExpression& leaf) -> GWElement {
        switch (leaf.kind) {
          case Kind::Point: return GWElement::one();
          case Kind::Affine: return gw_pow(eps, leaf.n);
          case Kind::Proj: {
            GWElement sum{};
            for (int i = 0; i <= leaf.n; ++i) sum = gw_add(sum, gw_pow(eps, i));
            return sum;
          }
          default: return gw_sub(eps, GWElement::one());  // Gm
        }
      },
      gw_add, gw_sub, gw_mul);
}

GWElement chi_homological_quadratic(const SpaceExpression& e) {
  if (!e.smooth_dim) throw Error(ErrorCode::MissingSmoothDim, e.to_string() + " carries no smooth_dim annotation");
  return gw_mul(gw_pow(GWElement::epsilon(), *e.smooth_dim), chi_compact_quadratic(e));
}

}  // namespace logcsm
