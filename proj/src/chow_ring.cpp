#include "logcsm/chow_ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace logcsm {

Ambient AmbientSpace::product(std::vector<int> factors) {
  if (factors.empty()) throw Error(ErrorCode::EmptyFactors, "a product ambient needs at least one factor");
  for (int n : factors) {
    if (n < 1) throw Error(ErrorCode::NonPositiveDimension, "factor dimension " + std::to_string(n));
  }

  auto space = std::shared_ptr<AmbientSpace>(new AmbientSpace());
  space->kind_ = Kind::ProductOfProjectiveSpaces;
  space->dimension_ = std::accumulate(factors.begin(), factors.end(), 0);
  space->factors_ = std::move(factors);

  const std::size_t k = space->factors_.size();
  space->strides_.assign(k, 1);
  for (std::size_t i = k - 1; i > 0; --i) {
    space->strides_[i - 1] = space->strides_[i] * static_cast<std::size_t>(space->factors_[i] + 1);
  }
  const std::size_t size = space->strides_[0] * static_cast<std::size_t>(space->factors_[0] + 1);

  space->exponents_.reserve(size);
  space->codims_.reserve(size);
  for (std::size_t index = 0; index < size; ++index) {
    std::vector<int> e(k);
    std::size_t rest = index;
    for (std::size_t i = 0; i < k; ++i) {
      e[i] = static_cast<int>(rest / space->strides_[i]);
      rest %= space->strides_[i];
    }
    space->codims_.push_back(std::accumulate(e.begin(), e.end(), 0));
    space->exponents_.push_back(std::move(e));
  }
  return space;
}

Ambient AmbientSpace::surface(SurfaceData data) {
  const std::size_t r = data.basis_labels.size();
  if (r == 0) throw Error(ErrorCode::InvalidSurfaceData, "empty divisor basis");
  std::set<std::string> seen;
  for (const auto& label : data.basis_labels) {
    if (label.empty()) throw Error(ErrorCode::InvalidSurfaceData, "empty basis label");
    if (!seen.insert(label).second) throw Error(ErrorCode::DuplicateLabel, "basis label '" + label + "'");
  }
  if (data.intersection_matrix.size() != r) {
    throw Error(ErrorCode::InvalidSurfaceData, "intersection matrix must be " + std::to_string(r) + "x" + std::to_string(r));
  }
  for (const auto& row : data.intersection_matrix) {
    if (row.size() != r) throw Error(ErrorCode::InvalidSurfaceData, "intersection matrix row has wrong length");
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (data.intersection_matrix[i][j] != data.intersection_matrix[j][i]) {
        throw Error(ErrorCode::InvalidSurfaceData, "intersection matrix is not symmetric");
      }
    }
  }
  if (data.canonical_class.size() != r) {
    throw Error(ErrorCode::InvalidSurfaceData, "canonical class has wrong length");
  }

  auto space = std::shared_ptr<AmbientSpace>(new AmbientSpace());
  space->kind_ = Kind::Surface;
  space->dimension_ = 2;
  space->surface_ = std::move(data);
  space->codims_.push_back(0);
  space->codims_.insert(space->codims_.end(), r, 1);
  space->codims_.push_back(2);
  return space;
}

std::size_t AmbientSpace::index_of(std::span<const int> exponents) const {
  if (kind_ != Kind::ProductOfProjectiveSpaces || exponents.size() != factors_.size()) {
    throw Error(ErrorCode::AmbientMismatch, "exponent vector does not match the ambient factors");
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > factors_[i]) {
      throw Error(ErrorCode::IndexOutOfRange, "exponent out of range for factor " + std::to_string(i + 1));
    }
    index += static_cast<std::size_t>(exponents[i]) * strides_[i];
  }
  return index;
}

std::string AmbientSpace::monomial_name(std::size_t index) const {
  if (kind_ == Kind::Surface) {
    if (index == 0) return "1";
    if (index == point_index()) return "pt";
    return surface_.basis_labels.at(index - 1);
  }
  const auto& e = exponents_.at(index);
  std::string name;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    name += "h";
    if (e.size() > 1) name += std::to_string(i + 1);
    if (e[i] > 1) name += "^" + std::to_string(e[i]);
  }
  return name.empty() ? "1" : name;
}

std::string AmbientSpace::describe() const {
  if (kind_ == Kind::Surface) {
    std::string out = "surface[";
    for (std::size_t i = 0; i < surface_.basis_labels.size(); ++i) {
      if (i) out += ",";
      out += surface_.basis_labels[i];
    }
    return out + "]";
  }
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += " x ";
    out += "P^" + std::to_string(factors_[i]);
  }
  return out;
}

Ambient make_product_ambient(std::vector<int> factors) { return AmbientSpace::product(std::move(factors)); }

Ambient as_surface(const Ambient& ambient) {
  if (ambient->is_surface()) return ambient;
  const auto& f = ambient->factors();
  if (f == std::vector<int>{2}) {
    return AmbientSpace::surface({{"H"}, {{1}}, {-3}, 3});
  }
  if (f == std::vector<int>{1, 1}) {
    return AmbientSpace::surface({{"H1", "H2"}, {{0, 1}, {1, 0}}, {-2, -2}, 4});
  }
  throw Error(ErrorCode::NotASurface, ambient->describe() + " is not a surface");
}

bool same_ambient(const Ambient& a, const Ambient& b) { return a == b || (a && b && *a == *b); }

namespace {

void require_same(const ChowClass& x, const ChowClass& y) {
  if (!same_ambient(x.ambient(), y.ambient())) {
    throw Error(ErrorCode::AmbientMismatch,
                x.ambient()->describe() + " vs " + y.ambient()->describe());
  }
}

}  // namespace

ChowClass::ChowClass(Ambient ambient) : ambient_(std::move(ambient)) {
  coefficients_.assign(ambient_->basis_size(), 0);
}

ChowClass::ChowClass(Ambient ambient, std::vector<std::int64_t> coefficients)
    : ambient_(std::move(ambient)), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != ambient_->basis_size()) {
    throw Error(ErrorCode::AmbientMismatch, "coefficient vector has wrong length for " + ambient_->describe());
  }
}

ChowClass ChowClass::one(const Ambient& ambient) {
  ChowClass c(ambient);
  c.coefficients_[0] = 1;
  return c;
}

ChowClass ChowClass::point(const Ambient& ambient) {
  ChowClass c(ambient);
  c.coefficients_[ambient->point_index()] = 1;
  return c;
}

ChowClass ChowClass::monomial(const Ambient& ambient, std::span<const int> exponents, std::int64_t coefficient) {
  ChowClass c(ambient);
  c.coefficients_[ambient->index_of(exponents)] = coefficient;
  return c;
}

ChowClass ChowClass::divisor(const Ambient& ambient, std::span<const std::int64_t> coordinates) {
  ChowClass c(ambient);
  if (ambient->is_surface()) {
    if (coordinates.size() != ambient->lattice_rank()) {
      throw Error(ErrorCode::AmbientMismatch, "divisor vector length does not match the lattice rank");
    }
    std::copy(coordinates.begin(), coordinates.end(), c.coefficients_.begin() + 1);
    return c;
  }
  const std::size_t k = ambient->factors().size();
  if (coordinates.size() != k) {
    throw Error(ErrorCode::AmbientMismatch, "multidegree length does not match the number of factors");
  }
  std::vector<int> e(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    e[i] = 1;
    c.coefficients_[ambient->index_of(e)] = coordinates[i];
    e[i] = 0;
  }
  return c;
}

bool ChowClass::is_zero() const noexcept {
  return std::all_of(coefficients_.begin(), coefficients_.end(), [](std::int64_t v) { return v == 0; });
}

ChowClass ChowClass::part(int codim) const {
  ChowClass out(ambient_);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (ambient_->codimension(i) == codim) out.coefficients_[i] = coefficients_[i];
  }
  return out;
}

int ChowClass::homogeneous_codimension() const {
  int codim = -1;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i] == 0) continue;
    const int c = ambient_->codimension(i);
    if (codim >= 0 && c != codim) return -1;
    codim = c;
  }
  return codim;
}

std::vector<std::int64_t> ChowClass::divisor_coordinates() const {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (ambient_->codimension(i) == 1) out.push_back(coefficients_[i]);
  }
  return out;
}

ChowClass ChowClass::operator-() const { return scaled(-1); }

ChowClass ChowClass::scaled(std::int64_t factor) const {
  ChowClass out(ambient_);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) out.coefficients_[i] = checked::mul(coefficients_[i], factor);
  return out;
}

ChowClass operator+(const ChowClass& x, const ChowClass& y) {
  require_same(x, y);
  ChowClass out(x.ambient_);
  for (std::size_t i = 0; i < out.coefficients_.size(); ++i) {
    out.coefficients_[i] = checked::add(x.coefficients_[i], y.coefficients_[i]);
  }
  return out;
}

ChowClass operator-(const ChowClass& x, const ChowClass& y) {
  require_same(x, y);
  ChowClass out(x.ambient_);
  for (std::size_t i = 0; i < out.coefficients_.size(); ++i) {
    out.coefficients_[i] = checked::sub(x.coefficients_[i], y.coefficients_[i]);
  }
  return out;
}

ChowClass operator*(const ChowClass& x, const ChowClass& y) {
  require_same(x, y);
  const AmbientSpace& a = *x.ambient_;
  ChowClass out(x.ambient_);
  auto& z = out.coefficients_;
  const auto& p = x.coefficients_;
  const auto& q = y.coefficients_;

  if (a.is_surface()) {
    // (a0, a1, a2)(b0, b1, b2) = (a0 b0, a0 b1 + b0 a1, a0 b2 + b0 a2 + a1.M.b1)
    const std::size_t r = a.lattice_rank();
    const std::size_t pt = a.point_index();
    z[0] = checked::mul(p[0], q[0]);
    for (std::size_t i = 1; i <= r; ++i) {
      z[i] = checked::add(checked::mul(p[0], q[i]), checked::mul(q[0], p[i]));
    }
    std::int64_t top = checked::add(checked::mul(p[0], q[pt]), checked::mul(q[0], p[pt]));
    for (std::size_t i = 0; i < r; ++i) {
      if (p[i + 1] == 0) continue;
      for (std::size_t j = 0; j < r; ++j) {
        if (q[j + 1] == 0 || a.pairing(i, j) == 0) continue;
        top = checked::add(top, checked::mul(checked::mul(p[i + 1], q[j + 1]), a.pairing(i, j)));
      }
    }
    z[pt] = top;
    return out;
  }

  const auto& factors = a.factors();
  std::vector<int> sum(factors.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    const auto& ei = a.exponents(i);
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (q[j] == 0) continue;
      const auto& ej = a.exponents(j);
      bool vanishes = false;
      for (std::size_t f = 0; f < factors.size(); ++f) {
        sum[f] = ei[f] + ej[f];
        if (sum[f] > factors[f]) {
          vanishes = true;
          break;
        }
      }
      if (vanishes) continue;
      const std::size_t k = a.index_of(sum);
      z[k] = checked::add(z[k], checked::mul(p[i], q[j]));
    }
  }
  return out;
}

bool ChowClass::operator==(const ChowClass& other) const {
  return same_ambient(ambient_, other.ambient_) && coefficients_ == other.coefficients_;
}

std::string ChowClass::to_string() const {
  std::vector<std::size_t> order(coefficients_.size());
  std::iota(order.begin(), order.end(), 0);
  // Graded display; within a codimension, h1 before h2 (descending lex).
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const int ci = ambient_->codimension(i), cj = ambient_->codimension(j);
    if (ci != cj) return ci < cj;
    return ambient_->is_surface() ? i < j : i > j;
  });

  std::ostringstream out;
  bool first = true;
  for (std::size_t i : order) {
    std::int64_t c = coefficients_[i];
    if (c == 0) continue;
    const std::string name = ambient_->monomial_name(i);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const std::uint64_t mag = c < 0 ? static_cast<std::uint64_t>(-(c + 1)) + 1 : static_cast<std::uint64_t>(c);
    if (name == "1") {
      out << mag;
    } else {
      if (mag != 1) out << mag;
      out << name;
    }
    first = false;
  }
  return first ? "0" : out.str();
}

ChowClass power(const ChowClass& x, int exponent) {
  ChowClass out = ChowClass::one(x.ambient());
  for (int i = 0; i < exponent; ++i) out = out * x;
  return out;
}

std::int64_t degree(const ChowClass& x) { return x.coefficient(x.ambient()->point_index()); }

std::pair<Ambient, BlowDownMap> blow_up_surface(const Ambient& target, const std::string& new_label) {
  if (!target->is_surface()) {
    throw Error(ErrorCode::NotASurface, target->describe() + " must be in surface form before blowing up");
  }
  const auto& old = target->surface_data();
  if (std::find(old.basis_labels.begin(), old.basis_labels.end(), new_label) != old.basis_labels.end()) {
    throw Error(ErrorCode::DuplicateLabel, "label '" + new_label + "' already in the divisor basis");
  }

  AmbientSpace::SurfaceData data = old;
  data.basis_labels.push_back(new_label);
  for (auto& row : data.intersection_matrix) row.push_back(0);
  std::vector<std::int64_t> last(data.basis_labels.size(), 0);
  last.back() = -1;
  data.intersection_matrix.push_back(std::move(last));
  data.canonical_class.push_back(1);
  data.c2_degree = checked::add(old.c2_degree, 1);

  Ambient source = AmbientSpace::surface(std::move(data));
  return {source, BlowDownMap{source, target, new_label}};
}

bool blowdown_invariants_hold(const BlowDownMap& map) {
  if (!map.source->is_surface() || !map.target->is_surface()) return false;
  const auto& up = map.source->surface_data();
  const auto& down = map.target->surface_data();
  const std::size_t r = down.basis_labels.size();
  if (up.basis_labels.size() != r + 1 || up.basis_labels.back() != map.exceptional_label) return false;
  for (std::size_t i = 0; i < r; ++i) {
    if (up.basis_labels[i] != down.basis_labels[i]) return false;
    if (up.canonical_class[i] != down.canonical_class[i]) return false;
    if (up.intersection_matrix[i][r] != 0) return false;
    for (std::size_t j = 0; j < r; ++j) {
      if (up.intersection_matrix[i][j] != down.intersection_matrix[i][j]) return false;
    }
  }
  return up.intersection_matrix[r][r] == -1 && up.canonical_class[r] == 1 && up.c2_degree == down.c2_degree + 1;
}

ChowClass pushforward_blowdown(const BlowDownMap& map, const ChowClass& x) {
  if (!same_ambient(x.ambient(), map.source)) {
    throw Error(ErrorCode::AmbientMismatch, "class does not live on the blow-up " + map.source->describe());
  }
  const std::size_t r = map.target->lattice_rank();
  std::vector<std::int64_t> c(map.target->basis_size(), 0);
  c[0] = x.coefficient(0);
  for (std::size_t i = 1; i <= r; ++i) c[i] = x.coefficient(i);
  c[r + 1] = x.coefficient(map.source->point_index());
  return ChowClass(map.target, std::move(c));
}

ChowClass pushforward_chain(std::span<const BlowDownMap> maps, const ChowClass& x) {
  ChowClass out = x;
  for (auto it = maps.rbegin(); it != maps.rend(); ++it) out = pushforward_blowdown(*it, out);
  return out;
}

}  // namespace logcsm
