#include "secant/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "secant/errors.hpp"

namespace secant {

namespace {

std::uint64_t degree_of(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

}  // namespace

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = degree_of(a);
  const auto db = degree_of(b);
  if (da != db) return da < db;
  // Larger exponent on an earlier variable comes first.
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

// --- Polynomial --------------------------------------------------------------

Polynomial::Polynomial(const Field& field, std::size_t n_vars)
    : field_(field), n_vars_(n_vars) {}

Polynomial Polynomial::constant(const Field& field, std::size_t n_vars, const Scalar& c) {
  Polynomial p(field, n_vars);
  p.add_term(Exponents(n_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(const Field& field, std::size_t n_vars, std::size_t index) {
  if (index >= n_vars) throw PreconditionError("variable index out of range");
  Exponents e(n_vars, 0);
  e[index] = 1;
  return monomial(field, e, field.one());
}

Polynomial Polynomial::monomial(const Field& field, const Exponents& exponents,
                                const Scalar& c) {
  Polynomial p(field, exponents.size());
  p.add_term(exponents, c);
  return p;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(degree_of(terms_.rbegin()->first));
}

Scalar Polynomial::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? field_.zero() : it->second;
}

void Polynomial::add_term(const Exponents& exponents, const Scalar& c) {
  if (exponents.size() != n_vars_) {
    throw DimensionMismatchError("exponent vector of length " +
                                 std::to_string(exponents.size()) + " for " +
                                 std::to_string(n_vars_) + " variables");
  }
  if (!(c.field() == field_)) throw FieldMismatchError("polynomial term from a foreign field");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (n_vars_ != other.n_vars_) throw DimensionMismatchError("polynomials in different rings");
  if (!(field_ == other.field_)) throw FieldMismatchError("polynomials over different fields");
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.field_, a.n_vars_);
  Exponents e(a.n_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.field_ == b.field_ && a.n_vars_ == b.n_vars_ && a.terms_ == b.terms_;
}

Scalar Polynomial::evaluate(std::span<const Scalar> t) const {
  if (t.size() != n_vars_) {
    throw DimensionMismatchError("evaluate: expected " + std::to_string(n_vars_) +
                                 " coordinates, got " + std::to_string(t.size()));
  }
  Scalar sum = field_.zero();
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (std::size_t k = 0; k < n_vars_; ++k) {
      if (e[k] != 0) term *= t[k].pow(e[k]);
    }
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::partial_derivative(std::size_t index) const {
  if (index >= n_vars_) {
    throw PreconditionError("partial_derivative: variable index " + std::to_string(index) +
                            " out of range for " + std::to_string(n_vars_) + " variables");
  }
  Polynomial out(field_, n_vars_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponents d = e;
    --d[index];
    out.add_term(d, c * field_.from_int(e[index]));
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.to_string();
    for (std::size_t k = 0; k < n_vars_; ++k) {
      if (e[k] == 0) continue;
      os << "*t" << (k + 1);
      if (e[k] > 1) os << '^' << e[k];
    }
  }
  return os.str();
}

// --- Parametrization ---------------------------------------------------------

Parametrization::Parametrization(std::vector<Polynomial> coords, std::string label)
    : n_params_(0), coords_(std::move(coords)), label_(std::move(label)) {
  if (coords_.size() < 2) {
    throw PreconditionError("parametrization needs at least two coordinates");
  }
  n_params_ = coords_.front().n_vars();
  bool all_zero = true;
  for (const auto& c : coords_) {
    if (c.n_vars() != n_params_) {
      throw DimensionMismatchError("coordinates disagree on the parameter count");
    }
    if (!(c.field() == coords_.front().field())) {
      throw FieldMismatchError("coordinates over different fields");
    }
    all_zero = all_zero && c.is_zero();
  }
  if (all_zero) throw PreconditionError("all coordinates are the zero polynomial");
}

std::vector<Scalar> Parametrization::evaluate(std::span<const Scalar> t) const {
  std::vector<Scalar> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(c.evaluate(t));
  return out;
}

int Parametrization::coefficient_rank() const {
  // Columns indexed by the union of monomials.
  std::map<Exponents, std::size_t, GradedLexLess> column;
  for (const auto& c : coords_)
    for (const auto& [e, coeff] : c.terms()) column.try_emplace(e, 0);
  std::size_t next = 0;
  for (auto& [e, idx] : column) idx = next++;
  Matrix m(field(), coords_.size(), column.size());
  for (std::size_t r = 0; r < coords_.size(); ++r)
    for (const auto& [e, coeff] : coords_[r].terms()) m.at(r, column.at(e)) = coeff;
  return rank(m);
}

// --- Taylor data ---------------------------------------------------------------

std::size_t Taylor2Data::pair_index(std::size_t i, std::size_t j, std::size_t n) {
  if (i > j) std::swap(i, j);
  // Rows 0..i-1 hold n, n-1, ..., n-i+1 pairs.
  return i * n - i * (i - 1) / 2 + (j - i);
}

const std::vector<Scalar>& Taylor2Data::hessian(std::size_t i, std::size_t j) const {
  return hessians.at(pair_index(i, j, n_params));
}

Taylor2Data taylor2(const Parametrization& phi, std::span<const Scalar> t0) {
  const std::size_t n = phi.n_params();
  if (t0.size() != n) {
    throw DimensionMismatchError("taylor2: expected " + std::to_string(n) +
                                 " parameters, got " + std::to_string(t0.size()));
  }
  const Field& f = phi.field();
  const std::size_t width = phi.n_coords();

  std::uint32_t max_exp = 0;
  for (const auto& c : phi.coords())
    for (const auto& [e, coeff] : c.terms())
      for (auto x : e) max_exp = std::max(max_exp, x);

  // powers[k][d] = t0[k]^d
  std::vector<std::vector<Scalar>> powers(n);
  for (std::size_t k = 0; k < n; ++k) {
    powers[k].push_back(f.one());
    for (std::uint32_t d = 1; d <= max_exp; ++d) powers[k].push_back(powers[k].back() * t0[k]);
  }

  Taylor2Data out;
  out.n_params = n;
  out.value.assign(width, f.zero());
  out.jacobian.assign(n, std::vector<Scalar>(width, f.zero()));
  out.hessians.assign(n * (n + 1) / 2, std::vector<Scalar>(width, f.zero()));

  // Product of t0^e with exponent of variable a lowered by da and b by db.
  auto shifted = [&](const Exponents& e, std::size_t a, std::uint32_t da, std::size_t b,
                     std::uint32_t db) {
    Scalar prod = f.one();
    for (std::size_t k = 0; k < n; ++k) {
      std::uint32_t ek = e[k];
      if (k == a) ek -= da;
      if (k == b) ek -= db;
      if (ek != 0) prod *= powers[k][ek];
    }
    return prod;
  };

  for (std::size_t col = 0; col < width; ++col) {
    for (const auto& [e, c] : phi.coords()[col].terms()) {
      out.value[col] += c * shifted(e, n, 0, n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        if (e[i] == 0) continue;
        out.jacobian[i][col] += c * f.from_int(e[i]) * shifted(e, i, 1, n, 0);
        if (e[i] >= 2) {
          out.hessians[Taylor2Data::pair_index(i, i, n)][col] +=
              c * f.from_int(std::int64_t{e[i]} * (e[i] - 1)) * shifted(e, i, 2, n, 0);
        }
        for (std::size_t j = i + 1; j < n; ++j) {
          if (e[j] == 0) continue;
          out.hessians[Taylor2Data::pair_index(i, j, n)][col] +=
              c * f.from_int(std::int64_t{e[i]} * e[j]) * shifted(e, i, 1, j, 1);
        }
      }
    }
  }
  return out;
}

// --- composition ---------------------------------------------------------------

Parametrization compose_linear(const Parametrization& phi, const Matrix& L, std::string label) {
  if (L.cols() != phi.n_coords()) {
    throw DimensionMismatchError("compose_linear: matrix has " + std::to_string(L.cols()) +
                                 " columns, parametrization has " +
                                 std::to_string(phi.n_coords()) + " coordinates");
  }
  std::vector<Polynomial> coords;
  coords.reserve(L.rows());
  bool all_zero = true;
  for (std::size_t k = 0; k < L.rows(); ++k) {
    Polynomial psi(phi.field(), phi.n_params());
    for (std::size_t j = 0; j < L.cols(); ++j) {
      const Scalar& w = L.at(k, j);
      if (w.is_zero()) continue;
      for (const auto& [e, c] : phi.coords()[j].terms()) psi.add_term(e, w * c);
    }
    all_zero = all_zero && psi.is_zero();
    coords.push_back(std::move(psi));
  }
  if (all_zero) throw DegenerateProjectionError("composed coordinates are identically zero");
  if (label.empty()) label = "L*" + phi.label();
  return Parametrization(std::move(coords), std::move(label));
}

Parametrization substitute_affine(const Parametrization& phi, const AffineMap& map,
                                  std::string label) {
  const std::size_t n = phi.n_params();
  const std::size_t d = map.linear.cols();
  if (map.linear.rows() != n || map.offset.size() != n) {
    throw DimensionMismatchError("substitute_affine: map must have " + std::to_string(n) +
                                 " rows and offsets");
  }
  if (d > n) throw PreconditionError("substitute_affine: more new parameters than old");
  if (rank(map.linear) != static_cast<int>(d)) {
    throw RankDeficientError("substitute_affine: linear part is rank deficient");
  }
  const Field& f = phi.field();

  // images[k] = sum_j A[k][j] s_j + b_k; powers cached per variable.
  std::vector<std::vector<Polynomial>> powers(n);
  for (std::size_t k = 0; k < n; ++k) {
    Polynomial img = Polynomial::constant(f, d, map.offset[k]);
    for (std::size_t j = 0; j < d; ++j) {
      img += Polynomial::variable(f, d, j) * map.linear.at(k, j);
    }
    powers[k].push_back(Polynomial::constant(f, d, f.one()));
    powers[k].push_back(std::move(img));
  }
  auto power = [&](std::size_t k, std::uint32_t e) -> const Polynomial& {
    while (powers[k].size() <= e) powers[k].push_back(powers[k].back() * powers[k][1]);
    return powers[k][e];
  };

  std::vector<Polynomial> coords;
  coords.reserve(phi.n_coords());
  for (const auto& c : phi.coords()) {
    Polynomial out(f, d);
    for (const auto& [e, coeff] : c.terms()) {
      Polynomial term = Polynomial::constant(f, d, coeff);
      for (std::size_t k = 0; k < n; ++k) {
        if (e[k] != 0) term = term * power(k, e[k]);
      }
      out += term;
    }
    coords.push_back(std::move(out));
  }
  if (label.empty()) label = phi.label() + "|slice" + std::to_string(d);
  return Parametrization(std::move(coords), std::move(label));
}

}  // namespace secant
