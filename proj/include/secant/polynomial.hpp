#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "secant/field.hpp"
#include "secant/linalg.hpp"

namespace secant {

using Exponents = std::vector<std::uint32_t>;

// Graded lexicographic order: lower total degree first; within a degree,
// t1 dominates t2 dominates ... (so 1, t1, t2, t1^2, t1*t2, t2^2).
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial. Stored coefficients are never zero.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Scalar, GradedLexLess>;

  Polynomial(const Field& field, std::size_t n_vars);

  static Polynomial constant(const Field& field, std::size_t n_vars, const Scalar& c);
  // The variable t_{index+1}; index is 0-based.
  static Polynomial variable(const Field& field, std::size_t n_vars, std::size_t index);
  static Polynomial monomial(const Field& field, const Exponents& exponents, const Scalar& c);

  const Field& field() const noexcept { return field_; }
  std::size_t n_vars() const noexcept { return n_vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int total_degree() const;

  // Coefficient of the given monomial (zero when absent).
  Scalar coefficient(const Exponents& exponents) const;
  void add_term(const Exponents& exponents, const Scalar& c);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Scalar& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  // Throws DimensionMismatchError unless t.size() == n_vars().
  Scalar evaluate(std::span<const Scalar> t) const;
  // Formal partial derivative in the 0-based variable `index`.
  Polynomial partial_derivative(std::size_t index) const;

  // coefficient*t1^a1*...*tn^an joined by " + ", graded-lex order.
  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& other) const;

  Field field_;
  std::size_t n_vars_;
  TermMap terms_;
};

// Affine polynomial map t -> [phi_0(t) : ... : phi_N(t)].
class Parametrization {
 public:
  // Throws PreconditionError on fewer than two coordinates or all-zero
  // coordinates, DimensionMismatchError when the coordinates disagree on the
  // variable count, FieldMismatchError on mixed fields.
  Parametrization(std::vector<Polynomial> coords, std::string label);

  std::size_t n_params() const noexcept { return n_params_; }
  std::size_t n_coords() const noexcept { return coords_.size(); }
  // Ambient projective dimension N.
  int ambient_dim() const noexcept { return static_cast<int>(coords_.size()) - 1; }
  const std::vector<Polynomial>& coords() const noexcept { return coords_; }
  const std::string& label() const noexcept { return label_; }
  const Field& field() const noexcept { return coords_.front().field(); }

  std::vector<Scalar> evaluate(std::span<const Scalar> t) const;

  // Rank of the coefficient matrix of the coordinates (nondegeneracy test:
  // equals n_coords() iff the image spans P^N).
  int coefficient_rank() const;

 private:
  std::size_t n_params_;
  std::vector<Polynomial> coords_;
  std::string label_;
};

// Value, first and second partials of a parametrization at one point.
struct Taylor2Data {
  std::vector<Scalar> value;
  std::vector<std::vector<Scalar>> jacobian;  // [i][k] = d phi_k / d t_i
  // Upper-triangular storage: hessians[pair_index(i, j)][k] for i <= j.
  std::vector<std::vector<Scalar>> hessians;
  std::size_t n_params = 0;

  static std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n);
  const std::vector<Scalar>& hessian(std::size_t i, std::size_t j) const;
};

Taylor2Data taylor2(const Parametrization& phi, std::span<const Scalar> t0);

// psi_k = sum_j L[k][j] * phi_j. Throws DimensionMismatchError when
// L.cols() != N+1 and DegenerateProjectionError when every psi_k is zero.
Parametrization compose_linear(const Parametrization& phi, const Matrix& L,
                               std::string label = {});

// t = linear * s + offset; `linear` is n_params x d.
struct AffineMap {
  Matrix linear;
  std::vector<Scalar> offset;
};

// Throws PreconditionError when d > n_params and RankDeficientError when
// the linear part has rank < d.
Parametrization substitute_affine(const Parametrization& phi, const AffineMap& map,
                                  std::string label = {});

}  // namespace secant
