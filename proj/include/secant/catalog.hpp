#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "secant/field.hpp"
#include "secant/polynomial.hpp"

namespace secant {

// M(n) = C(n+2, 2) - 1, the ambient dimension of v_2(P^n).
int m_of(int n);
int binomial2(int k);  // C(k, 2)

// --- constructions --------------------------------------------------------------

struct Construction;
using ConstructionPtr = std::shared_ptr<const Construction>;

struct VeroneseSpec { int n; };
struct SegreSpec { int a; int b; };
struct InnerProjectionSpec { int n; int s; };
struct IsoProjectionSpec { ConstructionPtr base; int eps; std::uint64_t seed; };
struct ConeSpec { ConstructionPtr base; };
struct SegreHyperplaneSpec { int a; int b; };

struct Construction {
  std::variant<VeroneseSpec, SegreSpec, InnerProjectionSpec, IsoProjectionSpec, ConeSpec,
               SegreHyperplaneSpec>
      kind;
};

template <typename Spec>
ConstructionPtr make_construction(Spec spec) {
  return std::make_shared<const Construction>(Construction{std::move(spec)});
}

// Catalog key grammar:
//   veronese:n | segre:a,b | bns:n,s | segre_hyp:a,b
//   isoproj:<key>,eps,seed | cone:<key>
// Throws CatalogKeyError on malformed input.
ConstructionPtr parse_catalog_key(std::string_view key);
std::string to_key(const Construction& c);

// False for constructions with a singular point (cones).
bool is_smooth(const Construction& c);

// --- catalog entries ------------------------------------------------------------

struct ExpectedInvariants {
  int n = 0;
  int N = 0;
  int delta = 0;
  std::optional<int> dim_II;
  std::string provenance;  // "published" (literature value), "trivial" or "derived" (oracle)
};

struct CatalogEntry {
  Parametrization parametrization;
  std::optional<ExpectedInvariants> expected;
  ConstructionPtr construction;
};

// Coordinates: all monomials of degree <= 2 in t1..tn, graded-lex order.
Parametrization veronese(const Field& field, int n);
// Products (1,u1..ua)_i * (1,v1..vb)_j.
Parametrization segre(const Field& field, int a, int b);
// B^n_s: v_2(P^n) with the monomials x_i x_j, 0 <= i <= j <= s, removed
// (x_0 is the homogenizing coordinate).
Parametrization veronese_inner_projection(const Field& field, int n, int s);
// psi(t, lambda) = (phi(t), lambda): the cone with vertex (0:...:0:1).
Parametrization cone(const Parametrization& phi);
// Section of P^a x P^b by x_00 + sum_{i<=min(a,b)} x_ii = 0, solved for
// v_0; the dependent coordinate x_00 is dropped so the image spans
// P^{ab+a+b-1}.
Parametrization segre_hyperplane_section(const Field& field, int a, int b);

// Composes phi with a seeded random full-rank (N+1-eps) x (N+1) matrix.
// Requires 1 <= eps < N - secant_dim.
Parametrization isomorphic_projection(const Parametrization& phi, int eps, std::uint64_t seed,
                                      int secant_dim);

// Random (rows x cols) matrix of full row rank drawn from `rng`.
Matrix random_full_rank_matrix(const Field& field, std::size_t rows, std::size_t cols, Rng& rng);

}  // namespace secant
