#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "secant/catalog.hpp"
#include "secant/field.hpp"
#include "secant/linalg.hpp"
#include "secant/polynomial.hpp"

namespace secant {

struct EngineConfig {
  Field field = Field::prime_field();
  std::uint64_t seed = 0;
  int trials = 3;
  // Extra draws allowed per stage for special points before giving up.
  int max_resamples = 16;
};

// Projective tangent space at phi(point): row 0 is phi(point), rows 1..n are
// the partials.
struct TangentFrame {
  std::vector<Scalar> point;
  Matrix rows;
};

// Second fundamental form at a point. quadric_matrices[k] is the symmetric
// Gram matrix (over parameter directions) of the k-th independent quadric.
struct IIData {
  std::vector<Scalar> base_point;
  int dim_II = -1;
  std::vector<Matrix> quadric_matrices;
};

struct GaussContact {
  int dimension = 0;
  // The quadric system was empty (the variety is linear); `dimension` is
  // then the full dimension of the variety.
  bool empty_system = false;
};

struct SecantReport {
  std::string label;
  int n = 0;
  int N = 0;
  int dim_SX = 0;
  int delta = 0;
  std::optional<int> dim_II;
  // Absent when SX fills P^N (the tangential projection stages are skipped).
  std::optional<int> tangential_fiber_dim;
  std::optional<int> gauss_contact_dim_W;
  bool gauss_system_empty = false;
  bool secant_fills_ambient = false;
  int trials = 0;
  Field field = Field::prime_field();
  std::uint64_t seed = 0;

  friend bool operator==(const SecantReport&, const SecantReport&) = default;
};

// Same invariants, ignoring label and seed metadata.
bool same_invariants(const SecantReport& a, const SecantReport& b);

std::vector<Scalar> random_point(const Field& field, std::size_t n, Rng& rng);

// Throws DimensionMismatchError on a wrong-length point and
// DegeneratePointError when phi(t0) is the zero vector.
TangentFrame tangent_frame(const Parametrization& phi, std::span<const Scalar> t0);

// dim X: max over `trials` generic points of rank(frame) - 1.
int variety_dimension(const Parametrization& phi, int trials, Rng& rng, int max_resamples = 16);

// dim SX via Terracini: max rank of two stacked frames at independent points, minus one.
int secant_dimension(const Parametrization& phi, int trials, Rng& rng, int max_resamples = 16);

int secant_defect(const Parametrization& phi, int trials, Rng& rng, int max_resamples = 16);

// Draws a point whose frame has rank dim + 1. Throws ResampleExhaustedError.
std::vector<Scalar> generic_point(const Parametrization& phi, int dim, Rng& rng,
                                  int max_resamples, const std::string& stage);

// Projection from the tangent space at phi(t0), landing in P^{N-dim-1}.
// Throws DegeneratePointError if the frame at t0 does not have rank dim + 1.
Parametrization tangential_projection(const Parametrization& phi, std::span<const Scalar> t0,
                                      int dim);

// n_params - dim(image).
int generic_fiber_dimension(const Parametrization& phi, int trials, Rng& rng,
                            int max_resamples = 16);

// Second fundamental form at t0 (frame must have rank dim + 1).
IIData second_fundamental_form(const Parametrization& phi, std::span<const Scalar> t0, int dim);

// Dimension of the generic Gauss contact locus of the image of phi. The
// parametrization is first restricted to a random affine slice with as many
// parameters as the image has dimensions.
GaussContact gauss_contact_dimension(const Parametrization& phi, int trials, Rng& rng,
                                     int max_resamples = 16);

// Full pipeline; the generator is seeded from (config.seed, phi.label()).
SecantReport analyze(const Parametrization& phi, const EngineConfig& config);

// Builds the parametrization of a catalog construction. Isomorphic
// projections are checked after the fact: a changed secant dimension raises
// ProjectionHitSecantError.
CatalogEntry build_entry(const ConstructionPtr& construction, const EngineConfig& config);

}  // namespace secant
