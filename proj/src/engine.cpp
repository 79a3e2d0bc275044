#include "secant/engine.hpp"

#include <algorithm>
#include <limits>

#include "secant/errors.hpp"

namespace secant {

namespace {

// Repeats `measure` until `trials` accepted values exist and returns their
// maximum. A draw that is degenerate (nullopt) or below the running maximum
// is redrawn; more than `max_resamples` redraws is an error.
template <typename Measure>
int max_generic_rank(int trials, int max_resamples, const std::string& stage, Measure measure) {
  if (trials < 1) throw PreconditionError(stage + ": trials must be >= 1");
  int best = -1;
  int resamples = 0;
  for (int accepted = 0; accepted < trials;) {
    std::optional<int> r = measure();
    if (!r || *r < best) {
      if (++resamples > max_resamples) {
        throw ResampleExhaustedError(stage, std::to_string(resamples - 1) +
                                                " redraws hit special points");
      }
      continue;
    }
    best = std::max(best, *r);
    ++accepted;
  }
  return best;
}

bool all_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix frame_matrix(const Taylor2Data& d) {
  const Field& f = d.value.front().field();
  Matrix rows(f, 0, d.value.size());
  rows.append_row(d.value);
  for (const auto& partial : d.jacobian) rows.append_row(partial);
  return rows;
}

std::optional<Matrix> frame_if_regular(const Parametrization& phi, std::span<const Scalar> t) {
  auto value = phi.evaluate(t);
  if (all_zero(value)) return std::nullopt;
  return frame_matrix(taylor2(phi, t));
}

template <typename Fn>
auto in_stage(const std::string& stage, Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ResampleExhaustedError& e) {
    throw ResampleExhaustedError(stage, e.what());
  }
}

}  // namespace

bool same_invariants(const SecantReport& a, const SecantReport& b) {
  return a.n == b.n && a.N == b.N && a.dim_SX == b.dim_SX && a.delta == b.delta &&
         a.dim_II == b.dim_II && a.tangential_fiber_dim == b.tangential_fiber_dim &&
         a.gauss_contact_dim_W == b.gauss_contact_dim_W &&
         a.gauss_system_empty == b.gauss_system_empty &&
         a.secant_fills_ambient == b.secant_fills_ambient;
}

std::vector<Scalar> random_point(const Field& field, std::size_t n, Rng& rng) {
  std::vector<Scalar> t;
  t.reserve(n);
  for (std::size_t i = 0; i < n; ++i) t.push_back(random_scalar(field, rng));
  return t;
}

TangentFrame tangent_frame(const Parametrization& phi, std::span<const Scalar> t0) {
  if (t0.size() != phi.n_params()) {
    throw DimensionMismatchError("tangent_frame: point has " + std::to_string(t0.size()) +
                                 " coordinates, expected " + std::to_string(phi.n_params()));
  }
  auto rows = frame_if_regular(phi, t0);
  if (!rows) throw DegeneratePointError("tangent_frame: phi(t0) is the zero vector");
  return {std::vector<Scalar>(t0.begin(), t0.end()), std::move(*rows)};
}

int variety_dimension(const Parametrization& phi, int trials, Rng& rng, int max_resamples) {
  return max_generic_rank(trials, max_resamples, "variety_dimension", [&]() -> std::optional<int> {
           auto t = random_point(phi.field(), phi.n_params(), rng);
           auto rows = frame_if_regular(phi, t);
           if (!rows) return std::nullopt;
           return rank(*rows);
         }) -
         1;
}

int secant_dimension(const Parametrization& phi, int trials, Rng& rng, int max_resamples) {
  return max_generic_rank(trials, max_resamples, "secant_dimension", [&]() -> std::optional<int> {
           auto t0 = random_point(phi.field(), phi.n_params(), rng);
           auto t1 = random_point(phi.field(), phi.n_params(), rng);
           auto f0 = frame_if_regular(phi, t0);
           auto f1 = frame_if_regular(phi, t1);
           if (!f0 || !f1) return std::nullopt;
           return rank(stack(*f0, *f1));
         }) -
         1;
}

int secant_defect(const Parametrization& phi, int trials, Rng& rng, int max_resamples) {
  const int n = variety_dimension(phi, trials, rng, max_resamples);
  return 2 * n + 1 - secant_dimension(phi, trials, rng, max_resamples);
}

std::vector<Scalar> generic_point(const Parametrization& phi, int dim, Rng& rng,
                                  int max_resamples, const std::string& stage) {
  for (int attempt = 0; attempt <= max_resamples; ++attempt) {
    auto t = random_point(phi.field(), phi.n_params(), rng);
    auto rows = frame_if_regular(phi, t);
    if (rows && rank(*rows) == dim + 1) return t;
  }
  throw ResampleExhaustedError(stage, "no point with frame rank " + std::to_string(dim + 1));
}

Parametrization tangential_projection(const Parametrization& phi, std::span<const Scalar> t0,
                                      int dim) {
  const TangentFrame frame = tangent_frame(phi, t0);
  if (rank(frame.rows) != dim + 1) {
    throw DegeneratePointError("tangential_projection: frame rank differs from dim+1; resample");
  }
  if (phi.ambient_dim() - dim < 2) {
    throw PreconditionError("tangential_projection: target P^{N-n-1} has dimension < 1");
  }
  Matrix forms = kernel_basis(frame.rows);
  return compose_linear(phi, forms, "W_x(" + phi.label() + ")");
}

int generic_fiber_dimension(const Parametrization& phi, int trials, Rng& rng, int max_resamples) {
  return static_cast<int>(phi.n_params()) - variety_dimension(phi, trials, rng, max_resamples);
}

IIData second_fundamental_form(const Parametrization& phi, std::span<const Scalar> t0, int dim) {
  const Field& f = phi.field();
  const std::size_t n = phi.n_params();
  const Taylor2Data data = taylor2(phi, t0);
  if (all_zero(data.value)) throw DegeneratePointError("second_fundamental_form: phi(t0) = 0");
  const Matrix frame = frame_matrix(data);
  if (rank(frame) != dim + 1) {
    throw DegeneratePointError("second_fundamental_form: frame rank differs from dim+1");
  }

  Matrix hessians(f, 0, phi.n_coords());
  for (const auto& h : data.hessians) hessians.append_row(h);
  const int r = rank(reduce_modulo_rowspace(hessians, frame));

  // Pair every hessian with the linear forms vanishing on the tangent space;
  // row k of `pairing` is the quadric cut by form k.
  const Matrix forms = kernel_basis(frame);
  Matrix pairing = forms * hessians.transpose();
  const Echelon basis = row_echelon(pairing);
  if (static_cast<int>(basis.pivots.size()) != r) {
    throw std::logic_error("second_fundamental_form: residue and pairing ranks disagree");
  }

  IIData out;
  out.base_point.assign(t0.begin(), t0.end());
  out.dim_II = r - 1;
  for (std::size_t k = 0; k < basis.reduced.rows(); ++k) {
    Matrix q(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        const Scalar& c = basis.reduced.at(k, Taylor2Data::pair_index(i, j, n));
        q.at(i, j) = c;
        q.at(j, i) = c;
      }
    }
    out.quadric_matrices.push_back(std::move(q));
  }
  return out;
}

GaussContact gauss_contact_dimension(const Parametrization& phi, int trials, Rng& rng,
                                     int max_resamples) {
  const Field& f = phi.field();
  const int m = variety_dimension(phi, trials, rng, max_resamples);
  if (m == 0) return {0, true};
  const auto um = static_cast<std::size_t>(m);

  // Contact dimension can only grow at special points or slices: keep the minimum.
  GaussContact best{std::numeric_limits<int>::max(), false};
  for (int trial = 0; trial < trials; ++trial) {
    Parametrization sliced = phi;
    if (phi.n_params() > um) {
      AffineMap map{random_full_rank_matrix(f, um, phi.n_params(), rng).transpose(),
                    random_point(f, phi.n_params(), rng)};
      sliced = substitute_affine(phi, map);
    }
    auto s0 = generic_point(sliced, m, rng, max_resamples, "gauss_contact_dimension");
    IIData ii = second_fundamental_form(sliced, s0, m);
    if (ii.quadric_matrices.empty()) return {m, true};
    Matrix stacked(f, 0, um);
    for (const auto& q : ii.quadric_matrices)
      for (std::size_t i = 0; i < q.rows(); ++i) stacked.append_row(q.row(i));
    const int contact = static_cast<int>(kernel_basis(stacked).rows());
    best.dimension = std::min(best.dimension, contact);
  }
  return best;
}

SecantReport analyze(const Parametrization& phi, const EngineConfig& config) {
  if (!(phi.field() == config.field)) {
    throw FieldMismatchError("analyze: parametrization and config use different fields");
  }
  Rng rng(derive_task_seed(config.seed, phi.label()));
  const int trials = config.trials;
  const int budget = config.max_resamples;

  SecantReport report;
  report.label = phi.label();
  report.trials = trials;
  report.field = config.field;
  report.seed = config.seed;
  report.N = phi.ambient_dim();
  report.n = in_stage("dimension", [&] { return variety_dimension(phi, trials, rng, budget); });
  report.dim_SX =
      in_stage("secant_dimension", [&] { return secant_dimension(phi, trials, rng, budget); });
  report.delta = 2 * report.n + 1 - report.dim_SX;

  auto t0 = generic_point(phi, report.n, rng, budget, "second_fundamental_form");
  report.dim_II = second_fundamental_form(phi, t0, report.n).dim_II;

  if (report.dim_SX >= report.N) {
    report.secant_fills_ambient = true;
    return report;
  }

  auto t1 = generic_point(phi, report.n, rng, budget, "tangential_projection");
  const Parametrization w = tangential_projection(phi, t1, report.n);
  const int dim_w =
      in_stage("tangential_projection", [&] { return variety_dimension(w, trials, rng, budget); });
  report.tangential_fiber_dim = report.n - dim_w;

  const GaussContact contact = in_stage(
      "gauss_contact_dimension", [&] { return gauss_contact_dimension(w, trials, rng, budget); });
  report.gauss_contact_dim_W = contact.dimension;
  report.gauss_system_empty = contact.empty_system;
  return report;
}

CatalogEntry build_entry(const ConstructionPtr& construction, const EngineConfig& config) {
  const Field& f = config.field;
  struct Visitor {
    const Field& f;
    const EngineConfig& config;

    CatalogEntry operator()(const VeroneseSpec& s) const {
      auto phi = veronese(f, s.n);
      ExpectedInvariants e{s.n, m_of(s.n), 1, std::nullopt, "published"};
      if (s.n >= 2) e.dim_II = m_of(s.n - 1);
      return {std::move(phi), e, nullptr};
    }
    CatalogEntry operator()(const SegreSpec& s) const {
      auto phi = segre(f, s.a, s.b);
      const int n = s.a + s.b, N = s.a * s.b + s.a + s.b;
      ExpectedInvariants e{n, N, 2, std::nullopt, s.a >= 2 && s.b >= 2 ? "published" : "derived"};
      if (s.a >= 2 && s.b >= 2) e.dim_II = N - n - 1;
      return {std::move(phi), e, nullptr};
    }
    CatalogEntry operator()(const InnerProjectionSpec& s) const {
      auto phi = veronese_inner_projection(f, s.n, s.s);
      std::optional<ExpectedInvariants> e;
      const int dropped = binomial2(s.s + 2);
      if (dropped <= s.n - 2) {
        const int N = m_of(s.n) - dropped;
        e = ExpectedInvariants{s.n, N, 1, N - s.n - 1, "published"};
      }
      return {std::move(phi), e, nullptr};
    }
    CatalogEntry operator()(const SegreHyperplaneSpec& s) const {
      auto phi = segre_hyperplane_section(f, s.a, s.b);
      const int n = s.a + s.b - 1, N = s.a * s.b + s.a + s.b - 1;
      return {std::move(phi), ExpectedInvariants{n, N, 1, N - n - 1, "derived"}, nullptr};
    }
    CatalogEntry operator()(const ConeSpec& s) const {
      CatalogEntry base = build_entry(s.base, config);
      std::optional<ExpectedInvariants> e;
      if (base.expected) {
        e = ExpectedInvariants{base.expected->n + 1, base.expected->N + 1,
                               base.expected->delta + 1, base.expected->dim_II, "derived"};
      }
      return {cone(base.parametrization), e, nullptr};
    }
    CatalogEntry operator()(const IsoProjectionSpec& s) const {
      CatalogEntry base = build_entry(s.base, config);
      const auto& phi = base.parametrization;
      Rng rng(derive_task_seed(config.seed, "isoproj-check:" + phi.label()));
      const int before = secant_dimension(phi, config.trials, rng, config.max_resamples);
      auto projected = isomorphic_projection(phi, s.eps, s.seed, before);
      const int after = secant_dimension(projected, config.trials, rng, config.max_resamples);
      if (after != before) {
        throw ProjectionHitSecantError(
            "projection center of '" + projected.label() + "' meets the secant variety (dim SX " +
            std::to_string(before) + " -> " + std::to_string(after) +
            "); resample with another seed");
      }
      std::optional<ExpectedInvariants> e;
      if (base.expected) {
        const int N = base.expected->N - s.eps;
        e = ExpectedInvariants{base.expected->n, N, base.expected->delta,
                               base.expected->dim_II ? std::optional<int>(N - base.expected->n - 1)
                                                     : std::nullopt,
                               "derived"};
      }
      return {std::move(projected), e, nullptr};
    }
  };
  CatalogEntry entry = std::visit(Visitor{f, config}, construction->kind);
  entry.construction = construction;
  return entry;
}

}  // namespace secant
