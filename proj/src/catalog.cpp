#include "secant/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

#include "secant/errors.hpp"

namespace secant {

int binomial2(int k) { return k * (k - 1) / 2; }

int m_of(int n) {
  if (n < 1) throw PreconditionError("M(n) requires n >= 1");
  return n * (n + 3) / 2;
}

namespace {

// (1, t1, ..., tn) as degree-<=1 polynomials in `n_vars` variables whose
// first variable is at `first`.
std::vector<Polynomial> homogenized(const Field& f, std::size_t n_vars, std::size_t first,
                                    std::size_t count) {
  std::vector<Polynomial> out;
  out.push_back(Polynomial::constant(f, n_vars, f.one()));
  for (std::size_t i = 0; i < count; ++i) out.push_back(Polynomial::variable(f, n_vars, first + i));
  return out;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <typename Int>
Int parse_number(std::string_view text, std::string_view key) {
  Int value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw CatalogKeyError("bad number '" + std::string(text) + "' in catalog key '" +
                          std::string(key) + "'");
  }
  return value;
}

std::vector<int> parse_ints(std::string_view args, std::size_t count, std::string_view key) {
  auto parts = split(args, ',');
  if (parts.size() != count) {
    throw CatalogKeyError("catalog key '" + std::string(key) + "' expects " +
                          std::to_string(count) + " integer argument(s)");
  }
  std::vector<int> out;
  for (auto p : parts) out.push_back(parse_number<int>(p, key));
  return out;
}

}  // namespace

// --- keys ---------------------------------------------------------------------

ConstructionPtr parse_catalog_key(std::string_view key) {
  auto colon = key.find(':');
  if (colon == std::string_view::npos) {
    throw CatalogKeyError("catalog key '" + std::string(key) + "' lacks ':'");
  }
  const std::string_view family = key.substr(0, colon);
  const std::string_view args = key.substr(colon + 1);

  if (family == "veronese") {
    auto v = parse_ints(args, 1, key);
    return make_construction(VeroneseSpec{v[0]});
  }
  if (family == "segre") {
    auto v = parse_ints(args, 2, key);
    return make_construction(SegreSpec{v[0], v[1]});
  }
  if (family == "bns") {
    auto v = parse_ints(args, 2, key);
    return make_construction(InnerProjectionSpec{v[0], v[1]});
  }
  if (family == "segre_hyp") {
    auto v = parse_ints(args, 2, key);
    return make_construction(SegreHyperplaneSpec{v[0], v[1]});
  }
  if (family == "cone") {
    return make_construction(ConeSpec{parse_catalog_key(args)});
  }
  if (family == "isoproj") {
    // The inner key may itself contain commas: eps and seed are the last two.
    auto last = args.rfind(',');
    if (last == std::string_view::npos) throw CatalogKeyError("isoproj key needs ',eps,seed'");
    auto middle = args.rfind(',', last - 1);
    if (middle == std::string_view::npos || last == 0) {
      throw CatalogKeyError("isoproj key needs ',eps,seed'");
    }
    auto base = parse_catalog_key(args.substr(0, middle));
    int eps = parse_number<int>(args.substr(middle + 1, last - middle - 1), key);
    auto seed = parse_number<std::uint64_t>(args.substr(last + 1), key);
    return make_construction(IsoProjectionSpec{std::move(base), eps, seed});
  }
  throw CatalogKeyError("unknown catalog family '" + std::string(family) + "'");
}

std::string to_key(const Construction& c) {
  struct Visitor {
    std::string operator()(const VeroneseSpec& s) const {
      return "veronese:" + std::to_string(s.n);
    }
    std::string operator()(const SegreSpec& s) const {
      return "segre:" + std::to_string(s.a) + "," + std::to_string(s.b);
    }
    std::string operator()(const InnerProjectionSpec& s) const {
      return "bns:" + std::to_string(s.n) + "," + std::to_string(s.s);
    }
    std::string operator()(const SegreHyperplaneSpec& s) const {
      return "segre_hyp:" + std::to_string(s.a) + "," + std::to_string(s.b);
    }
    std::string operator()(const ConeSpec& s) const { return "cone:" + to_key(*s.base); }
    std::string operator()(const IsoProjectionSpec& s) const {
      return "isoproj:" + to_key(*s.base) + "," + std::to_string(s.eps) + "," +
             std::to_string(s.seed);
    }
  };
  return std::visit(Visitor{}, c.kind);
}

bool is_smooth(const Construction& c) {
  if (std::holds_alternative<ConeSpec>(c.kind)) return false;
  if (const auto* iso = std::get_if<IsoProjectionSpec>(&c.kind)) return is_smooth(*iso->base);
  return true;
}

// --- constructors -------------------------------------------------------------

Parametrization veronese(const Field& field, int n) {
  if (n < 1) throw PreconditionError("veronese requires n >= 1");
  const auto un = static_cast<std::size_t>(n);
  auto x = homogenized(field, un, 0, un);
  std::vector<Polynomial> coords;
  for (std::size_t i = 0; i <= un; ++i)
    for (std::size_t j = i; j <= un; ++j) coords.push_back(x[i] * x[j]);
  // Graded-lex order of the monomials themselves.
  std::stable_sort(coords.begin(), coords.end(), [](const Polynomial& a, const Polynomial& b) {
    return GradedLexLess{}(a.terms().begin()->first, b.terms().begin()->first);
  });
  return Parametrization(std::move(coords), "veronese:" + std::to_string(n));
}

Parametrization segre(const Field& field, int a, int b) {
  if (a < 1 || b < 1) throw PreconditionError("segre requires a, b >= 1");
  const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
  auto u = homogenized(field, ua + ub, 0, ua);
  auto v = homogenized(field, ua + ub, ua, ub);
  std::vector<Polynomial> coords;
  for (const auto& ui : u)
    for (const auto& vj : v) coords.push_back(ui * vj);
  return Parametrization(std::move(coords),
                         "segre:" + std::to_string(a) + "," + std::to_string(b));
}

Parametrization veronese_inner_projection(const Field& field, int n, int s) {
  if (n < 2 || s < 0 || s > n - 2) {
    throw PreconditionError("bns requires 0 <= s <= n-2 (got n=" + std::to_string(n) +
                            ", s=" + std::to_string(s) + ")");
  }
  const auto un = static_cast<std::size_t>(n), us = static_cast<std::size_t>(s);
  auto x = homogenized(field, un, 0, un);
  std::vector<Polynomial> coords;
  for (std::size_t i = 0; i <= un; ++i)
    for (std::size_t j = i; j <= un; ++j)
      if (j > us) coords.push_back(x[i] * x[j]);
  std::stable_sort(coords.begin(), coords.end(), [](const Polynomial& a, const Polynomial& b) {
    return GradedLexLess{}(a.terms().begin()->first, b.terms().begin()->first);
  });
  return Parametrization(std::move(coords),
                         "bns:" + std::to_string(n) + "," + std::to_string(s));
}

Parametrization cone(const Parametrization& phi) {
  const Field& f = phi.field();
  const std::size_t n = phi.n_params() + 1;
  std::vector<Polynomial> coords;
  for (const auto& c : phi.coords()) {
    Polynomial lifted(f, n);
    for (const auto& [e, coeff] : c.terms()) {
      Exponents le = e;
      le.push_back(0);
      lifted.add_term(le, coeff);
    }
    coords.push_back(std::move(lifted));
  }
  coords.push_back(Polynomial::variable(f, n, n - 1));
  return Parametrization(std::move(coords), "cone:" + phi.label());
}

Parametrization segre_hyperplane_section(const Field& field, int a, int b) {
  if (a < 2 || b < 2) throw PreconditionError("segre_hyp requires a, b >= 2");
  const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
  const std::size_t n_vars = ua + ub;
  auto u = homogenized(field, n_vars, 0, ua);
  auto v = homogenized(field, n_vars, ua, ub);
  Polynomial v0(field, n_vars);
  for (std::size_t i = 1; i <= std::min(ua, ub); ++i) v0 -= u[i] * v[i];
  v[0] = v0;
  std::vector<Polynomial> coords;
  for (std::size_t i = 0; i <= ua; ++i)
    for (std::size_t j = 0; j <= ub; ++j)
      if (i != 0 || j != 0) coords.push_back(u[i] * v[j]);
  return Parametrization(std::move(coords),
                         "segre_hyp:" + std::to_string(a) + "," + std::to_string(b));
}

Matrix random_full_rank_matrix(const Field& field, std::size_t rows, std::size_t cols, Rng& rng) {
  if (rows > cols) throw PreconditionError("full row rank impossible with rows > cols");
  for (int attempt = 0; attempt < 16; ++attempt) {
    Matrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = random_scalar(field, rng);
    if (rank(m) == static_cast<int>(rows)) return m;
  }
  throw ResampleExhaustedError("random_full_rank_matrix", "no full-rank draw in 16 attempts");
}

Parametrization isomorphic_projection(const Parametrization& phi, int eps, std::uint64_t seed,
                                      int secant_dim) {
  const int N = phi.ambient_dim();
  if (eps < 1 || eps >= N - secant_dim) {
    throw PreconditionError("isomorphic projection needs 1 <= eps < N - dim SX = " +
                            std::to_string(N - secant_dim) + " (got eps=" +
                            std::to_string(eps) + ")");
  }
  Rng rng(seed);
  Matrix L = random_full_rank_matrix(phi.field(), static_cast<std::size_t>(N + 1 - eps),
                                     static_cast<std::size_t>(N + 1), rng);
  return compose_linear(phi, L,
                        "isoproj:" + phi.label() + "," + std::to_string(eps) + "," +
                            std::to_string(seed));
}

}  // namespace secant
