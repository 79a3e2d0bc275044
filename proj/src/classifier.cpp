#include "secant/classifier.hpp"

#include <algorithm>

#include "secant/errors.hpp"

namespace secant {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string args(std::initializer_list<int> values) {
  std::string out = "(";
  bool first = true;
  for (int v : values) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + ")";
}

}  // namespace

std::string case_name(const ClassificationCase& c) {
  return std::visit(overloaded{
                        [](const cases::Veronese&) { return "veronese"; },
                        [](const cases::IsoProjVeronese&) { return "isoproj_veronese"; },
                        [](const cases::InnerProjB&) { return "bns"; },
                        [](const cases::IsoProjB&) { return "isoproj_bns"; },
                        [](const cases::Segre&) { return "segre"; },
                        [](const cases::SegreHyperplaneSection&) { return "segre_hyp"; },
                        [](const cases::PrimeFanoHighIndex&) { return "prime_fano"; },
                        [](const cases::OutOfClassifiedRange&) { return "out_of_range"; },
                    },
                    c);
}

std::string describe(const ClassificationCase& c) {
  return case_name(c) +
         std::visit(overloaded{
                        [](const cases::Veronese& v) { return args({v.n}); },
                        [](const cases::IsoProjVeronese& v) { return args({v.n, v.eps}); },
                        [](const cases::InnerProjB& v) { return args({v.n, v.s}); },
                        [](const cases::IsoProjB& v) { return args({v.n, v.s, v.eps}); },
                        [](const cases::Segre& v) { return args({v.a, v.b}); },
                        [](const cases::SegreHyperplaneSection& v) { return args({v.a, v.b}); },
                        [](const auto&) { return std::string(); },
                    },
                    c);
}

bool satisfies_invariants(const ClassificationCase& c) {
  return std::visit(overloaded{
                        [](const cases::InnerProjB& v) {
                          return v.s >= 0 && binomial2(v.s + 2) <= v.n - 2;
                        },
                        [](const cases::IsoProjB& v) {
                          return v.s >= 0 && binomial2(v.s + 2) < v.eps && v.eps <= v.n - 2;
                        },
                        [](const cases::IsoProjVeronese& v) {
                          return v.eps >= 1 && v.eps <= v.n - 2;
                        },
                        [](const auto&) { return true; },
                    },
                    c);
}

bool zak_bound_check(int n, int N, int dim_SX) {
  if (n < 2) throw PreconditionError("zak_bound_check requires n >= 2");
  return dim_SX > 2 * n || N <= m_of(n);
}

DeltaBounds delta_bounds(int n, int eps) {
  if (n < 2 || eps < 0) throw PreconditionError("delta_bounds requires n >= 2, eps >= 0");
  if (eps <= n - 2) return {1, 1};
  return {1, std::min(eps - n + 2, n / 2)};
}

std::vector<ClassificationCase> enumerate_cases(int n, int N) {
  if (n < 2) throw PreconditionError("enumerate_cases requires n >= 2");
  const int eps = m_of(n) - N;
  if (eps < 0 || eps > n - 2) return {cases::OutOfClassifiedRange{}};
  if (eps == 0) return {cases::Veronese{n}};
  if (n == 2) return {};

  std::vector<ClassificationCase> out;
  out.push_back(cases::IsoProjVeronese{n, eps});
  for (int s = 0; binomial2(s + 2) <= eps; ++s) {
    if (binomial2(s + 2) == eps) out.push_back(cases::InnerProjB{n, s});
  }
  for (int s = 0; binomial2(s + 2) < eps; ++s) out.push_back(cases::IsoProjB{n, s, eps});
  return out;
}

bool prime_fano_exclusion_check(int n) {
  if (n < 3) throw PreconditionError("prime_fano_exclusion_check requires n >= 3");
  if (n % 2 == 0) return true;
  const int lower = binomial2((n - 3) / 2 + 2) - 1;
  for (int eps = 1; eps <= n - 2; ++eps) {
    if (lower < eps - 1 && eps - 1 <= n - 3) return false;
  }
  return true;
}

std::optional<ImpliedInvariants> implied_invariants(const ClassificationCase& c) {
  using R = std::optional<ImpliedInvariants>;
  return std::visit(
      overloaded{
          [](const cases::Veronese& v) -> R { return ImpliedInvariants{v.n, m_of(v.n), 1}; },
          [](const cases::IsoProjVeronese& v) -> R {
            return ImpliedInvariants{v.n, m_of(v.n) - v.eps, 1};
          },
          [](const cases::InnerProjB& v) -> R {
            return ImpliedInvariants{v.n, m_of(v.n) - binomial2(v.s + 2), 1};
          },
          [](const cases::IsoProjB& v) -> R {
            return ImpliedInvariants{v.n, m_of(v.n) - v.eps, 1};
          },
          [](const cases::Segre& v) -> R {
            return ImpliedInvariants{v.a + v.b, v.a * v.b + v.a + v.b, 2};
          },
          [](const cases::SegreHyperplaneSection& v) -> R {
            return ImpliedInvariants{v.a + v.b - 1, v.a * v.b + v.a + v.b - 1, 1};
          },
          [](const auto&) -> R { return std::nullopt; },
      },
      c);
}

bool consistency_check(const SecantReport& report, const ClassificationCase& c) {
  auto implied = implied_invariants(c);
  if (!implied) return false;
  return report.n == implied->n && report.N == implied->N && report.delta == implied->delta;
}

std::optional<ClassificationCase> intended_case(const Construction& c) {
  using R = std::optional<ClassificationCase>;
  return std::visit(
      overloaded{
          [](const VeroneseSpec& s) -> R { return cases::Veronese{s.n}; },
          [](const SegreSpec& s) -> R { return cases::Segre{s.a, s.b}; },
          [](const InnerProjectionSpec& s) -> R { return cases::InnerProjB{s.n, s.s}; },
          [](const SegreHyperplaneSpec& s) -> R { return cases::SegreHyperplaneSection{s.a, s.b}; },
          [](const ConeSpec&) -> R { return std::nullopt; },
          [](const IsoProjectionSpec& s) -> R {
            if (const auto* v = std::get_if<VeroneseSpec>(&s.base->kind)) {
              return cases::IsoProjVeronese{v->n, s.eps};
            }
            if (const auto* b = std::get_if<InnerProjectionSpec>(&s.base->kind)) {
              return cases::IsoProjB{b->n, b->s, binomial2(b->s + 2) + s.eps};
            }
            return std::nullopt;
          },
      },
      c.kind);
}

}  // namespace secant
