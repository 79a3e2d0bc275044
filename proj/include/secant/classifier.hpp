#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "secant/catalog.hpp"
#include "secant/engine.hpp"

namespace secant {

namespace cases {
struct Veronese {
  int n;
  friend bool operator==(const Veronese&, const Veronese&) = default;
};
struct IsoProjVeronese {
  int n;
  int eps;
  friend bool operator==(const IsoProjVeronese&, const IsoProjVeronese&) = default;
};
struct InnerProjB {
  int n;
  int s;
  friend bool operator==(const InnerProjB&, const InnerProjB&) = default;
};
struct IsoProjB {
  int n;
  int s;
  int eps;
  friend bool operator==(const IsoProjB&, const IsoProjB&) = default;
};
struct Segre {
  int a;
  int b;
  friend bool operator==(const Segre&, const Segre&) = default;
};
struct SegreHyperplaneSection {
  int a;
  int b;
  friend bool operator==(const SegreHyperplaneSection&, const SegreHyperplaneSection&) = default;
};
struct PrimeFanoHighIndex {
  friend bool operator==(const PrimeFanoHighIndex&, const PrimeFanoHighIndex&) = default;
};
struct OutOfClassifiedRange {
  friend bool operator==(const OutOfClassifiedRange&, const OutOfClassifiedRange&) = default;
};
}  // namespace cases

using ClassificationCase =
    std::variant<cases::Veronese, cases::IsoProjVeronese, cases::InnerProjB, cases::IsoProjB,
                 cases::Segre, cases::SegreHyperplaneSection, cases::PrimeFanoHighIndex,
                 cases::OutOfClassifiedRange>;

// Stable serialized name: veronese, isoproj_veronese, bns, isoproj_bns,
// segre, segre_hyp, prime_fano, out_of_range.
std::string case_name(const ClassificationCase& c);
// Name with parameters, e.g. "bns(5,1)".
std::string describe(const ClassificationCase& c);

// Type invariants of the bns / isoproj_bns cases.
bool satisfies_invariants(const ClassificationCase& c);

// False only when dim_SX <= 2n and N > M(n). Requires n >= 2.
bool zak_bound_check(int n, int N, int dim_SX);

struct DeltaBounds {
  int lo = 1;
  int hi = 1;
  bool contains(int delta) const { return lo <= delta && delta <= hi; }
  friend bool operator==(const DeltaBounds&, const DeltaBounds&) = default;
};

// eps <= n-2: [1, 1]; otherwise [1, min(eps-n+2, floor(n/2))].
DeltaBounds delta_bounds(int n, int eps);

// Candidate cases for a secant defective n-fold in P^N, N = M(n) - eps with
// 0 <= eps <= n-2. Outside that range: a single OutOfClassifiedRange.
std::vector<ClassificationCase> enumerate_cases(int n, int N);

// True when no prime Fano manifold can occur in the classified range.
// Odd n: no eps in [1, n-2] satisfies C((n-3)/2+2, 2) - 1 < eps - 1 <= n - 3.
// Even n: (n-3)/2 is not an integer, so the line-scheme dimension formula
// already has no solution.
bool prime_fano_exclusion_check(int n);

// (n, N, delta) implied by a case; nullopt for prime_fano / out_of_range.
struct ImpliedInvariants {
  int n;
  int N;
  int delta;
};
std::optional<ImpliedInvariants> implied_invariants(const ClassificationCase& c);

bool consistency_check(const SecantReport& report, const ClassificationCase& c);

// The case a catalog construction is meant to realize, if it has one.
std::optional<ClassificationCase> intended_case(const Construction& c);

}  // namespace secant
