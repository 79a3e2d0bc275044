#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "secant/errors.hpp"
#include "secant/field.hpp"

#include <vector>

using namespace secant;

namespace {

const Field kGF = Field::prime_field();
const Field kQQ = Field::rationals();
// Largest prime below 2^64; exercises the generic (non-Mersenne) reduction.
constexpr std::uint64_t kP64 = 18446744073709551557ULL;

}  // namespace

TEST_CASE("add") {
  const Scalar x = kGF.from_int(123456789);
  CHECK(add(kGF.zero(), x) == x);
  CHECK(add(Scalar(kGF, kMersenne61 - 1), kGF.one()).is_zero());
  CHECK(add(kQQ.from_fraction(1, 2), kQQ.from_fraction(1, 3)) == kQQ.from_fraction(5, 6));

  const Field big = Field::prime_field(kP64);
  CHECK(add(Scalar(big, kP64 - 1), Scalar(big, kP64 - 1)) == Scalar(big, kP64 - 2));
}

TEST_CASE("inv") {
  CHECK(inv(kGF.one()) == kGF.one());
  CHECK(inv(kGF.from_int(2)).residue() == (kMersenne61 + 1) / 2);
  CHECK(inv(kGF.from_int(3)).residue() == 1537228672809129301ULL);
  CHECK(inv(kQQ.from_fraction(3, 4)) == kQQ.from_fraction(4, 3));
  CHECK_THROWS_AS(inv(kGF.zero()), DivisionByZeroError);
  CHECK_THROWS_AS(inv(kQQ.zero()), DivisionByZeroError);
  CHECK_THROWS_AS(kQQ.from_fraction(1, 0), DivisionByZeroError);
}

TEST_CASE("canonical representatives") {
  CHECK(kGF.from_int(-1).residue() == kMersenne61 - 1);
  CHECK(kGF.from_int(INT64_MIN) + kGF.from_int(INT64_MAX) == kGF.from_int(-1));
  const Scalar q = kQQ.from_fraction(6, -4);
  CHECK(q.fraction().get_num() == -3);
  CHECK(q.fraction().get_den() == 2);
  CHECK(kGF.from_fraction(1, 2) == inv(kGF.from_int(2)));
}

TEST_CASE("mixed-field operands are rejected") {
  CHECK_THROWS_AS(add(kGF.one(), kQQ.one()), FieldMismatchError);
  const Field other = Field::prime_field(kP64);
  CHECK_THROWS_AS(kGF.one() * other.one(), FieldMismatchError);
  CHECK_FALSE(kGF.one() == kQQ.one());
}

TEST_CASE("field configuration") {
  CHECK_NOTHROW(FieldConfig{FieldMode::kPrime, kMersenne61, 0}.validate());
  CHECK_NOTHROW(FieldConfig{FieldMode::kPrime, kP64, 0}.validate());
  CHECK_THROWS_AS((FieldConfig{FieldMode::kPrime, 101, 0}.validate()), InvalidFieldConfigError);
  // 2^61 + 1 is divisible by 3.
  CHECK_THROWS_AS((FieldConfig{FieldMode::kPrime, (1ULL << 61) + 1, 0}.validate()),
                  InvalidFieldConfigError);
  CHECK_NOTHROW(FieldConfig{FieldMode::kRational, 0, 0}.validate());
  CHECK(is_prime_u64(kMersenne61));
  CHECK_FALSE(is_prime_u64(kMersenne61 - 2));
  CHECK(parse_field_mode("rational") == FieldMode::kRational);
  CHECK_THROWS_AS(parse_field_mode("complex"), InvalidFieldConfigError);
}

TEST_CASE("random_scalar determinism") {
  SUBCASE("generator matches the standard mt19937_64 sequence") {
    Rng rng(5489);
    CHECK(rng.next_u64() == 14514284786278117030ULL);
    Rng again(5489);
    std::uint64_t v = 0;
    for (int i = 0; i < 10000; ++i) v = again.next_u64();
    CHECK(v == 9981545732273789042ULL);
  }
  SUBCASE("first draw for a fixed seed") {
    Rng rng(5489);
    CHECK(random_scalar(kGF, rng).residue() == 679226730995953324ULL);
  }
  SUBCASE("equal seeds give identical streams") {
    Rng a(42), b(42);
    for (int i = 0; i < 1000; ++i) CHECK(random_scalar(kGF, a) == random_scalar(kGF, b));
    Rng qa(42), qb(42);
    for (int i = 0; i < 100; ++i) CHECK(random_scalar(kQQ, qa) == random_scalar(kQQ, qb));
  }
  SUBCASE("distinct seeds diverge within four draws") {
    int diverged = 0;
    for (std::uint64_t s = 0; s < 1000; ++s) {
      Rng a(2 * s), b(2 * s + 1);
      for (int k = 0; k < 4; ++k) {
        if (!(random_scalar(kGF, a) == random_scalar(kGF, b))) {
          ++diverged;
          break;
        }
      }
    }
    CHECK(diverged == 1000);
  }
  SUBCASE("rational samples stay in the documented range") {
    Rng rng(7);
    for (int i = 0; i < 2000; ++i) {
      const Scalar s = random_scalar(kQQ, rng);
      CHECK(s.fraction().get_den() == 1);
      CHECK(abs(s.fraction().get_num()) <= kRationalSampleBound);
    }
  }
}

TEST_CASE("uniform_below stays in range") {
  Rng rng(1);
  for (std::uint64_t bound : std::vector<std::uint64_t>{1, 2, 3, 1000, kMersenne61}) {
    for (int i = 0; i < 200; ++i) CHECK(rng.uniform_below(bound) < bound);
  }
  CHECK_THROWS_AS(rng.uniform_below(0), PreconditionError);
}

TEST_CASE("task seeds depend on master seed and label") {
  CHECK(derive_task_seed(0, "veronese:5") == derive_task_seed(0, "veronese:5"));
  CHECK(derive_task_seed(0, "veronese:5") != derive_task_seed(1, "veronese:5"));
  CHECK(derive_task_seed(0, "veronese:5") != derive_task_seed(0, "veronese:4"));
}

TEST_CASE("field axioms on random triples") {
  for (const Field& f : {kGF, Field::prime_field(kP64)}) {
    Rng rng(2024);
    for (int i = 0; i < 10000; ++i) {
      const Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE((a - a).is_zero());
      if (!a.is_zero()) REQUIRE((a * a.inv()).is_one());
    }
  }
  Rng rng(99);
  for (int i = 0; i < 1000; ++i) {
    const Scalar a = random_scalar(kQQ, rng) / kQQ.from_int(7);
    const Scalar b = random_scalar(kQQ, rng), c = random_scalar(kQQ, rng);
    REQUIRE(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) REQUIRE((a / a).is_one());
  }
}

TEST_CASE("Fermat check") {
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    const Scalar a = random_scalar(kGF, rng);
    if (a.is_zero()) continue;
    REQUIRE(a.pow(kMersenne61 - 1).is_one());
  }
}
