#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace secant {

enum class FieldMode { kPrime, kRational };

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

std::string_view to_string(FieldMode mode);
FieldMode parse_field_mode(std::string_view text);

bool is_prime_u64(std::uint64_t n);

class Scalar;

// Identity of a working field. Two scalars may be combined only when their
// fields compare equal. `prime` is ignored (and stored as 0) in rational mode.
class Field {
 public:
  static Field prime_field(std::uint64_t prime = kMersenne61);
  static Field rationals();

  FieldMode mode() const noexcept { return mode_; }
  std::uint64_t prime() const noexcept { return prime_; }
  bool is_prime_field() const noexcept { return mode_ == FieldMode::kPrime; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t value) const;
  Scalar from_fraction(std::int64_t num, std::int64_t den) const;

  std::string describe() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(FieldMode mode, std::uint64_t prime) : mode_(mode), prime_(prime) {}

  FieldMode mode_ = FieldMode::kPrime;
  std::uint64_t prime_ = kMersenne61;
};

// Field plus reproducibility seed, as surfaced on the command line.
struct FieldConfig {
  FieldMode mode = FieldMode::kPrime;
  std::uint64_t prime = kMersenne61;
  std::uint64_t seed = 0;

  // Throws InvalidFieldConfigError unless prime > 2^60 and prime is prime
  // (checked in prime-field mode only).
  void validate() const;
  Field field() const;
};

// Element of a prime field (canonical residue in [0, p)) or of Q (reduced
// fraction with positive denominator).
class Scalar {
 public:
  Scalar(const Field& field, std::uint64_t residue);
  Scalar(const Field& field, mpq_class fraction);

  Field field() const;
  FieldMode mode() const noexcept {
    return prime_ == 0 ? FieldMode::kRational : FieldMode::kPrime;
  }

  bool is_zero() const;
  bool is_one() const;

  // Prime-field mode only.
  std::uint64_t residue() const;
  // Rational mode only.
  const mpq_class& fraction() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  // Throws DivisionByZeroError on zero.
  Scalar inv() const;
  Scalar pow(std::uint64_t exponent) const;

  // Equality of values in the same field; scalars of different fields are
  // never equal.
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  void require_same_field(const Scalar& other) const;

  std::uint64_t prime_;  // 0 marks rational mode
  std::variant<std::uint64_t, mpq_class> value_;
};

Scalar add(const Scalar& a, const Scalar& b);
Scalar inv(const Scalar& a);

// Seeded 64-bit generator: std::mt19937_64, whose output sequence is fixed
// by the C++ standard. Range reduction is done here by rejection so streams
// do not depend on the standard library's distribution implementations.
class Rng {
 public:
  static constexpr std::string_view kName = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  // Uniform in [0, bound), bound > 0.
  std::uint64_t uniform_below(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

// Rational-mode samples are integers drawn uniformly from
// [-kRationalSampleBound, kRationalSampleBound].
inline constexpr std::int64_t kRationalSampleBound = std::int64_t{1} << 20;

Scalar random_scalar(const Field& field, Rng& rng);

// Seed for an independent task: splitmix64(master ^ fnv1a64(label)).
std::uint64_t derive_task_seed(std::uint64_t master, std::string_view label);

}  // namespace secant
