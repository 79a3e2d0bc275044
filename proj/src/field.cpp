#include "secant/field.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>
#include <random>

#include "secant/errors.hpp"

namespace secant {

namespace {

using u128 = unsigned __int128;

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  if (s < a || s >= p) s -= p;
  return s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  u128 z = static_cast<u128>(a) * b;
  if (p == kMersenne61) {
    std::uint64_t lo = static_cast<std::uint64_t>(z) & kMersenne61;
    std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
    std::uint64_t r = lo + hi;
    return r >= kMersenne61 ? r - kMersenne61 : r;
  }
  return static_cast<std::uint64_t>(z % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  while (e != 0) {
    if (e & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return result;
}

std::uint64_t reduce_signed(std::int64_t v, std::uint64_t p) {
  if (v >= 0) return static_cast<std::uint64_t>(v) % p;
  // -(v+1) avoids overflow at INT64_MIN.
  std::uint64_t m = static_cast<std::uint64_t>(-(v + 1)) % p;
  return sub_mod(p - 1, m, p);
}

}  // namespace

std::string_view to_string(FieldMode mode) {
  return mode == FieldMode::kPrime ? "prime-field" : "rational";
}

FieldMode parse_field_mode(std::string_view text) {
  if (text == "prime-field") return FieldMode::kPrime;
  if (text == "rational") return FieldMode::kRational;
  throw InvalidFieldConfigError("unknown field mode '" + std::string(text) +
                                "' (expected prime-field or rational)");
}

bool is_prime_u64(std::uint64_t n) {
  // Fixed engine: the primality verdict must not depend on global state.
  std::mt19937_64 gen(0x5eca27);
  return boost::multiprecision::miller_rabin_test(
      boost::multiprecision::cpp_int(n), 32, gen);
}

// --- Field -------------------------------------------------------------------

Field Field::prime_field(std::uint64_t prime) {
  return Field(FieldMode::kPrime, prime);
}

Field Field::rationals() { return Field(FieldMode::kRational, 0); }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t value) const {
  if (mode_ == FieldMode::kPrime) return Scalar(*this, reduce_signed(value, prime_));
  return Scalar(*this, mpq_class(static_cast<long>(value)));
}

Scalar Field::from_fraction(std::int64_t num, std::int64_t den) const {
  if (den == 0) throw DivisionByZeroError("fraction with zero denominator");
  if (mode_ == FieldMode::kPrime) return from_int(num) / from_int(den);
  mpq_class q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return Scalar(*this, std::move(q));
}

std::string Field::describe() const {
  if (mode_ == FieldMode::kRational) return "QQ";
  return "GF(" + std::to_string(prime_) + ")";
}

void FieldConfig::validate() const {
  if (mode != FieldMode::kPrime) return;
  if (prime <= (std::uint64_t{1} << 60)) {
    throw InvalidFieldConfigError("prime " + std::to_string(prime) +
                                  " must exceed 2^60");
  }
  if (!is_prime_u64(prime)) {
    throw InvalidFieldConfigError(std::to_string(prime) + " is not prime");
  }
}

Field FieldConfig::field() const {
  return mode == FieldMode::kPrime ? Field::prime_field(prime) : Field::rationals();
}

// --- Scalar ------------------------------------------------------------------

Scalar::Scalar(const Field& field, std::uint64_t residue)
    : prime_(field.prime()), value_(std::uint64_t{0}) {
  if (field.is_prime_field()) {
    value_ = residue % prime_;
  } else {
    value_ = mpq_class(static_cast<unsigned long>(residue));
  }
}

Scalar::Scalar(const Field& field, mpq_class fraction)
    : prime_(field.prime()), value_(std::uint64_t{0}) {
  if (field.is_prime_field()) {
    throw FieldMismatchError("fraction supplied for a prime-field scalar");
  }
  fraction.canonicalize();
  value_ = std::move(fraction);
}

Field Scalar::field() const {
  return prime_ == 0 ? Field::rationals() : Field::prime_field(prime_);
}

bool Scalar::is_zero() const {
  if (prime_ != 0) return std::get<std::uint64_t>(value_) == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (prime_ != 0) return std::get<std::uint64_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint64_t Scalar::residue() const {
  if (prime_ == 0) throw FieldMismatchError("residue() on a rational scalar");
  return std::get<std::uint64_t>(value_);
}

const mpq_class& Scalar::fraction() const {
  if (prime_ != 0) throw FieldMismatchError("fraction() on a prime-field scalar");
  return std::get<mpq_class>(value_);
}

void Scalar::require_same_field(const Scalar& other) const {
  if (prime_ != other.prime_) {
    throw FieldMismatchError("mixed-field operands: " + field().describe() +
                             " and " + other.field().describe());
  }
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (prime_ != 0) {
    auto& v = std::get<std::uint64_t>(out.value_);
    v = v == 0 ? 0 : prime_ - v;
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = -q;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (prime_ != 0) {
    auto& v = std::get<std::uint64_t>(value_);
    v = add_mod(v, std::get<std::uint64_t>(rhs.value_), prime_);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (prime_ != 0) {
    auto& v = std::get<std::uint64_t>(value_);
    v = sub_mod(v, std::get<std::uint64_t>(rhs.value_), prime_);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (prime_ != 0) {
    auto& v = std::get<std::uint64_t>(value_);
    v = mul_mod(v, std::get<std::uint64_t>(rhs.value_), prime_);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inv();
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero");
  if (prime_ != 0) {
    return Scalar(field(), pow_mod(std::get<std::uint64_t>(value_), prime_ - 2, prime_));
  }
  mpq_class q = 1 / std::get<mpq_class>(value_);
  return Scalar(field(), std::move(q));
}

Scalar Scalar::pow(std::uint64_t exponent) const {
  if (prime_ != 0) {
    return Scalar(field(), pow_mod(std::get<std::uint64_t>(value_), exponent, prime_));
  }
  Scalar result = field().one();
  Scalar base = *this;
  while (exponent != 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.prime_ != b.prime_) return false;
  if (a.prime_ != 0) return std::get<std::uint64_t>(a.value_) == std::get<std::uint64_t>(b.value_);
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::string Scalar::to_string() const {
  if (prime_ != 0) return std::to_string(std::get<std::uint64_t>(value_));
  return std::get<mpq_class>(value_).get_str();
}

Scalar add(const Scalar& a, const Scalar& b) { return a + b; }
Scalar inv(const Scalar& a) { return a.inv(); }

// --- randomness ----------------------------------------------------------------

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("uniform_below(0)");
  // Largest multiple of bound representable in 64 bits, minus one.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  std::uint64_t x = next_u64();
  while (x > limit) x = next_u64();
  return x % bound;
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw PreconditionError("uniform_int with hi < lo");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  const std::uint64_t offset = span == UINT64_MAX ? next_u64() : uniform_below(span + 1);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + offset);
}

Scalar random_scalar(const Field& field, Rng& rng) {
  if (field.is_prime_field()) return Scalar(field, rng.uniform_below(field.prime()));
  return field.from_int(rng.uniform_int(-kRationalSampleBound, kRationalSampleBound));
}

std::uint64_t derive_task_seed(std::uint64_t master, std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::uint64_t z = master ^ h;
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace secant
