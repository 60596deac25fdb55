#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include "fatpoints/errors.hpp"

namespace fatpoints {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

enum class FieldKind { Rationals, PrimeField };

/// The coefficient field: Q, or F_p for a prime p < 2^31.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::int64_t characteristic = 0;

  static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
  static FieldSpec prime(std::int64_t p) { return {FieldKind::PrimeField, p}; }

  bool valid() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::int64_t n);

/// Parses "12", "-3" or "a/b" (b > 0).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Q as a coefficient field; elements are exact rationals.
struct RationalField {
  using Scalar = Rational;

  Scalar from(const Rational& q) const { return q; }
  Scalar from_int(std::int64_t v) const { return Scalar(v); }
  static Scalar zero() { return Scalar(0); }
  static Scalar one() { return Scalar(1); }
  static bool is_zero(const Scalar& a) { return a == 0; }
  static Scalar add(const Scalar& a, const Scalar& b) { return a + b; }
  static Scalar sub(const Scalar& a, const Scalar& b) { return a - b; }
  static Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
  static Scalar inv(const Scalar& a) { return Scalar(1) / a; }
  FieldSpec spec() const { return FieldSpec::rationals(); }
};

/// F_p with canonical representatives in [0, p).
class PrimeField {
public:
  using Scalar = std::int64_t;

  explicit PrimeField(std::int64_t p);

  std::int64_t modulus() const { return p_; }
  /// Maps a/b to a * b^{-1} mod p; throws StructuralError if p divides b.
  Scalar from(const Rational& q) const;
  Scalar from_int(std::int64_t v) const { return ((v % p_) + p_) % p_; }
  static Scalar zero() { return 0; }
  static Scalar one() { return 1; }
  static bool is_zero(Scalar a) { return a == 0; }
  Scalar add(Scalar a, Scalar b) const { return (a + b) % p_; }
  Scalar sub(Scalar a, Scalar b) const { return (a - b + p_) % p_; }
  Scalar mul(Scalar a, Scalar b) const { return (a * b) % p_; }
  Scalar inv(Scalar a) const;
  FieldSpec spec() const { return FieldSpec::prime(p_); }

private:
  std::int64_t p_;
};

/// Calls fn with a RationalField or PrimeField matching spec.
template <typename Fn>
decltype(auto) visit_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldKind::Rationals) return fn(RationalField{});
  return fn(PrimeField(spec.characteristic));
}

} // namespace fatpoints
