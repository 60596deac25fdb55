#include "fatpoints/field.hpp"

#include <regex>

namespace fatpoints {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool FieldSpec::valid() const {
  if (kind == FieldKind::Rationals) return characteristic == 0;
  return characteristic < (std::int64_t{1} << 31) && is_prime(characteristic);
}

Rational parse_rational(std::string_view text) {
  static const std::regex pattern(R"(^-?[0-9]+(/[0-9]+)?$)");
  const std::string s(text);
  if (!std::regex_match(s, pattern))
    throw InputError("not an integer or rational: \"" + s + "\"");
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  const BigInt den(s.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator: \"" + s + "\"");
  return Rational(BigInt(s.substr(0, slash)), den);
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

PrimeField::PrimeField(std::int64_t p) : p_(p) {
  if (!FieldSpec::prime(p).valid())
    throw PreconditionError("field characteristic must be a prime below 2^31, got " +
                            std::to_string(p));
}

PrimeField::Scalar PrimeField::from(const Rational& q) const {
  const BigInt pp(p_);
  BigInt num = numerator(q) % pp;
  BigInt den = denominator(q) % pp;
  if (den == 0)
    throw StructuralError("denominator of " + to_string(q) + " vanishes mod " +
                          std::to_string(p_));
  const auto n = from_int(num.convert_to<std::int64_t>());
  const auto d = from_int(den.convert_to<std::int64_t>());
  return mul(n, inv(d));
}

PrimeField::Scalar PrimeField::inv(Scalar a) const {
  if (a == 0) throw PreconditionError("inverse of zero in F_p");
  // Fermat: a^(p-2)
  Scalar result = 1, base = a % p_;
  for (std::int64_t e = p_ - 2; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

} // namespace fatpoints
