#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace posetlie {

using Rational = boost::multiprecision::cpp_rational;

class Scalar;

/// The coefficient field: exact rationals, or the integers modulo a prime.
class Field
{
public:
  static Field rationals() { return Field(0); }
  /// Throws InvalidParameter unless p is a prime below 2^62.
  static Field prime(std::uint64_t p);
  /// "q" or "fp:<p>"
  static Field parse(std::string_view spec);

  bool is_rational() const noexcept { return modulus_ == 0; }
  std::uint64_t characteristic() const noexcept { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long value) const;
  /// Parses "num/den" or "num".
  Scalar parse_scalar(std::string_view text) const;

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

private:
  friend class Scalar;
  explicit Field(std::uint64_t modulus) : modulus_(modulus) {}
  std::uint64_t modulus_;
};

/// An exact field element. Mixing fields in one operation throws FieldMismatch.
class Scalar
{
public:
  struct Residue
  {
    std::uint64_t value;
    std::uint64_t modulus;
    friend bool operator==(const Residue&, const Residue&) = default;
  };

  Scalar() : value_(Rational(0)) {}
  explicit Scalar(Rational q) : value_(std::move(q)) {}
  explicit Scalar(Residue r) : value_(r) {}

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar inverse() const; // throws DivisionByZero

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  /// Equality across different fields is false, never an error.
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

  /// "num/den"; residues print as "k/1" with 0 <= k < p.
  std::string to_string() const;

  const std::variant<Rational, Residue>& raw() const noexcept { return value_; }

private:
  std::variant<Rational, Residue> value_;
};

std::ostream& operator<<(std::ostream& out, const Scalar& s);

} // namespace posetlie
