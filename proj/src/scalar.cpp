#include "posetlie/scalar.hpp"

#include "posetlie/errors.hpp"

#include <charconv>
#include <ostream>

namespace posetlie {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1)
      result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// deterministic Miller-Rabin for 64-bit inputs
bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0)
      return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

[[noreturn]] void mismatch()
{
  throw FieldMismatch("scalars from different fields");
}

const Scalar::Residue& residue_of(const Scalar& s)
{
  return std::get<Scalar::Residue>(s.raw());
}

std::uint64_t check_same_modulus(const Scalar& a, const Scalar& b)
{
  const auto& ra = residue_of(a);
  const auto& rb = residue_of(b);
  if (ra.modulus != rb.modulus)
    mismatch();
  return ra.modulus;
}

} // namespace

Field Field::prime(std::uint64_t p)
{
  if (p >= (1ULL << 62) || !is_prime(p))
    throw InvalidParameter(std::to_string(p) + " is not a supported prime");
  return Field(p);
}

Field Field::parse(std::string_view spec)
{
  if (spec == "q" || spec == "Q")
    return rationals();
  if (spec.starts_with("fp:")) {
    const auto digits = spec.substr(3);
    std::uint64_t p = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
      throw InvalidParameter("malformed field '" + std::string(spec) + "'");
    return prime(p);
  }
  throw InvalidParameter("unknown field '" + std::string(spec) + "' (expected q or fp:<p>)");
}

Scalar Field::zero() const
{
  return from_int(0);
}

Scalar Field::one() const
{
  return from_int(1);
}

Scalar Field::from_int(long long value) const
{
  if (is_rational())
    return Scalar(Rational(value));
  const auto m = static_cast<long long>(modulus_);
  long long r = value % m;
  if (r < 0)
    r += m;
  return Scalar(Scalar::Residue{static_cast<std::uint64_t>(r), modulus_});
}

Scalar Field::parse_scalar(std::string_view text) const
{
  const auto slash = text.find('/');
  const std::string num(text.substr(0, slash));
  const std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  auto valid = [](const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size())
      return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        return false;
    return true;
  };
  if (!valid(num) || !valid(den))
    throw InvalidParameter("malformed scalar '" + std::string(text) + "'");
  using boost::multiprecision::cpp_int;
  const cpp_int n(num);
  const cpp_int d(den);
  if (d == 0)
    throw DivisionByZero("zero denominator in '" + std::string(text) + "'");
  if (is_rational())
    return Scalar(Rational(n, d));
  auto reduce = [this](const cpp_int& v) {
    cpp_int r = v % modulus_;
    if (r < 0)
      r += modulus_;
    return Scalar(Scalar::Residue{r.convert_to<std::uint64_t>(), modulus_});
  };
  return reduce(n) / reduce(d);
}

std::string Field::to_string() const
{
  return is_rational() ? "q" : "fp:" + std::to_string(modulus_);
}

Field Scalar::field() const
{
  if (std::holds_alternative<Rational>(value_))
    return Field::rationals();
  return Field(residue_of(*this).modulus);
}

bool Scalar::is_zero() const
{
  if (const auto* q = std::get_if<Rational>(&value_))
    return *q == 0;
  return residue_of(*this).value == 0;
}

bool Scalar::is_one() const
{
  if (const auto* q = std::get_if<Rational>(&value_))
    return *q == 1;
  return residue_of(*this).value == 1 % residue_of(*this).modulus;
}

Scalar Scalar::inverse() const
{
  if (is_zero())
    throw DivisionByZero("inverse of zero");
  if (const auto* q = std::get_if<Rational>(&value_))
    return Scalar(Rational(1) / *q);
  const auto& r = residue_of(*this);
  return Scalar(Residue{pow_mod(r.value, r.modulus - 2, r.modulus), r.modulus});
}

Scalar operator+(const Scalar& a, const Scalar& b)
{
  if (a.value_.index() != b.value_.index())
    mismatch();
  if (const auto* q = std::get_if<Rational>(&a.value_))
    return Scalar(*q + std::get<Rational>(b.value_));
  const auto m = check_same_modulus(a, b);
  const auto s = residue_of(a).value + residue_of(b).value;
  return Scalar(Scalar::Residue{s >= m ? s - m : s, m});
}

Scalar Scalar::operator-() const
{
  if (const auto* q = std::get_if<Rational>(&value_))
    return Scalar(Rational(-*q));
  const auto& r = residue_of(*this);
  return Scalar(Residue{r.value == 0 ? 0 : r.modulus - r.value, r.modulus});
}

Scalar operator-(const Scalar& a, const Scalar& b)
{
  return a + (-b);
}

Scalar operator*(const Scalar& a, const Scalar& b)
{
  if (a.value_.index() != b.value_.index())
    mismatch();
  if (const auto* q = std::get_if<Rational>(&a.value_))
    return Scalar(Rational(*q * std::get<Rational>(b.value_)));
  const auto m = check_same_modulus(a, b);
  return Scalar(Scalar::Residue{mul_mod(residue_of(a).value, residue_of(b).value, m), m});
}

Scalar operator/(const Scalar& a, const Scalar& b)
{
  if (a.value_.index() != b.value_.index())
    mismatch();
  return a * b.inverse();
}

std::string Scalar::to_string() const
{
  if (const auto* q = std::get_if<Rational>(&value_))
    return numerator(*q).str() + "/" + denominator(*q).str();
  return std::to_string(residue_of(*this).value) + "/1";
}

std::ostream& operator<<(std::ostream& out, const Scalar& s)
{
  return out << s.to_string();
}

} // namespace posetlie
