#include "mwgames/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace mwgames {
namespace {

BigInt parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw std::invalid_argument("malformed rational: \"" + std::string(whole) + "\"");
  }
  BigInt v = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw std::invalid_argument("malformed rational: \"" + std::string(whole) + "\"");
    }
    v = v * 10 + (ch - '0');
  }
  return v;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  value_ = den < 0 ? Impl(-BigInt(num), -BigInt(den)) : Impl(num, den);
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  value_ = den < 0 ? Impl(-num, -den) : Impl(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_digits(s.substr(0, slash), text);
    BigInt den = parse_digits(s.substr(slash + 1), text);
    if (den == 0) {
      throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
    }
    out = Rational(num, den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
    }
    BigInt whole = int_part.empty() ? BigInt(0) : parse_digits(int_part, text);
    BigInt frac = frac_part.empty() ? BigInt(0) : parse_digits(frac_part, text);
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac_part.size()));
    out = Rational(whole * scale + frac, scale);
  } else {
    out = Rational(parse_digits(s, text), BigInt(1));
  }
  return negative ? -out : out;
}

bool Rational::snap(double x, std::int64_t max_den, double tol, Rational* out) {
  if (!std::isfinite(x)) return false;
  for (std::int64_t d = 1; d <= max_den; ++d) {
    double p = std::round(x * static_cast<double>(d));
    if (std::abs(x - p / static_cast<double>(d)) <= tol) {
      *out = Rational(static_cast<std::int64_t>(p), d);
      return true;
    }
  }
  return false;
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value has no rational form");
  int exp = 0;
  double mant = std::frexp(x, &exp);
  // 53 bits of mantissa are exact in an int64.
  auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
  exp -= 53;
  BigInt num = scaled;
  BigInt den = 1;
  if (exp >= 0) {
    num <<= exp;
  } else {
    den <<= -exp;
  }
  return Rational(num, den);
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }
bool Rational::is_integer() const { return denominator() == 1; }
int Rational::sign() const { return value_.sign(); }

double Rational::to_double() const { return value_.convert_to<double>(); }

std::string Rational::to_string() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

}  // namespace mwgames
