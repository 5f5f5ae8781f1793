#include "qhankel/scalar.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>

#include "qhankel/error.hpp"

namespace qhankel {

namespace {

std::atomic<double> g_float_tolerance{kDefaultFloatTolerance};

[[noreturn]] void throw_mixed(const char* op) {
  throw RegimeError(std::string("cannot mix exact and float scalars in ") + op);
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// Splits an optional leading sign. Returns true for '-'.
bool take_sign(std::string_view& s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    bool neg = s.front() == '-';
    s.remove_prefix(1);
    return neg;
  }
  return false;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// Exact value of a decimal literal such as "-12.50e-3".
mpq_class parse_decimal_exact(std::string_view text) {
  std::string_view s = text;
  bool neg = take_sign(s);
  std::string_view mant = s;
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mant = s.substr(0, e);
    std::string_view exp_part = s.substr(e + 1);
    bool exp_neg = take_sign(exp_part);
    if (!all_digits(exp_part) || exp_part.size() > 4)
      throw ParseError("bad exponent in number '" + std::string(text) + "'");
    exponent = std::stol(std::string(exp_part));
    if (exp_neg) exponent = -exponent;
  }
  std::string digits;
  if (auto dot = mant.find('.'); dot != std::string_view::npos) {
    std::string_view ip = mant.substr(0, dot), fp = mant.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp)))
      throw ParseError("bad number '" + std::string(text) + "'");
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(mant))
      throw ParseError("bad number '" + std::string(text) + "'");
    digits = std::string(mant);
  }
  mpz_class num(digits, 10);
  if (neg) num = -num;
  mpq_class q;
  if (exponent >= 0) {
    q = mpq_class(num * pow10(static_cast<unsigned long>(exponent)));
  } else {
    q = mpq_class(num, pow10(static_cast<unsigned long>(-exponent)));
    q.canonicalize();
  }
  return q;
}

mpq_class parse_exact(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash), den = text.substr(slash + 1);
    std::string_view num_body = num;
    bool neg = take_sign(num_body);
    if (!all_digits(num_body) || !all_digits(den))
      throw ParseError("bad rational '" + std::string(text) + "'");
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    mpz_class n(std::string(num_body), 10);
    if (neg) n = -n;
    mpq_class q(n, d);
    q.canonicalize();
    return q;
  }
  return parse_decimal_exact(text);
}

}  // namespace

std::string_view to_string(Regime regime) {
  return regime == Regime::Exact ? "exact" : "float";
}

Regime parse_regime(std::string_view text) {
  if (text == "exact") return Regime::Exact;
  if (text == "float") return Regime::Float;
  throw ParseError("unknown regime '" + std::string(text) + "'");
}

double float_tolerance() { return g_float_tolerance.load(); }

void set_float_tolerance(double eps) {
  if (!(eps > 0.0)) throw DomainError("float tolerance must be positive");
  g_float_tolerance.store(eps);
}

Scalar::Scalar(mpq_class q) : value_(std::move(q)) {
  std::get<mpq_class>(value_).canonicalize();
}

Scalar Scalar::exact(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::zero(Regime regime) {
  return regime == Regime::Exact ? Scalar() : Scalar(0.0);
}

Scalar Scalar::one(Regime regime) {
  return regime == Regime::Exact ? Scalar(mpq_class(1)) : Scalar(1.0);
}

Scalar Scalar::parse(std::string_view text, Regime regime) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty number");
  mpq_class q = parse_exact(text);
  if (regime == Regime::Exact) return Scalar(std::move(q));
  if (text.find('/') == std::string_view::npos) {
    // Decimal literal: let strtod round correctly.
    return Scalar(std::strtod(std::string(text).c_str(), nullptr));
  }
  return Scalar(q.get_d());
}

const mpq_class& Scalar::rational() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw RegimeError("exact value requested from a float scalar");
}

double Scalar::to_double() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return q->get_d();
  return std::get<double>(value_);
}

Scalar Scalar::to_regime(Regime target) const {
  if (target == regime()) return *this;
  if (target == Regime::Float) return Scalar(to_double());
  double d = std::get<double>(value_);
  if (!std::isfinite(d)) throw DomainError("non-finite float has no exact value");
  return Scalar(mpq_class(d));
}

bool Scalar::is_zero() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::abs(std::get<double>(value_)) <= float_tolerance();
}

int Scalar::sign() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q);
  double d = std::get<double>(value_);
  return (d > 0) - (d < 0);
}

std::string Scalar::str() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, std::get<double>(value_));
  return std::string(buf, end);
}

Scalar Scalar::operator-() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return Scalar(mpq_class(-*q));
  return Scalar(-std::get<double>(value_));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (value_.index() != rhs.value_.index()) throw_mixed("addition");
  if (auto* q = std::get_if<mpq_class>(&value_))
    *q += std::get<mpq_class>(rhs.value_);
  else
    std::get<double>(value_) += std::get<double>(rhs.value_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  if (value_.index() != rhs.value_.index()) throw_mixed("subtraction");
  if (auto* q = std::get_if<mpq_class>(&value_))
    *q -= std::get<mpq_class>(rhs.value_);
  else
    std::get<double>(value_) -= std::get<double>(rhs.value_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (value_.index() != rhs.value_.index()) throw_mixed("multiplication");
  if (auto* q = std::get_if<mpq_class>(&value_))
    *q *= std::get<mpq_class>(rhs.value_);
  else
    std::get<double>(value_) *= std::get<double>(rhs.value_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (value_.index() != rhs.value_.index()) throw_mixed("division");
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    const auto& d = std::get<mpq_class>(rhs.value_);
    if (sgn(d) == 0) throw DomainError("division by zero");
    *q /= d;
  } else {
    double d = std::get<double>(rhs.value_);
    if (d == 0.0) throw DomainError("division by zero");
    std::get<double>(value_) /= d;
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) throw_mixed("comparison");
  if (auto* q = std::get_if<mpq_class>(&a.value_))
    return *q == std::get<mpq_class>(b.value_);
  return std::abs(std::get<double>(a.value_) - std::get<double>(b.value_)) <=
         float_tolerance();
}

}  // namespace qhankel
