#ifndef QHANKEL_SCALAR_HPP
#define QHANKEL_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <variant>

namespace qhankel {

/// Precision regime of a computation. Exact values are arbitrary-precision
/// rationals, Float values are IEEE doubles.
enum class Regime { Exact, Float };

std::string_view to_string(Regime regime);
Regime parse_regime(std::string_view text);

/// Absolute tolerance used by equality and zero tests on Float scalars.
/// Exact algorithms never consult it.
double float_tolerance();
void set_float_tolerance(double eps);

inline constexpr double kDefaultFloatTolerance = 1e-9;

/// A real number tagged with its regime. Exact rationals are kept in lowest
/// terms with a positive denominator. Mixing regimes in arithmetic throws
/// RegimeError.
class Scalar {
 public:
  /// Exact zero.
  Scalar() : value_(mpq_class(0)) {}
  explicit Scalar(mpq_class q);
  explicit Scalar(double d) : value_(d) {}

  static Scalar exact(long num, long den = 1);
  static Scalar zero(Regime regime);
  static Scalar one(Regime regime);

  /// Parses "3/2", "-1", "0.25" or "1e-3". In the exact regime decimals are
  /// converted without rounding.
  static Scalar parse(std::string_view text, Regime regime);

  Regime regime() const {
    return std::holds_alternative<mpq_class>(value_) ? Regime::Exact
                                                     : Regime::Float;
  }
  bool is_exact() const { return regime() == Regime::Exact; }

  /// Throws RegimeError for a Float scalar.
  const mpq_class& rational() const;
  double to_double() const;

  /// Float -> Exact conversion is exact (every double is a dyadic rational).
  Scalar to_regime(Regime target) const;

  bool is_zero() const;
  int sign() const;

  /// Canonical text: "p/q" or "p" for Exact, shortest round-trip decimal for
  /// Float.
  std::string str() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  /// Exact: value equality. Float: |a - b| <= float_tolerance().
  /// Comparing across regimes throws.
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  std::variant<mpq_class, double> value_;
};

}  // namespace qhankel

#endif  // QHANKEL_SCALAR_HPP
