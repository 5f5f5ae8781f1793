#ifndef QHANKEL_QUATERNION_HPP
#define QHANKEL_QUATERNION_HPP

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>

#include "qhankel/scalar.hpp"

namespace qhankel {

/// q = w + x i + y j + z k with i^2 = j^2 = k^2 = ijk = -1.
///
/// All four components share one regime; the constructor enforces it.
class Quaternion {
 public:
  /// Exact zero.
  Quaternion() = default;
  Quaternion(Scalar w, Scalar x, Scalar y, Scalar z);
  /// Real quaternion w + 0i + 0j + 0k.
  explicit Quaternion(Scalar w);

  static Quaternion zero(Regime regime);
  static Quaternion one(Regime regime);
  static Quaternion unit_i(Regime regime);
  static Quaternion unit_j(Regime regime);
  static Quaternion unit_k(Regime regime);
  /// Exact quaternion from integer components.
  static Quaternion exact(long w, long x = 0, long y = 0, long z = 0);
  static Quaternion real(double w, double x = 0, double y = 0, double z = 0);

  /// Parses "a+bi+cj+dk"; any term may be omitted and a unit coefficient of
  /// 1 may be dropped ("i-k", "3/2j", "-0.5").
  static Quaternion parse(std::string_view text, Regime regime);

  const Scalar& w() const { return c_[0]; }
  const Scalar& x() const { return c_[1]; }
  const Scalar& y() const { return c_[2]; }
  const Scalar& z() const { return c_[3]; }
  /// Component on basis element 0..3 = {1, i, j, k}.
  const Scalar& operator[](std::size_t idx) const { return c_[idx]; }

  Regime regime() const { return c_[0].regime(); }
  Quaternion to_regime(Regime target) const;

  bool is_zero() const;
  Quaternion conj() const;
  Scalar norm_sq() const;
  /// conj(q) / norm_sq(q). Throws DomainError for q = 0.
  Quaternion inverse() const;

  std::string str() const;

  Quaternion operator-() const;
  Quaternion& operator+=(const Quaternion& rhs);
  Quaternion& operator-=(const Quaternion& rhs);

  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  /// Hamilton product.
  friend Quaternion operator*(const Quaternion& p, const Quaternion& q);
  friend Quaternion operator*(const Scalar& s, const Quaternion& q);
  friend Quaternion operator*(const Quaternion& q, const Scalar& s) { return s * q; }

  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.c_ == b.c_;
  }

 private:
  std::array<Scalar, 4> c_{};
};

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace qhankel

#endif  // QHANKEL_QUATERNION_HPP
