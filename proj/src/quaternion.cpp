#include "qhankel/quaternion.hpp"

#include <cctype>
#include <ostream>

#include "qhankel/error.hpp"

namespace qhankel {

namespace {

bool number_char(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '/';
}

}  // namespace

Quaternion::Quaternion(Scalar w, Scalar x, Scalar y, Scalar z)
    : c_{std::move(w), std::move(x), std::move(y), std::move(z)} {
  const Regime r = c_[0].regime();
  for (const auto& s : c_)
    if (s.regime() != r)
      throw RegimeError("quaternion components must share one regime");
}

Quaternion::Quaternion(Scalar w) {
  const Regime r = w.regime();
  c_ = {std::move(w), Scalar::zero(r), Scalar::zero(r), Scalar::zero(r)};
}

Quaternion Quaternion::zero(Regime regime) { return Quaternion(Scalar::zero(regime)); }
Quaternion Quaternion::one(Regime regime) { return Quaternion(Scalar::one(regime)); }

Quaternion Quaternion::unit_i(Regime regime) {
  auto z = Scalar::zero(regime);
  return {z, Scalar::one(regime), z, z};
}

Quaternion Quaternion::unit_j(Regime regime) {
  auto z = Scalar::zero(regime);
  return {z, z, Scalar::one(regime), z};
}

Quaternion Quaternion::unit_k(Regime regime) {
  auto z = Scalar::zero(regime);
  return {z, z, z, Scalar::one(regime)};
}

Quaternion Quaternion::exact(long w, long x, long y, long z) {
  return {Scalar::exact(w), Scalar::exact(x), Scalar::exact(y), Scalar::exact(z)};
}

Quaternion Quaternion::real(double w, double x, double y, double z) {
  return {Scalar(w), Scalar(x), Scalar(y), Scalar(z)};
}

Quaternion Quaternion::parse(std::string_view text, Regime regime) {
  std::array<Scalar, 4> comp{Scalar::zero(regime), Scalar::zero(regime),
                             Scalar::zero(regime), Scalar::zero(regime)};
  std::array<bool, 4> seen{};
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("bad quaternion '" + std::string(text) + "': " + why);
  };

  skip_ws();
  if (pos == text.size()) throw fail("empty");
  bool first = true;
  while (pos < text.size()) {
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
      skip_ws();
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;

    std::size_t start = pos;
    while (pos < text.size()) {
      char c = text[pos];
      if (number_char(c)) {
        ++pos;
      } else if ((c == 'e' || c == 'E') && pos > start) {
        // Exponent: e[+-]digits
        std::size_t p = pos + 1;
        if (p < text.size() && (text[p] == '+' || text[p] == '-')) ++p;
        if (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
          pos = p;
        } else {
          break;
        }
      } else {
        break;
      }
    }
    std::string_view number = text.substr(start, pos - start);
    skip_ws();

    std::size_t basis = 0;
    if (pos < text.size() && (text[pos] == 'i' || text[pos] == 'j' || text[pos] == 'k')) {
      basis = static_cast<std::size_t>(text[pos] - 'i') + 1;
      ++pos;
    } else if (number.empty()) {
      throw fail("missing coefficient");
    }
    if (seen[basis]) throw fail("repeated term");
    seen[basis] = true;

    Scalar value = number.empty() ? Scalar::one(regime) : Scalar::parse(number, regime);
    comp[basis] = negative ? -value : value;
    skip_ws();
  }
  return {comp[0], comp[1], comp[2], comp[3]};
}

Quaternion Quaternion::to_regime(Regime target) const {
  return {c_[0].to_regime(target), c_[1].to_regime(target),
          c_[2].to_regime(target), c_[3].to_regime(target)};
}

bool Quaternion::is_zero() const {
  return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

Quaternion Quaternion::conj() const { return {c_[0], -c_[1], -c_[2], -c_[3]}; }

Scalar Quaternion::norm_sq() const {
  return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3];
}

Quaternion Quaternion::inverse() const {
  Scalar n = norm_sq();
  if (n.sign() == 0) throw DomainError("inverse of the zero quaternion");
  return {c_[0] / n, -c_[1] / n, -c_[2] / n, -c_[3] / n};
}

std::string Quaternion::str() const {
  static constexpr const char* kUnit[] = {"", "i", "j", "k"};
  std::string out;
  for (std::size_t b = 0; b < 4; ++b) {
    const Scalar& s = c_[b];
    if (s.sign() == 0) continue;
    std::string coeff = s.str();
    bool neg = coeff.front() == '-';
    if (neg) coeff.erase(0, 1);
    if (b > 0 && coeff == "1") coeff.clear();
    if (neg)
      out += '-';
    else if (!out.empty())
      out += '+';
    out += coeff;
    out += kUnit[b];
  }
  return out.empty() ? "0" : out;
}

Quaternion Quaternion::operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

Quaternion& Quaternion::operator+=(const Quaternion& rhs) {
  for (std::size_t b = 0; b < 4; ++b) c_[b] += rhs.c_[b];
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& rhs) {
  for (std::size_t b = 0; b < 4; ++b) c_[b] -= rhs.c_[b];
  return *this;
}

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  const auto& [a1, b1, c1, d1] = p.c_;
  const auto& [a2, b2, c2, d2] = q.c_;
  return {a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
          a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
          a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
          a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2};
}

Quaternion operator*(const Scalar& s, const Quaternion& q) {
  return {s * q.c_[0], s * q.c_[1], s * q.c_[2], s * q.c_[3]};
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << q.str(); }

}  // namespace qhankel
