#pragma once

#include <string>
#include <vector>

#include "qpdo/poly.hpp"

namespace qpdo {

/// Exact coefficient field element: a rational function in the formal root
/// v = q^{1/D}, tensored with polynomials in the formal symbol l = log q.
/// The denominator is l-free; the whole value is kept gcd-reduced with a
/// monic denominator and minimal root order D, so equality is structural.
class Scalar {
 public:
  Scalar() : den_(Poly::one()), d_(1) {}

  static Scalar from_rat(const Rat& c);
  static Scalar integer(long n) { return from_rat(Rat(n)); }
  /// q^e for rational e.
  static Scalar q_pow(const Rat& e);
  static Scalar q() { return q_pow(Rat(1)); }
  /// l^g (log q to the g-th power).
  static Scalar ell(int g = 1);

  bool is_zero() const { return num_.empty(); }
  bool is_one() const;
  /// Largest l-power with a nonzero coefficient (-1 when zero).
  int ell_degree() const { return static_cast<int>(num_.size()) - 1; }
  /// Smallest l-power with a nonzero coefficient (-1 when zero).
  int ell_min() const;
  /// The l-free coefficient of l^g, as a Scalar.
  Scalar ell_coeff(int g) const;
  /// True when the value is a rational number (no v, no l).
  bool is_rational() const;
  Rat as_rational() const;

  long root_order() const { return d_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inverse() const;
  Scalar pow(long e) const;
  /// Rational power; defined for pure q-powers only.
  Scalar pow(const Rat& e) const;

  /// Canonical text form; parser/printer round-trip exactly.
  std::string str() const;
  static Scalar parse(const std::string& text);

  /// Root denominator used when parsing text without a [D=k] prefix
  /// (env QPDO_DEFAULT_D, default 2).
  static long default_root_order();

 private:
  void canonicalize();
  static void unify(Scalar& a, Scalar& b);
  void lift(long new_d);

  // num_[g] is the v-polynomial multiplying l^g; no zero polynomial at back.
  std::vector<Poly> num_;
  Poly den_;
  long d_;
};

Scalar operator*(const Rat& c, const Scalar& s);

/// eta_i(alpha, n) = (q^{alpha n} + (-1)^i q^{-alpha n}) / (q^{n/2} - q^{-n/2})
/// * (n l)^i / i! ; requires n != 0.
Scalar eta(int i, const Rat& alpha, long n);

}  // namespace qpdo
