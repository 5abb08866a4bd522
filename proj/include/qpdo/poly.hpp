#pragma once

#include <vector>

#include "qpdo/rational.hpp"

namespace qpdo {

/// Dense univariate polynomial over the rationals.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rat c) {
    if (c != 0) c_.push_back(std::move(c));
  }
  static Poly monomial(const Rat& c, int deg);
  static Poly one() { return Poly(Rat(1)); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rat& coeff(int i) const;
  void set_coeff(int i, Rat v);
  const std::vector<Rat>& coeffs() const { return c_; }

  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& s) const;
  Poly operator-() const { return *this * Rat(-1); }

  // Exponent stretch x -> x^k (k >= 1).
  Poly stretch(int k) const;
  // Divide every exponent by k; all exponents must be multiples of k.
  Poly compress(int k) const;

  // Euclidean division; throws if divisor is zero.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  static Poly gcd(const Poly& a, const Poly& b);  // monic gcd

  Rat leading() const { return is_zero() ? Rat(0) : c_.back(); }
  Poly monic() const;

 private:
  void trim();
  std::vector<Rat> c_;  // c_[i] is the x^i coefficient; no trailing zeros
};

}  // namespace qpdo
