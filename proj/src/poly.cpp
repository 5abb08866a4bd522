#include "qpdo/poly.hpp"

namespace qpdo {

namespace {
const Rat kZero(0);
}

Poly Poly::monomial(const Rat& c, int deg) {
  Poly p;
  if (c == 0) return p;
  p.c_.assign(deg + 1, Rat(0));
  p.c_[deg] = c;
  return p;
}

const Rat& Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

void Poly::set_coeff(int i, Rat v) {
  if (i >= static_cast<int>(c_.size())) {
    if (v == 0) return;
    c_.resize(i + 1, Rat(0));
  }
  c_[i] = std::move(v);
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < r.c_.size(); ++i) {
    if (i < c_.size()) r.c_[i] += c_[i];
    if (i < o.c_.size()) r.c_[i] += o.c_[i];
  }
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (o * Rat(-1)); }

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  r.trim();
  return r;
}

Poly Poly::operator*(const Rat& s) const {
  Poly r;
  if (s == 0) return r;
  r.c_ = c_;
  for (auto& c : r.c_) c *= s;
  return r;
}

Poly Poly::stretch(int k) const {
  if (k == 1 || is_zero()) return *this;
  Poly r;
  r.c_.assign((c_.size() - 1) * k + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
  return r;
}

Poly Poly::compress(int k) const {
  if (k == 1 || is_zero()) return *this;
  Poly r;
  r.c_.assign((c_.size() - 1) / k + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (i % k != 0) throw Error("poly compress: exponent not divisible");
    r.c_[i / k] = c_[i];
  }
  r.trim();
  return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  q = Poly();
  r = a;
  const int db = b.degree();
  const Rat lead = b.leading();
  while (!r.is_zero() && r.degree() >= db) {
    int d = r.degree() - db;
    Rat c = r.leading() / lead;
    Poly t = Poly::monomial(c, d);
    q = q + t;
    r = r - t * b;
  }
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly q, r;
    divmod(x, y, q, r);
    x = y;
    y = r;
  }
  return x.is_zero() ? x : x.monic();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rat(1) / leading());
}

}  // namespace qpdo
