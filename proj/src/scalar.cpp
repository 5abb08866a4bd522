#include "qpdo/scalar.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace qpdo {

long Scalar::default_root_order() {
  static long d = [] {
    if (const char* e = std::getenv("QPDO_DEFAULT_D")) {
      long v = std::atol(e);
      if (v >= 1) return v;
    }
    return 2L;
  }();
  return d;
}

Scalar Scalar::from_rat(const Rat& c) {
  Scalar s;
  if (c != 0) s.num_.push_back(Poly(c));
  return s;
}

Scalar Scalar::q_pow(const Rat& e) {
  Scalar s;
  long r = rat_den(e);
  long p = to_long(Rat(e.get_num()));
  s.d_ = r;
  if (p >= 0) {
    s.num_.push_back(Poly::monomial(Rat(1), static_cast<int>(p)));
  } else {
    s.num_.push_back(Poly::one());
    s.den_ = Poly::monomial(Rat(1), static_cast<int>(-p));
  }
  s.canonicalize();
  return s;
}

Scalar Scalar::ell(int g) {
  Scalar s;
  if (g < 0) throw Error("negative l power");
  s.num_.assign(g + 1, Poly());
  s.num_[g] = Poly::one();
  return s;
}

bool Scalar::is_one() const {
  return num_.size() == 1 && num_[0] == Poly::one() && den_ == Poly::one();
}

int Scalar::ell_min() const {
  for (size_t g = 0; g < num_.size(); ++g)
    if (!num_[g].is_zero()) return static_cast<int>(g);
  return -1;
}

Scalar Scalar::ell_coeff(int g) const {
  Scalar r;
  if (g < 0 || g >= static_cast<int>(num_.size()) || num_[g].is_zero()) return r;
  r.num_.push_back(num_[g]);
  r.den_ = den_;
  r.d_ = d_;
  r.canonicalize();
  return r;
}

bool Scalar::is_rational() const {
  if (is_zero()) return true;
  return num_.size() == 1 && num_[0].degree() == 0 && den_.degree() == 0;
}

Rat Scalar::as_rational() const {
  if (is_zero()) return Rat(0);
  if (!is_rational()) throw Error("scalar is not a plain rational: " + str());
  return num_[0].coeff(0) / den_.coeff(0);
}

void Scalar::lift(long new_d) {
  if (new_d == d_) return;
  if (new_d % d_ != 0) throw Error("bad root order lift");
  int k = static_cast<int>(new_d / d_);
  for (auto& p : num_) p = p.stretch(k);
  den_ = den_.stretch(k);
  d_ = new_d;
}

void Scalar::unify(Scalar& a, Scalar& b) {
  long d = lcm_long(a.d_, b.d_);
  a.lift(d);
  b.lift(d);
}

void Scalar::canonicalize() {
  while (!num_.empty() && num_.back().is_zero()) num_.pop_back();
  if (num_.empty()) {
    den_ = Poly::one();
    d_ = 1;
    return;
  }
  Poly g = den_;
  for (const auto& p : num_) g = Poly::gcd(g, p);
  if (g.degree() > 0) {
    Poly q, r;
    for (auto& p : num_) {
      Poly::divmod(p, g, q, r);
      p = q;
    }
    Poly::divmod(den_, g, q, r);
    den_ = q;
  }
  Rat lead = den_.leading();
  if (lead != 1) {
    Rat inv = Rat(1) / lead;
    for (auto& p : num_) p = p * inv;
    den_ = den_ * inv;
  }
  // minimal root order: compress common exponent stride
  long stride = d_;
  auto fold = [&stride](const Poly& p) {
    for (int i = 0; i <= p.degree() && stride > 1; ++i)
      if (p.coeff(i) != 0) stride = std::gcd(stride, static_cast<long>(i));
  };
  for (const auto& p : num_) fold(p);
  fold(den_);
  if (stride > 1) {
    for (auto& p : num_) p = p.compress(static_cast<int>(stride));
    den_ = den_.compress(static_cast<int>(stride));
    d_ /= stride;
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar a = *this, b = o;
  unify(a, b);
  Scalar r;
  r.d_ = a.d_;
  r.den_ = a.den_ * b.den_;
  r.num_.assign(std::max(a.num_.size(), b.num_.size()), Poly());
  for (size_t g = 0; g < r.num_.size(); ++g) {
    Poly p;
    if (g < a.num_.size()) p = p + a.num_[g] * b.den_;
    if (g < b.num_.size()) p = p + b.num_[g] * a.den_;
    r.num_[g] = p;
  }
  r.canonicalize();
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& p : r.num_) p = -p;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_zero() || o.is_zero()) return Scalar();
  Scalar a = *this, b = o;
  unify(a, b);
  Scalar r;
  r.d_ = a.d_;
  r.den_ = a.den_ * b.den_;
  r.num_.assign(a.num_.size() + b.num_.size() - 1, Poly());
  for (size_t g = 0; g < a.num_.size(); ++g) {
    if (a.num_[g].is_zero()) continue;
    for (size_t h = 0; h < b.num_.size(); ++h) {
      if (b.num_[h].is_zero()) continue;
      r.num_[g + h] = r.num_[g + h] + a.num_[g] * b.num_[h];
    }
  }
  r.canonicalize();
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero scalar");
  if (num_.size() != 1) throw Error("scalar with l-terms is not invertible: " + str());
  Scalar r;
  r.d_ = d_;
  r.num_.push_back(den_);
  r.den_ = num_[0];
  r.canonicalize();
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw Error("division by zero scalar");
  int t = o.ell_min();
  if (t != o.ell_degree())
    throw Error("divisor mixes l-grades: " + o.str());
  if (t == 0) return *this * o.inverse();
  // divisor = l^t * (l-free part); shift our grades down by t
  Scalar shifted;
  shifted.d_ = d_;
  shifted.den_ = den_;
  if (ell_min() >= 0 && ell_min() < t)
    throw Error("l-grade division not exact");
  for (size_t g = t; g < num_.size(); ++g) shifted.num_.push_back(num_[g]);
  shifted.canonicalize();
  return shifted * o.ell_coeff(t).inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  return d_ == o.d_ && den_ == o.den_ && num_ == o.num_;
}

Scalar Scalar::pow(long e) const {
  if (e == 0) return from_rat(Rat(1));
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : e;
  Scalar acc = from_rat(Rat(1));
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

Scalar Scalar::pow(const Rat& e) const {
  if (is_integer(e)) return pow(to_long(e));
  // only pure q-powers admit rational exponents
  if (is_zero() || num_.size() != 1) throw Error("rational pow of a non-monomial");
  const Poly& n = num_[0];
  int nk = -1, dk = -1;
  for (int i = 0; i <= n.degree(); ++i)
    if (n.coeff(i) != 0) {
      if (nk >= 0) throw Error("rational pow of a non-monomial");
      nk = i;
    }
  for (int i = 0; i <= den_.degree(); ++i)
    if (den_.coeff(i) != 0) {
      if (dk >= 0) throw Error("rational pow of a non-monomial");
      dk = i;
    }
  if (n.coeff(nk) != den_.coeff(dk)) throw Error("rational pow of a non-monomial");
  Rat qexp = Rat(nk - dk) / Rat(d_);
  return q_pow(qexp * e);
}

Scalar operator*(const Rat& c, const Scalar& s) { return Scalar::from_rat(c) * s; }

Scalar eta(int i, const Rat& alpha, long n) {
  if (n == 0) throw Error("eta undefined at n = 0");
  Scalar num = Scalar::q_pow(alpha * n);
  Scalar mirror = Scalar::q_pow(-alpha * n);
  num = (i % 2 == 0) ? num + mirror : num - mirror;
  Scalar den = Scalar::q_pow(Rat(n, 2)) - Scalar::q_pow(Rat(-n, 2));
  Scalar r = num / den;
  if (i > 0) {
    Rat fact(1);
    for (int t = 2; t <= i; ++t) fact *= t;
    Rat npow(1);
    for (int t = 0; t < i; ++t) npow *= n;
    r = r * Scalar::ell(i) * Scalar::from_rat(npow / fact);
  }
  return r;
}

// ---- text form ------------------------------------------------------------

namespace {

void print_terms(std::ostringstream& out, const std::vector<Poly>& grades) {
  bool first = true;
  for (size_t g = 0; g < grades.size(); ++g) {
    const Poly& p = grades[g];
    for (int i = 0; i <= p.degree(); ++i) {
      if (p.coeff(i) == 0) continue;
      if (!first) out << " + ";
      first = false;
      out << p.coeff(i).get_str();
      if (i > 0) out << "*v^" << i;
      if (g > 0) out << "*l^" << g;
    }
  }
  if (first) out << "0";
}

struct Cursor {
  const std::string& s;
  size_t pos = 0;
  void skip_ws() {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw Error("scalar parse: expected '" + std::string(1, c) + "' in '" + s + "'");
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
};

Rat parse_number(Cursor& c) {
  c.skip_ws();
  size_t start = c.pos;
  if (c.pos < c.s.size() && (c.s[c.pos] == '-' || c.s[c.pos] == '+')) ++c.pos;
  while (c.pos < c.s.size() && (std::isdigit(static_cast<unsigned char>(c.s[c.pos])) || c.s[c.pos] == '/')) ++c.pos;
  if (c.pos == start) throw Error("scalar parse: number expected in '" + c.s + "'");
  return parse_rat(c.s.substr(start, c.pos - start));
}

long parse_int(Cursor& c) {
  Rat r = parse_number(c);
  return to_long(r);
}

// terms: rat [*v^int] [*l^int] joined by '+'
void parse_term_sum(Cursor& c, std::vector<Poly>& grades, char stop) {
  while (true) {
    Rat coeff = parse_number(c);
    int vexp = 0, lexp = 0;
    while (c.eat('*')) {
      c.skip_ws();
      if (c.pos < c.s.size() && c.s[c.pos] == 'v') {
        ++c.pos;
        c.expect('^');
        vexp = static_cast<int>(parse_int(c));
      } else if (c.pos < c.s.size() && c.s[c.pos] == 'l') {
        ++c.pos;
        c.expect('^');
        lexp = static_cast<int>(parse_int(c));
      } else {
        throw Error("scalar parse: expected v or l in '" + c.s + "'");
      }
    }
    if (coeff != 0) {
      if (lexp >= static_cast<int>(grades.size())) grades.resize(lexp + 1);
      grades[lexp].set_coeff(vexp, grades[lexp].coeff(vexp) + coeff);
    }
    c.skip_ws();
    if (c.pos < c.s.size() && c.s[c.pos] == '+') {
      ++c.pos;
      continue;
    }
    if (stop != 0 && c.pos < c.s.size() && c.s[c.pos] == stop) return;
    if (c.done()) return;
    if (stop == 0) throw Error("scalar parse: trailing junk in '" + c.s + "'");
    return;
  }
}

}  // namespace

std::string Scalar::str() const {
  std::ostringstream out;
  if (d_ > 1) out << "[D=" << d_ << "] ";
  if (den_ == Poly::one()) {
    print_terms(out, num_);
  } else {
    out << "(";
    print_terms(out, num_);
    out << ")/(";
    std::vector<Poly> d{den_};
    print_terms(out, d);
    out << ")";
  }
  return out.str();
}

Scalar Scalar::parse(const std::string& text) {
  Cursor c{text};
  Scalar r;
  r.d_ = default_root_order();
  c.skip_ws();
  if (c.eat('[')) {
    c.expect('D');
    c.expect('=');
    r.d_ = parse_int(c);
    if (r.d_ < 1) throw Error("scalar parse: bad root order");
    c.expect(']');
  }
  c.skip_ws();
  if (c.eat('(')) {
    parse_term_sum(c, r.num_, ')');
    c.expect(')');
    c.expect('/');
    c.expect('(');
    std::vector<Poly> den_terms;
    parse_term_sum(c, den_terms, ')');
    c.expect(')');
    if (den_terms.size() != 1) throw Error("scalar parse: l in denominator");
    r.den_ = den_terms[0];
    if (r.den_.is_zero()) throw Error("scalar parse: zero denominator");
  } else {
    parse_term_sum(c, r.num_, 0);
  }
  if (!c.done()) throw Error("scalar parse: trailing junk in '" + text + "'");
  r.canonicalize();
  return r;
}

}  // namespace qpdo
