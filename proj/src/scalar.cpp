#include <ostream>
#include <sstream>

#include "wmac/scalar.hpp"

namespace wmac {

namespace {

// Divides out joint integer content and fixes the sign of the denominator.
void fix_content(Poly2& num, Poly2& den) {
  Int c = gcd(num.content(), den.content());
  if (den.lead().c < 0) c = -c;
  if (c != 1) {
    num = num.div_int(c);
    den = den.div_int(c);
  }
}

// Moves monomial factors of den into num so den has none.
void strip_den_monomial(Poly2& num, Poly2& den) {
  int da = den.min_a(), db = den.min_b();
  if (da != 0 || db != 0) {
    den = den.shifted(-da, -db);
    num = num.shifted(-da, -db);
  }
}

// gcd of a Laurent numerator with a denominator free of monomial factors.
Poly2 gcd_with_den(const Poly2& num, const Poly2& den) {
  if (den.is_constant() || num.is_zero()) return Poly2(1);
  Poly2 g = poly_gcd(num.shifted(-num.min_a(), -num.min_b()), den);
  return g.div_int(g.content());
}

std::string exponent_text(int k) {
  if (k % 2 == 0) return std::to_string(k / 2);
  return std::to_string(k) + "/2";
}

}  // namespace

Scalar::Scalar(const Rational& c) : num_(Int(c.get_num())), den_(Int(c.get_den())) {}

Scalar::Scalar(Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

void Scalar::canonicalize() {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  if (num_.is_zero()) {
    den_ = Poly2(1);
    return;
  }
  strip_den_monomial(num_, den_);
  if (!den_.is_constant()) {
    Poly2 g = gcd_with_den(num_, den_);
    if (!g.is_one()) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  fix_content(num_, den_);
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, Raw{}); }

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    Poly2 num = num_ + o.num_;
    if (num.is_zero()) return *this = Scalar();
    Poly2 g = gcd_with_den(num, den_);
    Poly2 den = den_;
    if (!g.is_one()) {
      num = num.exact_div(g);
      den = den.exact_div(g);
    }
    fix_content(num, den);
    num_ = std::move(num);
    den_ = std::move(den);
    return *this;
  }
  Poly2 g = (den_.is_constant() || o.den_.is_constant()) ? Poly2(1) : poly_gcd(den_, o.den_);
  g = g.div_int(g.content());
  Poly2 xd = den_.exact_div(g), yd = o.den_.exact_div(g);
  Poly2 num = num_ * yd + o.num_ * xd;
  if (num.is_zero()) return *this = Scalar();
  Poly2 den = den_ * yd;
  if (!g.is_constant()) {
    Poly2 h = gcd_with_den(num, g);
    if (!h.is_one()) {
      num = num.exact_div(h);
      den = den.exact_div(h);
    }
  }
  fix_content(num, den);
  num_ = std::move(num);
  den_ = std::move(den);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero() || o.is_zero()) return *this = Scalar();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  Poly2 g1 = gcd_with_den(num_, o.den_);
  Poly2 g2 = gcd_with_den(o.num_, den_);
  Poly2 num = (g1.is_one() ? num_ : num_.exact_div(g1)) * (g2.is_one() ? o.num_ : o.num_.exact_div(g2));
  Poly2 den = (g2.is_one() ? den_ : den_.exact_div(g2)) * (g1.is_one() ? o.den_ : o.den_.exact_div(g1));
  fix_content(num, den);
  num_ = std::move(num);
  den_ = std::move(den);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Poly2 num = den_, den = num_;
  strip_den_monomial(num, den);
  fix_content(num, den);
  return Scalar(std::move(num), std::move(den), Raw{});
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  if (e == 0) return Scalar(1);
  return Scalar(num_.pow(e), den_.pow(e), Raw{});
}

Rational Scalar::specialize(const Rational& s0, const Rational& w0) const {
  Rational d = den_.eval(s0, w0);
  if (d == 0) throw DegenerateSpecialization("denominator vanishes at " + s0.get_str() + ", " + w0.get_str());
  return num_.eval(s0, w0) / d;
}

bool operator<(const Scalar& x, const Scalar& y) {
  if (x.num_ != y.num_) return x.num_ < y.num_;
  return x.den_ < y.den_;
}

std::string Scalar::str() const { return num_.str() + "/" + den_.str(); }

Scalar Scalar::parse(const std::string& text) {
  std::size_t mid = text.find('/');
  if (mid == std::string::npos) return Scalar(Poly2::parse(text));
  return Scalar(Poly2::parse(text.substr(0, mid)), Poly2::parse(text.substr(mid + 1)));
}

namespace {

std::string poly_latex(const Poly2& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    Int c = t.c;
    if (c < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    bool unit = (t.a == 0 && t.b == 0);
    if (c != 1 || unit) os << c.get_str();
    if (t.a != 0) os << "q^{" << exponent_text(t.a) << "}";
    if (t.b != 0) os << "t^{" << exponent_text(t.b) << "}";
  }
  return os.str();
}

}  // namespace

std::string Scalar::latex() const {
  if (den_.is_one()) return poly_latex(num_);
  return "\\frac{" + poly_latex(num_) + "}{" + poly_latex(den_) + "}";
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

Scalar q_pow(int a) { return Scalar::monomial(1, 2 * a, 0); }
Scalar t_pow(int b) { return Scalar::monomial(1, 0, 2 * b); }
Scalar qq_pow(int k) { return Scalar::monomial(1, -k, -k); }
Scalar dd_pow(int k) { return Scalar::monomial(1, k, -k); }

}  // namespace wmac
