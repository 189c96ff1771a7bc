#include "wmac/uni_rat.hpp"

#include <sstream>

namespace wmac {

UniPoly::UniPoly(const Scalar& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UniPoly::UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::x_pow(int k) {
  std::vector<Scalar> c(k + 1);
  c[k] = Scalar(1);
  return UniPoly(std::move(c));
}

UniPoly UniPoly::linear(const Scalar& a, const Scalar& b) { return UniPoly({b, a}); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar UniPoly::coeff(int k) const {
  return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Scalar();
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

UniPoly operator+(const UniPoly& x, const UniPoly& y) {
  std::vector<Scalar> c(std::max(x.c_.size(), y.c_.size()));
  for (std::size_t i = 0; i < x.c_.size(); ++i) c[i] = x.c_[i];
  for (std::size_t i = 0; i < y.c_.size(); ++i) c[i] += y.c_[i];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& x, const UniPoly& y) { return x + (-y); }

UniPoly operator*(const UniPoly& x, const UniPoly& y) {
  if (x.is_zero() || y.is_zero()) return UniPoly();
  std::vector<Scalar> c(x.c_.size() + y.c_.size() - 1);
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) c[i + j] += x.c_[i] * y.c_[j];
  }
  return UniPoly(std::move(c));
}

void UniPoly::divmod(const UniPoly& d, UniPoly* q, UniPoly* r) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<Scalar> rem = c_;
  std::vector<Scalar> quo(std::max(0, degree() - d.degree() + 1));
  Scalar inv = d.lead().inverse();
  for (int k = degree(); k >= d.degree(); --k) {
    if (rem[k].is_zero()) continue;
    Scalar f = rem[k] * inv;
    quo[k - d.degree()] = f;
    for (int j = 0; j <= d.degree(); ++j) rem[k - d.degree() + j] -= f * d.c_[j];
  }
  if (q) *q = UniPoly(std::move(quo));
  if (r) *r = UniPoly(std::move(rem));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  Scalar inv = lead().inverse();
  UniPoly r = *this;
  for (auto& v : r.c_) v *= inv;
  return r;
}

Scalar UniPoly::eval(const Scalar& x) const {
  Scalar r;
  for (int k = degree(); k >= 0; --k) r = r * x + c_[k];
  return r;
}

std::string UniPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[k].str() << "*x^" << k;
  }
  return os.str();
}

UniPoly uni_gcd(const UniPoly& x, const UniPoly& y) {
  UniPoly a = x, b = y;
  while (!b.is_zero()) {
    UniPoly r;
    a.divmod(b, nullptr, &r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniRat::UniRat(UniPoly num, UniPoly den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (num.is_zero()) {
    den_ = UniPoly(Scalar(1));
    return;
  }
  UniPoly g = uni_gcd(num, den);
  if (g.degree() > 0) {
    num.divmod(g, &num, nullptr);
    den.divmod(g, &den, nullptr);
  }
  Scalar inv = den.lead().inverse();
  num_ = num * UniPoly(inv);
  den_ = den * UniPoly(inv);
}

UniRat operator+(const UniRat& x, const UniRat& y) {
  if (x.den_ == y.den_) return UniRat(x.num_ + y.num_, x.den_);
  return UniRat(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

UniRat operator-(const UniRat& x, const UniRat& y) { return x + UniRat(-y.num_, y.den_); }

UniRat operator*(const UniRat& x, const UniRat& y) {
  return UniRat(x.num_ * y.num_, x.den_ * y.den_);
}

UniRat operator/(const UniRat& x, const UniRat& y) {
  if (y.is_zero()) throw std::domain_error("division by zero rational function");
  return UniRat(x.num_ * y.den_, x.den_ * y.num_);
}

Scalar UniRat::eval(const Scalar& c) const {
  Scalar d = den_.eval(c);
  if (d.is_zero()) throw DegenerateSpecialization("pole of rational function");
  return num_.eval(c) / d;
}

Scalar UniRat::limit_at_infinity() const {
  if (num_.is_zero()) return Scalar();
  if (num_.degree() > den_.degree()) throw DegenerateSpecialization("divergent limit");
  if (num_.degree() < den_.degree()) return Scalar();
  return num_.lead() / den_.lead();
}

std::string UniRat::str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

LinearSplit divide_out_linear(const UniRat& f, const Scalar& c) {
  LinearSplit out;
  if (f.is_zero()) throw std::domain_error("order of zero function");
  UniPoly lin = UniPoly::linear(Scalar(1), -c);
  auto strip = [&](UniPoly p, int* count) {
    for (;;) {
      UniPoly q, r;
      p.divmod(lin, &q, &r);
      if (!r.is_zero()) return p;
      p = std::move(q);
      ++*count;
    }
  };
  int up = 0, down = 0;
  UniPoly num = strip(f.num(), &up);
  UniPoly den = strip(f.den(), &down);
  out.order = up - down;
  out.rest = UniRat(num, den);
  return out;
}

}  // namespace wmac
