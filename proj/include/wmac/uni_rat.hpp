#pragma once

#include <string>
#include <vector>

#include "wmac/scalar.hpp"

namespace wmac {

// Dense polynomial in one variable x with Scalar coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const Scalar& c);  // NOLINT
  explicit UniPoly(std::vector<Scalar> coeffs);
  static UniPoly x_pow(int k);
  // a*x + b
  static UniPoly linear(const Scalar& a, const Scalar& b);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int k) const;
  const Scalar& lead() const { return c_.back(); }

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& x, const UniPoly& y);
  friend UniPoly operator-(const UniPoly& x, const UniPoly& y);
  friend UniPoly operator*(const UniPoly& x, const UniPoly& y);
  friend bool operator==(const UniPoly& x, const UniPoly& y) { return x.c_ == y.c_; }
  friend bool operator!=(const UniPoly& x, const UniPoly& y) { return !(x == y); }

  void divmod(const UniPoly& d, UniPoly* q, UniPoly* r) const;
  UniPoly monic() const;
  Scalar eval(const Scalar& x) const;
  std::string str() const;

 private:
  std::vector<Scalar> c_;
  void trim();
};

UniPoly uni_gcd(const UniPoly& x, const UniPoly& y);

// Rational function num/den in x over Q(s, w), gcd-reduced with den monic.
class UniRat {
 public:
  UniRat() : num_(), den_(Scalar(1)) {}
  UniRat(const Scalar& c) : num_(c), den_(Scalar(1)) {}  // NOLINT
  UniRat(const UniPoly& p) : num_(p), den_(Scalar(1)) {}  // NOLINT
  UniRat(UniPoly num, UniPoly den);

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend UniRat operator+(const UniRat& x, const UniRat& y);
  friend UniRat operator-(const UniRat& x, const UniRat& y);
  friend UniRat operator*(const UniRat& x, const UniRat& y);
  friend UniRat operator/(const UniRat& x, const UniRat& y);
  friend bool operator==(const UniRat& x, const UniRat& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

  // Value at x = c; throws DegenerateSpecialization on a pole.
  Scalar eval(const Scalar& c) const;
  // Limit as x -> infinity; throws DegenerateSpecialization when it diverges.
  Scalar limit_at_infinity() const;
  std::string str() const;

 private:
  UniPoly num_;
  UniPoly den_;
};

// f = (x - c)^order * rest with rest regular and nonzero at c.
struct LinearSplit {
  int order = 0;
  UniRat rest;
};
LinearSplit divide_out_linear(const UniRat& f, const Scalar& c);

}  // namespace wmac
