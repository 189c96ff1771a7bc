#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wmac {

using Int = mpz_class;
using Rational = mpq_class;

// Thrown when a value is evaluated where a denominator vanishes.
class DegenerateSpecialization : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Laurent polynomial in s, w with integer coefficients.
// Terms are kept sorted lex-descending on (deg_s, deg_w) with no zero entries.
class Poly2 {
 public:
  struct Term {
    int a;  // exponent of s
    int b;  // exponent of w
    Int c;
  };

  Poly2() = default;
  Poly2(long c);  // NOLINT
  Poly2(const Int& c);  // NOLINT
  static Poly2 monomial(const Int& c, int a, int b);
  static Poly2 from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;
  std::size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }

  int min_a() const;
  int min_b() const;
  int max_a() const;
  int max_b() const;
  bool is_polynomial() const { return is_zero() || (min_a() >= 0 && min_b() >= 0); }

  Poly2 operator-() const;
  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2& operator*=(const Poly2& o);
  friend Poly2 operator+(Poly2 x, const Poly2& y) { return x += y; }
  friend Poly2 operator-(Poly2 x, const Poly2& y) { return x -= y; }
  friend Poly2 operator*(const Poly2& x, const Poly2& y);

  Poly2 scaled(const Int& c) const;
  Poly2 shifted(int da, int db) const;
  Poly2 div_int(const Int& c) const;  // exact
  Int content() const;
  Poly2 pow(unsigned e) const;

  // Exact quotient if o divides *this in the Laurent ring, otherwise false.
  bool divides_into(const Poly2& o, Poly2* quotient) const;
  Poly2 exact_div(const Poly2& o) const;

  Rational eval(const Rational& s, const Rational& w) const;
  Poly2 subs_w(const Int& w) const;  // evaluates w, keeps s

  std::size_t hash() const;
  friend bool operator==(const Poly2& x, const Poly2& y);
  friend bool operator!=(const Poly2& x, const Poly2& y) { return !(x == y); }
  friend bool operator<(const Poly2& x, const Poly2& y);

  std::string str() const;
  static Poly2 parse(const std::string& text);

 private:
  std::vector<Term> terms_;
  void normalize();
};

// gcd of two polynomials (no negative exponents), integer content included,
// leading coefficient positive.
Poly2 poly_gcd(const Poly2& x, const Poly2& y);

// Element of Q(s, w) where s^2 = q and w^2 = t.
// Canonical form: num/den with den a polynomial free of monomial factors,
// gcd(num, den) = 1, joint integer content 1, lex-leading coefficient of den > 0.
class Scalar {
 public:
  Scalar() : num_(0), den_(1) {}
  Scalar(long c) : num_(c), den_(1) {}  // NOLINT
  Scalar(const Int& c) : num_(c), den_(1) {}  // NOLINT
  Scalar(const Rational& c);  // NOLINT
  Scalar(Poly2 p) : num_(std::move(p)), den_(1) {}  // NOLINT
  Scalar(Poly2 num, Poly2 den);

  static Scalar s_pow(int a) { return Scalar(Poly2::monomial(1, a, 0)); }
  static Scalar w_pow(int b) { return Scalar(Poly2::monomial(1, 0, b)); }
  static Scalar monomial(const Int& c, int a, int b) { return Scalar(Poly2::monomial(c, a, b)); }
  // q^a t^b
  static Scalar qt(int a, int b) { return monomial(1, 2 * a, 2 * b); }

  const Poly2& num() const { return num_; }
  const Poly2& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_constant(); }
  bool is_monomial() const { return num_.is_monomial() && den_.is_constant(); }
  std::size_t weight() const { return num_.size() + den_.size(); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  Scalar inverse() const;
  Scalar pow(int e) const;

  // Value at s = s0, w = w0.
  Rational specialize(const Rational& s0, const Rational& w0) const;

  std::size_t hash() const { return num_.hash() * 1000003u ^ den_.hash(); }
  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
  friend bool operator<(const Scalar& x, const Scalar& y);

  // "num/den" with terms written c*s^a*w^b.
  std::string str() const;
  static Scalar parse(const std::string& text);
  std::string latex() const;

 private:
  Poly2 num_;
  Poly2 den_;
  void canonicalize();
  struct Raw {};
  Scalar(Poly2 num, Poly2 den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
};

std::ostream& operator<<(std::ostream& os, const Scalar& x);
std::ostream& operator<<(std::ostream& os, const Poly2& x);

// Common constants.
Scalar q_pow(int a);           // q^a
Scalar t_pow(int b);           // t^b
Scalar qq_pow(int k);          // fraktur q^k, fraktur q = q^{-1/2} t^{-1/2}
Scalar dd_pow(int k);          // fraktur d^k, fraktur d = q^{1/2} t^{-1/2}

struct ScalarHash {
  std::size_t operator()(const Scalar& x) const { return x.hash(); }
};

}  // namespace wmac
