#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wmac/scalar.hpp"

namespace wmac {

// Thrown when a substitution or limit meets a pole that does not cancel.
class PoleSurvived : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// c0 + sum_v c_v x_v with Scalar coefficients.
class LinForm {
 public:
  LinForm() = default;
  static LinForm variable(int v, const Scalar& c = Scalar(1));
  static LinForm constant(const Scalar& c);

  const std::vector<std::pair<int, Scalar>>& coeffs() const { return coeffs_; }
  const Scalar& constant_term() const { return constant_; }
  bool is_constant() const { return coeffs_.empty(); }
  bool is_zero() const { return coeffs_.empty() && constant_.is_zero(); }
  Scalar coeff(int v) const;
  bool has(int v) const;

  LinForm operator+(const LinForm& o) const;
  LinForm operator-(const LinForm& o) const;
  LinForm scaled(const Scalar& c) const;
  LinForm substituted(int v, const LinForm& value) const;
  LinForm renamed(const std::vector<int>& map) const;

  // Rewrites *this as lead * (form with first coefficient 1); returns lead.
  Scalar normalize();

  Rational eval(const Rational& s, const Rational& w, const std::vector<Rational>& x) const;

  friend bool operator==(const LinForm& a, const LinForm& b) {
    return a.constant_ == b.constant_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator<(const LinForm& a, const LinForm& b);
  std::string str() const;

 private:
  std::vector<std::pair<int, Scalar>> coeffs_;  // sorted by variable, nonzero
  Scalar constant_;
};

using FactorMap = std::map<LinForm, int>;

// Sum of terms c * prod L^m with normalized, non-constant linear forms L.
class FactoredSum {
 public:
  FactoredSum() = default;
  FactoredSum(const Scalar& c);  // NOLINT
  static FactoredSum factor(const LinForm& f, int m = 1);
  static FactoredSum variable(int v, int m = 1) { return factor(LinForm::variable(v), m); }

  const std::map<FactorMap, Scalar>& terms() const { return terms_; }
  bool is_empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::set<int> variables() const;
  // The value when no variables occur.
  Scalar constant_value() const;

  // Adds c * prod f^m; factors are normalized and constants absorbed.
  void add_term(Scalar c, const std::vector<std::pair<LinForm, int>>& factors);

  FactoredSum& operator+=(const FactoredSum& o);
  FactoredSum& operator-=(const FactoredSum& o);
  FactoredSum& operator*=(const FactoredSum& o);
  friend FactoredSum operator+(FactoredSum a, const FactoredSum& b) { return a += b; }
  friend FactoredSum operator-(FactoredSum a, const FactoredSum& b) { return a -= b; }
  friend FactoredSum operator*(const FactoredSum& a, const FactoredSum& b);
  FactoredSum scaled(const Scalar& c) const;
  FactoredSum pow(int e) const;  // single-term sums only for e < 0

  // Variable v becomes map[v].
  FactoredSum renamed(const std::vector<int>& map) const;

  Rational eval(const Rational& s, const Rational& w, const std::vector<Rational>& x) const;
  std::string str() const;

 private:
  std::map<FactorMap, Scalar> terms_;
  void add_normalized(const Scalar& c, FactorMap&& f);
};

// Laurent expansion along x_v = value + u: coefficients of u^0 and of u^{-k}.
struct Expansion {
  FactoredSum regular;
  std::map<int, FactoredSum> singular;  // k -> coefficient of u^{-k}
};
Expansion expand_at(const FactoredSum& f, int v, const LinForm& value);

// x_v := value; throws PoleSurvived if the sum is singular there.
FactoredSum substitute(const FactoredSum& f, int v, const LinForm& value);
// Limit as x_v -> infinity, when v is the only variable; throws PoleSurvived on divergence.
FactoredSum limit_at_infinity(const FactoredSum& f, int v);
// Replaces x_v by 1/x_v; v must be the only variable.
FactoredSum invert_variable(const FactoredSum& f, int v);

// Exact when no variables occur, otherwise a randomized test at rational points.
bool is_zero(const FactoredSum& f);

// Random source for zero tests and random points.
std::mt19937_64& engine_rng();
void seed_engine(std::uint64_t seed);
Rational random_rational(std::mt19937_64& rng);

// Generalized binomial coefficient m(m-1)...(m-k+1)/k!.
Rational binomial(int m, int k);

}  // namespace wmac
