#pragma once

#include <string>
#include <vector>

#include "wmac/factored.hpp"
#include "wmac/scalar.hpp"

namespace wmac {

// k_i = number of variables of color i.
using DegreeVector = std::vector<int>;

int total(const DegreeVector& k);
// (a;b]_i = #{a < c <= b : c = i mod ell}
DegreeVector interval_degree(int a, int b, int ell);
DegreeVector diagonal_degree(int k, int ell);

// Maximum number of variables in products and expansions.
int shuffle_guard();
void set_shuffle_guard(int n);

// Color-symmetric rational function in variables x_{i,r}, r = 0..k_i-1.
// With symmetrize set, the element is the sum of base over all color-preserving
// permutations of the variables (no 1/k! factor).
struct ShuffleElement {
  int ell = 3;
  DegreeVector degree;
  FactoredSum base;
  bool symmetrize = false;

  int num_vars() const { return total(degree); }
  int var(int color, int r) const;
  int color_of(int v) const;
  FactoredSum expanded() const;
};

ShuffleElement constant_element(int ell, const DegreeVector& degree, const Scalar& c);

// omega_{i,j}(a/b) as a factored ratio; requires ell >= 3.
FactoredSum omega(int i, int j, int ell, const LinForm& a, const LinForm& b);
Scalar omega_value(int i, int j, int ell, const Scalar& z);

// Sym_{n,m}(F(first variables) G(later variables) prod omega).
ShuffleElement shuffle_product(const ShuffleElement& f, const ShuffleElement& g);

ShuffleElement F_pn(int p, int n, int ell);
// F_pn without its constant prefactor.
ShuffleElement F_prime_pn(int p, int n, int ell);
Scalar F_pn_prefactor(int n, int ell);
// Bottom elements, symmetrized with weight 1/n!.
ShuffleElement E_pn(int p, int n, int ell);
ShuffleElement H_pn(int p, int n, int ell);

struct CheckResult {
  bool ok = true;
  std::string witness;
};

CheckResult wheel_check(const ShuffleElement& f);
CheckResult pole_check(const ShuffleElement& f);

enum class LimitKind { zero, finite, divergent };
enum class LimitSide { zero, infinity };

struct LimitResult {
  LimitKind kind = LimitKind::zero;
  Scalar value;  // at the sampled point of the unscaled variables
};

// Limit of F with the first (a;b]_i variables of each color scaled by xi.
// Other variables and the scaled directions are sampled at one random rational point.
LimitResult limit_profile(const ShuffleElement& f, int a, int b, LimitSide side);

// diagonal: equal finite limits on every k*delta interval.
// s0: diagonal plus vanishing xi -> 0 limits on every other interval (a;b] <= degree(F).
// strict: s0 plus vanishing xi -> infinity limits off the diagonal.
enum class LimitCheck { diagonal, s0, strict };
CheckResult limit_conditions(const ShuffleElement& f, LimitCheck scope);

struct Interval {
  int a = 0;
  int b = 0;
  int length() const { return b - a; }
  friend bool operator==(const Interval& x, const Interval& y) { return x.a == y.a && x.b == y.b; }
};

struct IntervalPartition {
  std::vector<Interval> parts;  // by length descending, then a descending
  bool even(int ell) const;
  DegreeVector degree(int ell) const;
  std::string str() const;
};

IntervalPartition make_interval_partition(std::vector<Interval> parts);
// L > L' in the dominance order of part lengths.
bool dominates(const IntervalPartition& l, const IntervalPartition& m);
std::vector<IntervalPartition> even_partitions(int n, int ell);
// Every L |- k, each unordered list once.
std::vector<IntervalPartition> interval_partitions(const DegreeVector& k, int ell);
IntervalPartition short_partition(int p, int n, int ell);
IntervalPartition long_partition(int p, int n, int ell);

// Variables of part u become q^{-c} y_u (dual: t^c y_u), y_u = variable num_vars + u.
FactoredSum phi_L(const ShuffleElement& f, const IntervalPartition& l);
FactoredSum phi_L_star(const ShuffleElement& f, const IntervalPartition& l);
Scalar rho_L(const ShuffleElement& f, const IntervalPartition& l);
Scalar rho_L_star(const ShuffleElement& f, const IntervalPartition& l);

Scalar pairing_R(const ShuffleElement& f, int p, int n);
Scalar pairing_Rstar(const ShuffleElement& f, int p, int n);

// Pairing of a product of long dual elements along the parts of L, via iterated limits.
Scalar dual_product_pairing(const ShuffleElement& f, const IntervalPartition& l);
Scalar dual_product_pairing_star(const ShuffleElement& f, const IntervalPartition& l);

// Closed forms for the pairing of the long dual elements with F_{p',n}.
int f_shift(int p, int pp, int ell);
Scalar dual_currents_closed_form(int p, int pp, int n, int ell);
Scalar dual_currents_closed_form_star(int p, int pp, int n, int ell);

struct ShuffleConstants {
  Scalar c;
  Scalar c_star;
};
ShuffleConstants constants(int p, int n, int ell);

std::string to_json(const ShuffleElement& f);

}  // namespace wmac
