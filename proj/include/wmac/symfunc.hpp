#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wmac/partition.hpp"
#include "wmac/scalar.hpp"

namespace wmac {

enum class Basis { p, h, e, s, hhat, ehat };
enum class PlethMap { PhiQ, PhiQInv, PhiTinv, PhiTinvInv };

// Charge vector of an ell-core.
using CoreVector = std::vector<int>;

std::string basis_name(Basis b);
Basis parse_basis(const std::string& name);

// Element of the colored ring in one of the standard bases.
// Key lambda means b_{lambda^0}(0) b_{lambda^1}(1) ... b_{lambda^{ell-1}}(ell-1).
// hhat keys stand for PhiQInv(h_key), ehat keys for PhiTinvInv(e_key).
class SymFunc {
 public:
  using Terms = std::map<MultiPartition, Scalar>;

  explicit SymFunc(int ell, Basis basis = Basis::p) : ell_(ell), basis_(basis) {}
  static SymFunc one(int ell);
  static SymFunc monomial(int ell, Basis basis, MultiPartition key, const Scalar& c = Scalar(1));
  // b_n(i)
  static SymFunc generator(int ell, Basis basis, int n, int i);

  int ell() const { return ell_; }
  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  const std::optional<CoreVector>& core() const { return core_; }
  void set_core(std::optional<CoreVector> c) { core_ = std::move(c); }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const MultiPartition& key) const;

  // Adds c to the coefficient of key, dropping zeros.
  void add_term(const MultiPartition& key, const Scalar& c);
  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  SymFunc scaled(const Scalar& c) const;
  friend SymFunc operator+(SymFunc x, const SymFunc& y) { return x += y; }
  friend SymFunc operator-(SymFunc x, const SymFunc& y) { return x -= y; }
  friend bool operator==(const SymFunc& x, const SymFunc& y);
  friend bool operator!=(const SymFunc& x, const SymFunc& y) { return !(x == y); }

  // Total degree if homogeneous, -1 for zero, throws otherwise.
  int degree() const;
  bool is_homogeneous() const;

  std::string str() const;
  std::string latex() const;

 private:
  int ell_;
  Basis basis_;
  Terms terms_;
  std::optional<CoreVector> core_;
};

// Bound on total degree of any converted value.
int degree_cap();
void set_degree_cap(int cap);

SymFunc convert(const SymFunc& f, Basis target);
SymFunc multiply(const SymFunc& f, const SymFunc& g);
SymFunc pleth(const SymFunc& f, PlethMap map);

// PhiQInv(h_{quot lam}) and PhiTinvInv(e of the transposed quotient), tagged with core(lam), in the p basis.
SymFunc hhat(const Partition& lam, int ell);
SymFunc ehat(const Partition& lam, int ell);
// ehat is indexed by the componentwise transpose of the quotient.
MultiPartition ehat_key(const MultiPartition& quot);

// Coefficient of s_{((n), (), ..., ())}.
Scalar trivial_coefficient(const SymFunc& f, int n);

// Classical transition data for one color: coefficients of p_mu in b_lam.
std::map<Partition, Rational> classical_to_p(Basis b, const Partition& lam);

std::string to_json(const SymFunc& f);
SymFunc symfunc_from_json(const std::string& text);

}  // namespace wmac
