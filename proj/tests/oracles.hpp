#pragma once

// Independent reference computations shared by unit tests and the acceptance driver.

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "wmac/partition.hpp"
#include "wmac/scalar.hpp"

namespace oracle {

using wmac::Int;
using wmac::Partition;
using wmac::Rational;
using wmac::Scalar;

// chi^lam(mu) by border-strip removal on beta numbers.
inline Int mn_character(const Partition& lam, const Partition& mu) {
  if (mu.empty()) return wmac::size(lam) == 0 ? 1 : 0;
  int r = mu.front();
  Partition rest(mu.begin() + 1, mu.end());
  const int len = static_cast<int>(lam.size());
  std::vector<int> beta;
  for (int k = 0; k < len; ++k) beta.push_back(lam[k] + (len - 1 - k));
  Int total = 0;
  for (int k = 0; k < len; ++k) {
    int b = beta[k] - r;
    if (b < 0 || std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
    int crossed = 0;
    for (int x : beta)
      if (x > b && x < beta[k]) ++crossed;
    std::vector<int> nb = beta;
    nb[k] = b;
    std::sort(nb.begin(), nb.end(), std::greater<int>());
    Partition smaller;
    for (int j = 0; j < len; ++j) {
      int part = nb[j] - (len - 1 - j);
      if (part > 0) smaller.push_back(part);
    }
    Int sub = mn_character(smaller, rest);
    total += (crossed % 2 == 0) ? sub : Int(-sub);
  }
  return total;
}

inline Rational z_of(const Partition& mu) {
  std::map<int, int> m;
  for (int x : mu) ++m[x];
  Int z = 1;
  for (auto [part, k] : m)
    for (int j = 1; j <= k; ++j) z *= part * j;
  return Rational(z);
}

inline bool dominated(const Partition& mu, const Partition& lam) {
  int a = 0, b = 0;
  for (std::size_t i = 0; i < std::max(mu.size(), lam.size()); ++i) {
    a += i < mu.size() ? mu[i] : 0;
    b += i < lam.size() ? lam[i] : 0;
    if (a > b) return false;
  }
  return true;
}

// Plain Gauss-Jordan for a square or tall system with a unique solution.
inline std::vector<Scalar> gauss_solve(std::vector<std::vector<Scalar>> a, std::vector<Scalar> b) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  std::size_t row = 0;
  std::vector<std::size_t> piv;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t r = row;
    while (r < a.size() && a[r][c].is_zero()) ++r;
    if (r == a.size()) throw std::runtime_error("oracle system singular");
    std::swap(a[r], a[row]);
    std::swap(b[r], b[row]);
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (k == row || a[k][c].is_zero()) continue;
      Scalar f = a[k][c] / a[row][c];
      for (std::size_t j = c; j < cols; ++j) a[k][j] -= f * a[row][j];
      b[k] -= f * b[row];
    }
    piv.push_back(c);
    ++row;
  }
  for (std::size_t k = row; k < a.size(); ++k)
    if (!b[k].is_zero()) throw std::runtime_error("oracle system inconsistent");
  std::vector<Scalar> x(cols);
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = b[k] / a[k][piv[k]];
  return x;
}

// Single-color plethysm p_k -> (1 - x^k) p_k acting on Schur functions, x = q or t^{-1}.
inline std::vector<std::vector<Scalar>> schur_pleth_matrix(const std::vector<Partition>& parts,
                                                           const std::function<Scalar(int)>& xpow) {
  std::vector<std::vector<Scalar>> m(parts.size(), std::vector<Scalar>(parts.size()));
  for (const Partition& kappa : parts) {
    Scalar f(1);
    for (int k : kappa) f *= Scalar(1) - xpow(k);
    f /= Scalar(z_of(kappa));
    for (std::size_t r = 0; r < parts.size(); ++r) {
      Int cr = mn_character(parts[r], kappa);
      if (cr == 0) continue;
      for (std::size_t c = 0; c < parts.size(); ++c) {
        Int cc = mn_character(parts[c], kappa);
        if (cc != 0) m[r][c] += f * Scalar(Int(cr * cc));
      }
    }
  }
  return m;
}

// Classical H_lam in Schur coordinates from the two triangularity conditions and the normalization.
inline std::map<Partition, Scalar> classical_macdonald(const Partition& lam) {
  int n = wmac::size(lam);
  std::vector<Partition> parts = wmac::partitions_of(n);
  auto pq = schur_pleth_matrix(parts, [](int k) { return wmac::q_pow(k); });
  auto pt = schur_pleth_matrix(parts, [](int k) { return wmac::t_pow(-k); });
  std::vector<std::vector<Scalar>> a;
  std::vector<Scalar> b;
  for (std::size_t r = 0; r < parts.size(); ++r) {
    if (!dominated(lam, parts[r])) {
      a.push_back(pq[r]);
      b.emplace_back(0);
    }
    if (!dominated(parts[r], lam)) {
      a.push_back(pt[r]);
      b.emplace_back(0);
    }
  }
  std::vector<Scalar> norm(parts.size());
  for (std::size_t c = 0; c < parts.size(); ++c)
    if (parts[c] == Partition{n}) norm[c] = Scalar(1);
  a.push_back(norm);
  b.emplace_back(1);
  std::vector<Scalar> x = gauss_solve(a, b);
  std::map<Partition, Scalar> out;
  for (std::size_t c = 0; c < parts.size(); ++c)
    if (!x[c].is_zero()) out.emplace(parts[c], x[c]);
  return out;
}

}  // namespace oracle
