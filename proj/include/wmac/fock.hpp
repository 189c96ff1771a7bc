#pragma once

#include <map>
#include <string>
#include <vector>

#include "wmac/partition.hpp"
#include "wmac/scalar.hpp"
#include "wmac/shuffle.hpp"

namespace wmac {

// Coordinates in the dual basis |lambda>* of the Fock module with highest-weight color p.
struct FockVector {
  int ell = 3;
  int p = 0;
  bool symbolic_u = false;
  int u_degree = 0;  // overall power of u in symbolic mode
  std::map<Partition, Scalar> terms;

  void add(const Partition& lam, const Scalar& c);
  std::string to_json() const;
};

FockVector basis_vector(const Partition& lam, int ell, int p = 0);

Scalar n_norm(const Partition& lam, int ell);

struct CurrentEntry {
  Node node;
  Scalar spectral;  // chi(node) at u = 1
  Scalar coefficient;
};
using CurrentAction = std::vector<CurrentEntry>;

// <lam + node| e_i |lam> for each addable node of color i - p.
CurrentAction e_action(const Partition& lam, int i, int ell, int p = 0);
// <mu - node| f_i |mu> for each removable node of color i - p.
CurrentAction f_action(const Partition& mu, int i, int ell, int p = 0);

// (num0 - num1 u/z) / (1 - den1 u/z)
struct PsiFactor {
  Scalar num0;
  Scalar num1;
  Scalar den1;
};
std::vector<PsiFactor> psi_eigenvalue(const Partition& lam, int i, int ell, int p = 0);
Scalar psi_at(const std::vector<PsiFactor>& psi, const Scalar& z);  // u = 1
Scalar psi_at_infinity(const std::vector<PsiFactor>& psi);
Scalar psi_at_zero(const std::vector<PsiFactor>& psi);

// Matrix coefficient *<mu| Psi(F) |lam>*, checked against a second and third addition order.
// In symbolic mode the power of u is written to u_degree.
Scalar shuffle_coefficient(const ShuffleElement& f, const Partition& lam, const Partition& mu, int p = 0,
                           int* u_degree = nullptr);

// Partitions obtained from lam by adding k_i nodes of color i (node color = content + p).
std::vector<Partition> colored_extensions(const Partition& lam, const DegreeVector& k, int ell, int p = 0);

FockVector shuffle_action(const ShuffleElement& f, const FockVector& v);

// column lam -> (row mu -> coefficient)
using SparseMatrix = std::map<Partition, std::map<Partition, Scalar>>;

SparseMatrix operator_matrix(const ShuffleElement& f, int max_size, int p = 0);
SparseMatrix operator_columns(const ShuffleElement& f, const std::vector<Partition>& sources, int p = 0);
// a * b on sources of b; columns missing from a are treated as unknown and rejected.
SparseMatrix compose(const SparseMatrix& a, const SparseMatrix& b);
bool matrices_equal(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace wmac
