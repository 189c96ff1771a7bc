#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wmac/linalg.hpp"
#include "wmac/partition.hpp"
#include "wmac/symfunc.hpp"

namespace wmac {

// All partitions with a given core and quotient size.
struct Cell {
  int ell = 1;
  CoreVector core;
  int n = 0;
  // Lexicographically decreasing, which refines dominance.
  std::vector<Partition> members;
  int index_of(const Partition& lam) const;
};

Cell enumerate_cell(const CoreVector& core, int n, int ell);

struct MacdonaldTable {
  Cell cell;
  // H_lambda in the p basis, tagged with the core.
  std::map<Partition, SymFunc> polynomials;
};

// On-disk table cache. An empty root disables it.
struct CacheOptions {
  std::string root;
  bool enabled() const { return !root.empty(); }
  // WMAC_CACHE_DIR if set, otherwise "cache".
  static CacheOptions from_env();
};

constexpr int kTableSchemaVersion = 1;

MacdonaldTable macdonald_table(const Cell& cell, const CacheOptions& cache = CacheOptions{});
SymFunc wreath_macdonald(const Partition& lam, int ell, const CacheOptions& cache = CacheOptions{});

std::string table_cache_path(const CacheOptions& cache, int ell, const CoreVector& core, int n);
std::string table_to_json(const MacdonaldTable& table);
MacdonaldTable table_from_json(const std::string& text);

// Coordinates of f in {H_mu}. Throws std::domain_error("not in span").
std::map<Partition, Scalar> expand_in_H(const SymFunc& f, const MacdonaldTable& table);

// Column lambda' holds the {H_mu} coordinates of g_n(p) H_lambda', g = hhat or ehat.
ScalarMatrix bosonic_multiplication_matrix(Basis kind, int n, int p, const MacdonaldTable& source,
                                           const MacdonaldTable& target);

// Rank of the intersection system at a random specialization, for a quick dimension check.
int intersection_dimension_at(const Partition& lam, int ell, const Rational& s0, const Rational& w0);

}  // namespace wmac
