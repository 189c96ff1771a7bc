#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wmac/macdonald.hpp"
#include "wmac/scalar.hpp"

namespace wmac {

struct CheckRecord {
  std::string id;
  bool ok = true;
  std::string witness;  // JSON object with the full inputs on failure
};

struct VerifyReport {
  std::string suite;
  int ell = 3;
  int bound = 0;
  std::vector<CheckRecord> checks;
  double seconds = 0;

  bool ok() const;
  std::string to_json() const;
  std::string to_latex() const;
};

struct MainTheoremOptions {
  CacheOptions cache;
  // Multiplies c_{p,1} for p = corrupt_color; used as a negative control.
  int corrupt_color = -1;
  Scalar corrupt_factor = Scalar(2);
};

// Compares multiplication by ehat_n(p), hhat_n(p) in the {H_lambda} bases with
// c_{p,n} E_{p,n}, c*_{p,n} H_{p,n} acting on the dual Fock basis, for every step between
// cells of quotient size at most max_n, and solves for one diagonal rescaling r with r_core = 1.
VerifyReport verify_main_theorem(int ell, const CoreVector& core, int max_n,
                                 const MainTheoremOptions& options = MainTheoremOptions{});

VerifyReport verify_combinatorics(int ell, int max_size);
VerifyReport verify_shuffle(int ell, int max_n);
VerifyReport verify_fock(int ell, int max_size);

}  // namespace wmac
