#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wreg/regularity.hpp"

namespace wreg {

struct OracleCohom {
  Int h0;
  Int hn;
};

/// Independent brute-force route for split line bundles: h^0 by direct nested
/// enumeration (no counting table), h^n by direct Laurent enumeration (no use
/// of the duality bijection).  Shares no code with the primary path.
OracleCohom oracle_cohom_split(const Weights& w, long long d);

/// Recomputes the rank of every induced matrix used at twist t modulo each
/// prime; true iff every modular rank is <= the exact rank and at least one
/// prime attains it per matrix.  Vacuously true for split expressions.
bool oracle_rank_crosscheck(const SheafExpr& e, long long t,
                            const std::vector<std::uint64_t>& primes, const Options& opts = {});

struct VerifyCheck {
  std::string name;
  std::string source;     // the published claim being reproduced
  std::string expected;
  std::string engine;
  std::string agreement;  // "match" | "mismatch" | "paper-inconsistent"
};

struct VerificationReport {
  std::vector<VerifyCheck> checks;
  int mismatches() const;
  int paper_inconsistencies() const;
  bool operator==(const VerificationReport& o) const;
};

/// Runs the fixed suite of worked examples and records, check by check,
/// whether the engine reproduces the published value.  "paper-inconsistent"
/// flags a check where the engine's independently cross-checked value differs
/// from the printed claim.
VerificationReport verify_paper(const Options& opts = {});

/// The sharpness example: the self-dual quasi-linear monad on P(3,2,2,1)
/// with middle term O(-1) + O + O + O(1).
Monad sharp_example_monad();

}  // namespace wreg
