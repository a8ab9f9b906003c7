#pragma once

#include <optional>
#include <string>

#include "wreg/cohomology.hpp"

namespace wreg {

struct Witness {
  int i = 0;
  long long twist = 0;
  Int value;
};

/// Certificate that one vanishing condition holds for every t >= 0.
struct WindowCert {
  int i = 0;
  std::string kind;     // "identically-zero" | "explicit-duality" | "module-window"
  long long from = 0;   // twist from which vanishing is automatic
  long long width = 0;  // window width for module-window certificates
};

struct RegularityReport {
  std::string kind;  // "wregular" | "semiwregular" | "toric" | "classic"
  long long m = 0;
  bool verdict = false;
  std::vector<Witness> witnesses;    // failures (i, twist, value)
  std::vector<WindowCert> windows;   // one per condition when the verdict holds
  std::optional<Int> h0_value;       // the H^0((m+1)k) witness for wregularity
};

/// H^i(e(t + (m+1)k - partial_i)) = 0 for i = 1..n and every t >= 0, each
/// condition discharged by a finite certified check.
RegularityReport is_semiwregular(const SheafExpr& e, long long m, const Options& opts = {});

/// Semiwregularity plus h^0(e((m+1)k)) > 0.
RegularityReport is_wregular(const SheafExpr& e, long long m, const Options& opts = {});

/// Smallest m with is_wregular true.  Searches upward from the twist floor
/// below which h^0 vanishes identically, so the first success is minimal;
/// a defensive cap turns divisibility obstructions into NoWregularTwist.
long long wreg_min(const SheafExpr& e, const Options& opts = {});

/// H^i(e(m - i*k)) = 0 for i = 1..n (finitely many twists, no quantifier).
RegularityReport is_toric_regular(const SheafExpr& e, long long m, const Options& opts = {});

/// Classical regularity on ordinary projective space (all weights 1):
/// minimal m with H^i(e(m - i)) = 0 for i = 1..n.  WrongWeights otherwise.
long long classic_regularity(const SheafExpr& e, const Options& opts = {});

struct PullbackRegReport {
  long long bound = 0;   // (m+1)k - n + total - partial_1
  long long actual = 0;  // classical regularity of the pullback
  bool holds = false;    // actual <= bound
};
/// Requires is_semiwregular(e, m); PreconditionFailed otherwise.
PullbackRegReport pullback_reg_report(const SheafExpr& e, long long m, const Options& opts = {});

struct RestrictReport {
  long long z = 0;         // k / k_j
  long long k_sub = 0;     // lcm of the remaining weights
  long long target_m = 0;  // (m+1)z - 1
  bool verdict = false;
  RegularityReport details;
};
/// Requires is_semiwregular(e, m); restriction failures propagate.
RestrictReport restrict_semiwreg_report(const SheafExpr& e, int j, long long m,
                                        const Options& opts = {});

struct MonadBoundReport {
  long long rhs = 0;  // right-hand side of the quasi-linear regularity bound
  long long m = 0;    // smallest m with (m+1)k >= rhs and h^0(E((m+1)k)) > 0
  RegularityReport wreg_check;
};
/// Quasi-linear monad wregularity bound (requires dim >= 3).
MonadBoundReport monad_bound(const Monad& mo, const Options& opts = {});

/// Global generation verdicts are decided chart by chart: on the chart
/// x_i != 0 the image generates the target exactly when every monomial in
/// the remaining variables whose degree is residue-compatible mod w_i is
/// divisible by the x_i-reduced part of some image generator.  (On a
/// weighted space this is strictly weaker than finite length of the graded
/// cokernel: whole residue classes of its degrees can sheafify to zero.)
struct GgCertificate {
  bool verdict = false;
  /// Failing data for a false verdict: the chart, the target summand twist,
  /// and an uncovered monomial (exponents over the remaining variables,
  /// listed in coordinate order with the chart variable skipped).
  int witness_chart = -1;
  long long witness_summand = 0;
  Exponents witness_monomial;
};

/// Weighted global generation for expressions normalizing to a split bundle.
GgCertificate wgg_split(const SheafExpr& e, const Options& opts = {});

/// Classical global generation of O(m).
GgCertificate gg_line(const Weights& w, long long m, const Options& opts = {});

}  // namespace wreg
