#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "wreg/options.hpp"
#include "wreg/polynomial.hpp"
#include "wreg/weights.hpp"

namespace wreg {

/// Finite multiset of twists representing the split bundle (+) O(d_i).
struct SplitBundle {
  std::vector<long long> twists;

  Index rank() const { return static_cast<Index>(twists.size()); }
  SplitBundle twisted(long long t) const;
  SplitBundle negated() const;  // the dual bundle

  bool operator==(const SplitBundle& o) const { return twists == o.twists; }
};

/// Matrix of weighted-homogeneous polynomials between split bundles.
/// Row i belongs to target summand i, column j to source summand j; a nonzero
/// entry (i, j) has weighted degree target.twists[i] - source.twists[j].
struct GradedMatrix {
  SplitBundle source;
  SplitBundle target;
  std::vector<std::vector<WeightedPoly>> entry;  // [row][col]

  const WeightedPoly& at(Index i, Index j) const { return entry[i][j]; }
  bool operator==(const GradedMatrix& o) const;
};

/// Validates the degree bookkeeping and shapes; throws DegreeMismatch.
GradedMatrix make_graded_matrix(const Weights& w, SplitBundle target, SplitBundle source,
                                std::vector<std::vector<WeightedPoly>> entries);

GradedMatrix compose(const GradedMatrix& f, const GradedMatrix& g);  // f after g
GradedMatrix transpose_dual(const GradedMatrix& f);                  // f^T between duals
GradedMatrix twist(const GradedMatrix& f, long long t);
GradedMatrix substitute_zero(const GradedMatrix& f, int j);
bool is_zero(const GradedMatrix& f);

/// Diagonal multiplication-by-x_j map F(-w_j) -> F on a split bundle.
GradedMatrix variable_map(const Weights& w, const SplitBundle& f, int j);

enum class Cert { proven, unverified };
inline const char* to_string(Cert c) { return c == Cert::proven ? "proven" : "unverified"; }

struct MonadValidity {
  bool composition_zero = false;
  Cert alpha_injective = Cert::unverified;
  Cert beta_surjective = Cert::unverified;
  Cert pointwise_bundle = Cert::unverified;
  bool minimal = false;
  /// With beta_surjective proven: the cokernel module of beta vanishes in
  /// every degree >= beta_stable_from (stabilization window certificate).
  long long beta_stable_from = 0;
  /// Width of the certifying window (= w0).
  long long beta_window_width = 0;
};

/// Three-term complex A -> B -> C of split bundles; the object of interest is
/// its homology ker(beta)/im(alpha).
struct Monad {
  Weights w;
  SplitBundle a, b, c;
  GradedMatrix alpha;  // a -> b
  GradedMatrix beta;   // b -> c

  Index homology_rank() const { return b.rank() - a.rank() - c.rank(); }
  bool operator==(const Monad& o) const;
};

/// Builds a monad, checking shapes and degree bookkeeping (DegreeMismatch).
/// The composition is not checked here; validate_monad does that.
Monad make_monad(Weights w, SplitBundle a, SplitBundle b, SplitBundle c,
                 std::vector<std::vector<WeightedPoly>> alpha,
                 std::vector<std::vector<WeightedPoly>> beta);

/// Runs every certificate on the monad:
///  - beta*alpha = 0 symbolically (throws NotAComplex otherwise);
///  - alpha injectivity via full column rank at sampled rational points;
///  - beta surjectivity via the stabilization window of its cokernel module;
///  - fiberwise bundle condition via membership of variable powers in the
///    ideal of maximal minors of alpha, up to a degree cap;
///  - minimality: no entry is a nonzero scalar.
/// Results are cached per (monad, options).
MonadValidity validate_monad(const Monad& m, const Options& opts = {});

/// A monad leaf of an expression: the homology sheaf twisted by `shift`.
struct MonadLeaf {
  std::shared_ptr<const Monad> monad;
  long long shift = 0;
};

/// Normalized expression denoting a coherent sheaf: a direct sum of one split
/// part and finitely many twisted monad homologies, all over the same
/// weights.  Construction pushes twists into the leaves and flattens sums.
class SheafExpr {
 public:
  SheafExpr() = default;

  static SheafExpr split(Weights w, std::vector<long long> twists);
  static SheafExpr monad(Monad m);
  static SheafExpr monad(Weights w, std::shared_ptr<const Monad> m, long long shift = 0);
  static SheafExpr sum(std::vector<SheafExpr> parts);

  SheafExpr twisted(long long t) const;

  const Weights& weights() const { return w_; }
  /// Twists of the split part, kept sorted increasingly.
  const std::vector<long long>& split_twists() const { return split_; }
  const std::vector<MonadLeaf>& monad_leaves() const { return monads_; }

  bool pure_split() const { return monads_.empty(); }
  bool is_zero_sheaf() const { return split_.empty() && monads_.empty(); }

  bool operator==(const SheafExpr& o) const;

 private:
  Weights w_;
  std::vector<long long> split_;
  std::vector<MonadLeaf> monads_;
};

/// Koszul complex terms [A_0, ..., A_n]: A_j = (+)_{|I| = j+1} O(-|w_I|),
/// subsets enumerated in lexicographic index order.
std::vector<SplitBundle> koszul_complex(const Weights& w);

SheafExpr dual(const SheafExpr& e);

/// Restriction to the hyperplane {x_j = 0}: split leaves keep their twists,
/// monad leaves get x_j := 0 and are re-certified (RestrictionNotMonad when
/// the certificates fail).  The result lives on the weights with w_j removed.
SheafExpr restrict_hyperplane(const SheafExpr& e, int j, const Options& opts = {});

/// lcm of the weights with w_j removed.
long long restricted_lcm(const Weights& w, int j);

/// Multiset of twist shifts of the direct image of the structure sheaf under
/// the quotient map from ordinary projective space: pairs (shift, count) with
/// shift = -(r_0 + ... + r_n) over 0 <= r_i < w_i, listed with decreasing
/// shift.
std::vector<std::pair<long long, long long>> pullback_shifts(const Weights& w);

/// The expression whose cohomology at twist t equals that of the pullback of
/// e at t on ordinary projective space (projection formula).
SheafExpr pullback_expand(const SheafExpr& e);

}  // namespace wreg
