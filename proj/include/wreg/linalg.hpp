#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wreg/errors.hpp"
#include "wreg/numeric.hpp"

namespace wreg {

bool is_zero(const RatMat& m);

/// Rank over Q via fraction-free (Bareiss) elimination on the integer matrix
/// obtained by clearing row denominators.  Pivoting is deterministic: columns
/// are swept left to right and the first nonzero entry from the top is taken.
Index rank_exact(const RatMat& m);

inline Index kernel_dim(const RatMat& m) { return m.cols() - rank_exact(m); }
inline Index cokernel_dim(const RatMat& m) { return m.rows() - rank_exact(m); }

/// dim ker(b)/im(a) for a complex a, b (requires b*a = 0 exactly).
Index subquotient_dim(const RatMat& a, const RatMat& b);

/// Rank of the reduction mod p.  Always <= rank_exact(m); throws BadPrime if
/// some denominator vanishes mod p.
Index rank_modular(const RatMat& m, std::uint64_t p);

/// Row-sparse exact matrix for the induced multiplication maps, whose columns
/// carry very few nonzeros.  Same deterministic semantics as the dense path,
/// near-linear cost on monomial matrices.
struct SparseMat {
  Index rows = 0;
  Index cols = 0;
  std::vector<std::vector<std::pair<Index, Rat>>> row;  // sorted by column

  void add(Index i, Index j, const Rat& v);
};
Index rank_sparse(const SparseMat& m);

/// Reduced row echelon form over Q, deterministic pivoting as above.
struct Echelon {
  RatMat reduced;
  std::vector<Index> pivot_cols;
  Index rank() const { return static_cast<Index>(pivot_cols.size()); }
};
Echelon rref(RatMat m);

/// Columns spanning ker(m), in the standard form derived from rref (one
/// column per free variable, free variables in increasing order).
RatMat kernel_basis(const RatMat& m);

/// Coordinates x with basis*x = targets, where the columns of `basis` are
/// linearly independent.  Returns nullopt if some target is outside the span.
std::optional<RatMat> solve_in_basis(const RatMat& basis, const RatMat& targets);

/// Incremental column-space builder used for deterministic basis selection.
class ColumnSpace {
 public:
  explicit ColumnSpace(Index rows) : rows_(rows) {}

  /// Adds v to the span; returns true when the rank grew (v kept).
  bool insert(RatVec v);
  bool contains(RatVec v) const;
  Index rank() const { return static_cast<Index>(reduced_.size()); }
  Index rows() const { return rows_; }

 private:
  RatVec reduce(RatVec v) const;

  Index rows_;
  // Reduced spanning vectors, each normalized to leading coefficient 1 and
  // ordered by leading position.
  std::vector<std::pair<Index, RatVec>> reduced_;
};

}  // namespace wreg
