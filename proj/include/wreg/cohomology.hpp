#pragma once

#include <string>

#include "wreg/linalg.hpp"
#include "wreg/sheaf.hpp"

namespace wreg {

/// Matrix of H^0(source(t)) -> H^0(target(t)) in the monomial bases, block
/// (i, j) = multiplication by entry (i, j).  Deterministic basis order.
RatMat h0_matrix(const Weights& w, const GradedMatrix& f, long long t);

/// Matrix of H^n(source(t)) -> H^n(target(t)) in the Laurent bases; any
/// product monomial with some exponent >= 0 is discarded.  Up to the index
/// bijection e -> -e - 1 this equals the transpose of h0_matrix of the dual
/// map at twist -t - total.
RatMat hn_matrix(const Weights& w, const GradedMatrix& f, long long t);

/// Sparse variants of the induced maps, used wherever only ranks are needed.
SparseMat sparse_h0_matrix(const Weights& w, const GradedMatrix& f, long long t);
SparseMat sparse_hn_matrix(const Weights& w, const GradedMatrix& f, long long t);

/// h^0(F(t)) for a split bundle (sum of denumerants).
Int split_h0(const Weights& w, const SplitBundle& f, long long t);
/// h^n(F(t)) for a split bundle (sum of Laurent counts).
Int split_hn(const Weights& w, const SplitBundle& f, long long t);

/// All dimensions h^0..h^n of e(t).  Monad leaves require n >= 2
/// (DimensionTooSmall) and certified validity: composition zero and beta
/// surjectivity proven (InvalidMonad otherwise; the homology formula
/// computes hypercohomology of the three-term complex from its two nonzero
/// cohomology rows).
std::vector<Int> cohom(const SheafExpr& e, long long t, const Options& opts = {});

/// Single dimension h^i(e(t)); cheaper than cohom for window scans.
Int hi_dim(const SheafExpr& e, int i, long long t, const Options& opts = {});

Int euler_char(const SheafExpr& e, long long t, const Options& opts = {});

/// Degrees (with multiplicity, increasing) of a minimal generating set of the
/// finite-length module (+)_t H^1(e(t)).
std::vector<long long> h1_module_gens(const SheafExpr& e, const Options& opts = {});

/// Matrix of multiplication by x_j from H^0(e(t)) to H^0(e(t + w_j)) in the
/// deterministic representative bases (kernel bases completed through the
/// image in deterministic order).
RatMat multiplication_map(const SheafExpr& e, long long t, int j, const Options& opts = {});

/// Twist data of the minimal monad of e read off the generator degrees of the
/// first cohomology modules of e and its dual.
struct HorrocksShape {
  std::vector<long long> c_twists;
  std::vector<long long> a_twists;
};
HorrocksShape horrocks_shape(const SheafExpr& e, long long l, long long l_dual,
                             const Options& opts = {});

struct CohomologyTable {
  Weights w;
  long long t_min = 0;
  long long t_max = -1;
  std::vector<std::vector<Int>> rows;  // rows[t - t_min] = (h^0, ..., h^n)
  std::string certification;           // summary of the certificates used
};
CohomologyTable cohomology_table(const SheafExpr& e, long long t_min, long long t_max,
                                 const Options& opts = {});

/// Every induced matrix cohom uses at twist t, for cross-checking.
struct InducedMatrix {
  std::string name;
  RatMat m;
};
std::vector<InducedMatrix> induced_matrices(const SheafExpr& e, long long t,
                                            const Options& opts = {});

/// h^0(e(s)) = 0 for every s < this value.
long long h0_vanishing_below(const SheafExpr& e);
/// Threshold above which h^i(e(s)) vanishes for every s, or nullopt when
/// h^i is identically zero.  For i = n and i = n-1 this is the explicit
/// duality threshold; the i = 1 cokernel contributions use the certified
/// stabilization degree of each monad leaf (WindowExceeded when a leaf has
/// no certificate).
std::optional<long long> hi_vanishing_above(const SheafExpr& e, int i,
                                            const Options& opts = {});

}  // namespace wreg
