#pragma once

#include <vector>

#include "wreg/errors.hpp"
#include "wreg/numeric.hpp"

namespace wreg {

/// Exponent vector of a (Laurent) monomial, one entry per variable.
using Exponents = std::vector<long long>;

/// The ambient weighted projective space P(w0,...,wn) with its derived
/// constants.  Weights are kept exactly as given (decreasing, arbitrary):
/// coordinate hyperplane sections do not inherit reducedness, so weights are
/// never normalized.
struct Weights {
  std::vector<long long> w;        // w0 >= w1 >= ... >= wn >= 1
  long long k = 1;                 // lcm of all weights
  std::vector<long long> partial;  // partial[i] = w0 + ... + wi
  long long total = 0;             // sum of all weights
  long long canonical_twist = 0;   // -total; the dualizing twist

  int dim() const { return static_cast<int>(w.size()) - 1; }  // n
  int vars() const { return static_cast<int>(w.size()); }     // n + 1

  bool operator==(const Weights& o) const { return w == o.w; }
  bool operator!=(const Weights& o) const { return w != o.w; }
};

/// Builds a Weights value, validating the contract: nonempty, positive,
/// decreasing.  The input order is part of the contract; reordering silently
/// would desynchronize the coordinate indices used everywhere else.
Weights weight_data(const std::vector<long long>& raw);

long long weighted_degree(const Weights& w, const Exponents& e);

/// dim H^0(O(d)): the number of exponent vectors e >= 0 with weighted degree
/// d.  Dynamic program cached per weights tuple; exact for any degree.
Int denumerant(const Weights& w, long long d);

/// All e >= 0 with weighted degree d, in decreasing lexicographic order.
/// The order is part of the public contract: induced matrices must be
/// reproducible bit for bit.  The reference is into a process-wide cache and
/// stays valid for the lifetime of the program.
const std::vector<Exponents>& monomial_basis(const Weights& w, long long d);

/// Basis of H^n(O(d)): all e with every entry <= -1 and weighted degree d.
/// Entry i corresponds to monomial_basis(w, -d - total)[i] under the
/// componentwise bijection e -> -e - 1.
const std::vector<Exponents>& laurent_basis(const Weights& w, long long d);

/// Position of e in a basis produced by monomial_basis (decreasing lex), or -1.
Index basis_index(const std::vector<Exponents>& basis, const Exponents& e);

/// Position of e in a basis produced by laurent_basis, or -1.  The bijection
/// e -> -e - 1 reverses lexicographic order, so Laurent bases are increasing.
Index laurent_index(const std::vector<Exponents>& basis, const Exponents& e);

}  // namespace wreg
