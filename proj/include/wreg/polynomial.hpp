#pragma once

#include <map>
#include <optional>
#include <span>

#include "wreg/weights.hpp"

namespace wreg {

/// Sparse polynomial in the weighted coordinate ring.  Inside a GradedMatrix
/// every nonzero term has the same weighted degree (enforced at matrix
/// construction); the zero polynomial has no terms.
struct WeightedPoly {
  std::map<Exponents, Rat> terms;  // exponent vector -> nonzero coefficient

  bool is_zero() const { return terms.empty(); }
  int vars() const { return terms.empty() ? 0 : static_cast<int>(terms.begin()->first.size()); }

  static WeightedPoly zero() { return {}; }
  static WeightedPoly monomial(Exponents e, Rat coeff = 1);
  /// x_i as a polynomial in nvars variables.
  static WeightedPoly variable(int i, int nvars);

  WeightedPoly& operator+=(const WeightedPoly& o);
  friend WeightedPoly operator+(WeightedPoly a, const WeightedPoly& b) { return a += b; }
  friend WeightedPoly operator-(const WeightedPoly& a);
  friend WeightedPoly operator*(const WeightedPoly& a, const WeightedPoly& b);
  friend WeightedPoly operator*(const Rat& c, WeightedPoly p);

  /// Multiplication by the single variable x_j.
  WeightedPoly times_variable(int j) const;

  /// Substitute x_j = 0 and drop the coordinate (used by hyperplane
  /// restriction).
  WeightedPoly substitute_zero(int j) const;

  Rat evaluate(std::span<const Rat> point) const;

  bool operator==(const WeightedPoly& o) const { return terms == o.terms; }
};

/// Common weighted degree of the terms, or nullopt for the zero polynomial.
/// Throws DegreeMismatch when the terms are not homogeneous.
std::optional<long long> homogeneous_degree(const Weights& w, const WeightedPoly& p);

}  // namespace wreg
