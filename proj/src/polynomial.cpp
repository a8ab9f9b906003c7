#include "wreg/polynomial.hpp"

#include <optional>

namespace wreg {

WeightedPoly WeightedPoly::monomial(Exponents e, Rat coeff) {
  WeightedPoly p;
  if (coeff != 0) p.terms.emplace(std::move(e), std::move(coeff));
  return p;
}

WeightedPoly WeightedPoly::variable(int i, int nvars) {
  Exponents e(nvars, 0);
  e[i] = 1;
  return monomial(std::move(e));
}

WeightedPoly& WeightedPoly::operator+=(const WeightedPoly& o) {
  for (const auto& [e, c] : o.terms) {
    auto it = terms.find(e);
    if (it == terms.end()) {
      terms.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  return *this;
}

WeightedPoly operator-(const WeightedPoly& a) {
  WeightedPoly out;
  for (const auto& [e, c] : a.terms) out.terms.emplace(e, -c);
  return out;
}

WeightedPoly operator*(const WeightedPoly& a, const WeightedPoly& b) {
  WeightedPoly out;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Rat c = ca * cb;
      auto it = out.terms.find(e);
      if (it == out.terms.end()) {
        out.terms.emplace(std::move(e), std::move(c));
      } else {
        it->second += c;
        if (it->second == 0) out.terms.erase(it);
      }
    }
  return out;
}

WeightedPoly operator*(const Rat& c, WeightedPoly p) {
  if (c == 0) return WeightedPoly::zero();
  for (auto& [e, v] : p.terms) v *= c;
  return p;
}

WeightedPoly WeightedPoly::times_variable(int j) const {
  WeightedPoly out;
  for (const auto& [e, c] : terms) {
    Exponents f = e;
    ++f[j];
    out.terms.emplace(std::move(f), c);
  }
  return out;
}

WeightedPoly WeightedPoly::substitute_zero(int j) const {
  WeightedPoly out;
  for (const auto& [e, c] : terms) {
    if (e[j] > 0) continue;
    Exponents f;
    f.reserve(e.size() - 1);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (static_cast<int>(i) != j) f.push_back(e[i]);
    out.terms.emplace(std::move(f), c);
  }
  return out;
}

Rat WeightedPoly::evaluate(std::span<const Rat> point) const {
  Rat acc = 0;
  for (const auto& [e, c] : terms) {
    Rat term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (long long rep = 0; rep < e[i]; ++rep) term *= point[i];
    acc += term;
  }
  return acc;
}

std::optional<long long> homogeneous_degree(const Weights& w, const WeightedPoly& p) {
  std::optional<long long> deg;
  for (const auto& [e, c] : p.terms) {
    if (static_cast<int>(e.size()) != w.vars())
      throw DegreeMismatch("term has wrong number of variables");
    for (long long x : e)
      if (x < 0) throw DegreeMismatch("negative exponent in polynomial");
    long long d = weighted_degree(w, e);
    if (deg && *deg != d) throw DegreeMismatch("polynomial is not weighted-homogeneous");
    deg = d;
  }
  return deg;
}

}  // namespace wreg
