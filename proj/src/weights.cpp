#include "wreg/weights.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace wreg {

Weights weight_data(const std::vector<long long>& raw) {
  if (raw.empty()) throw EmptyWeights();
  Weights out;
  out.w = raw;
  out.partial.resize(raw.size());
  long long sum = 0;
  long long lcm = 1;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] < 1) throw NonPositiveWeight(raw[i]);
    if (i > 0 && raw[i] > raw[i - 1]) throw NotDecreasing();
    sum += raw[i];
    out.partial[i] = sum;
    lcm = std::lcm(lcm, raw[i]);
  }
  out.k = lcm;
  out.total = sum;
  out.canonical_twist = -sum;
  return out;
}

long long weighted_degree(const Weights& w, const Exponents& e) {
  long long d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * w.w[i];
  return d;
}

namespace {

// Practical guard: the counting DP is O(d) in memory, so absurd degrees are
// rejected instead of thrashing.
constexpr long long kMaxDpDegree = 4'000'000;

std::mutex& cache_mutex() {
  static std::mutex mu;
  return mu;
}

// Coin-counting table per weights tuple, extended on demand.  Entry t holds
// the number of exponent vectors of weighted degree t.
std::vector<Int>& denumerant_table(const Weights& w, long long need) {
  static std::map<std::vector<long long>, std::vector<Int>> tables;
  auto& tab = tables[w.w];
  if (static_cast<long long>(tab.size()) <= need) {
    // Recompute from scratch; the DP iterates weights in the outer loop, so
    // the table cannot be extended in place.
    std::vector<Int> fresh(static_cast<std::size_t>(need) + 1, 0);
    fresh[0] = 1;
    for (long long wi : w.w)
      for (long long t = wi; t <= need; ++t) fresh[t] += fresh[t - wi];
    tab = std::move(fresh);
  }
  return tab;
}

void enumerate(const Weights& w, std::size_t pos, long long remaining, Exponents& cur,
               std::vector<Exponents>& out) {
  const std::size_t last = w.w.size() - 1;
  if (pos == last) {
    if (remaining >= 0 && remaining % w.w[last] == 0) {
      cur[last] = remaining / w.w[last];
      out.push_back(cur);
    }
    return;
  }
  for (long long e = remaining / w.w[pos]; e >= 0; --e) {
    cur[pos] = e;
    enumerate(w, pos + 1, remaining - e * w.w[pos], cur, out);
  }
}

}  // namespace

Int denumerant(const Weights& w, long long d) {
  if (d < 0) return 0;
  if (d == 0) return 1;
  if (d > kMaxDpDegree) throw Error("denumerant: degree too large for the counting table");
  std::lock_guard<std::mutex> lock(cache_mutex());
  return denumerant_table(w, d)[d];
}

const std::vector<Exponents>& monomial_basis(const Weights& w, long long d) {
  static std::map<std::pair<std::vector<long long>, long long>, std::vector<Exponents>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto key = std::make_pair(w.w, d);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Exponents> basis;
  if (d >= 0) {
    Exponents cur(w.w.size(), 0);
    enumerate(w, 0, d, cur, basis);
  }
  return cache.emplace(std::move(key), std::move(basis)).first->second;
}

const std::vector<Exponents>& laurent_basis(const Weights& w, long long d) {
  static std::map<std::pair<std::vector<long long>, long long>, std::vector<Exponents>> cache;
  const auto& mono = monomial_basis(w, -d - w.total);
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto key = std::make_pair(w.w, d);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Exponents> basis;
  basis.reserve(mono.size());
  for (const auto& f : mono) {
    Exponents e(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) e[i] = -f[i] - 1;
    basis.push_back(std::move(e));
  }
  return cache.emplace(std::move(key), std::move(basis)).first->second;
}

Index basis_index(const std::vector<Exponents>& basis, const Exponents& e) {
  auto it = std::lower_bound(basis.begin(), basis.end(), e,
                             [](const Exponents& a, const Exponents& b) { return a > b; });
  if (it == basis.end() || *it != e) return -1;
  return static_cast<Index>(it - basis.begin());
}

Index laurent_index(const std::vector<Exponents>& basis, const Exponents& e) {
  auto it = std::lower_bound(basis.begin(), basis.end(), e);
  if (it == basis.end() || *it != e) return -1;
  return static_cast<Index>(it - basis.begin());
}

}  // namespace wreg
