#include "wreg/regularity.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace wreg {

namespace {

long long ceil_div(long long a, long long b) {  // b > 0
  return (a >= 0) ? (a + b - 1) / b : -((-a) / b);
}

long long expr_spread(const SheafExpr& e) {
  long long lo = std::numeric_limits<long long>::max();
  long long hi = std::numeric_limits<long long>::min();
  auto see = [&](long long d) {
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  };
  for (long long d : e.split_twists()) see(d);
  for (const auto& leaf : e.monad_leaves())
    for (const auto* sb : {&leaf.monad->a, &leaf.monad->b, &leaf.monad->c})
      for (long long d : sb->twists) see(d + leaf.shift);
  return lo > hi ? 0 : hi - lo;
}

long long default_scan_cap(const SheafExpr& e) {
  const Weights& w = e.weights();
  return 4 * (w.total + expr_spread(e) + w.k) + 256;
}

}  // namespace

RegularityReport is_semiwregular(const SheafExpr& e, long long m, const Options& opts) {
  const Weights& w = e.weights();
  const int n = w.dim();
  if (n < 1) throw DimensionTooSmall("regularity needs at least two weights");
  RegularityReport rep;
  rep.kind = "semiwregular";
  rep.m = m;
  rep.verdict = true;
  const long long scan_cap = (opts.window_cap > 0) ? opts.window_cap : default_scan_cap(e);
  const bool monadic = !e.monad_leaves().empty();

  for (int i = 1; i <= n; ++i) {
    long long base = (m + 1) * w.k - w.partial[i];
    std::optional<long long> tau = hi_vanishing_above(e, i, opts);
    bool failed = false;
    if (tau && base <= *tau) {
      if (*tau - base + 1 > scan_cap)
        throw WindowExceeded("semiwregularity scan for i=" + std::to_string(i) + " needs " +
                             std::to_string(*tau - base + 1) + " checks, cap is " +
                             std::to_string(scan_cap));
      for (long long s = base; s <= *tau; ++s) {
        Int v = hi_dim(e, i, s, opts);
        if (v != 0) {
          rep.witnesses.push_back({i, s, v});
          rep.verdict = false;
          failed = true;
          break;
        }
      }
    }
    if (!failed) {
      WindowCert cert;
      cert.i = i;
      if (!tau) {
        cert.kind = "identically-zero";
        cert.from = base;
      } else {
        cert.kind = (i == 1 && monadic) ? "module-window" : "explicit-duality";
        cert.from = std::max(base, *tau + 1);
        cert.width = (cert.kind == "module-window") ? w.w[0] : 0;
      }
      rep.windows.push_back(cert);
    }
  }
  return rep;
}

RegularityReport is_wregular(const SheafExpr& e, long long m, const Options& opts) {
  RegularityReport rep = is_semiwregular(e, m, opts);
  rep.kind = "wregular";
  const long long twist = (m + 1) * e.weights().k;
  Int h0 = hi_dim(e, 0, twist, opts);
  rep.h0_value = h0;
  if (h0 == 0) {
    rep.verdict = false;
    rep.witnesses.push_back({0, twist, Int(0)});
  } else {
    rep.windows.push_back({0, "h0-witness", twist, 0});
  }
  return rep;
}

long long wreg_min(const SheafExpr& e, const Options& opts) {
  if (e.is_zero_sheaf()) throw NoWregularTwist("the zero sheaf has no wregular twist");
  const Weights& w = e.weights();
  if (w.dim() < 1) throw DimensionTooSmall("regularity needs at least two weights");

  // Below this m the nonvanishing condition is impossible, so an upward
  // search returns the true minimum without assuming monotonicity.
  long long m_lo = ceil_div(h0_vanishing_below(e), w.k) - 1;
  long long m_clear = m_lo;
  for (int i = 1; i <= w.dim(); ++i) {
    auto tau = hi_vanishing_above(e, i, opts);
    if (tau) m_clear = std::max(m_clear, ceil_div(*tau + w.partial[i] + 1, w.k) - 1);
  }
  const long long cap = (m_clear - m_lo) + 64;
  for (long long m = m_lo; m - m_lo <= cap; ++m)
    if (is_wregular(e, m, opts).verdict) return m;
  throw NoWregularTwist("h^0 stays zero at every multiple of k within the search cap");
}

RegularityReport is_toric_regular(const SheafExpr& e, long long m, const Options& opts) {
  const Weights& w = e.weights();
  const int n = w.dim();
  if (n < 1) throw DimensionTooSmall("regularity needs at least two weights");
  RegularityReport rep;
  rep.kind = "toric";
  rep.m = m;
  rep.verdict = true;
  for (int i = 1; i <= n; ++i) {
    long long twist = m - static_cast<long long>(i) * w.k;
    Int v = hi_dim(e, i, twist, opts);
    if (v != 0) {
      rep.witnesses.push_back({i, twist, v});
      rep.verdict = false;
    }
  }
  return rep;
}

namespace {

/// Minimal m with h^i(e(m - i)) = 0 for i = 1..n.  This is classical
/// regularity when e lives on a genuine projective space or represents a
/// pullback through the projection formula; regularity there is monotone,
/// so a decrement search from the explicit all-clear bound is exact.
long long minimal_classic_like(const SheafExpr& e, const Options& opts) {
  const Weights& w = e.weights();
  const int n = w.dim();
  if (n < 1) throw DimensionTooSmall("regularity needs at least two weights");
  if (e.is_zero_sheaf()) throw Error("regularity of the zero sheaf is undefined");

  long long m_up = std::numeric_limits<long long>::min();
  for (int i = 1; i <= n; ++i) {
    auto tau = hi_vanishing_above(e, i, opts);
    if (tau) m_up = std::max(m_up, *tau + i + 1);
  }
  if (m_up == std::numeric_limits<long long>::min()) m_up = 0;

  auto holds = [&](long long m) {
    for (int i = 1; i <= n; ++i)
      if (hi_dim(e, i, m - i, opts) != 0) return false;
    return true;
  };
  long long m = m_up;
  long long guard = 0;
  while (holds(m - 1)) {
    --m;
    if (++guard > 4096) throw Error("classical regularity decrement guard tripped");
  }
  return m;
}

}  // namespace

long long classic_regularity(const SheafExpr& e, const Options& opts) {
  for (long long x : e.weights().w)
    if (x != 1) throw WrongWeights("classical regularity needs all weights equal to 1");
  return minimal_classic_like(e, opts);
}

PullbackRegReport pullback_reg_report(const SheafExpr& e, long long m, const Options& opts) {
  const Weights& w = e.weights();
  if (w.dim() < 1) throw DimensionTooSmall("regularity needs at least two weights");
  if (!is_semiwregular(e, m, opts).verdict)
    throw PreconditionFailed("pullback regularity bound needs an m-semiwregular input");
  PullbackRegReport out;
  out.bound = (m + 1) * w.k - w.dim() + w.total - w.partial[1];
  out.actual = minimal_classic_like(pullback_expand(e), opts);
  out.holds = out.actual <= out.bound;
  return out;
}

RestrictReport restrict_semiwreg_report(const SheafExpr& e, int j, long long m,
                                        const Options& opts) {
  const Weights& w = e.weights();
  if (!is_semiwregular(e, m, opts).verdict)
    throw PreconditionFailed("restriction report needs an m-semiwregular input");
  SheafExpr restricted = restrict_hyperplane(e, j, opts);
  RestrictReport out;
  out.k_sub = restricted_lcm(w, j);
  out.z = w.k / out.k_sub;
  out.target_m = (m + 1) * out.z - 1;
  out.details = is_semiwregular(restricted, out.target_m, opts);
  out.verdict = out.details.verdict;
  return out;
}

MonadBoundReport monad_bound(const Monad& mo, const Options& opts) {
  const Weights& w = mo.w;
  const int n = w.dim();
  if (n < 3) throw DimensionTooSmall("the quasi-linear bound needs ambient dimension >= 3");
  MonadValidity v = validate_monad(mo, opts);
  if (opts.strict &&
      (v.alpha_injective != Cert::proven || v.beta_surjective != Cert::proven ||
       v.pointwise_bundle != Cert::proven))
    throw StrictUnverified("monad carries an unverified certificate");
  if (v.beta_surjective != Cert::proven)
    throw InvalidMonad("beta surjectivity certificate is unverified");

  std::vector<long long> a = mo.a.twists, b = mo.b.twists, c = mo.c.twists;
  if (a.empty() || c.empty() || b.empty())
    throw InvalidMonad("quasi-linear bound needs all three terms nonempty");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::sort(c.begin(), c.end());
  const long long t = static_cast<long long>(c.size());
  if (static_cast<long long>(b.size()) < t + n)
    throw InvalidMonad("middle term has fewer than t + n summands");

  long long csum = std::accumulate(c.begin(), c.end(), 0ll);
  long long bsum = std::accumulate(b.begin(), b.begin() + (t + n), 0ll);
  long long term1 = (n - 1) * c.back() - bsum - (w.total - w.partial[1]) + 1 + csum;
  long long rhs = std::max({term1, -b.front() + 1, -a.front() + 1});

  SheafExpr homology = SheafExpr::monad(mo);
  long long m = ceil_div(rhs, w.k) - 1;
  for (int guard = 0; hi_dim(homology, 0, (m + 1) * w.k, opts) == 0; ++m, ++guard)
    if (guard > 64)
      throw NoWregularTwist("h^0 of the homology stays zero at multiples of k");

  MonadBoundReport out;
  out.rhs = rhs;
  out.m = m;
  out.wreg_check = is_wregular(homology, m, opts);
  return out;
}

// ---------------------------------------------------------------------------
// weighted / classical global generation
// ---------------------------------------------------------------------------

namespace {

/// Decides whether the monomial generators cover the twist-D target sheaf on
/// the chart x_chart != 0: every monomial in the remaining variables whose
/// weighted degree is congruent to D mod w_chart must be divisible by the
/// chart-reduced part of some generator.  Exponents beyond the generator
/// caps never change divisibility, so the test is a finite box enumeration
/// with residue arithmetic in the pumped directions.
bool chart_covers(const Weights& w, int chart, long long target_degree,
                  const std::vector<Exponents>& generators, Exponents* witness) {
  const int nv = w.vars();
  std::vector<long long> other_w;
  for (int l = 0; l < nv; ++l)
    if (l != chart) other_w.push_back(w.w[l]);
  const int m = static_cast<int>(other_w.size());

  std::vector<Exponents> reduced;
  reduced.reserve(generators.size());
  for (const auto& g : generators) {
    Exponents r;
    r.reserve(m);
    for (int l = 0; l < nv; ++l)
      if (l != chart) r.push_back(g[l]);
    reduced.push_back(std::move(r));
  }

  Exponents caps(m, 0);
  for (const auto& r : reduced)
    for (int l = 0; l < m; ++l) caps[l] = std::max(caps[l], r[l]);

  const long long wc = w.w[chart];
  Exponents cur(m, 0);
  while (true) {
    bool covered = false;
    for (const auto& r : reduced) {
      bool divides = true;
      for (int l = 0; l < m && divides; ++l)
        if (r[l] > cur[l]) divides = false;
      if (divides) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      long long deg = 0;
      long long residue_gcd = wc;
      for (int l = 0; l < m; ++l) {
        deg += cur[l] * other_w[l];
        // a coordinate at its cap can be pumped arbitrarily without ever
        // becoming divisible, contributing its weight to the residue lattice
        if (cur[l] == caps[l]) residue_gcd = std::gcd(residue_gcd, other_w[l]);
      }
      long long rem = (target_degree - deg) % residue_gcd;
      if (rem < 0) rem += residue_gcd;
      if (rem == 0) {
        if (witness) *witness = cur;
        return false;
      }
    }
    int pos = m - 1;
    while (pos >= 0 && cur[pos] == caps[pos]) {
      cur[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++cur[pos];
  }
  return true;
}

struct CoverResult {
  bool ok = true;
  int chart = -1;
  long long summand = 0;
  Exponents witness;
};

CoverResult covers_everywhere(const Weights& w, long long target_degree,
                              const std::vector<Exponents>& generators) {
  CoverResult out;
  for (int chart = 0; chart < w.vars(); ++chart) {
    Exponents witness;
    if (!chart_covers(w, chart, target_degree, generators, &witness)) {
      out.ok = false;
      out.chart = chart;
      out.summand = target_degree;
      out.witness = std::move(witness);
      return out;
    }
  }
  return out;
}

}  // namespace

GgCertificate wgg_split(const SheafExpr& e, const Options& opts) {
  (void)opts;
  if (!e.pure_split())
    throw NotSplit("weighted global generation is decided pointwise for split bundles only");
  const Weights& w = e.weights();
  GgCertificate out;
  out.verdict = true;  // the zero sheaf is generated by nothing

  // The evaluation map splits across target summands; the summand of twist
  // d + k is hit by the monomials x_j * f with f a section of degree
  // d + k - w_j, so coverage is a per-chart divisibility test.
  std::vector<long long> seen;
  for (long long d : e.split_twists()) {
    long long target = d + w.k;
    if (std::find(seen.begin(), seen.end(), target) != seen.end()) continue;
    seen.push_back(target);
    std::vector<Exponents> generators;
    for (int j = 0; j < w.vars(); ++j)
      for (const auto& f : monomial_basis(w, target - w.w[j])) {
        Exponents g = f;
        g[j] += 1;
        generators.push_back(std::move(g));
      }
    CoverResult res = covers_everywhere(w, target, generators);
    if (!res.ok) {
      out.verdict = false;
      out.witness_chart = res.chart;
      out.witness_summand = d;
      out.witness_monomial = std::move(res.witness);
      return out;
    }
  }
  return out;
}

GgCertificate gg_line(const Weights& w, long long m, const Options& opts) {
  (void)opts;
  std::vector<Exponents> generators;
  for (const auto& f : monomial_basis(w, m)) generators.push_back(f);
  GgCertificate out;
  CoverResult res = covers_everywhere(w, m, generators);
  out.verdict = res.ok;
  if (!res.ok) {
    out.witness_chart = res.chart;
    out.witness_summand = m;
    out.witness_monomial = std::move(res.witness);
  }
  return out;
}

}  // namespace wreg
