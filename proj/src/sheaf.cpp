#include "wreg/sheaf.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>

#include "wreg/cohomology.hpp"
#include "wreg/linalg.hpp"

namespace wreg {

SplitBundle SplitBundle::twisted(long long t) const {
  SplitBundle out = *this;
  for (auto& d : out.twists) d += t;
  return out;
}

SplitBundle SplitBundle::negated() const {
  SplitBundle out = *this;
  for (auto& d : out.twists) d = -d;
  return out;
}

bool GradedMatrix::operator==(const GradedMatrix& o) const {
  return source == o.source && target == o.target && entry == o.entry;
}

GradedMatrix make_graded_matrix(const Weights& w, SplitBundle target, SplitBundle source,
                                std::vector<std::vector<WeightedPoly>> entries) {
  if (static_cast<Index>(entries.size()) != target.rank())
    throw DegreeMismatch("matrix has " + std::to_string(entries.size()) + " rows, target rank is " +
                         std::to_string(target.rank()));
  for (const auto& row : entries)
    if (static_cast<Index>(row.size()) != source.rank())
      throw DegreeMismatch("matrix row has " + std::to_string(row.size()) +
                           " columns, source rank is " + std::to_string(source.rank()));
  for (Index i = 0; i < target.rank(); ++i)
    for (Index j = 0; j < source.rank(); ++j) {
      const WeightedPoly& p = entries[i][j];
      auto deg = homogeneous_degree(w, p);
      if (!deg) continue;
      long long required = target.twists[i] - source.twists[j];
      if (*deg != required)
        throw DegreeMismatch("entry (" + std::to_string(i) + "," + std::to_string(j) +
                             ") has degree " + std::to_string(*deg) + ", required " +
                             std::to_string(required));
    }
  return GradedMatrix{std::move(source), std::move(target), std::move(entries)};
}

GradedMatrix compose(const GradedMatrix& f, const GradedMatrix& g) {
  if (!(f.source == g.target)) throw ShapeMismatch("compose: inner bundles differ");
  GradedMatrix out;
  out.source = g.source;
  out.target = f.target;
  out.entry.assign(f.target.rank(), std::vector<WeightedPoly>(g.source.rank()));
  for (Index i = 0; i < f.target.rank(); ++i)
    for (Index k = 0; k < g.source.rank(); ++k) {
      WeightedPoly acc;
      for (Index l = 0; l < f.source.rank(); ++l) acc += f.entry[i][l] * g.entry[l][k];
      out.entry[i][k] = std::move(acc);
    }
  return out;
}

GradedMatrix transpose_dual(const GradedMatrix& f) {
  GradedMatrix out;
  out.source = f.target.negated();
  out.target = f.source.negated();
  out.entry.assign(f.source.rank(), std::vector<WeightedPoly>(f.target.rank()));
  for (Index i = 0; i < f.target.rank(); ++i)
    for (Index j = 0; j < f.source.rank(); ++j) out.entry[j][i] = f.entry[i][j];
  return out;
}

GradedMatrix twist(const GradedMatrix& f, long long t) {
  GradedMatrix out = f;
  out.source = out.source.twisted(t);
  out.target = out.target.twisted(t);
  return out;
}

GradedMatrix substitute_zero(const GradedMatrix& f, int j) {
  GradedMatrix out;
  out.source = f.source;
  out.target = f.target;
  out.entry.assign(f.entry.size(), {});
  for (std::size_t i = 0; i < f.entry.size(); ++i) {
    out.entry[i].reserve(f.entry[i].size());
    for (const auto& p : f.entry[i]) out.entry[i].push_back(p.substitute_zero(j));
  }
  return out;
}

bool is_zero(const GradedMatrix& f) {
  for (const auto& row : f.entry)
    for (const auto& p : row)
      if (!p.is_zero()) return false;
  return true;
}

GradedMatrix variable_map(const Weights& w, const SplitBundle& f, int j) {
  GradedMatrix out;
  out.source = f.twisted(-w.w[j]);
  out.target = f;
  out.entry.assign(f.rank(), std::vector<WeightedPoly>(f.rank()));
  for (Index i = 0; i < f.rank(); ++i) out.entry[i][i] = WeightedPoly::variable(j, w.vars());
  return out;
}

bool Monad::operator==(const Monad& o) const {
  return w == o.w && a == o.a && b == o.b && c == o.c && alpha == o.alpha && beta == o.beta;
}

Monad make_monad(Weights w, SplitBundle a, SplitBundle b, SplitBundle c,
                 std::vector<std::vector<WeightedPoly>> alpha,
                 std::vector<std::vector<WeightedPoly>> beta) {
  Monad m;
  m.alpha = make_graded_matrix(w, b, a, std::move(alpha));
  m.beta = make_graded_matrix(w, c, b, std::move(beta));
  m.w = std::move(w);
  m.a = std::move(a);
  m.b = std::move(b);
  m.c = std::move(c);
  if (m.homology_rank() < 0) throw InvalidMonad("negative homology rank");
  return m;
}

// ---------------------------------------------------------------------------
// validate_monad
// ---------------------------------------------------------------------------

namespace {

long long twist_spread(const Monad& m) {
  long long lo = std::numeric_limits<long long>::max();
  long long hi = std::numeric_limits<long long>::min();
  for (const auto* sb : {&m.a, &m.b, &m.c})
    for (long long d : sb->twists) {
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
  if (lo > hi) return 0;
  return hi - lo;
}

std::string fingerprint(const Monad& m, const Options& opts) {
  std::ostringstream os;
  for (long long x : m.w.w) os << x << ',';
  os << '|';
  for (const auto* sb : {&m.a, &m.b, &m.c}) {
    for (long long d : sb->twists) os << d << ',';
    os << ';';
  }
  for (const auto* gm : {&m.alpha, &m.beta}) {
    for (const auto& row : gm->entry)
      for (const auto& p : row) {
        for (const auto& [e, c] : p.terms) {
          for (long long x : e) os << x << '.';
          os << '=' << to_string(c) << ' ';
        }
        os << '/';
      }
    os << '#';
  }
  os << "seed" << opts.seed << "w" << opts.window_cap << "m" << opts.minor_degree_cap;
  return os.str();
}

Cert certify_alpha_injective(const Monad& m, const Options& opts) {
  const Index s = m.a.rank();
  if (s == 0) return Cert::proven;
  std::mt19937_64 rng(opts.seed);
  const int vars = m.w.vars();
  for (int attempt = 0; attempt < 10; ++attempt) {
    std::vector<Rat> point(vars);
    for (int v = 0; v < vars; ++v) {
      long num = 1 + static_cast<long>(rng() % 997);
      long den = 1 + static_cast<long>(rng() % 7);
      if (rng() & 1) num = -num;
      point[v] = Rat(num, den);
      point[v].canonicalize();
    }
    RatMat eval(m.b.rank(), s);
    for (Index i = 0; i < m.b.rank(); ++i)
      for (Index j = 0; j < s; ++j) eval(i, j) = m.alpha.entry[i][j].evaluate(point);
    // Rank can only drop under evaluation, so one full-rank point certifies
    // generic full column rank, hence sheaf injectivity.
    if (rank_exact(eval) == s) return Cert::proven;
  }
  return Cert::unverified;
}

struct BetaResult {
  Cert cert = Cert::unverified;
  long long stable_from = 0;
  long long width = 0;
};

BetaResult certify_beta_surjective(const Monad& m, const Options& opts) {
  BetaResult out;
  out.width = m.w.w[0];
  if (m.c.rank() == 0) {
    out.cert = Cert::proven;
    out.stable_from = std::numeric_limits<long long>::min() / 4;
    out.width = 0;
    return out;
  }
  // The cokernel module is a quotient of (+) S(c_j), generated in degrees
  // <= G; a window of w0 consecutive zero degrees above G certifies
  // vanishing everywhere beyond it.
  long long gen_bound = -*std::min_element(m.c.twists.begin(), m.c.twists.end());
  long long cap = opts.window_cap > 0 ? opts.window_cap
                                      : 4 * (m.w.total + twist_spread(m) + 1) + m.w.w[0] + 8;
  long long run = 0;
  for (long long t = gen_bound + 1; t - gen_bound <= cap; ++t) {
    SparseMat induced = sparse_h0_matrix(m.w, m.beta, t);
    if (induced.rows - rank_sparse(induced) == 0) {
      if (++run == m.w.w[0]) {
        out.cert = Cert::proven;
        out.stable_from = t - m.w.w[0] + 1;
        return out;
      }
    } else {
      run = 0;
    }
  }
  return out;
}

WeightedPoly poly_det(const std::vector<std::vector<const WeightedPoly*>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return *m[0][0];
  WeightedPoly acc;
  for (std::size_t r = 0; r < n; ++r) {
    if (m[r][0]->is_zero()) continue;
    std::vector<std::vector<const WeightedPoly*>> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r) continue;
      minor.emplace_back(m[i].begin() + 1, m[i].end());
    }
    WeightedPoly contrib = *m[r][0] * poly_det(minor);
    acc += (r % 2 == 0) ? contrib : -contrib;
  }
  return acc;
}

Cert certify_pointwise_bundle(const Monad& m, const Options& opts) {
  const Index s = m.a.rank();
  if (s == 0) return Cert::proven;
  if (m.b.rank() < s) return Cert::unverified;

  // Maximal minors of alpha; the homology is a bundle iff they have no
  // common zero on P, given beta fiberwise surjective.
  std::vector<WeightedPoly> minors;
  // enumerate all s-subsets of row indices
  std::vector<Index> idx(s);
  for (Index i = 0; i < s; ++i) idx[i] = i;
  while (true) {
    std::vector<std::vector<const WeightedPoly*>> sub(s, std::vector<const WeightedPoly*>(s));
    for (Index i = 0; i < s; ++i)
      for (Index j = 0; j < s; ++j) sub[i][j] = &m.alpha.entry[idx[i]][j];
    WeightedPoly det = poly_det(sub);
    if (!det.is_zero()) minors.push_back(std::move(det));
    // next combination
    Index pos = s;
    while (pos > 0 && idx[pos - 1] == m.b.rank() - s + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (Index q = pos; q < s; ++q) idx[q] = idx[q - 1] + 1;
  }
  if (minors.empty()) return Cert::unverified;

  long long cap = opts.minor_degree_cap > 0 ? opts.minor_degree_cap : 4 * m.w.total;
  for (int v = 0; v < m.w.vars(); ++v) {
    bool found = false;
    for (long long power = 1; power * m.w.w[v] <= cap && !found; ++power) {
      long long target_degree = power * m.w.w[v];
      const auto& basis = monomial_basis(m.w, target_degree);
      if (basis.empty()) continue;
      ColumnSpace span(static_cast<Index>(basis.size()));
      for (const auto& g : minors) {
        long long gdeg = *homogeneous_degree(m.w, g);
        if (gdeg > target_degree) continue;
        for (const auto& mono : monomial_basis(m.w, target_degree - gdeg)) {
          RatVec col = RatVec::Zero(static_cast<Index>(basis.size()));
          for (const auto& [e, cf] : g.terms) {
            Exponents prod(e.size());
            for (std::size_t q = 0; q < e.size(); ++q) prod[q] = e[q] + mono[q];
            col(basis_index(basis, prod)) += cf;
          }
          span.insert(std::move(col));
        }
      }
      Exponents pure(m.w.vars(), 0);
      pure[v] = power;
      Index pidx = basis_index(basis, pure);
      if (pidx < 0) continue;
      RatVec target = RatVec::Zero(static_cast<Index>(basis.size()));
      target(pidx) = 1;
      found = span.contains(std::move(target));
    }
    if (!found) return Cert::unverified;
  }
  return Cert::proven;
}

bool check_minimal(const Monad& m) {
  for (const auto* gm : {&m.alpha, &m.beta}) {
    for (Index i = 0; i < gm->target.rank(); ++i)
      for (Index j = 0; j < gm->source.rank(); ++j) {
        long long required = gm->target.twists[i] - gm->source.twists[j];
        if (required == 0 && !gm->entry[i][j].is_zero()) return false;
      }
  }
  return true;
}

}  // namespace

MonadValidity validate_monad(const Monad& m, const Options& opts) {
  static std::mutex mu;
  static std::map<std::string, MonadValidity> cache;

  GradedMatrix comp = compose(m.beta, m.alpha);
  if (!is_zero(comp)) throw NotAComplex("beta*alpha is not zero");

  std::string key = fingerprint(m, opts);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  MonadValidity v;
  v.composition_zero = true;
  v.minimal = check_minimal(m);
  v.alpha_injective = certify_alpha_injective(m, opts);
  BetaResult beta = certify_beta_surjective(m, opts);
  v.beta_surjective = beta.cert;
  v.beta_stable_from = beta.stable_from;
  v.beta_window_width = beta.width;
  v.pointwise_bundle = certify_pointwise_bundle(m, opts);

  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::move(key), v);
  return v;
}

// ---------------------------------------------------------------------------
// SheafExpr
// ---------------------------------------------------------------------------

SheafExpr SheafExpr::split(Weights w, std::vector<long long> twists) {
  SheafExpr e;
  e.w_ = std::move(w);
  e.split_ = std::move(twists);
  std::sort(e.split_.begin(), e.split_.end());
  return e;
}

SheafExpr SheafExpr::monad(Monad m) {
  Weights w = m.w;
  return monad(std::move(w), std::make_shared<const Monad>(std::move(m)), 0);
}

SheafExpr SheafExpr::monad(Weights w, std::shared_ptr<const Monad> m, long long shift) {
  if (!(m->w == w)) throw ShapeMismatch("monad lives on different weights");
  SheafExpr e;
  e.w_ = std::move(w);
  e.monads_.push_back(MonadLeaf{std::move(m), shift});
  return e;
}

SheafExpr SheafExpr::sum(std::vector<SheafExpr> parts) {
  SheafExpr e;
  bool first = true;
  for (auto& p : parts) {
    if (first) {
      e.w_ = p.w_;
      first = false;
    } else if (!(e.w_ == p.w_)) {
      throw ShapeMismatch("sum over different weighted spaces");
    }
    e.split_.insert(e.split_.end(), p.split_.begin(), p.split_.end());
    e.monads_.insert(e.monads_.end(), std::make_move_iterator(p.monads_.begin()),
                     std::make_move_iterator(p.monads_.end()));
  }
  std::sort(e.split_.begin(), e.split_.end());
  return e;
}

SheafExpr SheafExpr::twisted(long long t) const {
  SheafExpr e = *this;
  for (auto& d : e.split_) d += t;
  for (auto& leaf : e.monads_) leaf.shift += t;
  return e;
}

bool SheafExpr::operator==(const SheafExpr& o) const {
  if (!(w_ == o.w_) || split_ != o.split_ || monads_.size() != o.monads_.size()) return false;
  for (std::size_t i = 0; i < monads_.size(); ++i) {
    if (monads_[i].shift != o.monads_[i].shift) return false;
    if (!(*monads_[i].monad == *o.monads_[i].monad)) return false;
  }
  return true;
}

std::vector<SplitBundle> koszul_complex(const Weights& w) {
  const int vars = w.vars();
  std::vector<SplitBundle> out(vars);
  for (int size = 1; size <= vars; ++size) {
    SplitBundle& term = out[size - 1];
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      long long total = 0;
      for (int i : idx) total += w.w[i];
      term.twists.push_back(-total);
      int pos = size;
      while (pos > 0 && idx[pos - 1] == vars - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (int q = pos; q < size; ++q) idx[q] = idx[q - 1] + 1;
    }
  }
  return out;
}

namespace {

Monad dual_monad(const Monad& m) {
  Monad d;
  d.w = m.w;
  d.a = m.c.negated();
  d.b = m.b.negated();
  d.c = m.a.negated();
  d.alpha = transpose_dual(m.beta);
  d.beta = transpose_dual(m.alpha);
  return d;
}

}  // namespace

SheafExpr dual(const SheafExpr& e) {
  std::vector<SheafExpr> parts;
  if (!e.split_twists().empty()) {
    std::vector<long long> neg;
    neg.reserve(e.split_twists().size());
    for (long long d : e.split_twists()) neg.push_back(-d);
    parts.push_back(SheafExpr::split(e.weights(), std::move(neg)));
  }
  for (const auto& leaf : e.monad_leaves())
    parts.push_back(SheafExpr::monad(e.weights(),
                                     std::make_shared<const Monad>(dual_monad(*leaf.monad)),
                                     -leaf.shift));
  if (parts.empty()) return SheafExpr::split(e.weights(), {});
  return SheafExpr::sum(std::move(parts));
}

long long restricted_lcm(const Weights& w, int j) {
  long long l = 1;
  for (int i = 0; i < w.vars(); ++i)
    if (i != j) l = std::lcm(l, w.w[i]);
  return l;
}

SheafExpr restrict_hyperplane(const SheafExpr& e, int j, const Options& opts) {
  const Weights& w = e.weights();
  if (j < 0 || j >= w.vars()) throw Error("restriction index out of range");
  if (w.vars() < 2) throw DimensionTooSmall("cannot restrict a one-variable space");
  std::vector<long long> reduced;
  for (int i = 0; i < w.vars(); ++i)
    if (i != j) reduced.push_back(w.w[i]);
  Weights sub = weight_data(reduced);

  std::vector<SheafExpr> parts;
  if (!e.split_twists().empty())
    parts.push_back(SheafExpr::split(sub, e.split_twists()));
  for (const auto& leaf : e.monad_leaves()) {
    const Monad& m = *leaf.monad;
    Monad r;
    r.w = sub;
    r.a = m.a;
    r.b = m.b;
    r.c = m.c;
    r.alpha = substitute_zero(m.alpha, j);
    r.alpha.source = m.a;
    r.alpha.target = m.b;
    r.beta = substitute_zero(m.beta, j);
    r.beta.source = m.b;
    r.beta.target = m.c;
    MonadValidity v;
    try {
      v = validate_monad(r, opts);
    } catch (const NotAComplex&) {
      throw RestrictionNotMonad("composition no longer vanishes after substitution");
    }
    // The operation refuses to silently return a wrong sheaf: both structural
    // certificates must re-prove on the hyperplane.
    if (v.alpha_injective != Cert::proven)
      throw RestrictionNotMonad("alpha mod x_" + std::to_string(j) +
                                " lost its injectivity certificate");
    if (v.beta_surjective != Cert::proven)
      throw RestrictionNotMonad("beta mod x_" + std::to_string(j) +
                                " lost its surjectivity certificate");
    parts.push_back(SheafExpr::monad(sub, std::make_shared<const Monad>(std::move(r)), leaf.shift));
  }
  if (parts.empty()) return SheafExpr::split(sub, {});
  return SheafExpr::sum(std::move(parts));
}

std::vector<std::pair<long long, long long>> pullback_shifts(const Weights& w) {
  std::vector<long long> counts{1};
  for (long long wi : w.w) {
    std::vector<long long> next(counts.size() + static_cast<std::size_t>(wi) - 1, 0);
    for (std::size_t s = 0; s < counts.size(); ++s)
      for (long long r = 0; r < wi; ++r) next[s + static_cast<std::size_t>(r)] += counts[s];
    counts = std::move(next);
  }
  std::vector<std::pair<long long, long long>> out;
  out.reserve(counts.size());
  for (std::size_t rbar = 0; rbar < counts.size(); ++rbar)
    out.emplace_back(-static_cast<long long>(rbar), counts[rbar]);
  return out;
}

SheafExpr pullback_expand(const SheafExpr& e) {
  std::vector<SheafExpr> parts;
  for (const auto& [shift, count] : pullback_shifts(e.weights()))
    for (long long c = 0; c < count; ++c) parts.push_back(e.twisted(shift));
  return SheafExpr::sum(std::move(parts));
}

}  // namespace wreg
