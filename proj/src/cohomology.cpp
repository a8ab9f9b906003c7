#include "wreg/cohomology.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace wreg {

namespace {

constexpr long long kNoThreshold = std::numeric_limits<long long>::min() / 4;

long long min_twist(const SplitBundle& sb) {
  return *std::min_element(sb.twists.begin(), sb.twists.end());
}
long long max_twist(const SplitBundle& sb) {
  return *std::max_element(sb.twists.begin(), sb.twists.end());
}

/// Validation gate for cohomology formulas: composition zero (throws
/// NotAComplex from validate_monad) and beta surjectivity proven.
MonadValidity monad_gate(const Monad& m, const Options& opts) {
  MonadValidity v = validate_monad(m, opts);
  if (opts.strict &&
      (v.alpha_injective != Cert::proven || v.beta_surjective != Cert::proven ||
       v.pointwise_bundle != Cert::proven))
    throw StrictUnverified("monad carries an unverified certificate");
  if (v.beta_surjective != Cert::proven)
    throw InvalidMonad("beta surjectivity certificate is unverified");
  return v;
}

}  // namespace

RatMat h0_matrix(const Weights& w, const GradedMatrix& f, long long t) {
  const Index nsrc = f.source.rank(), ntgt = f.target.rank();
  std::vector<const std::vector<Exponents>*> src(nsrc), tgt(ntgt);
  std::vector<Index> col_off(nsrc + 1, 0), row_off(ntgt + 1, 0);
  for (Index j = 0; j < nsrc; ++j) {
    src[j] = &monomial_basis(w, t + f.source.twists[j]);
    col_off[j + 1] = col_off[j] + static_cast<Index>(src[j]->size());
  }
  for (Index i = 0; i < ntgt; ++i) {
    tgt[i] = &monomial_basis(w, t + f.target.twists[i]);
    row_off[i + 1] = row_off[i] + static_cast<Index>(tgt[i]->size());
  }
  RatMat out = RatMat::Zero(row_off[ntgt], col_off[nsrc]);
  for (Index j = 0; j < nsrc; ++j)
    for (Index u = 0; u < static_cast<Index>(src[j]->size()); ++u) {
      const Exponents& mono = (*src[j])[u];
      for (Index i = 0; i < ntgt; ++i) {
        const WeightedPoly& p = f.entry[i][j];
        for (const auto& [e, c] : p.terms) {
          Exponents prod(e.size());
          for (std::size_t q = 0; q < e.size(); ++q) prod[q] = e[q] + mono[q];
          Index idx = basis_index(*tgt[i], prod);
          if (idx < 0) throw DegreeMismatch("entry degree disagrees with the twist bookkeeping");
          out(row_off[i] + idx, col_off[j] + u) += c;
        }
      }
    }
  return out;
}

RatMat hn_matrix(const Weights& w, const GradedMatrix& f, long long t) {
  const Index nsrc = f.source.rank(), ntgt = f.target.rank();
  std::vector<const std::vector<Exponents>*> src(nsrc), tgt(ntgt);
  std::vector<Index> col_off(nsrc + 1, 0), row_off(ntgt + 1, 0);
  for (Index j = 0; j < nsrc; ++j) {
    src[j] = &laurent_basis(w, t + f.source.twists[j]);
    col_off[j + 1] = col_off[j] + static_cast<Index>(src[j]->size());
  }
  for (Index i = 0; i < ntgt; ++i) {
    tgt[i] = &laurent_basis(w, t + f.target.twists[i]);
    row_off[i + 1] = row_off[i] + static_cast<Index>(tgt[i]->size());
  }
  RatMat out = RatMat::Zero(row_off[ntgt], col_off[nsrc]);
  for (Index j = 0; j < nsrc; ++j)
    for (Index u = 0; u < static_cast<Index>(src[j]->size()); ++u) {
      const Exponents& mono = (*src[j])[u];
      for (Index i = 0; i < ntgt; ++i) {
        const WeightedPoly& p = f.entry[i][j];
        for (const auto& [e, c] : p.terms) {
          Exponents prod(e.size());
          bool keep = true;
          for (std::size_t q = 0; q < e.size(); ++q) {
            prod[q] = e[q] + mono[q];
            if (prod[q] >= 0) keep = false;  // truncation rule
          }
          if (!keep) continue;
          Index idx = laurent_index(*tgt[i], prod);
          if (idx < 0) throw DegreeMismatch("entry degree disagrees with the twist bookkeeping");
          out(row_off[i] + idx, col_off[j] + u) += c;
        }
      }
    }
  return out;
}

Int split_h0(const Weights& w, const SplitBundle& f, long long t) {
  Int acc = 0;
  for (long long d : f.twists) acc += denumerant(w, d + t);
  return acc;
}

Int split_hn(const Weights& w, const SplitBundle& f, long long t) {
  Int acc = 0;
  for (long long d : f.twists) acc += denumerant(w, -(d + t) - w.total);
  return acc;
}

/// Monomial entries give columns with very few nonzeros, which keeps the
/// exact elimination near-linear even at large twists.
SparseMat sparse_h0_matrix(const Weights& w, const GradedMatrix& f, long long t) {
  const Index nsrc = f.source.rank(), ntgt = f.target.rank();
  std::vector<const std::vector<Exponents>*> src(nsrc), tgt(ntgt);
  std::vector<Index> col_off(nsrc + 1, 0), row_off(ntgt + 1, 0);
  for (Index j = 0; j < nsrc; ++j) {
    src[j] = &monomial_basis(w, t + f.source.twists[j]);
    col_off[j + 1] = col_off[j] + static_cast<Index>(src[j]->size());
  }
  for (Index i = 0; i < ntgt; ++i) {
    tgt[i] = &monomial_basis(w, t + f.target.twists[i]);
    row_off[i + 1] = row_off[i] + static_cast<Index>(tgt[i]->size());
  }
  SparseMat out;
  out.rows = row_off[ntgt];
  out.cols = col_off[nsrc];
  out.row.resize(out.rows);
  for (Index j = 0; j < nsrc; ++j)
    for (Index u = 0; u < static_cast<Index>(src[j]->size()); ++u) {
      const Exponents& mono = (*src[j])[u];
      for (Index i = 0; i < ntgt; ++i)
        for (const auto& [e, c] : f.entry[i][j].terms) {
          Exponents prod(e.size());
          for (std::size_t q = 0; q < e.size(); ++q) prod[q] = e[q] + mono[q];
          out.add(row_off[i] + basis_index(*tgt[i], prod), col_off[j] + u, c);
        }
    }
  return out;
}

SparseMat sparse_hn_matrix(const Weights& w, const GradedMatrix& f, long long t) {
  const Index nsrc = f.source.rank(), ntgt = f.target.rank();
  std::vector<const std::vector<Exponents>*> src(nsrc), tgt(ntgt);
  std::vector<Index> col_off(nsrc + 1, 0), row_off(ntgt + 1, 0);
  for (Index j = 0; j < nsrc; ++j) {
    src[j] = &laurent_basis(w, t + f.source.twists[j]);
    col_off[j + 1] = col_off[j] + static_cast<Index>(src[j]->size());
  }
  for (Index i = 0; i < ntgt; ++i) {
    tgt[i] = &laurent_basis(w, t + f.target.twists[i]);
    row_off[i + 1] = row_off[i] + static_cast<Index>(tgt[i]->size());
  }
  SparseMat out;
  out.rows = row_off[ntgt];
  out.cols = col_off[nsrc];
  out.row.resize(out.rows);
  for (Index j = 0; j < nsrc; ++j)
    for (Index u = 0; u < static_cast<Index>(src[j]->size()); ++u) {
      const Exponents& mono = (*src[j])[u];
      for (Index i = 0; i < ntgt; ++i)
        for (const auto& [e, c] : f.entry[i][j].terms) {
          Exponents prod(e.size());
          bool keep = true;
          for (std::size_t q = 0; q < e.size(); ++q) {
            prod[q] = e[q] + mono[q];
            if (prod[q] >= 0) keep = false;
          }
          if (keep) out.add(row_off[i] + laurent_index(*tgt[i], prod), col_off[j] + u, c);
        }
    }
  return out;
}

namespace {

struct LeafDims {
  Int h0, coker1, kern1, hn;  // the four potentially nonzero contributions
};

/// Dimensions from the two nonzero rows of the hypercohomology page.  The
/// composition is already certified zero symbolically, so the subquotient
/// dimensions reduce to three sparse ranks per row.
LeafDims monad_leaf_dims(const MonadLeaf& leaf, long long t, bool need_h0, bool need_c1,
                         bool need_k1, bool need_hn) {
  const Monad& m = *leaf.monad;
  const long long s = t + leaf.shift;
  LeafDims out{0, 0, 0, 0};
  if (need_h0 || need_c1) {
    SparseMat h0b = sparse_h0_matrix(m.w, m.beta, s);
    Index rank_b = rank_sparse(h0b);
    if (need_c1) out.coker1 = h0b.rows - rank_b;
    if (need_h0) {
      SparseMat h0a = sparse_h0_matrix(m.w, m.alpha, s);
      out.h0 = (h0b.cols - rank_b) - rank_sparse(h0a);
    }
  }
  if (need_k1 || need_hn) {
    SparseMat hna = sparse_hn_matrix(m.w, m.alpha, s);
    Index rank_a = rank_sparse(hna);
    if (need_k1) out.kern1 = hna.cols - rank_a;
    if (need_hn) {
      SparseMat hnb = sparse_hn_matrix(m.w, m.beta, s);
      out.hn = (hnb.cols - rank_sparse(hnb)) - rank_a;
    }
  }
  return out;
}

}  // namespace

std::vector<Int> cohom(const SheafExpr& e, long long t, const Options& opts) {
  const Weights& w = e.weights();
  const int n = w.dim();
  if (n < 1) throw DimensionTooSmall("cohomology needs at least two weights");
  if (!e.monad_leaves().empty() && n < 2)
    throw DimensionTooSmall("monad homology needs ambient dimension >= 2");

  std::vector<Int> h(n + 1, 0);
  SplitBundle sp{e.split_twists()};
  if (!sp.twists.empty()) {
    h[0] += split_h0(w, sp, t);
    h[n] += split_hn(w, sp, t);
  }
  for (const auto& leaf : e.monad_leaves()) {
    monad_gate(*leaf.monad, opts);
    LeafDims d = monad_leaf_dims(leaf, t, true, true, true, true);
    h[0] += d.h0;
    h[n] += d.hn;
    if (n == 2) {
      h[1] += d.coker1 + d.kern1;
    } else {
      h[1] += d.coker1;
      h[n - 1] += d.kern1;
    }
  }
  return h;
}

Int hi_dim(const SheafExpr& e, int i, long long t, const Options& opts) {
  const Weights& w = e.weights();
  const int n = w.dim();
  if (n < 1) throw DimensionTooSmall("cohomology needs at least two weights");
  if (i < 0 || i > n) return 0;
  if (!e.monad_leaves().empty() && n < 2)
    throw DimensionTooSmall("monad homology needs ambient dimension >= 2");

  Int acc = 0;
  SplitBundle sp{e.split_twists()};
  if (!sp.twists.empty()) {
    if (i == 0) acc += split_h0(w, sp, t);
    if (i == n) acc += split_hn(w, sp, t);
  }
  for (const auto& leaf : e.monad_leaves()) {
    monad_gate(*leaf.monad, opts);
    bool need_h0 = (i == 0);
    bool need_c1 = (i == 1);
    bool need_k1 = (i == n - 1) || (n == 2 && i == 1);
    bool need_hn = (i == n);
    if (n == 2) need_k1 = (i == 1);
    LeafDims d = monad_leaf_dims(leaf, t, need_h0, need_c1, need_k1, need_hn);
    if (need_h0) acc += d.h0;
    if (need_c1) acc += d.coker1;
    if (need_k1) acc += d.kern1;
    if (need_hn) acc += d.hn;
  }
  return acc;
}

Int euler_char(const SheafExpr& e, long long t, const Options& opts) {
  std::vector<Int> h = cohom(e, t, opts);
  Int acc = 0;
  for (std::size_t i = 0; i < h.size(); ++i)
    acc += (i % 2 == 0) ? h[i] : -h[i];
  return acc;
}

std::vector<long long> h1_module_gens(const SheafExpr& e, const Options& opts) {
  const Weights& w = e.weights();
  if (w.dim() < 2) throw DimensionTooSmall("the H^1 module needs ambient dimension >= 2");
  std::vector<long long> gens;
  if (!e.monad_leaves().empty() && w.dim() == 2)
    throw DimensionTooSmall(
        "H^1 generator extraction for monad leaves is implemented for dimension >= 3 "
        "(on a surface H^1 mixes both spectral rows)");
  for (const auto& leaf : e.monad_leaves()) {
    const Monad& m = *leaf.monad;
    MonadValidity v = validate_monad(m, opts);
    if (v.beta_surjective != Cert::proven)
      throw WindowExceeded("H^1 module finiteness certificate unavailable");
    if (m.c.rank() == 0) continue;
    // H^1(e(d)) = coker of the induced map into H^0(C(d + shift)); the module
    // it assembles is generated in degrees <= -min c and vanishes below
    // -max c, so all generators live in that explicit range.
    long long lo = -max_twist(m.c) - leaf.shift;
    long long hi = -min_twist(m.c) - leaf.shift;
    for (long long d = lo; d <= hi; ++d) {
      long long s = d + leaf.shift;
      Index h0c = 0;
      for (long long c : m.c.twists) {
        Int dim = denumerant(w, c + s);
        h0c += static_cast<Index>(dim.get_si());
      }
      if (h0c == 0) continue;
      std::vector<SparseMat> blocks{sparse_h0_matrix(w, m.beta, s)};
      for (int j = 0; j < w.vars(); ++j)
        blocks.push_back(sparse_h0_matrix(w, variable_map(w, m.c, j), s));
      SparseMat stacked;
      stacked.rows = h0c;
      stacked.row.resize(h0c);
      for (const auto& b : blocks) {
        for (Index i = 0; i < b.rows; ++i)
          for (const auto& [col, v] : b.row[i]) stacked.add(i, stacked.cols + col, v);
        stacked.cols += b.cols;
      }
      Index covered = rank_sparse(stacked);
      Index mult = h0c - covered;
      for (Index q = 0; q < mult; ++q) gens.push_back(d);
    }
  }
  std::sort(gens.begin(), gens.end());
  return gens;
}

// ---------------------------------------------------------------------------
// representative bases for H^0 of monad homology
// ---------------------------------------------------------------------------

namespace {

struct H0Reps {
  RatMat image_basis;  // independent columns of the induced alpha matrix
  RatMat reps;         // kernel columns completing the image to ker(beta)
};

H0Reps h0_representatives(const Monad& m, long long s) {
  RatMat h0b = h0_matrix(m.w, m.beta, s);
  RatMat h0a = h0_matrix(m.w, m.alpha, s);
  const Index ambient = h0b.cols();
  ColumnSpace span(ambient);
  std::vector<Index> img_cols, rep_cols;
  for (Index j = 0; j < h0a.cols(); ++j)
    if (span.insert(h0a.col(j))) img_cols.push_back(j);
  RatMat kernel = kernel_basis(h0b);
  for (Index j = 0; j < kernel.cols(); ++j)
    if (span.insert(kernel.col(j))) rep_cols.push_back(j);
  H0Reps out;
  out.image_basis.resize(ambient, static_cast<Index>(img_cols.size()));
  for (Index q = 0; q < static_cast<Index>(img_cols.size()); ++q)
    out.image_basis.col(q) = h0a.col(img_cols[q]);
  out.reps.resize(ambient, static_cast<Index>(rep_cols.size()));
  for (Index q = 0; q < static_cast<Index>(rep_cols.size()); ++q)
    out.reps.col(q) = kernel.col(rep_cols[q]);
  return out;
}

}  // namespace

RatMat multiplication_map(const SheafExpr& e, long long t, int j, const Options& opts) {
  const Weights& w = e.weights();
  if (j < 0 || j >= w.vars()) throw Error("variable index out of range");
  if (!e.monad_leaves().empty() && w.dim() < 2)
    throw DimensionTooSmall("monad homology needs ambient dimension >= 2");
  const long long t2 = t + w.w[j];

  // Source and target coordinates: split summands first (in twist order),
  // then each monad leaf's representatives.
  std::vector<RatMat> blocks;
  Index rows_total = 0, cols_total = 0;

  if (!e.split_twists().empty()) {
    SplitBundle sp{e.split_twists()};
    RatMat block = h0_matrix(w, variable_map(w, sp, j), t2);
    rows_total += block.rows();
    cols_total += block.cols();
    blocks.push_back(std::move(block));
  }
  for (const auto& leaf : e.monad_leaves()) {
    const Monad& m = *leaf.monad;
    monad_gate(m, opts);
    const long long s = t + leaf.shift, s2 = t2 + leaf.shift;
    H0Reps src = h0_representatives(m, s);
    H0Reps dst = h0_representatives(m, s2);
    RatMat mult = h0_matrix(w, variable_map(w, m.b, j), s2);
    RatMat images = mult * src.reps;
    RatMat basis(dst.image_basis.rows(), dst.image_basis.cols() + dst.reps.cols());
    basis.leftCols(dst.image_basis.cols()) = dst.image_basis;
    basis.rightCols(dst.reps.cols()) = dst.reps;
    auto coords = solve_in_basis(basis, images);
    if (!coords)
      throw Error("multiplication image left ker(beta); the monad data is inconsistent");
    RatMat block = coords->bottomRows(dst.reps.cols());
    rows_total += block.rows();
    cols_total += block.cols();
    blocks.push_back(std::move(block));
  }

  RatMat out = RatMat::Zero(rows_total, cols_total);
  Index r = 0, c = 0;
  for (const auto& b : blocks) {
    out.block(r, c, b.rows(), b.cols()) = b;
    r += b.rows();
    c += b.cols();
  }
  return out;
}

HorrocksShape horrocks_shape(const SheafExpr& e, long long l, long long l_dual,
                             const Options& opts) {
  HorrocksShape out;
  for (long long d : h1_module_gens(e, opts))
    if (d >= l) out.c_twists.push_back(-d);
  for (long long d : h1_module_gens(dual(e), opts))
    if (d >= l_dual) out.a_twists.push_back(d);
  std::sort(out.c_twists.begin(), out.c_twists.end());
  std::sort(out.a_twists.begin(), out.a_twists.end());
  return out;
}

CohomologyTable cohomology_table(const SheafExpr& e, long long t_min, long long t_max,
                                 const Options& opts) {
  if (t_min > t_max) throw Error("twist range is empty");
  CohomologyTable tab;
  tab.w = e.weights();
  tab.t_min = t_min;
  tab.t_max = t_max;
  for (long long t = t_min; t <= t_max; ++t) tab.rows.push_back(cohom(e, t, opts));
  std::ostringstream cert;
  cert << "exact";
  for (std::size_t i = 0; i < e.monad_leaves().size(); ++i) {
    MonadValidity v = validate_monad(*e.monad_leaves()[i].monad, opts);
    cert << "; monad" << i << ": alpha=" << to_string(v.alpha_injective)
         << " beta=" << to_string(v.beta_surjective)
         << " pointwise=" << to_string(v.pointwise_bundle);
  }
  tab.certification = cert.str();
  return tab;
}

std::vector<InducedMatrix> induced_matrices(const SheafExpr& e, long long t,
                                            const Options& opts) {
  std::vector<InducedMatrix> out;
  int idx = 0;
  for (const auto& leaf : e.monad_leaves()) {
    const Monad& m = *leaf.monad;
    const long long s = t + leaf.shift;
    std::string prefix = "monad" + std::to_string(idx++);
    out.push_back({prefix + ".h0_alpha", h0_matrix(m.w, m.alpha, s)});
    out.push_back({prefix + ".h0_beta", h0_matrix(m.w, m.beta, s)});
    out.push_back({prefix + ".hn_alpha", hn_matrix(m.w, m.alpha, s)});
    out.push_back({prefix + ".hn_beta", hn_matrix(m.w, m.beta, s)});
  }
  (void)opts;
  return out;
}

long long h0_vanishing_below(const SheafExpr& e) {
  long long max_t = std::numeric_limits<long long>::min();
  for (long long d : e.split_twists()) max_t = std::max(max_t, d);
  for (const auto& leaf : e.monad_leaves())
    max_t = std::max(max_t, max_twist(leaf.monad->b) + leaf.shift);
  if (max_t == std::numeric_limits<long long>::min())
    return std::numeric_limits<long long>::max() / 4;  // zero sheaf
  return -max_t;
}

std::optional<long long> hi_vanishing_above(const SheafExpr& e, int i, const Options& opts) {
  const Weights& w = e.weights();
  const int n = w.dim();
  if (i < 1 || i > n) return std::nullopt;
  long long bound = kNoThreshold;
  if (i == n && !e.split_twists().empty()) {
    long long lo = e.split_twists().front();  // sorted increasing
    bound = std::max(bound, -w.total - lo);
  }
  for (const auto& leaf : e.monad_leaves()) {
    const Monad& m = *leaf.monad;
    if (i == n) bound = std::max(bound, -w.total - min_twist(m.b) - leaf.shift);
    bool coker_part = (i == 1);
    bool kernel_part = (n == 2) ? (i == 1) : (i == n - 1);
    if (coker_part) {
      MonadValidity v = validate_monad(m, opts);
      if (opts.strict &&
          (v.alpha_injective != Cert::proven || v.beta_surjective != Cert::proven ||
           v.pointwise_bundle != Cert::proven))
        throw StrictUnverified("monad carries an unverified certificate");
      if (v.beta_surjective != Cert::proven)
        throw WindowExceeded("no stabilization window for the beta cokernel below the cap");
      bound = std::max(bound, v.beta_stable_from - leaf.shift - 1);
    }
    if (kernel_part && m.a.rank() > 0)
      bound = std::max(bound, -w.total - min_twist(m.a) - leaf.shift);
  }
  if (bound == kNoThreshold) return std::nullopt;
  return bound;
}

}  // namespace wreg
