#include "wreg/linalg.hpp"

#include <algorithm>

namespace wreg {

bool is_zero(const RatMat& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) return false;
  return true;
}

Index rank_exact(const RatMat& m) {
  const Index rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  // Clear denominators row by row; scaling rows does not change the rank.
  std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
  for (Index i = 0; i < rows; ++i) {
    Int lcm = 1;
    for (Index j = 0; j < cols; ++j) {
      const Int& den = m(i, j).get_den();
      if (den != 1) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    for (Index j = 0; j < cols; ++j) {
      Rat scaled = m(i, j) * Rat(lcm);
      scaled.canonicalize();
      a[i][j] = scaled.get_num();
    }
  }

  Int prev = 1;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index piv = -1;
    for (Index i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) std::swap(a[piv], a[r]);
    for (Index i = r + 1; i < rows; ++i) {
      // One-step fraction-free update: division by the previous pivot is
      // exact (Sylvester's identity).
      for (Index j = c + 1; j < cols; ++j) {
        Int t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

Index subquotient_dim(const RatMat& a, const RatMat& b) {
  if (b.cols() != a.rows())
    throw ShapeMismatch("subquotient: b has " + std::to_string(b.cols()) +
                        " columns but a has " + std::to_string(a.rows()) + " rows");
  if (a.cols() > 0 && b.rows() > 0) {
    RatMat comp = b * a;
    if (!is_zero(comp)) throw NotAComplex("subquotient requires b*a = 0");
  }
  return (b.cols() - rank_exact(b)) - rank_exact(a);
}

namespace {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) acc = (acc * base) % p;
    base = (base * base) % p;
    exp >>= 1;
  }
  return acc;
}

std::uint64_t mod_of(const Int& v, std::uint64_t p) {
  Int r = v % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

}  // namespace

Index rank_modular(const RatMat& m, std::uint64_t p) {
  if (p < 2 || p >= (1ull << 31)) throw BadPrime("modulus must be in [2, 2^31)");
  const Index rows = m.rows(), cols = m.cols();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) {
      std::uint64_t den = mod_of(m(i, j).get_den(), p);
      if (den == 0) throw BadPrime("denominator vanishes mod " + std::to_string(p));
      std::uint64_t num = mod_of(m(i, j).get_num(), p);
      a[i][j] = (num * mod_pow(den, p - 2, p)) % p;
    }

  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index piv = -1;
    for (Index i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) std::swap(a[piv], a[r]);
    std::uint64_t inv = mod_pow(a[r][c], p - 2, p);
    for (Index i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      std::uint64_t f = (a[i][c] * inv) % p;
      for (Index j = c; j < cols; ++j) a[i][j] = (a[i][j] + (p - f) * a[r][j]) % p;
    }
    ++r;
  }
  return r;
}

void SparseMat::add(Index i, Index j, const Rat& v) {
  if (v == 0) return;
  if (i < 0 || i >= rows || j < 0 || j >= cols)
    throw ShapeMismatch("sparse entry outside the matrix");
  auto& r = row[i];
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const auto& pr, Index c) { return pr.first < c; });
  if (it != r.end() && it->first == j) {
    it->second += v;
    if (it->second == 0) r.erase(it);
  } else {
    r.insert(it, {j, v});
  }
}

namespace {

// dst -= f * src, merging sorted sparse rows
void sparse_axpy(std::vector<std::pair<Index, Rat>>& dst, const Rat& f,
                 const std::vector<std::pair<Index, Rat>>& src) {
  std::vector<std::pair<Index, Rat>> out;
  out.reserve(dst.size() + src.size());
  auto a = dst.begin();
  auto b = src.begin();
  while (a != dst.end() || b != src.end()) {
    if (b == src.end() || (a != dst.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == dst.end() || b->first < a->first) {
      out.emplace_back(b->first, Rat(-f * b->second));
      ++b;
    } else {
      Rat v = a->second - f * b->second;
      if (v != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  dst = std::move(out);
}

}  // namespace

Index rank_sparse(const SparseMat& m) {
  std::vector<std::vector<std::pair<Index, Rat>>> rows = m.row;
  // Unused rows always have zeros left of the current column, so the pivot
  // candidates for column c are exactly the rows whose leading column is c.
  std::vector<Index> alive;
  for (Index i = 0; i < static_cast<Index>(rows.size()); ++i)
    if (!rows[i].empty()) alive.push_back(i);
  Index rank = 0;
  for (Index c = 0; c < m.cols && !alive.empty(); ++c) {
    Index piv = -1;
    for (Index i : alive)
      if (rows[i].front().first == c) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    const Rat pv = rows[piv].front().second;
    std::vector<Index> next;
    next.reserve(alive.size());
    for (Index i : alive) {
      if (i == piv) continue;
      if (rows[i].front().first == c) {
        Rat f = rows[i].front().second / pv;
        sparse_axpy(rows[i], f, rows[piv]);
      }
      if (!rows[i].empty()) next.push_back(i);
    }
    alive = std::move(next);
    ++rank;
  }
  return rank;
}

Echelon rref(RatMat m) {
  const Index rows = m.rows(), cols = m.cols();
  Echelon out;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index piv = -1;
    for (Index i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) m.row(piv).swap(m.row(r));
    Rat lead = m(r, c);
    for (Index j = c; j < cols; ++j) m(r, j) /= lead;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

RatMat kernel_basis(const RatMat& m) {
  const Index cols = m.cols();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (Index c : e.pivot_cols) is_pivot[c] = true;

  RatMat out(cols, cols - e.rank());
  out.setZero();
  Index col = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    out(f, col) = 1;
    for (Index i = 0; i < e.rank(); ++i) out(e.pivot_cols[i], col) = -e.reduced(i, f);
    ++col;
  }
  return out;
}

std::optional<RatMat> solve_in_basis(const RatMat& basis, const RatMat& targets) {
  if (basis.rows() != targets.rows()) throw ShapeMismatch("solve_in_basis: row counts differ");
  const Index bc = basis.cols();
  RatMat aug(basis.rows(), bc + targets.cols());
  aug.leftCols(bc) = basis;
  aug.rightCols(targets.cols()) = targets;
  Echelon e = rref(std::move(aug));
  // A pivot inside the target block means some target lies outside the span.
  for (Index c : e.pivot_cols)
    if (c >= bc) return std::nullopt;
  if (e.rank() != bc) throw ShapeMismatch("solve_in_basis: basis columns are not independent");
  // Pivot columns are now exactly 0..bc-1, so row i carries the coordinate
  // along basis column i.
  RatMat x(bc, targets.cols());
  for (Index i = 0; i < bc; ++i)
    for (Index t = 0; t < targets.cols(); ++t) x(i, t) = e.reduced(i, bc + t);
  return x;
}

RatVec ColumnSpace::reduce(RatVec v) const {
  for (const auto& [lead, row] : reduced_) {
    if (v(lead) == 0) continue;
    Rat f = v(lead);
    v -= f * row;
  }
  return v;
}

bool ColumnSpace::insert(RatVec v) {
  if (v.rows() != rows_) throw ShapeMismatch("ColumnSpace: wrong vector length");
  v = reduce(std::move(v));
  Index lead = -1;
  for (Index i = 0; i < rows_; ++i)
    if (v(i) != 0) {
      lead = i;
      break;
    }
  if (lead < 0) return false;
  v /= v(lead);
  auto pos = std::lower_bound(reduced_.begin(), reduced_.end(), lead,
                              [](const auto& pr, Index l) { return pr.first < l; });
  reduced_.insert(pos, {lead, std::move(v)});
  return true;
}

bool ColumnSpace::contains(RatVec v) const {
  v = reduce(std::move(v));
  for (Index i = 0; i < rows_; ++i)
    if (v(i) != 0) return false;
  return true;
}

}  // namespace wreg
