#include "rootsmith/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace rootsmith::lattice {

namespace {

// Extended gcd: returns g = gcd(a, b) >= 0 and x, y with x*a + y*b = g.
Int xgcd(Int a, Int b, Int& x, Int& y) {
  Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Int q = a / b;
    a -= q * b;
    std::swap(a, b);
    x0 -= q * x1;
    std::swap(x0, x1);
    y0 -= q * y1;
    std::swap(y0, y1);
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

// Floor division for b > 0, so that a - floor_div(a, b)*b lies in [0, b).
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b < 0) --q;
  return q;
}

// Replace rows r and i by unimodular combinations that leave gcd(a, b) at
// (r, col) and zero at (i, col). Entries left of `col` are zero in both rows.
// The divisible case keeps row r fixed, so repeated passes make progress.
void gcd_row_transform(IntMatrix& m, std::size_t r, std::size_t i,
                       std::size_t col) {
  const Int a = m(r, col);
  const Int b = m(i, col);
  if (b % a == 0) {
    const Int f = b / a;
    for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    return;
  }
  Int p, q;
  const Int g = xgcd(a, b, p, q);
  const Int ag = a / g;
  const Int bg = b / g;
  for (std::size_t j = col; j < m.cols(); ++j) {
    const Int mr = m(r, j);
    const Int mi = m(i, j);
    m(r, j) = p * mr + q * mi;
    m(i, j) = ag * mi - bg * mr;
  }
}

// Column analogue of gcd_row_transform, used by the Smith reduction.
void gcd_col_transform(IntMatrix& m, std::size_t c, std::size_t j,
                       std::size_t row) {
  const Int a = m(row, c);
  const Int b = m(row, j);
  if (b % a == 0) {
    const Int f = b / a;
    for (std::size_t i = row; i < m.rows(); ++i) m(i, j) -= f * m(i, c);
    return;
  }
  Int p, q;
  const Int g = xgcd(a, b, p, q);
  const Int ag = a / g;
  const Int bg = b / g;
  for (std::size_t i = row; i < m.rows(); ++i) {
    const Int mc = m(i, c);
    const Int mj = m(i, j);
    m(i, c) = p * mc + q * mj;
    m(i, j) = ag * mj - bg * mc;
  }
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(
    const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c)
      throw std::invalid_argument("ragged row lengths");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

bool IntMatrix::row_is_zero(std::size_t i) const {
  for (std::size_t j = 0; j < cols_; ++j)
    if ((*this)(i, j) != 0) return false;
  return true;
}

IntMatrix IntMatrix::top_rows(std::size_t k) const {
  IntMatrix m(k, cols_);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t k) {
  if (i == k) return;
  for (std::size_t j = 0; j < cols_; ++j)
    std::swap((*this)(i, j), (*this)(k, j));
}

void IntMatrix::swap_cols(std::size_t j, std::size_t l) {
  if (j == l) return;
  for (std::size_t i = 0; i < rows_; ++i)
    std::swap((*this)(i, j), (*this)(i, l));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

HnfResult hnf(IntMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && m(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    m.swap_rows(r, piv);
    for (std::size_t i = r + 1; i < rows; ++i)
      if (m(i, col) != 0) gcd_row_transform(m, r, i, col);
    if (m(r, col) < 0) m.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      const Int f = floor_div(m(i, col), m(r, col));
      if (f == 0) continue;
      for (std::size_t j = col; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_cols.push_back(col);
    ++r;
  }
  return {std::move(m), r, std::move(pivot_cols)};
}

bool lattice_span_equal(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols())
    throw std::invalid_argument("column count mismatch");
  const HnfResult ha = hnf(a);
  const HnfResult hb = hnf(b);
  return ha.rank == hb.rank && ha.pivot_cols == hb.pivot_cols &&
         ha.hnf.top_rows(ha.rank) == hb.hnf.top_rows(hb.rank);
}

std::vector<Int> smith_divisors(IntMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<Int> divisors;
  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < rows && !found; ++i)
      for (std::size_t j = t; j < cols && !found; ++j)
        if (m(i, j) != 0) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    m.swap_rows(t, pi);
    m.swap_cols(t, pj);
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (m(i, t) != 0) {
          gcd_row_transform(m, t, i, t);
          dirty = true;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (m(t, j) != 0) {
          gcd_col_transform(m, t, j, t);
          dirty = true;
        }
      if (dirty) continue;
      // Pivot must divide every remaining entry; if not, fold the offending
      // row into row t and reduce again.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < rows && divides_all; ++i)
        for (std::size_t j = t + 1; j < cols && divides_all; ++j)
          if (m(i, j) % m(t, t) != 0) {
            for (std::size_t j2 = t; j2 < cols; ++j2) m(t, j2) += m(i, j2);
            divides_all = false;
          }
      if (divides_all) break;
    }
    if (m(t, t) < 0) m.negate_row(t);
    divisors.push_back(m(t, t));
  }
  return divisors;
}

std::optional<std::vector<Int>> in_row_span(const HnfResult& basis,
                                            std::vector<Int> v) {
  if (v.size() != basis.hnf.cols())
    throw std::invalid_argument("vector length mismatch");
  std::vector<Int> coeff(basis.rank);
  for (std::size_t i = 0; i < basis.rank; ++i) {
    const std::size_t pc = basis.pivot_cols[i];
    const Int& p = basis.hnf(i, pc);
    if (v[pc] % p != 0) return std::nullopt;
    const Int q = v[pc] / p;
    if (q != 0)
      for (std::size_t j = pc; j < v.size(); ++j) v[j] -= q * basis.hnf(i, j);
    coeff[i] = q;
  }
  for (const Int& x : v)
    if (x != 0) return std::nullopt;
  return coeff;
}

Int lattice_index(const IntMatrix& sub, const IntMatrix& sup) {
  if (sub.cols() != sup.cols())
    throw std::invalid_argument("column count mismatch");
  const HnfResult hs = hnf(sub);
  const HnfResult hp = hnf(sup);
  IntMatrix change(hs.rank, hp.rank);
  for (std::size_t i = 0; i < hs.rank; ++i) {
    auto coeff = in_row_span(hp, hs.hnf.row(i));
    if (!coeff) throw std::domain_error("not a sublattice");
    for (std::size_t j = 0; j < hp.rank; ++j) change(i, j) = (*coeff)[j];
  }
  if (hs.rank != hp.rank) throw std::domain_error("rank mismatch");
  Int index = 1;
  for (const Int& d : smith_divisors(std::move(change))) index *= d;
  return index;
}

bool is_unimodular_basis(const IntMatrix& vectors) {
  if (vectors.rows() != vectors.cols()) return false;
  const HnfResult h = hnf(vectors);
  return h.rank == vectors.rows() &&
         h.hnf == IntMatrix::identity(vectors.rows());
}

}  // namespace rootsmith::lattice
