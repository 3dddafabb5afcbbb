#ifndef DFV_MATQ_HPP
#define DFV_MATQ_HPP

/* Dense exact matrices over the rationals.  Rank goes through fraction-free
   Bareiss elimination on a denominator-cleared integer copy, so intermediate
   entries stay minor-sized and no precision is ever lost. */

#include "dfv/rat.hpp"

namespace dfv {

class MatQ {
 public:
  MatQ() : m_rows(0), m_cols(0) {}
  MatQ(size_t rows, size_t cols) : m_rows(rows), m_cols(cols), m_a(rows * cols, Rat(0)) {}

  size_t rows() const { return m_rows; }
  size_t cols() const { return m_cols; }

  Rat& at(size_t i, size_t j) { return m_a[i * m_cols + j]; }
  const Rat& at(size_t i, size_t j) const { return m_a[i * m_cols + j]; }

  void set_row(size_t i, const VecQ& v) {
    if (v.size() != m_cols) fail("MatQ::set_row: length ", v.size(), " != cols ", m_cols);
    for (size_t j = 0; j < m_cols; ++j) at(i, j) = v[j];
  }

  VecQ row(size_t i) const {
    VecQ v(m_cols);
    for (size_t j = 0; j < m_cols; ++j) v[j] = at(i, j);
    return v;
  }

  static MatQ identity(size_t n) {
    MatQ m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  MatQ mul(const MatQ& other) const {
    if (m_cols != other.m_rows) fail("MatQ::mul: shape mismatch");
    MatQ out(m_rows, other.m_cols);
    for (size_t i = 0; i < m_rows; ++i)
      for (size_t k = 0; k < m_cols; ++k) {
        const Rat& aik = at(i, k);
        if (aik == 0) continue;
        for (size_t j = 0; j < other.m_cols; ++j) out.at(i, j) += aik * other.at(k, j);
      }
    return out;
  }

  VecQ apply(const VecQ& v) const {
    if (v.size() != m_cols) fail("MatQ::apply: length mismatch");
    VecQ out(m_rows, Rat(0));
    for (size_t i = 0; i < m_rows; ++i)
      for (size_t j = 0; j < m_cols; ++j) out[i] += at(i, j) * v[j];
    return out;
  }

  bool operator==(const MatQ& o) const {
    return m_rows == o.m_rows && m_cols == o.m_cols && m_a == o.m_a;
  }

 private:
  size_t m_rows, m_cols;
  std::vector<Rat> m_a;
};

// Rank of an arbitrary rational matrix.  Rows are scaled integral first, then
// Bareiss one-step elimination keeps every intermediate value equal to a minor
// of the integer matrix: M(i,j) <- (M(i,j)*pivot - M(i,k)*M(k,j)) / prev_pivot.
inline size_t rank_bareiss(const MatQ& m) {
  const size_t nr = m.rows(), nc = m.cols();
  if (nr == 0 || nc == 0) return 0;
  std::vector<std::vector<Int>> a(nr, std::vector<Int>(nc));
  for (size_t i = 0; i < nr; ++i) {
    Int lcm_den = 1;
    for (size_t j = 0; j < nc; ++j) lcm_den = lcm(lcm_den, m.at(i, j).get_den());
    for (size_t j = 0; j < nc; ++j) {
      Rat v = m.at(i, j) * Rat(lcm_den);
      v.canonicalize();
      if (v.get_den() != 1) fail("rank_bareiss: row scaling failed");
      a[i][j] = v.get_num();
    }
  }
  size_t rank = 0;
  Int prev = 1;
  for (size_t col = 0; col < nc && rank < nr; ++col) {
    size_t piv = rank;
    while (piv < nr && a[piv][col] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(a[piv], a[rank]);
    const Int pivot = a[rank][col];
    for (size_t i = rank + 1; i < nr; ++i) {
      for (size_t j = col + 1; j < nc; ++j) {
        Int num = a[i][j] * pivot - a[i][col] * a[rank][j];
        mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = num;
      }
      a[i][col] = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

// Inverse of a square rational matrix (Gauss-Jordan); throws if singular.
inline MatQ inverse(const MatQ& m) {
  if (m.rows() != m.cols()) fail("inverse: matrix not square");
  const size_t n = m.rows();
  MatQ a = m, inv = MatQ::identity(n);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a.at(piv, col) == 0) ++piv;
    if (piv == n) fail("inverse: singular matrix");
    for (size_t j = 0; j < n; ++j) {
      std::swap(a.at(piv, j), a.at(col, j));
      std::swap(inv.at(piv, j), inv.at(col, j));
    }
    Rat d = a.at(col, col);
    for (size_t j = 0; j < n; ++j) {
      a.at(col, j) /= d;
      inv.at(col, j) /= d;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      Rat f = a.at(i, col);
      if (f == 0) continue;
      for (size_t j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

// Solve M x = b for square invertible M.
inline VecQ solve(const MatQ& m, const VecQ& b) { return inverse(m).apply(b); }

}  // namespace dfv

#endif
