#include "fieldmat.hpp"

#include <string>

namespace gor {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field()))
    throw InternalError("matrix operands over different fields");
}

}  // namespace

Field::Field(std::uint32_t p) : p_(p) {
  if (!is_prime(p))
    throw ParseError("field modulus " + std::to_string(p) + " is not prime");
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw ComputeError("inverse of zero in GF(p)");
  // Extended Euclid on (a, p).
  long long r0 = a, r1 = p_, s0 = 1, s1 = 0;
  while (r1 != 0) {
    long long q = r0 / r1;
    long long r2 = r0 - q * r1;
    long long s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  return reduce(s0);
}

std::uint32_t Field::reduce(long long v) const {
  long long m = v % (long long)p_;
  if (m < 0) m += p_;
  return std::uint32_t(m);
}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(Field f,
                         const std::vector<std::vector<std::uint32_t>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw InternalError("ragged row list");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j] % f.modulus();
  }
  return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows,
                            const std::vector<std::vector<std::uint32_t>>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw InternalError("bad column length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i] % f.modulus();
  }
  return m;
}

std::vector<std::uint32_t> Matrix::column(std::size_t j) const {
  std::vector<std::uint32_t> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

bool Matrix::is_zero() const {
  for (auto x : a_)
    if (x != 0) return false;
  return true;
}

Matrix mul(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) throw InternalError("matrix product shape mismatch");
  Field f = a.field();
  Matrix c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      std::uint32_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
    }
  return c;
}

std::vector<std::uint32_t> mul_vec(const Matrix& a,
                                   const std::vector<std::uint32_t>& v) {
  if (a.cols() != v.size()) throw InternalError("matrix-vector shape mismatch");
  Field f = a.field();
  std::vector<std::uint32_t> r(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      r[i] = f.add(r[i], f.mul(a(i, j), v[j]));
  return r;
}

Matrix add(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InternalError("matrix sum shape mismatch");
  Field f = a.field();
  Matrix c(f, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.add(a(i, j), b(i, j));
  return c;
}

Matrix sub(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InternalError("matrix difference shape mismatch");
  Field f = a.field();
  Matrix c(f, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.sub(a(i, j), b(i, j));
  return c;
}

Matrix scale(std::uint32_t c0, const Matrix& a) {
  Field f = a.field();
  std::uint32_t c = c0 % f.modulus();
  Matrix r(f, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = f.mul(c, a(i, j));
  return r;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) throw InternalError("hstack row mismatch");
  Matrix c(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols()) throw InternalError("vstack column mismatch");
  Matrix c(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, j) = b(i, j);
  return c;
}

Matrix block_diag(Field f, const std::vector<Matrix>& parts) {
  std::size_t r = 0, c = 0;
  for (const auto& p : parts) {
    if (!(p.field() == f)) throw InternalError("block_diag field mismatch");
    r += p.rows();
    c += p.cols();
  }
  Matrix m(f, r, c);
  std::size_t ro = 0, co = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.rows(); ++i)
      for (std::size_t j = 0; j < p.cols(); ++j) m(ro + i, co + j) = p(i, j);
    ro += p.rows();
    co += p.cols();
  }
  return m;
}

Matrix rref(const Matrix& a, std::vector<std::size_t>* pivots) {
  Matrix r = a;
  Field f = a.field();
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t piv = r.rows();
    for (std::size_t i = row; i < r.rows(); ++i)
      if (r(i, col) != 0) { piv = i; break; }
    if (piv == r.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(piv, j), r(row, j));
    std::uint32_t inv = f.inv(r(row, col));
    for (std::size_t j = 0; j < r.cols(); ++j) r(row, j) = f.mul(inv, r(row, j));
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row) continue;
      std::uint32_t c = r(i, col);
      if (c == 0) continue;
      for (std::size_t j = 0; j < r.cols(); ++j)
        r(i, j) = f.sub(r(i, j), f.mul(c, r(row, j)));
    }
    if (pivots) pivots->push_back(col);
    ++row;
  }
  return r;
}

std::size_t rank(const Matrix& a) {
  std::vector<std::size_t> piv;
  rref(a, &piv);
  return piv.size();
}

Matrix nullspace_basis(const Matrix& a) {
  std::vector<std::size_t> piv;
  Matrix r = rref(a, &piv);
  std::vector<bool> is_piv(a.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  Field f = a.field();
  Matrix basis(f, a.cols(), a.cols() - piv.size());
  std::size_t k = 0;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_piv[free]) continue;
    basis(free, k) = 1;
    for (std::size_t j = 0; j < piv.size(); ++j)
      basis(piv[j], k) = f.neg(r(j, free));
    ++k;
  }
  return basis;
}

Matrix column_space_basis(const Matrix& a) {
  std::vector<std::size_t> piv;
  rref(a, &piv);
  Matrix b(a.field(), a.rows(), piv.size());
  for (std::size_t j = 0; j < piv.size(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) b(i, j) = a(i, piv[j]);
  return b;
}

bool is_invertible(const Matrix& a) {
  if (a.rows() != a.cols()) return false;
  return rank(a) == a.rows();
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw ComputeError("inverse of a non-square matrix");
  std::size_t n = a.rows();
  std::vector<std::size_t> piv;
  Matrix r = rref(hstack(a, Matrix::identity(a.field(), n)), &piv);
  if (piv.size() != n || (n > 0 && piv[n - 1] != n - 1))
    throw ComputeError("matrix is singular");
  Matrix inv(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) throw InternalError("solve shape mismatch");
  std::size_t n = a.cols();
  Matrix aug = hstack(a, b);
  // Eliminate with pivots restricted to the A block.
  Field f = a.field();
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < aug.rows(); ++col) {
    std::size_t p = aug.rows();
    for (std::size_t i = row; i < aug.rows(); ++i)
      if (aug(i, col) != 0) { p = i; break; }
    if (p == aug.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < aug.cols(); ++j) std::swap(aug(p, j), aug(row, j));
    std::uint32_t iv = f.inv(aug(row, col));
    for (std::size_t j = 0; j < aug.cols(); ++j) aug(row, j) = f.mul(iv, aug(row, j));
    for (std::size_t i = 0; i < aug.rows(); ++i) {
      if (i == row) continue;
      std::uint32_t c = aug(i, col);
      if (c == 0) continue;
      for (std::size_t j = 0; j < aug.cols(); ++j)
        aug(i, j) = f.sub(aug(i, j), f.mul(c, aug(row, j)));
    }
    piv.push_back(col);
    ++row;
  }
  // Rows with a zero A part must have a zero B part.
  for (std::size_t i = row; i < aug.rows(); ++i)
    for (std::size_t j = n; j < aug.cols(); ++j)
      if (aug(i, j) != 0) return std::nullopt;
  Matrix x(f, n, b.cols());
  for (std::size_t k = 0; k < piv.size(); ++k)
    for (std::size_t j = 0; j < b.cols(); ++j) x(piv[k], j) = aug(k, n + j);
  return x;
}

BasisExtension extend_to_basis(const Matrix& b) {
  std::size_t n = b.rows(), r0 = b.cols();
  if (rank(b) != r0) throw InternalError("extend_to_basis: not full column rank");
  Field f = b.field();
  Matrix w = b;
  std::vector<std::size_t> picked;
  std::size_t cur = r0;
  for (std::size_t i = 0; i < n && cur < n; ++i) {
    Matrix e(f, n, 1);
    e(i, 0) = 1;
    Matrix cand = hstack(w, e);
    if (rank(cand) > cur) {
      w = cand;
      picked.push_back(i);
      ++cur;
    }
  }
  if (cur != n) throw InternalError("extend_to_basis: failed to complete basis");
  Matrix d(f, n, n - r0);
  for (std::size_t j = 0; j < picked.size(); ++j) d(picked[j], j) = 1;
  Matrix e = hstack(b, d);
  Matrix einv = inverse(e);
  Matrix q(f, n - r0, n);
  for (std::size_t i = 0; i < n - r0; ++i)
    for (std::size_t j = 0; j < n; ++j) q(i, j) = einv(r0 + i, j);
  return {d, q};
}

}  // namespace gor
